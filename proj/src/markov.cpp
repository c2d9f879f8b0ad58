#include "tsurf/markov.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsurf::markov {

namespace {

double third_trace(double a, double b) {
    return (std::exp((a + b) / 2) + std::exp((a - b) / 2) + std::exp((-a - b) / 2)) / 3.0;
}

}  // namespace

std::array<double, 3> markov_traces(double x, double y, double z) {
    for (double v : {x, y, z})
        if (std::fabs(v) > 1200) throw std::domain_error("markov_traces: overflow-scale input");
    return {third_trace(y, z), third_trace(z, x), third_trace(x, y)};
}

Triple markov_move(const Triple& t) { return {t[2], 3 * t[2] * t[0] - t[1], t[0]}; }

Triple markov_rotate(const Triple& t) { return {t[1], t[2], t[0]}; }

bool is_markov(const Triple& t) {
    return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] == 3 * t[0] * t[1] * t[2];
}

Tree markov_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("markov_tree: negative depth");
    Tree tree;
    struct Pending {
        Int a, b, c;
        long long pl, ql, pr, qr, pf, qf;
        int level;
        int parent;
        bool left;
    };
    // trunk: regions a = M(1/2) = 2, b = M(1/1) = 1, behind c = M(0/1) = 1
    std::vector<Pending> queue{{2, 1, 1, 1, 2, 1, 1, 0, 1, 0, -1, false}};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Pending p = queue[qi];
        TreeNode node;
        node.a = p.a;
        node.b = p.b;
        node.c = p.c;
        node.label = 3 * p.a * p.b - p.c;
        node.pl = p.pl;
        node.ql = p.ql;
        node.pr = p.pr;
        node.qr = p.qr;
        int idx = (int)tree.nodes.size();
        tree.nodes.push_back(node);
        if (p.parent >= 0) {
            if (p.left)
                tree.nodes[p.parent].left = idx;
            else
                tree.nodes[p.parent].right = idx;
        }
        if (p.level >= depth) continue;
        long long pm = p.pl + p.pr, qm = p.ql + p.qr;
        // left child keeps the interval (l, mediant), the far region is the old right
        queue.push_back({p.a, node.label, p.b, p.pl, p.ql, pm, qm, p.pr, p.qr, p.level + 1, idx, true});
        queue.push_back({node.label, p.b, p.a, pm, qm, p.pr, p.qr, p.pl, p.ql, p.level + 1, idx, false});
    }
    return tree;
}

std::vector<Int> Tree::all_labels() const {
    std::vector<Int> out = base;
    for (const auto& n : nodes) out.push_back(n.label);
    return out;
}

Int markov_of_rational(long long p, long long q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) {
        if (p == 0) throw std::invalid_argument("markov_of_rational: 0/0");
        return 1;  // the infinite slope
    }
    if (std::gcd(std::llabs(p), q) != 1)
        throw std::invalid_argument("markov_of_rational: fraction not in lowest terms");
    // reduce into [0,1] with M(x) = M(1-x) = M(1/x)
    long long a = p, b = q;
    for (int guard = 0; guard < 256; ++guard) {
        if (a < 0) {
            a = b - a;  // x -> 1-x
        } else if (a > b) {
            std::swap(a, b);  // x -> 1/x
        } else {
            break;
        }
    }
    if (a == 0 || a == b) return 1;
    // Farey walk from the interval (0/1, 1/1) with the far slope at infinity
    long long pl = 0, ql = 1, pr = 1, qr = 1;
    Int Ml = 1, Mr = 1, Mfar = 1;
    for (;;) {
        long long pm = pl + pr, qm = ql + qr;
        Int Mm = 3 * Ml * Mr - Mfar;
        if (pm == a && qm == b) return Mm;
        // compare a/b with pm/qm
        if ((__int128)a * qm < (__int128)pm * b) {
            Mfar = Mr;
            pr = pm;
            qr = qm;
            Mr = Mm;
        } else {
            Mfar = Ml;
            pl = pm;
            ql = qm;
            Ml = Mm;
        }
    }
}

double psi(long long p, long long q) {
    Int M = markov_of_rational(p, q);
    long long qq = q == 0 ? 1 : std::llabs(q);
    double m = M.convert_to<double>();
    double w = 1.5 * m;
    double arc = std::log(w + std::sqrt(w * w - 1.0));
    return arc / (double)qq;
}

Rat DecoratedState::area() const {
    if (U == 0 || V == 0 || W == 0) throw std::domain_error("decorated area: zero entry");
    return (U * U + V * V + W * W) / (U * V * W);
}

std::vector<DecoratedState> decorated_orbit(const Rat& U, const Rat& V, const Rat& W,
                                            const std::string& moves) {
    if (U <= 0 || V <= 0 || W <= 0)
        throw std::invalid_argument("decorated_orbit: inputs must be positive");
    std::vector<DecoratedState> orbit{{U, V, W}};
    for (char mv : moves) {
        DecoratedState s = orbit.back();
        if (mv == 'm') {
            orbit.push_back({s.W, (s.U * s.U + s.W * s.W) / s.V, s.U});
        } else if (mv == 'r') {
            orbit.push_back({s.V, s.W, s.U});
        } else {
            throw std::invalid_argument("decorated_orbit: moves must be 'm' or 'r'");
        }
    }
    return orbit;
}

}  // namespace tsurf::markov
