#include "tsurf/lamination.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsurf::lam {

namespace {

Rat trop_max(Rat a, Rat b) { return a > b ? a : b; }
Rat trop_min(Rat a, Rat b) { return a < b ? a : b; }

struct SidePairs {
    int p1, p2, m1, m2;  // undirected edge ids; plus pair then minus pair
};

SidePairs side_pairs(const FatGraph& g, int ue) {
    int e = g.rep(ue);
    return {g.edge_of(g.neighbor(e, 1)), g.edge_of(g.neighbor(e, 3)),
            g.edge_of(g.neighbor(e, 2)), g.edge_of(g.neighbor(e, 4))};
}

int flipped_old_edge(const FlipResult& fr) {
    return fr.edges.inverse().apply(fr.diagonal);
}

// tropical bracket: (1/2) max over the n+1 alternating partial-sum patterns
Rat bracket_trop(const std::vector<Rat>& xs) {
    Rat total = 0;
    for (const Rat& x : xs) total += x;
    Rat prefix = 0;
    Rat best = -total;  // k = 0
    for (size_t k = 1; k <= xs.size(); ++k) {
        prefix += xs[k - 1];
        best = trop_max(best, prefix * 2 - total);
    }
    return best / 2;
}

}  // namespace

Unbounded make_unbounded(const FatGraph& g, std::vector<Rat> w) {
    if ((int)w.size() != g.edge_count()) throw std::invalid_argument("weights/edge count mismatch");
    Unbounded u;
    u.w = std::move(w);
    u.orientation.assign(g.face_count(), 1);
    return u;
}

Bounded flip_bounded(const FatGraph& g, const FlipResult& fr, const Bounded& c) {
    if ((int)c.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    Bounded out(fr.graph.edge_count());
    for (int u = 0; u < g.edge_count(); ++u) out[fr.edges.apply(u)] = c[u];
    out[fr.diagonal] = trop_max(c[sp.p1] + c[sp.p2], c[sp.m1] + c[sp.m2]) - c[ue];
    return out;
}

Unbounded flip_unbounded(const FatGraph& g, const FlipResult& fr, const Unbounded& c) {
    if ((int)c.w.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    Rat z = c.w[ue];
    std::vector<Rat> w = c.w;
    w[sp.p1] += trop_max(z, 0);
    w[sp.p2] += trop_max(z, 0);
    w[sp.m1] += trop_min(z, 0);
    w[sp.m2] += trop_min(z, 0);
    w[ue] = -z;
    Unbounded out;
    out.w.resize(fr.graph.edge_count());
    for (int u = 0; u < g.edge_count(); ++u) out.w[fr.edges.apply(u)] = w[u];
    out.orientation.resize(fr.graph.face_count());
    for (int f = 0; f < fr.graph.face_count(); ++f) out.orientation[f] = c.orientation[fr.face_map[f]];
    return out;
}

bool is_integral_bounded(const FatGraph& g, const Bounded& c) {
    if (!g.trivalent()) throw std::invalid_argument("integrality test needs a trivalent graph");
    for (const Rat& x : c)
        if (rat_den(x) != 1) return false;
    for (const auto& v : g.vertices()) {
        Int sum = 0;
        for (int e : v) sum += rat_num(c[g.edge_of(e)]);
        if (sum % 2 != 0) return false;
    }
    return true;
}

bool is_integral_unbounded(const FatGraph&, const Unbounded& c) {
    for (const Rat& x : c.w)
        if (rat_den(x) != 1) return false;
    return true;
}

namespace {

bool reconstructible(const FatGraph& g, const std::vector<Int>& c) {
    for (const auto& v : g.vertices()) {
        Int a = c[g.edge_of(v[0])], b = c[g.edge_of(v[1])], d = c[g.edge_of(v[2])];
        if ((a + b + d) % 2 != 0) return false;
        if (a > b + d || b > a + d || d > a + b) return false;
        if (a < 0 || b < 0 || d < 0) return false;
    }
    return true;
}

}  // namespace

NormalizedBounded normalize_bounded(const FatGraph& g, const Bounded& c) {
    if (!g.trivalent()) throw std::invalid_argument("normalize_bounded needs a trivalent graph");
    Int a = 1;
    for (const Rat& x : c) a = boost::multiprecision::lcm(a, rat_den(x));
    NormalizedBounded out;
    out.scale = a;
    for (Int b = 0;; ++b) {
        std::vector<Int> ic(c.size());
        for (size_t i = 0; i < c.size(); ++i) ic[i] = rat_num(c[i] * a) + b;
        if (reconstructible(g, ic)) {
            out.coords = std::move(ic);
            out.shift = b;
            return out;
        }
        if (b > Int(1) << 20) throw std::logic_error("normalize_bounded: shift search diverged");
    }
}

namespace {

// strand-slot tracing for nonnegative integral coordinates
struct Tracer {
    const FatGraph& g;
    std::vector<long> cnt;  // per undirected edge

    long corner_count(int e) const {
        // strands in the corner between end e and s0(e)
        int f = g.s0(e);
        int t = g.s0(f);
        return (cnt[g.edge_of(e)] + cnt[g.edge_of(f)] - cnt[g.edge_of(t)]) / 2;
    }
    // arrival state (end e, slot j in 0..cnt-1); slots increase toward corner (e, s0 e)
    std::pair<int, long> corner(std::pair<int, long> st) const {
        auto [e, j] = st;
        long high = corner_count(e);
        if (j >= cnt[g.edge_of(e)] - high) {
            int f = g.s0(e);
            return {f, cnt[g.edge_of(e)] - 1 - j};
        }
        int h = g.s0inv(e);
        return {h, cnt[g.edge_of(h)] - 1 - j};
    }
    std::pair<int, long> cross(std::pair<int, long> st) const {
        auto [e, j] = st;
        return {g.s1(e), cnt[g.edge_of(e)] - 1 - j};
    }
};

std::vector<int> canonical_cycle(const FatGraph& g, const std::vector<int>& path) {
    auto all_rot_min = [](const std::vector<int>& p) {
        std::vector<int> best = p;
        std::vector<int> cur = p;
        for (size_t i = 1; i < p.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    std::vector<int> rev(path.size());
    for (size_t i = 0; i < path.size(); ++i) rev[i] = g.s1(path[path.size() - 1 - i]);
    std::vector<int> a = all_rot_min(path), b = all_rot_min(rev);
    return a < b ? a : b;
}

}  // namespace

CurveSystem reconstruct_bounded(const FatGraph& g, const std::vector<Int>& c) {
    if (!g.trivalent()) throw std::invalid_argument("reconstruct_bounded needs a trivalent graph");
    if ((int)c.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    if (!reconstructible(g, c))
        throw std::invalid_argument("reconstruct_bounded: parity or triangle condition violated");

    Tracer tr{g, {}};
    tr.cnt.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) tr.cnt[i] = c[i].convert_to<long>();

    std::set<std::pair<int, long>> seen;
    std::map<std::vector<int>, Rat> merged;
    for (int e = 0; e < g.dir_count(); ++e) {
        for (long j = 0; j < tr.cnt[g.edge_of(e)]; ++j) {
            std::pair<int, long> st{e, j};
            if (seen.count(st)) continue;
            std::vector<int> path;
            auto cur = st;
            while (!seen.count(cur)) {
                seen.insert(cur);
                seen.insert(tr.cross(cur));
                path.push_back(cur.first);
                cur = tr.cross(tr.corner(cur));
            }
            merged[canonical_cycle(g, path)] += 1;
        }
    }
    CurveSystem out;
    for (auto& [path, w] : merged) {
        Component comp;
        comp.kind = Component::Closed;
        comp.path = path;
        comp.weight = w;
        out.push_back(std::move(comp));
    }
    return out;
}

Bounded coords_of_curves(const FatGraph& g, const CurveSystem& cs) {
    Bounded c(g.edge_count(), Rat(0));
    for (const auto& comp : cs) {
        if (comp.kind == Component::HoleLoop) {
            for (int ue = 0; ue < g.edge_count(); ++ue)
                c[ue] += comp.weight * g.face_multiplicity(comp.from_face, ue);
        } else {
            for (int e : comp.path) c[g.edge_of(e)] += comp.weight;
        }
    }
    return c;
}

namespace {

// Z-indexed slot tracing for unbounded laminations.
struct ZTracer {
    const FatGraph& g;
    std::vector<long> u;  // integer coords per undirected edge
    long bound;

    // arrival (end e, slot j): corner then edge crossing; returns next arrival and the turn taken
    std::pair<std::pair<int, long>, char> step(std::pair<int, long> st) const {
        auto [e, j] = st;
        int f;
        char turn;
        long k;
        if (j >= 0) {
            f = g.s0(e);
            k = -1 - j;
            turn = 'L';
        } else {
            f = g.s0inv(e);
            k = -1 - j;
            turn = 'R';
        }
        long s = u[g.edge_of(f)];
        return {{g.s1(f), s - 1 - k}, turn};
    }
    std::pair<int, long> reverse_arrival(std::pair<int, long> st) const {
        auto [e, j] = st;
        return {g.s1(e), u[g.edge_of(e)] - 1 - j};
    }
};

struct TracedComponent {
    bool closed = false;
    std::vector<int> path;      // arrival directed edges
    std::vector<char> turns;    // departure turn after each arrival
    std::vector<int> contrib;   // per-passage handedness: +1 / -1 / 0
};

int passage_sign(char tin, char tout) {
    if (tin == 'R' && tout == 'L') return 1;
    if (tin == 'L' && tout == 'R') return -1;
    return 0;
}

}  // namespace

CurveSystem reconstruct_unbounded(const FatGraph& g, const std::vector<Int>& z) {
    if (!g.trivalent()) throw std::invalid_argument("reconstruct_unbounded needs a trivalent graph");
    if ((int)z.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");

    ZTracer tr{g, {}, 0};
    tr.u.resize(z.size());
    long wsum = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        tr.u[i] = z[i].convert_to<long>();
        wsum += std::abs(tr.u[i]);
    }
    long W = wsum + 2;
    tr.bound = W + 4 * g.dir_count() + 8;

    std::set<std::pair<int, long>> seen;
    std::vector<TracedComponent> comps;

    for (int e = 0; e < g.dir_count(); ++e) {
        for (long j = -W; j <= W; ++j) {
            std::pair<int, long> seed{e, j};
            if (seen.count(seed)) continue;
            // forward trace
            std::vector<std::pair<int, long>> fwd;
            std::vector<char> fturns;
            std::map<std::pair<int, long>, size_t> where;
            auto cur = seed;
            bool escaped = false;
            while (true) {
                auto it = where.find(cur);
                if (it != where.end()) {
                    // closed orbit starting at it->second
                    TracedComponent tc;
                    tc.closed = true;
                    for (size_t i = it->second; i < fwd.size(); ++i) {
                        tc.path.push_back(fwd[i].first);
                        tc.turns.push_back(fturns[i]);
                    }
                    for (auto& st : fwd) {
                        seen.insert(st);
                        seen.insert(tr.reverse_arrival(st));
                    }
                    comps.push_back(std::move(tc));
                    break;
                }
                if (std::llabs(cur.second) > tr.bound) {
                    escaped = true;
                    break;
                }
                where[cur] = fwd.size();
                fwd.push_back(cur);
                auto [nxt, turn] = tr.step(cur);
                fturns.push_back(turn);
                cur = nxt;
            }
            if (!escaped) continue;
            // arc: trace backward from the seed as well
            std::vector<std::pair<int, long>> bwd;
            cur = tr.reverse_arrival(seed);
            while (std::llabs(cur.second) <= tr.bound) {
                bwd.push_back(cur);
                cur = tr.step(cur).first;
            }
            TracedComponent tc;
            // backward arrivals reversed give the forward-direction prefix
            for (auto it2 = bwd.rbegin(); it2 != bwd.rend(); ++it2) {
                auto st = tr.reverse_arrival(*it2);
                if (st == seed) continue;  // seed itself is first element of fwd
                tc.path.push_back(st.first);
            }
            size_t prefix = tc.path.size();
            for (auto& st : fwd) tc.path.push_back(st.first);
            // turns along the whole arc
            tc.turns.assign(tc.path.size(), '?');
            {
                // recompute turns from states: rebuild full state list
                std::vector<std::pair<int, long>> states;
                for (auto it2 = bwd.rbegin(); it2 != bwd.rend(); ++it2) {
                    auto st = tr.reverse_arrival(*it2);
                    if (st == seed) continue;
                    states.push_back(st);
                }
                for (auto& st : fwd) states.push_back(st);
                for (size_t i = 0; i < states.size(); ++i) tc.turns[i] = tr.step(states[i]).second;
                for (auto& st : states) {
                    seen.insert(st);
                    seen.insert(tr.reverse_arrival(st));
                }
            }
            (void)prefix;
            comps.push_back(std::move(tc));
        }
    }

    // contributions, peripheral dropping and trimming
    CurveSystem out;
    std::map<std::vector<int>, std::pair<Component, Rat>> merged;
    for (auto& tc : comps) {
        size_t n = tc.path.size();
        tc.contrib.assign(n, 0);
        if (tc.closed) {
            bool mixed = false;
            for (size_t i = 0; i < n; ++i) {
                tc.contrib[i] = passage_sign(tc.turns[(i + n - 1) % n], tc.turns[i]);
                if (tc.turns[i] != tc.turns[0]) mixed = true;
            }
            if (!mixed) continue;  // peripheral loop around a face
            Component comp;
            comp.kind = Component::Closed;
            comp.path = tc.path;
            comp.weight = 1;
            auto key = canonical_cycle(g, comp.path);
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, std::make_pair(std::move(comp), Rat(1)));
            else
                it->second.second += 1;
            continue;
        }
        // arc
        long first = -1, last = -1;
        for (size_t i = 1; i + 1 < n; ++i) {
            tc.contrib[i] = passage_sign(tc.turns[i - 1], tc.turns[i]);
            if (tc.contrib[i] != 0) {
                if (first < 0) first = (long)i;
                last = (long)i;
            }
        }
        if (first < 0) continue;  // no diagonal passage: retractable to a boundary component
        Component comp;
        comp.kind = Component::Arc;
        size_t lo = (size_t)first - 1, hi = (size_t)last + 1;
        comp.path.assign(tc.path.begin() + lo, tc.path.begin() + hi + 1);
        comp.weight = 1;
        // the semi-infinite tails spiral around one face each; constant-turn
        // walks with turn L follow the face of the edge itself, turn R the
        // face of the reversed edge
        comp.from_face = tc.turns[0] == 'L' ? g.face_of(tc.path[0]) : g.face_of(g.s1(tc.path[0]));
        comp.to_face =
            tc.turns[n - 1] == 'L' ? g.face_of(tc.path[n - 1]) : g.face_of(g.s1(tc.path[n - 1]));
        // unoriented: canonicalize the traversal direction
        std::vector<int> rev(comp.path.size());
        for (size_t i = 0; i < comp.path.size(); ++i)
            rev[i] = g.s1(comp.path[comp.path.size() - 1 - i]);
        if (rev < comp.path) {
            comp.path = std::move(rev);
            std::swap(comp.from_face, comp.to_face);
        }
        auto key = comp.path;
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, std::make_pair(std::move(comp), Rat(1)));
        else
            it->second.second += 1;
    }
    for (auto& [key, cw] : merged) {
        cw.first.weight = cw.second;
        out.push_back(std::move(cw.first));
    }
    return out;
}

std::vector<Rat> coords_of_unbounded(const FatGraph& g, const CurveSystem& cs) {
    std::vector<Rat> u(g.edge_count(), Rat(0));
    auto turn_at = [&](int e, int nxt) {
        int w = g.s1(nxt);
        if (w == g.s0(e)) return 'L';
        if (w == g.s0inv(e)) return 'R';
        throw std::invalid_argument("coords_of_unbounded: not a walk");
    };
    for (const auto& comp : cs) {
        const auto& p = comp.path;
        size_t n = p.size();
        if (comp.kind == Component::Closed) {
            for (size_t i = 0; i < n; ++i) {
                char tin = turn_at(p[(i + n - 1) % n], p[i]);
                char tout = turn_at(p[i], p[(i + 1) % n]);
                u[g.edge_of(p[i])] += comp.weight * passage_sign(tin, tout);
            }
        } else if (comp.kind == Component::Arc) {
            for (size_t i = 1; i + 1 < n; ++i) {
                char tin = turn_at(p[i - 1], p[i]);
                char tout = turn_at(p[i], p[i + 1]);
                u[g.edge_of(p[i])] += comp.weight * passage_sign(tin, tout);
            }
        }
    }
    return u;
}

std::vector<Rat> map_a(const FatGraph& g, const Bounded& c) {
    if (!g.trivalent()) throw std::invalid_argument("map_a needs a trivalent graph");
    std::vector<Rat> out(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        bool firstv = true;
        Rat best = 0;
        for (int e : g.face(f)) {
            Rat corner = c[g.edge_of(e)] + c[g.edge_of(g.neighbor(e, 1))] - c[g.edge_of(g.neighbor(e, 4))];
            if (firstv || corner < best) best = corner;
            firstv = false;
        }
        out[f] = best / 2;
    }
    return out;
}

std::vector<Rat> map_lH(const FatGraph& g, const Unbounded& c) {
    std::vector<Rat> out(g.face_count(), Rat(0));
    for (int f = 0; f < g.face_count(); ++f)
        for (int e : g.face(f)) out[f] += c.w[g.edge_of(e)];
    return out;
}

std::vector<Rat> map_lh(const FatGraph& g, const Unbounded& c) {
    auto out = map_lH(g, c);
    for (Rat& x : out) x = rat_abs(x);
    return out;
}

Unbounded map_ip(const FatGraph& g, const Bounded& c) {
    if (!g.trivalent()) throw std::invalid_argument("map_ip needs a trivalent graph");
    std::vector<Rat> z(g.edge_count());
    for (int ue = 0; ue < g.edge_count(); ++ue) {
        int e = g.rep(ue);
        z[ue] = c[g.edge_of(g.neighbor(e, 1))] + c[g.edge_of(g.neighbor(e, 3))] -
                c[g.edge_of(g.neighbor(e, 2))] - c[g.edge_of(g.neighbor(e, 4))];
    }
    return make_unbounded(g, std::move(z));
}

namespace {

// shared face-cycle machinery for the orientation change
struct FaceCycle {
    std::vector<int> dirs;   // s2-orbit members
    std::vector<int> edges;  // undirected ids
    std::vector<int> thirds; // undirected id of the non-face edge at each passage vertex
};

FaceCycle face_cycle_checked(const FatGraph& g, int face) {
    if (!face_is_regular(g, face))
        throw std::invalid_argument("orientation change needs a regular face");
    FaceCycle fc;
    fc.dirs = g.face_cycle(face);
    int m = (int)fc.dirs.size();
    std::set<int> face_edges;
    for (int e : fc.dirs) {
        fc.edges.push_back(g.edge_of(e));
        face_edges.insert(g.edge_of(e));
    }
    for (int i = 0; i < m; ++i) {
        int e_in = fc.dirs[i];
        int e_out = fc.dirs[(i + 1) % m];
        int v = g.vertex_of(g.s1(e_in));
        int third = -1;
        for (int e : g.vertex(v))
            if (e != g.s1(e_in) && e != e_out) third = e;
        if (third < 0) throw std::logic_error("face cycle: missing third end");
        if (face_edges.count(g.edge_of(third)))
            throw std::invalid_argument("orientation change needs a regular face");
        fc.thirds.push_back(g.edge_of(third));
    }
    return fc;
}

template <class V, class Bracket>
void apply_orientation_rule(const FaceCycle& fc, std::vector<V>& w, Bracket br) {
    int m = (int)fc.dirs.size();
    int n = m - 1;
    std::vector<V> zs;
    for (int ue : fc.edges) zs.push_back(w[ue]);
    std::vector<V> neu = w;
    auto rot = [&](int t) {
        std::vector<V> rs(zs.begin() + t, zs.end());
        rs.insert(rs.end(), zs.begin(), zs.begin() + t);
        return rs;
    };
    // face edges
    for (int t = 0; t < m; ++t) {
        auto rs = rot(t);
        std::vector<V> b1(rs.begin() + std::min(2, m), rs.end());
        b1.push_back(rs[0]);
        std::vector<V> b2(rs.begin(), rs.begin() + n);
        neu[fc.edges[t]] = -(rs[1 % m] + rs[n]) / 2 - br(b1) + br(b2);
    }
    // adjacent edges; cycle anchored at the face edge following the vertex
    for (int i = 0; i < m; ++i) {
        auto rs = rot((i + 1) % m);
        std::vector<V> b1(rs.begin() + 1, rs.end());
        std::vector<V> b2(rs.begin(), rs.begin() + n);
        V delta = (rs[0] + rs[n]) / 2 + br(b1) - br(b2);
        neu[fc.thirds[i]] += delta;
    }
    w = std::move(neu);
}

}  // namespace

Unbounded orientation_flip_tropical(const FatGraph& g, const Unbounded& c, int face) {
    FaceCycle fc = face_cycle_checked(g, face);
    Unbounded out = c;
    apply_orientation_rule(fc, out.w, bracket_trop);
    out.orientation[face] = -out.orientation[face];
    return out;
}

namespace {

std::string state_key(const FatGraph& g, const Unbounded& c) {
    std::ostringstream os;
    for (int i = 0; i < g.dir_count(); ++i) os << g.s0(i) << ',';
    os << '|';
    for (int i = 0; i < g.dir_count(); ++i) os << g.s1(i) << ',';
    os << '|';
    for (const Rat& x : c.w) os << rat_str(x) << ',';
    for (int o : c.orientation) os << o << ',';
    return os.str();
}

}  // namespace

PositiveSearchResult normalize_positive(const FatGraph& g, const Unbounded& c, int max_steps) {
    struct Node {
        FatGraph graph;
        Unbounded coords;
        std::vector<PositiveSearchMove> script;
    };
    auto nonneg = [](const Unbounded& u) {
        return std::all_of(u.w.begin(), u.w.end(), [](const Rat& x) { return x >= 0; });
    };
    std::deque<Node> queue;
    std::set<std::string> seen;
    queue.push_back({g, c, {}});
    seen.insert(state_key(g, c));
    int visited = 0;
    while (!queue.empty() && visited < max_steps) {
        Node node = std::move(queue.front());
        queue.pop_front();
        ++visited;
        if (nonneg(node.coords))
            return {true, std::move(node.graph), std::move(node.coords), std::move(node.script)};
        for (int ue = 0; ue < node.graph.edge_count(); ++ue) {
            if (node.graph.is_loop_edge(ue)) continue;
            auto fr = flip(node.graph, ue);
            auto nc = flip_unbounded(node.graph, fr, node.coords);
            std::string key = state_key(fr.graph, nc);
            if (!seen.insert(key).second) continue;
            auto script = node.script;
            script.push_back({PositiveSearchMove::Flip, ue});
            queue.push_back({std::move(fr.graph), std::move(nc), std::move(script)});
        }
        for (int f = 0; f < node.graph.face_count(); ++f) {
            Unbounded nc;
            try {
                nc = orientation_flip_tropical(node.graph, node.coords, f);
            } catch (const std::invalid_argument&) {
                continue;
            }
            std::string key = state_key(node.graph, nc);
            if (!seen.insert(key).second) continue;
            auto script = node.script;
            script.push_back({PositiveSearchMove::Orient, f});
            queue.push_back({node.graph, std::move(nc), std::move(script)});
        }
    }
    return {false, g, c, {}};
}

}  // namespace tsurf::lam
