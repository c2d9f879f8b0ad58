#include "tsurf/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace tsurf::quantum {

namespace {

using cplx = std::complex<double>;

// integrand on the shifted line, p = t + i delta
cplx integrand(double t, double delta, double x, double hbar) {
    cplx p(t, delta);
    const double pi = 3.14159265358979323846;
    return std::exp(cplx(0, -1) * p * x) / (std::sinh(pi * p) * std::sinh(pi * hbar * p));
}

}  // namespace

double phi(double x, double hbar, double tol) {
    if (!(hbar > 0)) throw std::invalid_argument("phi: hbar must be positive");
    if (!(tol > 0)) throw std::invalid_argument("phi: tolerance must be positive");
    const double pi = 3.14159265358979323846;
    double delta = std::min(1.0, 1.0 / hbar) / 2.0;
    if (delta * std::fabs(x) > 600.0)
        throw std::domain_error("phi: requested tolerance unattainable at this |x|");

    double pref = pi * hbar / 2.0;
    // decay rate of the integrand along the line
    double rate = pi * (1.0 + std::min(hbar, 1.0));
    double T = 2.0;
    auto tail_small = [&](double Tc) {
        double mag = pref * std::abs(integrand(Tc, delta, x, hbar));
        return mag * 2.0 / rate < tol / 8.0;
    };
    while (!tail_small(T)) {
        T += 1.0;
        if (T > 2000.0) throw std::domain_error("phi: truncation bound not reached");
    }

    // trapezoid on [-T, T]; halve the step until stable
    double prev = 0.0;
    bool have_prev = false;
    int n = 129;
    double result = 0.0;
    for (int iter = 0; iter < 14; ++iter) {
        double h = 2 * T / (n - 1);
        cplx sum = 0.5 * (integrand(-T, delta, x, hbar) + integrand(T, delta, x, hbar));
        for (int i = 1; i < n - 1; ++i) sum += integrand(-T + i * h, delta, x, hbar);
        result = -pref * (sum * h).real();
        if (have_prev && std::fabs(result - prev) < tol / 2.0) return result;
        prev = result;
        have_prev = true;
        n = 2 * (n - 1) + 1;
    }
    throw std::domain_error("phi: quadrature did not converge");
}

QuantumPresentation presentation(const FatGraph& g, double hbar) {
    if (hbar < 0) throw std::invalid_argument("presentation: hbar must be nonnegative");
    QuantumPresentation p{&g, hbar, poisson::wp_bivector(g), {}};
    p.centers.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<int> comb(g.edge_count(), 0);
        for (int e : g.face(f)) comb[g.edge_of(e)] += 1;
        p.centers[f] = std::move(comb);
    }
    return p;
}

AffineGeneratorMap AffineGeneratorMap::identity(int n, int side) {
    AffineGeneratorMap m;
    m.n_src = m.n_dst = n;
    m.src_side = m.dst_side = side;
    m.linear.assign(n, std::vector<HCoef>(n, HCoef{0, 0}));
    for (int i = 0; i < n; ++i) m.linear[i][i] = HCoef{1, 0};
    m.phis.assign(n, {});
    return m;
}

AffineGeneratorMap AffineGeneratorMap::compose(const AffineGeneratorMap& inner) const {
    if (inner.n_src != n_dst)
        throw std::invalid_argument("compose: arity mismatch");
    if (inner.src_side != dst_side)
        throw std::invalid_argument("compose: parameter sides do not match");
    AffineGeneratorMap out;
    out.n_src = n_src;
    out.n_dst = inner.n_dst;
    out.src_side = src_side;
    out.dst_side = inner.dst_side;
    out.linear.assign(out.n_dst, std::vector<HCoef>(out.n_src, HCoef{0, 0}));
    out.phis.assign(out.n_dst, {});
    for (int k = 0; k < out.n_dst; ++k) {
        for (int j = 0; j < inner.n_src; ++j) {
            HCoef cj = inner.linear[k][j];
            if (cj.q == 0) continue;
            for (int i = 0; i < n_src; ++i) {
                HCoef ci = linear[j][i];
                if (ci.q == 0) continue;
                HCoef prod = cj * ci;
                HCoef& slot = out.linear[k][i];
                if (slot.q == 0) {
                    slot = prod;
                } else if (slot.hpow == prod.hpow) {
                    slot.q += prod.q;
                } else {
                    throw std::invalid_argument("compose: mixed hbar powers in a linear entry");
                }
            }
            for (const PhiTerm& t : phis[j]) {
                PhiTerm nt = t;
                nt.outer = nt.outer * cj;
                out.phis[k].push_back(nt);
            }
        }
        for (const PhiTerm& t : inner.phis[k]) {
            // the argument generator must map to a pure monomial
            int src_gen = -1;
            for (int i = 0; i < n_src; ++i)
                if (linear[t.gen][i].q != 0) {
                    if (src_gen >= 0)
                        throw std::invalid_argument("compose: phi of a non-monomial expression");
                    src_gen = i;
                }
            if (src_gen < 0 || !phis[t.gen].empty())
                throw std::invalid_argument("compose: phi of a non-monomial expression");
            PhiTerm nt = t;
            nt.gen = src_gen;
            nt.inner = nt.inner * linear[t.gen][src_gen];
            out.phis[k].push_back(nt);
        }
    }
    return out;
}

void AffineGeneratorMap::normalize() {
    for (auto& terms : phis) {
        for (PhiTerm& t : terms) {
            if (t.hbar_side == -1) {
                // phi(y, 1/h) = (1/h) phi(h y, h)
                t.hbar_side = 1;
                t.outer = t.outer * HCoef{1, -1};
                t.inner = t.inner * HCoef{1, 1};
            }
        }
        std::sort(terms.begin(), terms.end(), [](const PhiTerm& a, const PhiTerm& b) {
            if (a.gen != b.gen) return a.gen < b.gen;
            if (a.inner.q != b.inner.q) return a.inner.q < b.inner.q;
            if (a.inner.hpow != b.inner.hpow) return a.inner.hpow < b.inner.hpow;
            if (a.outer.q != b.outer.q) return a.outer.q < b.outer.q;
            return a.outer.hpow < b.outer.hpow;
        });
    }
}

bool AffineGeneratorMap::equal_normalized(const AffineGeneratorMap& o) const {
    AffineGeneratorMap a = *this, b = o;
    a.normalize();
    b.normalize();
    if (a.n_src != b.n_src || a.n_dst != b.n_dst) return false;
    for (int k = 0; k < a.n_dst; ++k) {
        for (int i = 0; i < a.n_src; ++i)
            if (!(a.linear[k][i] == b.linear[k][i])) return false;
        if (a.phis[k].size() != b.phis[k].size()) return false;
        for (size_t t = 0; t < a.phis[k].size(); ++t) {
            const PhiTerm &x = a.phis[k][t], &y = b.phis[k][t];
            if (x.gen != y.gen || !(x.outer == y.outer) || !(x.inner == y.inner) ||
                x.hbar_side != y.hbar_side)
                return false;
        }
    }
    return true;
}

namespace {

double hcoef_eval(const HCoef& c, double hbar) {
    return rat_to_double(c.q) * std::pow(hbar, c.hpow);
}

}  // namespace

std::vector<double> AffineGeneratorMap::eval(const std::vector<double>& x, double hbar) const {
    if ((int)x.size() != n_src) throw std::invalid_argument("eval: point arity mismatch");
    std::vector<double> out(n_dst, 0.0);
    for (int k = 0; k < n_dst; ++k) {
        for (int i = 0; i < n_src; ++i)
            if (linear[k][i].q != 0) out[k] += hcoef_eval(linear[k][i], hbar) * x[i];
        for (const PhiTerm& t : phis[k]) {
            double h = t.hbar_side == 1 ? hbar : 1.0 / hbar;
            out[k] += hcoef_eval(t.outer, hbar) * phi(hcoef_eval(t.inner, hbar) * x[t.gen], h);
        }
    }
    return out;
}

std::vector<Rat> AffineGeneratorMap::apply_to_center(const std::vector<int>& comb) const {
    if ((int)comb.size() != n_dst) throw std::invalid_argument("apply_to_center: arity mismatch");
    std::vector<Rat> lin(n_src, Rat(0));
    for (int k = 0; k < n_dst; ++k) {
        if (comb[k] == 0) continue;
        for (int i = 0; i < n_src; ++i) {
            if (linear[k][i].q == 0) continue;
            if (linear[k][i].hpow != 0)
                throw std::invalid_argument("apply_to_center: hbar-dependent linear part");
            lin[i] += Rat(comb[k]) * linear[k][i].q;
        }
    }
    // collect phi coefficients per (gen, |inner|) and cancel through
    // phi(x) - phi(-x) = x
    struct Key {
        int gen;
        Rat inner_abs;
        bool operator<(const Key& o) const {
            return gen != o.gen ? gen < o.gen : inner_abs < o.inner_abs;
        }
    };
    std::map<Key, std::pair<Rat, Rat>> acc;  // coefficient of phi(+cx), phi(-cx)
    for (int k = 0; k < n_dst; ++k) {
        if (comb[k] == 0) continue;
        for (const PhiTerm& t : phis[k]) {
            if (t.hbar_side != 1 || t.outer.hpow != 0 || t.inner.hpow != 0)
                throw std::invalid_argument("apply_to_center: hbar-dependent phi term");
            Key key{t.gen, rat_abs(t.inner.q)};
            Rat outer = Rat(comb[k]) * t.outer.q;
            if (t.inner.q > 0)
                acc[key].first += outer;
            else
                acc[key].second += outer;
        }
    }
    for (const auto& [key, pm] : acc) {
        if (pm.first != -pm.second)
            throw std::invalid_argument("apply_to_center: phi terms do not cancel");
        // P phi(cx) - P phi(-cx) = P c x
        lin[key.gen] += pm.first * key.inner_abs;
    }
    return lin;
}

AffineGeneratorMap duality_map(const QuantumPresentation& p) {
    // Z^h = h Z^{1/h}; transports the commutator coefficient 2 pi h to 2 pi/h
    int n = (int)p.commutators.size();
    AffineGeneratorMap m = AffineGeneratorMap::identity(n, -1);
    m.dst_side = 1;
    for (int i = 0; i < n; ++i) m.linear[i][i] = HCoef{1, 1};
    return m;
}

AffineGeneratorMap quantum_flip(const QuantumPresentation& p, const FlipResult& fr, int side) {
    const FatGraph& g = *p.graph;
    int n = g.edge_count();
    int ue = fr.edges.inverse().apply(fr.diagonal);
    int e = g.rep(ue);
    AffineGeneratorMap m;
    m.n_src = m.n_dst = n;
    m.src_side = m.dst_side = side;
    m.linear.assign(n, std::vector<HCoef>(n, HCoef{0, 0}));
    m.phis.assign(n, {});
    for (int u = 0; u < n; ++u) m.linear[fr.edges.apply(u)][u] = HCoef{1, 0};
    m.linear[fr.diagonal][ue] = HCoef{-1, 0};
    int plus[2] = {g.edge_of(g.neighbor(e, 1)), g.edge_of(g.neighbor(e, 3))};
    int minus[2] = {g.edge_of(g.neighbor(e, 2)), g.edge_of(g.neighbor(e, 4))};
    for (int s : plus) m.phis[fr.edges.apply(s)].push_back({HCoef{1, 0}, HCoef{1, 0}, ue, side});
    for (int s : minus) m.phis[fr.edges.apply(s)].push_back({HCoef{-1, 0}, HCoef{-1, 0}, ue, side});
    return m;
}

}  // namespace tsurf::quantum
