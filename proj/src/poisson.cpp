#include "tsurf/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace tsurf::poisson {

namespace {

SkewMatrix edge_pair_sum(const FatGraph& g) {
    if (!g.trivalent()) throw std::invalid_argument("Weil-Petersson data needs a trivalent graph");
    int n = g.edge_count();
    SkewMatrix eps;
    eps.m.assign(n, std::vector<int>(n, 0));
    for (int e = 0; e < g.dir_count(); ++e) {
        int a = g.edge_of(e);
        int b = g.edge_of(g.neighbor(e, 1));
        eps.m[a][b] += 1;
        eps.m[b][a] -= 1;
    }
    return eps;
}

}  // namespace

SkewMatrix wp_bivector(const FatGraph& g) { return edge_pair_sum(g); }
SkewMatrix wp_form(const FatGraph& g) { return edge_pair_sum(g); }

LinearForm face_form(const FatGraph& g, int face) {
    LinearForm f(g.edge_count(), Rat(0));
    for (int e : g.face(face)) f[g.edge_of(e)] += 1;
    return f;
}

Rat bracket(const SkewMatrix& eps, const LinearForm& f, const LinearForm& h) {
    Rat s = 0;
    int n = eps.size();
    for (int a = 0; a < n; ++a) {
        if (f[a] == 0) continue;
        for (int b = 0; b < n; ++b)
            if (eps.at(a, b) != 0 && h[b] != 0) s += f[a] * h[b] * eps.at(a, b);
    }
    return s;
}

LaurentPoly bracket(const SkewMatrix& eps, const LinearForm& f, const LaurentPoly& h) {
    int n = eps.size();
    LaurentPoly out(h.nvars());
    for (int a = 0; a < n; ++a) {
        if (f[a] == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (eps.at(a, b) == 0) continue;
            LaurentPoly dh = h.d_dz(b);
            if (dh.zero()) continue;
            for (const auto& [e, c] : dh.terms()) out.add_term(e, c * f[a] * eps.at(a, b));
        }
    }
    return out;
}

LaurentPoly bracket(const SkewMatrix& eps, const LaurentPoly& f, const LaurentPoly& h) {
    if (f.nvars() != h.nvars()) throw std::invalid_argument("bracket: variable mismatch");
    int n = eps.size();
    LaurentPoly out(f.nvars());
    for (int a = 0; a < n; ++a) {
        LaurentPoly df = f.d_dz(a);
        if (df.zero()) continue;
        for (int b = 0; b < n; ++b) {
            if (eps.at(a, b) == 0) continue;
            LaurentPoly dh = h.d_dz(b);
            if (dh.zero()) continue;
            LaurentPoly prod = df * dh;
            for (const auto& [e, c] : prod.terms()) out.add_term(e, c * eps.at(a, b));
        }
    }
    return out;
}

std::vector<std::vector<double>> flip_jacobian(const FatGraph& g, const FlipResult& fr,
                                               const teich::Shear& z) {
    int n = g.edge_count();
    int ue = fr.edges.inverse().apply(fr.diagonal);
    int e = g.rep(ue);
    auto sig = [](double t) { return 1.0 / (1.0 + std::exp(-t)); };
    std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u) J[fr.edges.apply(u)][u] = 1.0;
    double Z = z[ue];
    J[fr.diagonal][ue] = -1.0;
    J[fr.edges.apply(g.edge_of(g.neighbor(e, 1)))][ue] += sig(Z);
    J[fr.edges.apply(g.edge_of(g.neighbor(e, 3)))][ue] += sig(Z);
    J[fr.edges.apply(g.edge_of(g.neighbor(e, 2)))][ue] += sig(-Z);
    J[fr.edges.apply(g.edge_of(g.neighbor(e, 4)))][ue] += sig(-Z);
    return J;
}

double flip_invariance_check(const FatGraph& g, int ue, const std::vector<teich::Shear>& points) {
    auto fr = flip(g, ue);
    SkewMatrix eps = wp_bivector(g);
    SkewMatrix epsp = wp_bivector(fr.graph);
    int n = g.edge_count();
    double worst = 0.0;
    for (const auto& z : points) {
        auto J = flip_jacobian(g, fr, z);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                double s = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (eps.at(i, j) != 0) s += J[a][i] * eps.at(i, j) * J[b][j];
                worst = std::max(worst, std::fabs(s - epsp.at(a, b)));
            }
        }
    }
    return worst;
}

}  // namespace tsurf::poisson
