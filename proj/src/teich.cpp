#include "tsurf/teich.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tsurf::teich {

double log1pexp(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

namespace {

struct SidePairs {
    int p1, p2, m1, m2;
};

SidePairs side_pairs(const FatGraph& g, int ue) {
    int e = g.rep(ue);
    return {g.edge_of(g.neighbor(e, 1)), g.edge_of(g.neighbor(e, 3)),
            g.edge_of(g.neighbor(e, 2)), g.edge_of(g.neighbor(e, 4))};
}

int flipped_old_edge(const FlipResult& fr) { return fr.edges.inverse().apply(fr.diagonal); }

std::vector<double> transport(const FlipResult& fr, const std::vector<double>& w) {
    std::vector<double> out(w.size());
    for (size_t u = 0; u < w.size(); ++u) out[fr.edges.apply((int)u)] = w[u];
    return out;
}

double lse(const std::vector<double>& vals) {
    double m = *std::max_element(vals.begin(), vals.end());
    double s = 0;
    for (double v : vals) s += std::exp(v - m);
    return m + std::log(s);
}

}  // namespace

Shear flip_shear(const FatGraph& g, const FlipResult& fr, const Shear& z) {
    if ((int)z.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    double Z = z[ue];
    Shear w = z;
    w[sp.p1] += log1pexp(Z);
    w[sp.p2] += log1pexp(Z);
    w[sp.m1] -= log1pexp(-Z);
    w[sp.m2] -= log1pexp(-Z);
    w[ue] = -Z;
    return transport(fr, w);
}

Shear flip_shear_tropical(const FatGraph& g, const FlipResult& fr, const Shear& z) {
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    double Z = z[ue];
    Shear w = z;
    w[sp.p1] += std::max(Z, 0.0);
    w[sp.p2] += std::max(Z, 0.0);
    w[sp.m1] += std::min(Z, 0.0);
    w[sp.m2] += std::min(Z, 0.0);
    w[ue] = -Z;
    return transport(fr, w);
}

Penner flip_penner(const FatGraph& g, const FlipResult& fr, const Penner& u) {
    if ((int)u.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    double A = u[sp.p1] + u[sp.p2];
    double B = u[sp.m1] + u[sp.m2];
    Penner w = u;
    w[ue] = lse({A, B}) - u[ue];
    return transport(fr, w);
}

Penner flip_penner_tropical(const FatGraph& g, const FlipResult& fr, const Penner& u) {
    int ue = flipped_old_edge(fr);
    auto sp = side_pairs(g, ue);
    Penner w = u;
    w[ue] = std::max(u[sp.p1] + u[sp.p2], u[sp.m1] + u[sp.m2]) - u[ue];
    return transport(fr, w);
}

double bracket_log(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("bracket_log: empty argument");
    double total = 0;
    for (double x : xs) total += x;
    std::vector<double> vals;
    vals.reserve(xs.size() + 1);
    double prefix = 0;
    vals.push_back(-total / 2);
    for (double x : xs) {
        prefix += x;
        vals.push_back(prefix - total / 2);
    }
    return lse(vals);
}

double bracket_trop(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("bracket_trop: empty argument");
    double total = 0;
    for (double x : xs) total += x;
    double prefix = 0, best = -total / 2;
    for (double x : xs) {
        prefix += x;
        best = std::max(best, prefix - total / 2);
    }
    return best;
}

namespace {

struct FaceCycle {
    std::vector<int> edges;
    std::vector<int> thirds;
};

FaceCycle face_cycle_checked(const FatGraph& g, int face) {
    if (face < 0 || face >= g.face_count()) throw std::invalid_argument("bad face index");
    if (!face_is_regular(g, face))
        throw std::invalid_argument("orientation change needs a regular face");
    FaceCycle fc;
    const auto& dirs = g.face_cycle(face);
    int m = (int)dirs.size();
    std::set<int> face_edges;
    for (int e : dirs) {
        fc.edges.push_back(g.edge_of(e));
        face_edges.insert(g.edge_of(e));
    }
    for (int i = 0; i < m; ++i) {
        int e_in = dirs[i];
        int e_out = dirs[(i + 1) % m];
        int v = g.vertex_of(g.s1(e_in));
        int third = -1;
        for (int e : g.vertex(v))
            if (e != g.s1(e_in) && e != e_out) third = e;
        if (third < 0 || face_edges.count(g.edge_of(third)))
            throw std::invalid_argument("orientation change needs a regular face");
        fc.thirds.push_back(g.edge_of(third));
    }
    return fc;
}

}  // namespace

Shear orientation_flip_shear(const FatGraph& g, const Shear& z, int face) {
    FaceCycle fc = face_cycle_checked(g, face);
    int m = (int)fc.edges.size();
    int n = m - 1;
    std::vector<double> zs;
    for (int ue : fc.edges) zs.push_back(z[ue]);
    auto rot = [&](int t) {
        std::vector<double> rs(zs.begin() + t, zs.end());
        rs.insert(rs.end(), zs.begin(), zs.begin() + t);
        return rs;
    };
    Shear out = z;
    for (int t = 0; t < m; ++t) {
        auto rs = rot(t);
        std::vector<double> b1(rs.begin() + std::min(2, m), rs.end());
        b1.push_back(rs[0]);
        std::vector<double> b2(rs.begin(), rs.begin() + n);
        out[fc.edges[t]] = -(rs[1 % m] + rs[n]) / 2 - bracket_log(b1) + bracket_log(b2);
    }
    for (int i = 0; i < m; ++i) {
        auto rs = rot((i + 1) % m);
        std::vector<double> b1(rs.begin() + 1, rs.end());
        std::vector<double> b2(rs.begin(), rs.begin() + n);
        out[fc.thirds[i]] += (rs[0] + rs[n]) / 2 + bracket_log(b1) - bracket_log(b2);
    }
    return out;
}

Shear ip_shear(const FatGraph& g, const Penner& u) {
    if (!g.trivalent()) throw std::invalid_argument("ip_shear needs a trivalent graph");
    Shear z(g.edge_count());
    for (int ue = 0; ue < g.edge_count(); ++ue) {
        int e = g.rep(ue);
        z[ue] = u[g.edge_of(g.neighbor(e, 1))] + u[g.edge_of(g.neighbor(e, 3))] -
                u[g.edge_of(g.neighbor(e, 2))] - u[g.edge_of(g.neighbor(e, 4))];
    }
    return z;
}

std::vector<double> area_map(const FatGraph& g, const Penner& u) {
    if (!g.trivalent()) throw std::invalid_argument("area_map needs a trivalent graph");
    std::vector<double> out(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<double> terms;
        for (int e : g.face_walk(f))
            terms.push_back(-u[g.edge_of(e)] + u[g.edge_of(g.neighbor(e, 1))] -
                            u[g.edge_of(g.neighbor(e, 4))]);
        out[f] = lse(terms) / 2;
    }
    return out;
}

std::vector<double> area_map_tropical(const FatGraph& g, const Penner& u) {
    std::vector<double> out(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        double best = -1e300;
        for (int e : g.face_walk(f))
            best = std::max(best, -u[g.edge_of(e)] + u[g.edge_of(g.neighbor(e, 1))] -
                                      u[g.edge_of(g.neighbor(e, 4))]);
        out[f] = best / 2;
    }
    return out;
}

std::vector<double> lH_shear(const FatGraph& g, const Shear& z) {
    std::vector<double> out(g.face_count(), 0.0);
    for (int f = 0; f < g.face_count(); ++f)
        for (int e : g.face(f)) out[f] += z[g.edge_of(e)];
    return out;
}

std::vector<double> lh_shear(const FatGraph& g, const Shear& z) {
    auto out = lH_shear(g, z);
    for (double& x : out) x = std::fabs(x);
    return out;
}

}  // namespace tsurf::teich
