#include "tsurf/fuchs.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tsurf::fuchs {

void validate_path(const FatGraph& g, const CurvePath& p) {
    const auto& es = p.edges;
    if (es.empty()) return;
    size_t n = es.size();
    for (size_t i = 0; i < n; ++i) {
        int e = es[i];
        if (e < 0 || e >= g.dir_count()) throw std::invalid_argument("path: bad directed edge");
        int nxt = es[(i + 1) % n];
        int w = g.s1(nxt);
        if (g.vertex_of(w) != g.vertex_of(e))
            throw std::invalid_argument("path: consecutive edges do not meet");
        if (w == e) throw std::invalid_argument("path: immediate backtrack");
        if (w != g.s0(e) && w != g.s0inv(e))
            throw std::invalid_argument("path: vertex is not trivalent along the walk");
    }
}

std::vector<int> path_turns(const FatGraph& g, const CurvePath& p) {
    validate_path(g, p);
    size_t n = p.edges.size();
    std::vector<int> turns(n);
    for (size_t i = 0; i < n; ++i) {
        int e = p.edges[i];
        int w = g.s1(p.edges[(i + 1) % n]);
        turns[i] = (w == g.s0(e)) ? 1 : -1;
    }
    return turns;
}

MobiusElement path_monodromy(const FatGraph& g, const teich::Shear& z, const CurvePath& p) {
    if ((int)z.size() != g.edge_count()) throw std::invalid_argument("coords/edge count mismatch");
    if (p.edges.empty()) return MobiusElement::identity();
    auto turns = path_turns(g, p);
    MobiusElement m = MobiusElement::identity();
    MobiusElement I = turn_matrix(), Ii = turn_matrix().inverse();
    for (size_t i = 0; i < p.edges.size(); ++i) {
        m = m * edge_matrix(z[g.edge_of(p.edges[i])]);
        m = m * (turns[i] > 0 ? I : Ii);
    }
    return m;
}

double geodesic_length(const MobiusElement& m) {
    double t = m.abs_trace();
    if (t < 2.0 - 1e-12) throw std::domain_error("geodesic_length: elliptic element");
    if (t < 2.0) t = 2.0;
    return 2.0 * std::acosh(t / 2.0);
}

MobiusElement boundary_monodromy(const FatGraph& g, const teich::Shear& z, int face) {
    if (face < 0 || face >= g.face_count()) throw std::invalid_argument("bad face index");
    CurvePath p{g.face_walk(face)};
    return path_monodromy(g, z, p);
}

namespace {

struct SymMat {
    LaurentPoly a, b, c, d;
};

SymMat sym_identity(int nv) {
    return {LaurentPoly::constant(nv, 1), LaurentPoly(nv), LaurentPoly(nv),
            LaurentPoly::constant(nv, 1)};
}

SymMat sym_mul(const SymMat& x, const SymMat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

SymMat sym_edge(int nv, int var) {
    SymMat m{LaurentPoly(nv), LaurentPoly::monomial(nv, var, 2),
             LaurentPoly::monomial(nv, var, -2, -1), LaurentPoly(nv)};
    return m;
}

SymMat sym_turn(int nv, bool left) {
    if (left)
        return {LaurentPoly::constant(nv, 1), LaurentPoly::constant(nv, 1),
                LaurentPoly::constant(nv, -1), LaurentPoly(nv)};
    return {LaurentPoly(nv), LaurentPoly::constant(nv, -1), LaurentPoly::constant(nv, 1),
            LaurentPoly::constant(nv, 1)};
}

LaurentPoly trace_poly_impl(const FatGraph& g, const CurvePath& p) {
    int nv = g.edge_count();
    auto turns = path_turns(g, p);
    SymMat m = sym_identity(nv);
    for (size_t i = 0; i < p.edges.size(); ++i) {
        m = sym_mul(m, sym_edge(nv, g.edge_of(p.edges[i])));
        m = sym_mul(m, sym_turn(nv, turns[i] > 0));
    }
    return (m.a + m.d).sign_normalized();
}

}  // namespace

LaurentPoly trace_polynomial(const FatGraph& g, const CurvePath& p) {
    std::set<int> used;
    for (int e : p.edges)
        if (!used.insert(g.edge_of(e)).second)
            throw std::invalid_argument("trace_polynomial: path visits an edge twice");
    return trace_poly_impl(g, p);
}

LaurentPoly trace_polynomial_unchecked(const FatGraph& g, const CurvePath& p) {
    return trace_poly_impl(g, p);
}

}  // namespace tsurf::fuchs
