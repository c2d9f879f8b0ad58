#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/laurent.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/teich.hpp"

#include <vector>

namespace tsurf::poisson {

// antisymmetric integer matrix indexed by undirected edges
struct SkewMatrix {
    std::vector<std::vector<int>> m;
    int size() const { return (int)m.size(); }
    int at(int a, int b) const { return m[a][b]; }
};

// Weil-Petersson bivector: eps[a][b] counts directed edges with
// (edge, edge(1)) = (a, b) minus those with (b, a).
SkewMatrix wp_bivector(const FatGraph& g);
// Weil-Petersson 2-form in decorated coordinates; same edge-pair sum.
SkewMatrix wp_form(const FatGraph& g);

// linear function sum_alpha c_alpha z_alpha
using LinearForm = std::vector<Rat>;

// face sum as a linear form (with multiplicity)
LinearForm face_form(const FatGraph& g, int face);

Rat bracket(const SkewMatrix& eps, const LinearForm& f, const LinearForm& h);
LaurentPoly bracket(const SkewMatrix& eps, const LinearForm& f, const LaurentPoly& h);
LaurentPoly bracket(const SkewMatrix& eps, const LaurentPoly& f, const LaurentPoly& h);

// checks J eps J^T = eps' for the flip Jacobian at each sample point;
// returns the largest absolute deviation.
double flip_invariance_check(const FatGraph& g, int ue, const std::vector<teich::Shear>& points);

// Jacobian of flip_shear at a point: rows new edges, columns old edges
std::vector<std::vector<double>> flip_jacobian(const FatGraph& g, const FlipResult& fr,
                                               const teich::Shear& z);

}  // namespace tsurf::poisson
