#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/laurent.hpp"
#include "tsurf/mobius.hpp"
#include "tsurf/teich.hpp"

#include <vector>

namespace tsurf::fuchs {

// Closed path on the graph: cyclic sequence of directed edges, consecutive
// ones sharing head/tail; no immediate backtracks.
struct CurvePath {
    std::vector<int> edges;
};

// throws if the sequence is not a reduced closed walk
void validate_path(const FatGraph& g, const CurvePath& p);

// turn at the passage from edges[i] to edges[i+1]: +1 left (matrix I),
// -1 right (matrix I^-1)
std::vector<int> path_turns(const FatGraph& g, const CurvePath& p);

MobiusElement path_monodromy(const FatGraph& g, const teich::Shear& z, const CurvePath& p);

// l = |log(lambda1/lambda2)| = 2 arccosh(|tr|/2); throws if |tr| < 2
double geodesic_length(const MobiusElement& m);

MobiusElement boundary_monodromy(const FatGraph& g, const teich::Shear& z, int face);

// |trace| as a Laurent polynomial in t_alpha = e^{z_alpha/2};
// requires a path visiting no undirected edge twice
LaurentPoly trace_polynomial(const FatGraph& g, const CurvePath& p);

// the same product without the edge-multiplicity restriction (test helper
// for transported curves); exact, may be large
LaurentPoly trace_polynomial_unchecked(const FatGraph& g, const CurvePath& p);

}  // namespace tsurf::fuchs
