#pragma once

#include "tsurf/fatgraph.hpp"

#include <vector>

namespace tsurf::teich {

// Shear coordinates on the holed Teichmueller space: one real per edge.
// The orientation of the hole at face f is the sign of the face sum; a zero
// sum means a puncture.
using Shear = std::vector<double>;

// Penner coordinates on the decorated space: signed horocycle-truncated
// lengths, unconstrained reals.
using Penner = std::vector<double>;

// log(e^x + 1), stable
double log1pexp(double x);

Shear flip_shear(const FatGraph& g, const FlipResult& fr, const Shear& z);
Penner flip_penner(const FatGraph& g, const FlipResult& fr, const Penner& u);

// log of the alternating partial-sum exponential sum over the n+1 sign
// patterns (+..+), (+..+-), ..., (-..-), each halved; max-shifted.
double bracket_log(const std::vector<double>& xs);
// its large-scale limit: (1/2) max over the same patterns
double bracket_trop(const std::vector<double>& xs);

Shear orientation_flip_shear(const FatGraph& g, const Shear& z, int face);

// canonical map from decorated to holed coordinates (same graph)
Shear ip_shear(const FatGraph& g, const Penner& u);

// per-face log-areas of the horocyclic disks
std::vector<double> area_map(const FatGraph& g, const Penner& u);

std::vector<double> lH_shear(const FatGraph& g, const Shear& z);
std::vector<double> lh_shear(const FatGraph& g, const Shear& z);

// tropical targets used by the scaling-limit checks
Shear flip_shear_tropical(const FatGraph& g, const FlipResult& fr, const Shear& z);
Penner flip_penner_tropical(const FatGraph& g, const FlipResult& fr, const Penner& u);
std::vector<double> area_map_tropical(const FatGraph& g, const Penner& u);

}  // namespace tsurf::teich
