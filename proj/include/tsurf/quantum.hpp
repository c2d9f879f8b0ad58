#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/poisson.hpp"
#include "tsurf/rational.hpp"

#include <vector>

namespace tsurf::quantum {

// phi(x, hbar): quantum deformation of log(1 + e^x), computed as the contour
// integral -(pi hbar/2) \int e^{-ipx} / (sinh(pi p) sinh(pi hbar p)) dp over
// the real line shifted into the upper half plane.
double phi(double x, double hbar, double tol = 1e-9);

struct QuantumPresentation {
    const FatGraph* graph;
    double hbar;
    poisson::SkewMatrix commutators;       // [Z_a, Z_b] = 2 pi i hbar * eps_ab
    std::vector<std::vector<int>> centers; // per face: multiplicity vector over edges
};

QuantumPresentation presentation(const FatGraph& g, double hbar);

// rational multiple of an integer power of hbar
struct HCoef {
    Rat q;
    int hpow = 0;
    HCoef operator*(const HCoef& o) const { return {q * o.q, hpow + o.hpow}; }
    bool operator==(const HCoef& o) const { return q == o.q && (q == 0 || hpow == o.hpow); }
};

// outer * phi(inner * Z_gen, hbar) with hbar_side = +1 for hbar, -1 for 1/hbar
struct PhiTerm {
    HCoef outer;
    HCoef inner;
    int gen;
    int hbar_side = 1;
};

// target generators as affine combinations of source generators plus phi-terms
struct AffineGeneratorMap {
    int n_src = 0, n_dst = 0;
    int src_side = 1, dst_side = 1;  // which deformation parameter each side lives at
    std::vector<std::vector<HCoef>> linear;  // [dst][src]
    std::vector<std::vector<PhiTerm>> phis;  // [dst]

    static AffineGeneratorMap identity(int n, int side = 1);
    // substitute: this maps B->A in terms of A-gens; inner maps C->B; result maps C->A
    AffineGeneratorMap compose(const AffineGeneratorMap& inner) const;
    // rewrite all 1/hbar phi-terms through phi(x,h) = h phi(x/h, 1/h) and sort
    void normalize();
    bool equal_normalized(const AffineGeneratorMap& o) const;
    // numeric evaluation at a source point
    std::vector<double> eval(const std::vector<double>& x, double hbar) const;
    // image of a linear integer combination of dst generators, with phi-terms
    // cancelled through phi(x) - phi(-x) = x; throws if they do not cancel
    std::vector<Rat> apply_to_center(const std::vector<int>& comb) const;
};

// Z^h |-> (1/h) Z^{1/h}
AffineGeneratorMap duality_map(const QuantumPresentation& p);

// flip homomorphism: generators of the flipped graph in terms of the old ones;
// side selects the deformation parameter (+1 for hbar, -1 for 1/hbar)
AffineGeneratorMap quantum_flip(const QuantumPresentation& p, const FlipResult& fr, int side = 1);

}  // namespace tsurf::quantum
