#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/lamination.hpp"
#include "tsurf/teich.hpp"

#include <string>
#include <vector>

namespace tsurf::pairing {

// weighted hyperbolic length of a bounded lamination at a shear point
double length_TL(const FatGraph& g, const teich::Shear& z, const lam::Bounded& f);

// sum z_alpha u_alpha; requires nonnegative lamination coordinates
double length_LT(const FatGraph& g, const lam::Unbounded& z, const teich::Penner& u);

// sum z_alpha v_alpha; requires nonnegative lamination coordinates
Rat intersection_LL(const FatGraph& g, const lam::Unbounded& z, const lam::Bounded& v);

struct ConvexityReport {
    double l1, l2, lsum;
    double margin;  // l1 + l2 - lsum
};

ConvexityReport convexity_check(const FatGraph& g, const teich::Shear& z, const lam::Bounded& f1,
                                const lam::Bounded& f2);

struct AsymptoticRow {
    double C;
    double value;      // l(C*arg)/C
    double reference;  // tropical limit
    double error;
};

// kind "tl": length_TL(C*z, f)/C against the exact tropical trace value
// kind "lt": length_LT(z, C*u)/C against sum z u
std::vector<AsymptoticRow> asymptotic_check(const FatGraph& g, const std::string& kind,
                                            const teich::Shear& z, const lam::Bounded& f,
                                            const std::vector<double>& Cs);

// exact tropical length of a bounded lamination against lamination data z:
// weighted max-monomial of each component's trace polynomial plus |face sum|
// terms for the hole loops
Rat tropical_length(const FatGraph& g, const std::vector<Rat>& z, const lam::Bounded& f);

}  // namespace tsurf::pairing
