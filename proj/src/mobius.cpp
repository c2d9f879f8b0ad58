#include "tsurf/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace tsurf {

double MobiusElement::abs_trace() const { return std::fabs(a + d); }

MobiusElement MobiusElement::operator*(const MobiusElement& o) const {
    MobiusElement r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    r.renormalize();
    return r;
}

MobiusElement MobiusElement::inverse() const { return {d, -b, -c, a}; }

void MobiusElement::renormalize() {
    double dt = det();
    if (!(dt > 0.5 && dt < 2.0)) {
        if (dt <= 0) throw std::domain_error("MobiusElement: determinant became non-positive");
    }
    double s = std::sqrt(dt);
    a /= s;
    b /= s;
    c /= s;
    d /= s;
}

MobiusElement edge_matrix(double z) {
    return {0.0, std::exp(z / 2), -std::exp(-z / 2), 0.0};
}

MobiusElement turn_matrix() { return {1, 1, -1, 0}; }

}  // namespace tsurf
