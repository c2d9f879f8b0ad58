#pragma once

namespace tsurf {

// 2x2 real matrix of determinant 1, considered up to overall sign.
struct MobiusElement {
    double a = 1, b = 0, c = 0, d = 1;

    static MobiusElement identity() { return {}; }
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double abs_trace() const;

    MobiusElement operator*(const MobiusElement& o) const;
    MobiusElement inverse() const;
    // rescale to determinant 1 (guards drift across long products)
    void renormalize();
};

// A(z): maps the base ideal triangle across an edge with shear z
MobiusElement edge_matrix(double z);
// I: rotates the vertices of an ideal triangle
MobiusElement turn_matrix();

}  // namespace tsurf
