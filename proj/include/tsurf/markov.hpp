#pragma once

#include "tsurf/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace tsurf::markov {

using Triple = std::array<Int, 3>;

// thirds of the traces of the three standard curves at shear point (x,y,z):
// X from edges (y,z), Y from (z,x), Z from (x,y)
std::array<double, 3> markov_traces(double x, double y, double z);

// Vieta move (t1,t2,t3) -> (t3, 3 t3 t1 - t2, t1)
Triple markov_move(const Triple& t);
Triple markov_rotate(const Triple& t);

bool is_markov(const Triple& t);

struct TreeNode {
    Int label;                 // the number written on the new region
    Int a, b, c;               // flanking regions and the region behind
    long long pl, ql, pr, qr;  // Farey interval (pl/ql, pr/qr); label = M(mediant)
    int left = -1, right = -1; // child indices, -1 at the leaves
};

struct Tree {
    std::vector<TreeNode> nodes;  // node 0 is the trunk (label 5)
    std::vector<Int> base{1, 1, 2};
    std::vector<Int> all_labels() const;
};

// binary tree of new Markov numbers to the given depth (depth 0: trunk only)
Tree markov_tree(int depth);

// M(p/q) for a reduced fraction (q = 0 means the infinite slope)
Int markov_of_rational(long long p, long long q);

// (1/q) arccosh(3/2 M(p/q))
double psi(long long p, long long q);

struct DecoratedState {
    Rat U, V, W;
    Rat area() const;  // (U^2+V^2+W^2)/(UVW)
};

// applies the moves ('m' = flip move, 'r' = cyclic rotation) to (U,V,W)
std::vector<DecoratedState> decorated_orbit(const Rat& U, const Rat& V, const Rat& W,
                                            const std::string& moves);

}  // namespace tsurf::markov
