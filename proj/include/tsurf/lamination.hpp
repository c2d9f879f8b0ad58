#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/rational.hpp"

#include <vector>

namespace tsurf::lam {

// Coordinates of a bounded measured lamination: one rational per undirected
// edge (negative values encode hole-surrounding curves).
using Bounded = std::vector<Rat>;

// Coordinates of an unbounded measured lamination plus a hole orientation
// (+1/-1) for every face. Orientations of holes not met by the lamination
// are stored but inert.
struct Unbounded {
    std::vector<Rat> w;
    std::vector<int> orientation;  // per face
};

Unbounded make_unbounded(const FatGraph& g, std::vector<Rat> w);

struct Component {
    enum Kind { Closed, Arc, HoleLoop };
    Kind kind = Closed;
    std::vector<int> path;  // directed edges in traversal order (arc: core part)
    Rat weight = 0;
    int from_face = -1;  // arcs: faces the two ends spiral into; loops: the face
    int to_face = -1;
};

using CurveSystem = std::vector<Component>;

// ---- flips (tropical transformation rules) ----
Bounded flip_bounded(const FatGraph& g, const FlipResult& fr, const Bounded& c);
Unbounded flip_unbounded(const FatGraph& g, const FlipResult& fr, const Unbounded& c);

// ---- integrality ----
bool is_integral_bounded(const FatGraph& g, const Bounded& c);
bool is_integral_unbounded(const FatGraph& g, const Unbounded& c);

struct NormalizedBounded {
    std::vector<Int> coords;  // a*c + b, valid for reconstruction
    Int scale = 1;            // a > 0
    Int shift = 0;            // b >= 0, realized by weight-b/2 loops around every hole
};

// smallest scale, then smallest nonnegative shift making a*c + b reconstructible
NormalizedBounded normalize_bounded(const FatGraph& g, const Bounded& c);

// integral nonnegative coords with vertex parity + triangle conditions -> curves
CurveSystem reconstruct_bounded(const FatGraph& g, const std::vector<Int>& c);
// recompute coordinates of a closed-curve system
Bounded coords_of_curves(const FatGraph& g, const CurveSystem& cs);

// integral coords -> curves and arcs, peripheral components dropped
CurveSystem reconstruct_unbounded(const FatGraph& g, const std::vector<Int>& z);
// recompute unbounded coordinates (diagonal-passage counts with handedness signs)
std::vector<Rat> coords_of_unbounded(const FatGraph& g, const CurveSystem& cs);

// ---- coordinate maps of the lamination diagram ----
// weight of the hole-surrounding curve, per face (corner bottleneck)
std::vector<Rat> map_a(const FatGraph& g, const Bounded& c);
// signed / unsigned total weights of curve ends entering each hole
std::vector<Rat> map_lH(const FatGraph& g, const Unbounded& c);
std::vector<Rat> map_lh(const FatGraph& g, const Unbounded& c);
// embedding of bounded into unbounded coordinates (kernel of map_lH)
Unbounded map_ip(const FatGraph& g, const Bounded& c);

// hole orientation change on a regular face (tropical rule)
Unbounded orientation_flip_tropical(const FatGraph& g, const Unbounded& c, int face);

struct PositiveSearchMove {
    enum What { Flip, Orient };
    What what;
    int arg;  // undirected edge or face (index valid on the graph at that step)
};

struct PositiveSearchResult {
    bool success = false;
    FatGraph graph;
    Unbounded coords;
    std::vector<PositiveSearchMove> script;
};

// breadth-first search for a chart with all coordinates >= 0
PositiveSearchResult normalize_positive(const FatGraph& g, const Unbounded& c, int max_steps);

}  // namespace tsurf::lam
