#include "tsurf/stock.hpp"

#include <stdexcept>

namespace tsurf {

namespace {

// Punctured torus. Ends x,y,z at one vertex, x',y',z' at the other,
// rotations (x z y) and (x' z' y'). One face of length 6.
FatGraph make_torus1() {
    return FatGraph({"x", "y", "z", "x'", "y'", "z'"},
                    {2, 0, 1, 5, 3, 4},
                    {3, 4, 5, 0, 1, 2});
}

// Planar theta graph: rotations (x y z) and (x' z' y'). Three faces of length 2.
FatGraph make_theta() {
    return FatGraph({"x", "y", "z", "x'", "y'", "z'"},
                    {1, 2, 0, 5, 3, 4},
                    {3, 4, 5, 0, 1, 2});
}

// Tetrahedron with the polyhedral fat structure.
// Edge a={1,2}, b={1,3}, c={1,4}, d={2,3}, e={2,4}, f={3,4};
// ends (a,b,c | a',d,e | b',d',f | c',e',f') indexed 0..11.
FatGraph make_tetra() {
    return FatGraph({"a", "b", "c", "a'", "d", "e", "b'", "d'", "f", "c'", "e'", "f'"},
                    {1, 2, 0, 5, 3, 4, 7, 8, 6, 11, 9, 10},
                    {3, 6, 9, 0, 7, 10, 1, 4, 11, 2, 5, 8});
}

// Genus-2, one hole: two punctured-torus blocks with one edge of each
// subdivided and the midpoints joined by a bridge.
// Ends 0..5 torus A (p,q,r | p',q',ra), 6..11 torus B, 12..14 midpoint A,
// 15..17 midpoint B; bridge pairs 14-17.
FatGraph make_genus2() {
    return FatGraph({"p", "q", "r", "p'", "q'", "r2", "s", "t", "u", "s'", "t'", "u2",
                     "r'", "r2'", "g", "u'", "u2'", "g'"},
                    {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12, 16, 17, 15},
                    {3, 4, 12, 0, 1, 13, 9, 10, 15, 6, 7, 16, 2, 5, 17, 8, 11, 14});
}

}  // namespace

FatGraph stock_graph(const std::string& name) {
    if (name == "torus1") return make_torus1();
    if (name == "theta") return make_theta();
    if (name == "tetra") return make_tetra();
    if (name == "genus2") return make_genus2();
    throw std::invalid_argument("unknown stock graph: " + name);
}

std::vector<std::string> stock_names() { return {"torus1", "theta", "tetra", "genus2"}; }

}  // namespace tsurf
