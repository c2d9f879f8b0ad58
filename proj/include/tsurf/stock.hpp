#pragma once

#include "tsurf/fatgraph.hpp"

#include <string>
#include <vector>

namespace tsurf {

// Built-in graphs, addressable as stock:<name> on the CLI.
//   torus1  — punctured torus: 2 vertices, 3 edges, 1 face, (g,s) = (1,1)
//   theta   — planar theta / pair of pants: 2 vertices, 3 edges, 3 faces, (0,3)
//   tetra   — tetrahedron / sphere with 4 holes: 4 vertices, 6 edges, 4 faces, (0,4)
//   genus2  — two torus1 blocks joined by a bridge: 6 vertices, 9 edges, 1 face, (2,1)
FatGraph stock_graph(const std::string& name);

std::vector<std::string> stock_names();

}  // namespace tsurf
