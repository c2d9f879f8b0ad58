#pragma once

#include "tsurf/fatgraph.hpp"
#include "tsurf/lamination.hpp"
#include "tsurf/markov.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/teich.hpp"

#include <json.hpp>

#include <string>

namespace tsurf::io {

using ordered_json = nlohmann::ordered_json;

// deterministic dump: insertion-ordered keys, doubles with 17 significant digits
std::string dump_json(const ordered_json& j);

ordered_json graph_to_json(const FatGraph& g);
FatGraph graph_from_json(const ordered_json& j);

// "stock:<name>", "file:<path>", or a path to a JSON graph file
FatGraph resolve_graph(const std::string& spec);

std::string graph_to_dot(const FatGraph& g);

ordered_json bounded_to_json(const FatGraph& g, const lam::Bounded& c, const std::string& graph_spec);
ordered_json unbounded_to_json(const FatGraph& g, const lam::Unbounded& c, const std::string& graph_spec);
ordered_json shear_to_json(const FatGraph& g, const teich::Shear& z, const std::string& graph_spec);

struct LoadedCoords {
    FatGraph graph;
    std::vector<Rat> weights;          // exact values
    std::vector<double> real_weights;  // double view
    std::vector<int> orientations;     // per face, defaults to +1
    std::string graph_spec;
};

// reads a coordinate file: {"format":1, "graph":..., "weights":{...}, "orientations":{...}}
LoadedCoords load_coords(const std::string& path);
LoadedCoords coords_from_json(const ordered_json& j);

ordered_json markov_tree_to_json(const markov::Tree& t);
std::string markov_tree_to_dot(const markov::Tree& t);

ordered_json curves_to_json(const FatGraph& g, const lam::CurveSystem& cs);

}  // namespace tsurf::io
