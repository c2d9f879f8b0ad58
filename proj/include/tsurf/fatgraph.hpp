#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tsurf {

// Fat graph as a pair of permutations (s0, s1) of the set of directed edges.
// s0 rotates the edge ends counterclockwise at each vertex, s1 is the
// fixed-point-free involution swapping the two ends of each edge.
//
// A directed edge is identified with the edge end it points at: head(e) is
// the vertex whose rotation orbit contains e, tail(e) = head(s1(e)).
// Vertices are the orbits of s0, faces the orbits of s2 = s0^-1 s1.
class FatGraph {
public:
    FatGraph(std::vector<std::string> names, std::vector<int> s0, std::vector<int> s1);

    int dir_count() const { return (int)s0_.size(); }
    int edge_count() const { return (int)ureps_.size(); }
    int vertex_count() const { return (int)vertices_.size(); }
    int face_count() const { return (int)faces_.size(); }

    int s0(int e) const { return s0_[e]; }
    int s0inv(int e) const { return is0_[e]; }
    int s1(int e) const { return s1_[e]; }
    int s2(int e) const { return is0_[s1_[e]]; }

    // neighbor map: k=1 -> s0 e, k=2 -> s0^-1 s1 e, k=3 -> s0 s1 e, k=4 -> s0^-1 e
    int neighbor(int e, int k) const;

    const std::string& dir_name(int e) const { return names_[e]; }
    int dir_index(const std::string& name) const;  // -1 if absent

    // undirected edges
    int edge_of(int e) const { return uedge_[e]; }
    int rep(int ue) const { return ureps_[ue]; }    // canonical directed representative
    std::string edge_name(int ue) const;
    int edge_index(const std::string& name) const;  // -1 if absent

    int vertex_of(int e) const { return vofe_[e]; }
    int face_of(int e) const { return fofe_[e]; }
    const std::vector<int>& vertex(int v) const { return vertices_[v]; }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    bool trivalent() const;
    bool connected() const;
    bool is_loop_edge(int ue) const;

    // face boundary as a closed walk (consecutive edges share head/tail);
    // successor of e in the walk is s1(s0(e)).
    std::vector<int> face_walk(int f) const;
    // face cycle in s2-orbit order starting from the orbit representative
    const std::vector<int>& face_cycle(int f) const { return faces_[f]; }

    // multiplicity of undirected edge ue on the boundary of face f
    int face_multiplicity(int f, int ue) const;

private:
    std::vector<std::string> names_;
    std::vector<int> s0_, s1_, is0_;
    std::vector<int> uedge_, ureps_;
    std::vector<std::vector<int>> vertices_, faces_;
    std::vector<int> vofe_, fofe_;
};

// bijection between the undirected edge sets of two graphs
class EdgeCorrespondence {
public:
    EdgeCorrespondence() = default;
    explicit EdgeCorrespondence(std::vector<int> fwd);
    static EdgeCorrespondence identity(int n);

    int apply(int ue) const { return fwd_.at(ue); }
    int size() const { return (int)fwd_.size(); }
    EdgeCorrespondence then(const EdgeCorrespondence& next) const;
    EdgeCorrespondence inverse() const;

private:
    std::vector<int> fwd_;
};

struct FlipResult {
    FatGraph graph;
    EdgeCorrespondence edges;     // old undirected edge -> new undirected edge
    std::vector<int> face_map;    // new face index -> old face index
    int diagonal = -1;            // new undirected-edge index of the flipped edge
};

struct CoverResult {
    FatGraph graph;
    std::vector<int> edge_proj;    // cover undirected edge -> base undirected edge
    std::vector<int> dir_proj;     // cover directed edge -> base directed edge
    std::vector<int> face_proj;    // cover face -> base face
    std::vector<int> vertex_proj;  // cover vertex -> base vertex
};

FatGraph build_graph(std::vector<std::string> names, std::vector<int> s0, std::vector<int> s1);

// (genus, holes); throws on disconnected or inconsistent counts
std::pair<int, int> surface_type(const FatGraph& g);

FatGraph dual(const FatGraph& g);

// Whitehead move on a non-loop edge of a trivalent graph.
FlipResult flip(const FatGraph& g, int ue);

// unramified cover: monodromy[ue] is a permutation of {0..N-1} applied when
// crossing edge ue from its canonical representative side.
CoverResult build_cover(const FatGraph& g, const std::vector<std::vector<int>>& monodromy, int N);

bool is_regular(const FatGraph& g);

// face with pairwise-distinct boundary edges and pairwise-distinct corner vertices
bool face_is_regular(const FatGraph& g, int f);

// fat-graph isomorphism (directed-edge bijection commuting with s0 and s1);
// first match in canonical seed order.
std::optional<std::vector<int>> graphs_isomorphic(const FatGraph& a, const FatGraph& b);

// all automorphisms of g (as directed-edge maps)
std::vector<std::vector<int>> automorphisms(const FatGraph& g);

}  // namespace tsurf
