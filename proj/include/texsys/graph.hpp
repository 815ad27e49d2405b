#pragma once

#include "texsys/error.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace texsys {

/// A directed edge. `range` is the vertex the edge points at and `source` the
/// vertex it leaves; paths compose right-to-left, s(mu_i) = r(mu_{i+1}).
struct Edge {
    std::string name;
    std::string range;
    std::string source;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph. Immutable after validation; vertex and edge
/// positions follow input order and fix the basis order of every matrix
/// built downstream.
class DirectedGraph {
public:
    DirectedGraph() = default;

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const std::string& name) const { return vertex_index_.count(name) != 0; }
    bool has_edge(const std::string& name) const { return edge_index_.count(name) != 0; }

    std::size_t vertex_index(const std::string& name) const;
    std::size_t edge_index(const std::string& name) const;

    const Edge& edge(std::size_t e) const { return edges_[e]; }
    std::size_t range_of(std::size_t e) const { return edge_range_[e]; }
    std::size_t source_of(std::size_t e) const { return edge_source_[e]; }

    /// Edges e with r(e) = v: the edges v receives.
    const std::vector<std::size_t>& receiving(std::size_t v) const { return receiving_[v]; }
    /// Edges e with s(e) = v: the edges v emits.
    const std::vector<std::size_t>& emitting(std::size_t v) const { return emitting_[v]; }

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    friend DirectedGraph validate_graph(std::vector<std::string> vertices,
                                        std::vector<Edge> edges);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> edge_range_;
    std::vector<std::size_t> edge_source_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::vector<std::vector<std::size_t>> receiving_;
    std::vector<std::vector<std::size_t>> emitting_;
};

/// Checks identifier uniqueness (vertices and edges separately) and endpoint
/// existence. Throws with one detail line per violation.
DirectedGraph validate_graph(std::vector<std::string> vertices, std::vector<Edge> edges);

struct Path {
    std::vector<std::string> edges; // mu_1 ... mu_n
    std::string range;              // r(mu_1)
    std::string source;             // s(mu_n)
};

/// Accepts the sequence iff every junction satisfies s(mu_i) = r(mu_{i+1});
/// on failure the error's index() is the 0-based position of the second edge
/// of the first bad junction.
Path check_path(const DirectedGraph& g, const std::vector<std::string>& edge_names);

/// One letter of an undirected word; exponent +1 runs s(e) -> r(e) and
/// exponent -1 runs r(e) -> s(e).
struct Letter {
    std::string edge;
    int exponent; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct UndirectedWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const UndirectedWord&, const UndirectedWord&) = default;
};

UndirectedWord free_reduce(UndirectedWord w);
UndirectedWord inverse_word(const UndirectedWord& w);
bool is_reduced(const UndirectedWord& w);

/// Endpoint of a single letter under the swapped-endpoint convention.
std::string letter_range(const DirectedGraph& g, const Letter& l);
std::string letter_source(const DirectedGraph& g, const Letter& l);

/// Letterwise composability: s(l_i) = r(l_{i+1}) for all adjacent pairs.
bool word_composable(const DirectedGraph& g, const UndirectedWord& w);

/// Vertex-to-vertex maps between two graphs intertwining range and source.
class GraphMorphism {
public:
    GraphMorphism() = default;
    GraphMorphism(std::vector<std::size_t> vertex_map, std::vector<std::size_t> edge_map)
        : vertex_map_(std::move(vertex_map)), edge_map_(std::move(edge_map))
    {
    }

    std::size_t vertex_image(std::size_t v) const { return vertex_map_[v]; }
    std::size_t edge_image(std::size_t e) const { return edge_map_[e]; }
    const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
    const std::vector<std::size_t>& edge_map() const { return edge_map_; }

    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

private:
    std::vector<std::size_t> vertex_map_;
    std::vector<std::size_t> edge_map_;
};

/// The maps must be total on src identifiers and valued in dst identifiers;
/// every edge must satisfy r(p(e)) = p(r(e)) and s(p(e)) = p(s(e)).
GraphMorphism validate_morphism(const DirectedGraph& src, const DirectedGraph& dst,
                                const std::map<std::string, std::string>& vertex_map,
                                const std::map<std::string, std::string>& edge_map);

GraphMorphism identity_morphism(const DirectedGraph& g);

/// outer ∘ inner; sizes must agree.
GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner);

/// Connectivity of the underlying undirected graph.
bool is_connected(const DirectedGraph& g);

/// Breadth-first spanning tree over the undirected graph. Each round scans
/// the edge list in the supplied order and adopts edges joining the previous
/// layer to unvisited vertices, so the result is deterministic.
class SpanningTree {
public:
    struct Arc {
        std::size_t parent;   // parent vertex index
        std::size_t edge;     // edge index joining parent and the vertex
        int exponent;         // letter (edge, exponent) traverses parent -> vertex
    };

    std::size_t root() const { return root_; }
    const std::vector<std::size_t>& tree_edges() const { return tree_edges_; }
    bool contains_edge(std::size_t e) const { return in_tree_[e]; }
    const std::optional<Arc>& parent_arc(std::size_t v) const { return parent_[v]; }

    friend SpanningTree spanning_tree(const DirectedGraph& g, const std::string& root,
                                      const std::vector<std::size_t>& edge_order);

private:
    std::size_t root_ = 0;
    std::vector<std::size_t> tree_edges_;
    std::vector<bool> in_tree_;
    std::vector<std::optional<Arc>> parent_;
};

SpanningTree spanning_tree(const DirectedGraph& g, const std::string& root);
SpanningTree spanning_tree(const DirectedGraph& g, const std::string& root,
                           const std::vector<std::size_t>& edge_order);

/// The reduced tree word with source `from` and range `to`; empty when equal.
UndirectedWord tree_path(const DirectedGraph& g, const SpanningTree& t,
                         const std::string& from, const std::string& to);

} // namespace texsys
