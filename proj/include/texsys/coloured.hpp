#pragma once

#include "texsys/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace texsys {

/// A k-coloured directed graph: every edge carries a colour in 1..k.
class ColouredGraph {
public:
    ColouredGraph() = default;

    const DirectedGraph& graph() const { return graph_; }
    std::size_t colour_count() const { return k_; }
    std::size_t colour_of(std::size_t e) const { return colour_[e]; }
    std::size_t colour_of(const std::string& edge) const
    {
        return colour_[graph_.edge_index(edge)];
    }
    const std::vector<std::size_t>& colours() const { return colour_; }

    /// Edge indices of one colour, in canonical order.
    std::vector<std::size_t> edges_of_colour(std::size_t colour) const;

    friend bool operator==(const ColouredGraph& a, const ColouredGraph& b)
    {
        return a.graph_ == b.graph_ && a.k_ == b.k_ && a.colour_ == b.colour_;
    }

    friend ColouredGraph validate_coloured(DirectedGraph g, std::size_t k,
                                           const std::map<std::string, std::size_t>& colour);

private:
    DirectedGraph graph_;
    std::size_t k_ = 1;
    std::vector<std::size_t> colour_; // per edge index
};

ColouredGraph validate_coloured(DirectedGraph g, std::size_t k,
                                const std::map<std::string, std::size_t>& colour);

/// The coloured lattice graph on {n : 0 <= n <= m} with edges n+e_i -> n of
/// colour i. Vertices are rendered "a,b,..." and edges "e<i>(a,b,...)".
ColouredGraph model_graph(std::size_t k, const std::vector<std::size_t>& m);

/// One commuting square: the pair of bicoloured paths f.g ~ gp.fp with
///   r(f) = r(gp),  s(f) = r(g),  s(gp) = r(fp),  s(g) = s(fp),
/// where f, fp have colour i and g, gp have colour j, i < j.
struct Square {
    std::size_t i = 1, j = 2;
    std::string f, g, gp, fp;

    friend bool operator==(const Square&, const Square&) = default;
};

Square validate_square(const ColouredGraph& cg, Square s);

/// An ordered collection of pairwise-distinct validated squares.
/// Multiply-covered bicoloured paths are legal here; they are what
/// check_complete reports.
class SquareSet {
public:
    SquareSet() = default;

    const std::vector<Square>& squares() const { return squares_; }
    std::size_t size() const { return squares_.size(); }
    bool empty() const { return squares_.empty(); }

    friend bool operator==(const SquareSet&, const SquareSet&) = default;
    friend SquareSet validate_squares(const ColouredGraph& cg, std::vector<Square> squares);

private:
    std::vector<Square> squares_;
};

SquareSet validate_squares(const ColouredGraph& cg, std::vector<Square> squares);

struct PathIssue {
    std::size_t i = 1, j = 2;
    bool ij_order = true;      // true: a c_i c_j path, keyed (f, g); false: (gp, fp)
    std::string first, second; // the two edges of the path
    std::size_t cover_count = 0;
};

struct CompletenessReport {
    bool complete = true;
    std::vector<PathIssue> issues;  // every path covered != exactly once
    bool pairwise_only = false;     // k >= 3: only pairwise completeness was checked
};

/// For each colour pair {i, j}: square -> (f, g) must biject onto the
/// c_i c_j paths and square -> (gp, fp) onto the c_j c_i paths.
CompletenessReport check_complete(const ColouredGraph& cg, const SquareSet& squares);

/// Recovers the unique complete collection when each bicoloured path has
/// exactly one corner-matching partner in the opposite order.
SquareSet deduce_squares(const ColouredGraph& cg);

struct SquareIsomorphism {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

/// Backtracking search for a colour-preserving graph isomorphism carrying
/// squares onto squares. nullopt certifies the search was exhausted.
std::optional<SquareIsomorphism> square_isomorphism(const ColouredGraph& a,
                                                    const SquareSet& ca,
                                                    const ColouredGraph& b,
                                                    const SquareSet& cb,
                                                    std::size_t node_budget = 1000000);

} // namespace texsys
