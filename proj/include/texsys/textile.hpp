#pragma once

#include "texsys/coloured.hpp"
#include "texsys/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace texsys {

/// A textile system (E, F, p, q): graph morphisms p, q : F -> E such that
/// f -> (p(f), q(f), r(f), s(f)) is injective on the edges of F.
class TextileSystem {
public:
    TextileSystem() = default;

    const DirectedGraph& E() const { return e_; }
    const DirectedGraph& F() const { return f_; }
    const GraphMorphism& p() const { return p_; }
    const GraphMorphism& q() const { return q_; }

    friend TextileSystem validate_textile(DirectedGraph E, DirectedGraph F, GraphMorphism p,
                                          GraphMorphism q);

private:
    DirectedGraph e_, f_;
    GraphMorphism p_, q_;
};

TextileSystem validate_textile(DirectedGraph E, DirectedGraph F, GraphMorphism p,
                               GraphMorphism q);

/// Convenience: validates the morphisms from name maps, then the system.
TextileSystem validate_textile(DirectedGraph E, DirectedGraph F,
                               const std::map<std::string, std::string>& p_vertices,
                               const std::map<std::string, std::string>& p_edges,
                               const std::map<std::string, std::string>& q_vertices,
                               const std::map<std::string, std::string>& q_edges);

struct LiftingViolation {
    std::string edge;   // edge of E
    std::string vertex; // vertex of F
    std::size_t count;  // number of lifts found (anything but 1 is a violation)

    friend bool operator==(const LiftingViolation&, const LiftingViolation&) = default;
};

struct LiftingCase {
    bool has_lifting = true; // every compatible (edge, vertex) pair has >= 1 lift
    bool unique = true;      // every compatible pair has exactly 1 lift
    std::vector<LiftingViolation> violations;
};

/// The four path-lifting cases (map in {p, q}) x (side in {r, s}),
/// each with its witnesses.
struct LiftingReport {
    LiftingCase p_r, p_s, q_r, q_s;
};

LiftingReport lifting(const TextileSystem& t);

enum class CollisionPolicy {
    prefix, // prefix blue edges "b:" and red edges "r:" when names collide
    strict, // throw identifier_collision instead
};

/// The 2-coloured graph of a textile system: vertices of E, blue edges the
/// edges of E, red edges the vertices of F (range q(w), source p(w)), and one
/// square per edge of F. Squares are listed in the edge order of F.
std::pair<ColouredGraph, SquareSet> to_coloured(const TextileSystem& t,
                                                CollisionPolicy policy = CollisionPolicy::prefix);

struct Admits2Graph {
    bool admits = false;
    std::string reason;
};

/// True iff p has unique r-path lifting and q has unique s-path lifting.
/// Cross-checked against completeness of the associated square collection;
/// the two criteria agreeing is an internal invariant.
Admits2Graph admits_2graph(const TextileSystem& t);

/// Inverse construction: E is the blue subgraph, the vertices of F are the
/// red edges, and the edges of F are the squares (named "sq<k>" by position,
/// with r = gp, s = g, p = fp, q = f).
TextileSystem from_2graph(const ColouredGraph& cg, const SquareSet& squares);

/// The red graph: vertices of E, one edge per vertex w of F with
/// r = q(w), s = p(w).
DirectedGraph hat_graph(const TextileSystem& t);

struct PropertyReport {
    std::vector<std::string> blue_sources, blue_sinks; // vertices, per the graph E
    std::vector<std::string> red_sources, red_sinks;   // vertices, per the red graph
    bool essential = false;                            // no sinks or sources in either colour
    bool row_finite = true;                            // no infinite receivers in either colour
    std::size_t max_blue_in_degree = 0, max_red_in_degree = 0;

    bool admits = false; // the fields below only make 2-graph sense when true
    std::optional<bool> locally_convex;
    std::optional<bool> finitely_aligned;
    /// (blue edge e, red edge w) with q(w) = r(e) -> number of mediating squares.
    std::vector<std::tuple<std::string, std::string, std::size_t>> mce_table;
};

PropertyReport properties(const TextileSystem& t);

struct TextileMorphism {
    GraphMorphism phi_e; // E_S -> E_T
    GraphMorphism phi_f; // F_S -> F_T
};

/// Lifts a square isomorphism of the associated coloured graphs back through
/// the edges-of-F <-> squares bijection. nullopt certifies absence.
std::optional<TextileMorphism> textile_isomorphism(const TextileSystem& s,
                                                   const TextileSystem& t,
                                                   std::size_t node_budget = 1000000);

} // namespace texsys
