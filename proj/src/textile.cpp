#include "texsys/textile.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

namespace texsys {

TextileSystem validate_textile(DirectedGraph E, DirectedGraph F, GraphMorphism p, GraphMorphism q)
{
    if (p.vertex_map().size() != F.vertex_count() || p.edge_map().size() != F.edge_count() ||
        q.vertex_map().size() != F.vertex_count() || q.edge_map().size() != F.edge_count())
        throw error(errc::usage_error, "morphisms do not match the graph F");

    // f -> (p(f), q(f), r(f), s(f)) must be injective
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t f = 0; f < F.edge_count(); ++f) {
        auto key = std::make_tuple(p.edge_image(f), q.edge_image(f), F.range_of(f),
                                   F.source_of(f));
        auto [it, fresh] = seen.emplace(key, f);
        if (!fresh)
            throw error(errc::injectivity_violation,
                        "edges '" + F.edges()[it->second].name + "' and '" + F.edges()[f].name +
                            "' have the same (p, q, r, s) quadruple");
    }

    TextileSystem t;
    t.e_ = std::move(E);
    t.f_ = std::move(F);
    t.p_ = std::move(p);
    t.q_ = std::move(q);
    return t;
}

TextileSystem validate_textile(DirectedGraph E, DirectedGraph F,
                               const std::map<std::string, std::string>& p_vertices,
                               const std::map<std::string, std::string>& p_edges,
                               const std::map<std::string, std::string>& q_vertices,
                               const std::map<std::string, std::string>& q_edges)
{
    GraphMorphism p = validate_morphism(F, E, p_vertices, p_edges);
    GraphMorphism q = validate_morphism(F, E, q_vertices, q_edges);
    return validate_textile(std::move(E), std::move(F), std::move(p), std::move(q));
}

namespace {

// one lifting case: count lifts of e through `m` at every w with
// side(e) = m(w); side r uses edges received by w, side s edges emitted by w
LiftingCase lifting_case(const TextileSystem& t, const GraphMorphism& m, bool side_r)
{
    const DirectedGraph& E = t.E();
    const DirectedGraph& F = t.F();
    LiftingCase result;
    for (std::size_t e = 0; e < E.edge_count(); ++e) {
        std::size_t anchor = side_r ? E.range_of(e) : E.source_of(e);
        for (std::size_t w = 0; w < F.vertex_count(); ++w) {
            if (m.vertex_image(w) != anchor) continue;
            const auto& incident = side_r ? F.receiving(w) : F.emitting(w);
            std::size_t count = 0;
            for (std::size_t f : incident)
                if (m.edge_image(f) == e) ++count;
            if (count != 1) {
                result.violations.push_back(
                    LiftingViolation{E.edges()[e].name, F.vertices()[w], count});
                result.unique = false;
                if (count == 0) result.has_lifting = false;
            }
        }
    }
    return result;
}

} // namespace

LiftingReport lifting(const TextileSystem& t)
{
    LiftingReport report;
    report.p_r = lifting_case(t, t.p(), true);
    report.p_s = lifting_case(t, t.p(), false);
    report.q_r = lifting_case(t, t.q(), true);
    report.q_s = lifting_case(t, t.q(), false);
    return report;
}

std::pair<ColouredGraph, SquareSet> to_coloured(const TextileSystem& t, CollisionPolicy policy)
{
    const DirectedGraph& E = t.E();
    const DirectedGraph& F = t.F();

    bool collision = false;
    for (const auto& w : F.vertices())
        if (E.has_edge(w)) collision = true;
    if (collision && policy == CollisionPolicy::strict)
        throw error(errc::identifier_collision,
                    "edge names of E collide with vertex names of F");

    auto blue_name = [&](const std::string& n) { return collision ? "b:" + n : n; };
    auto red_name = [&](const std::string& n) { return collision ? "r:" + n : n; };

    std::vector<Edge> edges;
    std::map<std::string, std::size_t> colour;
    for (const Edge& e : E.edges()) {
        edges.push_back(Edge{blue_name(e.name), e.range, e.source});
        colour[blue_name(e.name)] = 1;
    }
    for (std::size_t w = 0; w < F.vertex_count(); ++w) {
        std::string name = red_name(F.vertices()[w]);
        edges.push_back(Edge{name, E.vertices()[t.q().vertex_image(w)],
                             E.vertices()[t.p().vertex_image(w)]});
        colour[name] = 2;
    }

    ColouredGraph cg =
        validate_coloured(validate_graph(E.vertices(), std::move(edges)), 2, colour);

    std::vector<Square> raw;
    raw.reserve(F.edge_count());
    for (std::size_t f = 0; f < F.edge_count(); ++f) {
        raw.push_back(Square{1, 2,
                             blue_name(E.edges()[t.q().edge_image(f)].name),
                             red_name(F.vertices()[F.source_of(f)]),
                             red_name(F.vertices()[F.range_of(f)]),
                             blue_name(E.edges()[t.p().edge_image(f)].name)});
    }
    SquareSet squares = validate_squares(cg, std::move(raw));
    return {std::move(cg), std::move(squares)};
}

Admits2Graph admits_2graph(const TextileSystem& t)
{
    LiftingReport report = lifting(t);
    bool by_lifting = report.p_r.unique && report.q_s.unique;

    auto [cg, squares] = to_coloured(t);
    bool by_completeness = check_complete(cg, squares).complete;
    if (by_lifting != by_completeness)
        throw error(errc::internal_inconsistency,
                    "path lifting and square completeness disagree");

    Admits2Graph result;
    result.admits = by_lifting;
    if (by_lifting) {
        result.reason = "p has unique r-path lifting and q has unique s-path lifting";
    } else {
        std::string parts;
        if (!report.p_r.unique) parts = "p lacks unique r-path lifting";
        if (!report.q_s.unique) {
            if (!parts.empty()) parts += "; ";
            parts += "q lacks unique s-path lifting";
        }
        result.reason = parts;
    }
    return result;
}

TextileSystem from_2graph(const ColouredGraph& cg, const SquareSet& squares)
{
    if (cg.colour_count() != 2)
        throw error(errc::usage_error, "only 2-coloured graphs convert to textile systems");
    CompletenessReport completeness = check_complete(cg, squares);
    if (!completeness.complete)
        throw error(errc::incomplete_squares,
                    "the square collection is not complete (" +
                        std::to_string(completeness.issues.size()) + " uncovered or "
                        "multiply covered path(s))");

    const DirectedGraph& g = cg.graph();

    std::vector<Edge> blue;
    for (std::size_t e : cg.edges_of_colour(1))
        blue.push_back(g.edges()[e]);
    DirectedGraph E = validate_graph(g.vertices(), std::move(blue));

    std::vector<std::string> f_vertices;
    std::map<std::string, std::string> p0, q0;
    for (std::size_t e : cg.edges_of_colour(2)) {
        const Edge& red = g.edges()[e];
        f_vertices.push_back(red.name);
        p0[red.name] = red.source;
        q0[red.name] = red.range;
    }

    std::vector<Edge> f_edges;
    std::map<std::string, std::string> p1, q1;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const Square& s = squares.squares()[k];
        std::string name = "sq" + std::to_string(k);
        f_edges.push_back(Edge{name, s.gp, s.g});
        p1[name] = s.fp;
        q1[name] = s.f;
    }

    DirectedGraph F = validate_graph(std::move(f_vertices), std::move(f_edges));
    return validate_textile(std::move(E), std::move(F), p0, p1, q0, q1);
}

DirectedGraph hat_graph(const TextileSystem& t)
{
    std::vector<Edge> edges;
    for (std::size_t w = 0; w < t.F().vertex_count(); ++w)
        edges.push_back(Edge{t.F().vertices()[w], t.E().vertices()[t.q().vertex_image(w)],
                             t.E().vertices()[t.p().vertex_image(w)]});
    return validate_graph(t.E().vertices(), std::move(edges));
}

PropertyReport properties(const TextileSystem& t)
{
    const DirectedGraph& E = t.E();
    const DirectedGraph& F = t.F();
    DirectedGraph red = hat_graph(t);

    PropertyReport report;
    for (std::size_t v = 0; v < E.vertex_count(); ++v) {
        if (E.receiving(v).empty()) report.blue_sources.push_back(E.vertices()[v]);
        if (E.emitting(v).empty()) report.blue_sinks.push_back(E.vertices()[v]);
        if (red.receiving(v).empty()) report.red_sources.push_back(E.vertices()[v]);
        if (red.emitting(v).empty()) report.red_sinks.push_back(E.vertices()[v]);
        report.max_blue_in_degree = std::max(report.max_blue_in_degree, E.receiving(v).size());
        report.max_red_in_degree = std::max(report.max_red_in_degree, red.receiving(v).size());
    }
    report.essential = report.blue_sources.empty() && report.blue_sinks.empty() &&
                       report.red_sources.empty() && report.red_sinks.empty();
    report.row_finite = true; // literal count: every in-degree is finite here

    report.admits = admits_2graph(t).admits;
    if (!report.admits)
        return report;

    bool locally_convex = true;
    bool finitely_aligned = true;
    for (std::size_t e = 0; e < E.edge_count(); ++e) {
        for (std::size_t w = 0; w < F.vertex_count(); ++w) {
            if (t.q().vertex_image(w) != E.range_of(e)) continue;
            // w must receive some edge of F, and e must arise as q of some edge
            bool w_extends = !F.receiving(w).empty();
            bool e_extends = false;
            for (std::size_t f = 0; f < F.edge_count(); ++f)
                if (t.q().edge_image(f) == e) { e_extends = true; break; }
            if (!(w_extends && e_extends)) locally_convex = false;

            std::size_t mediating = 0;
            for (std::size_t f : F.receiving(w))
                if (t.q().edge_image(f) == e) ++mediating;
            report.mce_table.emplace_back(E.edges()[e].name, F.vertices()[w], mediating);
        }
    }
    report.locally_convex = locally_convex;
    report.finitely_aligned = finitely_aligned; // all the mediating sets are finite
    return report;
}

std::optional<TextileMorphism> textile_isomorphism(const TextileSystem& s,
                                                   const TextileSystem& t,
                                                   std::size_t node_budget)
{
    auto [gs, cs] = to_coloured(s);
    auto [gt, ct] = to_coloured(t);
    auto iso = square_isomorphism(gs, cs, gt, ct, node_budget);
    if (!iso)
        return std::nullopt;

    auto strip = [](const std::string& name, const std::string& prefix, bool prefixed) {
        return prefixed ? name.substr(prefix.size()) : name;
    };
    bool s_prefixed = false;
    for (const auto& w : s.F().vertices())
        if (s.E().has_edge(w)) s_prefixed = true;
    bool t_prefixed = false;
    for (const auto& w : t.F().vertices())
        if (t.E().has_edge(w)) t_prefixed = true;

    // phi_E: vertices via the vertex map, edges via the blue part of the edge map
    std::vector<std::size_t> ev(s.E().vertex_count()), ee(s.E().edge_count());
    for (std::size_t v = 0; v < s.E().vertex_count(); ++v)
        ev[v] = t.E().vertex_index(iso->vertex_map.at(s.E().vertices()[v]));
    for (std::size_t e = 0; e < s.E().edge_count(); ++e) {
        std::string src = s_prefixed ? "b:" + s.E().edges()[e].name : s.E().edges()[e].name;
        ee[e] = t.E().edge_index(strip(iso->edge_map.at(src), "b:", t_prefixed));
    }
    GraphMorphism phi_e(std::move(ev), std::move(ee));

    // phi_F: vertices via the red part of the edge map, edges via the
    // (p, q, r, s) quadruple that identifies the image square
    std::vector<std::size_t> fv(s.F().vertex_count()), fe(s.F().edge_count());
    for (std::size_t w = 0; w < s.F().vertex_count(); ++w) {
        std::string src = s_prefixed ? "r:" + s.F().vertices()[w] : s.F().vertices()[w];
        fv[w] = t.F().vertex_index(strip(iso->edge_map.at(src), "r:", t_prefixed));
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t>
        t_edge_by_quadruple;
    for (std::size_t f = 0; f < t.F().edge_count(); ++f)
        t_edge_by_quadruple[{t.p().edge_image(f), t.q().edge_image(f), t.F().range_of(f),
                             t.F().source_of(f)}] = f;
    for (std::size_t f = 0; f < s.F().edge_count(); ++f) {
        auto key = std::make_tuple(phi_e.edge_image(s.p().edge_image(f)),
                                   phi_e.edge_image(s.q().edge_image(f)),
                                   fv[s.F().range_of(f)], fv[s.F().source_of(f)]);
        auto it = t_edge_by_quadruple.find(key);
        if (it == t_edge_by_quadruple.end())
            throw error(errc::internal_inconsistency,
                        "square isomorphism did not lift to the textile systems");
        fe[f] = it->second;
    }
    GraphMorphism phi_f(std::move(fv), std::move(fe));

    // the lifted pair must intertwine p and q
    for (std::size_t f = 0; f < s.F().edge_count(); ++f) {
        if (phi_e.edge_image(s.p().edge_image(f)) != t.p().edge_image(phi_f.edge_image(f)) ||
            phi_e.edge_image(s.q().edge_image(f)) != t.q().edge_image(phi_f.edge_image(f)))
            throw error(errc::internal_inconsistency, "textile morphism check failed");
    }

    return TextileMorphism{std::move(phi_e), std::move(phi_f)};
}

} // namespace texsys
