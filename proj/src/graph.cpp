#include "texsys/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace texsys {

const char* errc_name(errc code)
{
    switch (code) {
        case errc::empty_graph: return "empty_graph";
        case errc::duplicate_identifier: return "duplicate_identifier";
        case errc::dangling_endpoint: return "dangling_endpoint";
        case errc::unknown_identifier: return "unknown_identifier";
        case errc::not_composable: return "not_composable";
        case errc::intertwining_violation: return "intertwining_violation";
        case errc::disconnected: return "disconnected";
        case errc::missing_colour: return "missing_colour";
        case errc::colour_out_of_range: return "colour_out_of_range";
        case errc::colour_mismatch: return "colour_mismatch";
        case errc::corner_mismatch: return "corner_mismatch";
        case errc::duplicate_square: return "duplicate_square";
        case errc::no_candidate: return "no_candidate";
        case errc::ambiguous_square: return "ambiguous_square";
        case errc::search_limit_exceeded: return "search_limit_exceeded";
        case errc::injectivity_violation: return "injectivity_violation";
        case errc::identifier_collision: return "identifier_collision";
        case errc::incomplete_squares: return "incomplete_squares";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::not_a_complex: return "not_a_complex";
        case errc::unknown_basis_element: return "unknown_basis_element";
        case errc::enumeration_limit_exceeded: return "enumeration_limit_exceeded";
        case errc::parse_error: return "parse_error";
        case errc::zero_modulus: return "zero_modulus";
        case errc::unsupported_coefficients: return "unsupported_coefficients";
        case errc::too_large: return "too_large";
        case errc::syntax_error: return "syntax_error";
        case errc::schema_error: return "schema_error";
        case errc::usage_error: return "usage_error";
        case errc::internal_inconsistency: return "internal_inconsistency";
    }
    return "unknown";
}

std::size_t DirectedGraph::vertex_index(const std::string& name) const
{
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
        throw error(errc::unknown_identifier, "unknown vertex '" + name + "'");
    return it->second;
}

std::size_t DirectedGraph::edge_index(const std::string& name) const
{
    auto it = edge_index_.find(name);
    if (it == edge_index_.end())
        throw error(errc::unknown_identifier, "unknown edge '" + name + "'");
    return it->second;
}

DirectedGraph validate_graph(std::vector<std::string> vertices, std::vector<Edge> edges)
{
    if (vertices.empty())
        throw error(errc::empty_graph, "a graph needs at least one vertex");

    std::vector<std::string> duplicates;
    std::vector<std::string> dangling;

    DirectedGraph g;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!g.vertex_index_.emplace(vertices[i], i).second)
            duplicates.push_back("duplicate vertex '" + vertices[i] + "'");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!g.edge_index_.emplace(edges[i].name, i).second)
            duplicates.push_back("duplicate edge '" + edges[i].name + "'");
    }
    for (const Edge& e : edges) {
        if (g.vertex_index_.count(e.range) == 0)
            dangling.push_back("edge '" + e.name + "' has unknown range '" + e.range + "'");
        if (g.vertex_index_.count(e.source) == 0)
            dangling.push_back("edge '" + e.name + "' has unknown source '" + e.source + "'");
    }

    if (!duplicates.empty() || !dangling.empty()) {
        std::vector<std::string> all = duplicates;
        all.insert(all.end(), dangling.begin(), dangling.end());
        errc code = duplicates.empty() ? errc::dangling_endpoint : errc::duplicate_identifier;
        throw error(code, "invalid graph (" + std::to_string(all.size()) + " issue(s))",
                    std::move(all));
    }

    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.receiving_.resize(g.vertices_.size());
    g.emitting_.resize(g.vertices_.size());
    g.edge_range_.resize(g.edges_.size());
    g.edge_source_.resize(g.edges_.size());
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        std::size_t r = g.vertex_index_.at(g.edges_[e].range);
        std::size_t s = g.vertex_index_.at(g.edges_[e].source);
        g.edge_range_[e] = r;
        g.edge_source_[e] = s;
        g.receiving_[r].push_back(e);
        g.emitting_[s].push_back(e);
    }
    return g;
}

Path check_path(const DirectedGraph& g, const std::vector<std::string>& edge_names)
{
    if (edge_names.empty())
        throw error(errc::not_composable, "a path needs at least one edge");

    std::vector<std::size_t> ids;
    ids.reserve(edge_names.size());
    for (const auto& name : edge_names)
        ids.push_back(g.edge_index(name));

    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        if (g.source_of(ids[i]) != g.range_of(ids[i + 1]))
            throw error(errc::not_composable,
                        "s(" + edge_names[i] + ") = " + g.edge(ids[i]).source +
                            " != r(" + edge_names[i + 1] + ") = " + g.edge(ids[i + 1]).range,
                        {}, i + 1);
    }

    Path p;
    p.edges = edge_names;
    p.range = g.edge(ids.front()).range;
    p.source = g.edge(ids.back()).source;
    return p;
}

UndirectedWord free_reduce(UndirectedWord w)
{
    std::vector<Letter> stack;
    stack.reserve(w.letters.size());
    for (Letter& l : w.letters) {
        if (!stack.empty() && stack.back().edge == l.edge &&
            stack.back().exponent == -l.exponent) {
            stack.pop_back();
        } else {
            stack.push_back(std::move(l));
        }
    }
    return UndirectedWord{std::move(stack)};
}

UndirectedWord inverse_word(const UndirectedWord& w)
{
    UndirectedWord inv;
    inv.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        inv.letters.push_back(Letter{it->edge, -it->exponent});
    return inv;
}

bool is_reduced(const UndirectedWord& w)
{
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i].edge == w.letters[i + 1].edge &&
            w.letters[i].exponent == -w.letters[i + 1].exponent)
            return false;
    return true;
}

std::string letter_range(const DirectedGraph& g, const Letter& l)
{
    const Edge& e = g.edge(g.edge_index(l.edge));
    return l.exponent > 0 ? e.range : e.source;
}

std::string letter_source(const DirectedGraph& g, const Letter& l)
{
    const Edge& e = g.edge(g.edge_index(l.edge));
    return l.exponent > 0 ? e.source : e.range;
}

bool word_composable(const DirectedGraph& g, const UndirectedWord& w)
{
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (letter_source(g, w.letters[i]) != letter_range(g, w.letters[i + 1]))
            return false;
    return true;
}

GraphMorphism validate_morphism(const DirectedGraph& src, const DirectedGraph& dst,
                                const std::map<std::string, std::string>& vertex_map,
                                const std::map<std::string, std::string>& edge_map)
{
    std::vector<std::size_t> vmap(src.vertex_count());
    std::vector<std::size_t> emap(src.edge_count());

    for (std::size_t v = 0; v < src.vertex_count(); ++v) {
        auto it = vertex_map.find(src.vertices()[v]);
        if (it == vertex_map.end())
            throw error(errc::unknown_identifier,
                        "vertex map is not total: missing '" + src.vertices()[v] + "'");
        vmap[v] = dst.vertex_index(it->second);
    }
    for (std::size_t e = 0; e < src.edge_count(); ++e) {
        auto it = edge_map.find(src.edges()[e].name);
        if (it == edge_map.end())
            throw error(errc::unknown_identifier,
                        "edge map is not total: missing '" + src.edges()[e].name + "'");
        emap[e] = dst.edge_index(it->second);
    }

    std::vector<std::string> issues;
    for (std::size_t e = 0; e < src.edge_count(); ++e) {
        const std::string& name = src.edges()[e].name;
        if (dst.range_of(emap[e]) != vmap[src.range_of(e)])
            issues.push_back("edge '" + name + "': range is not intertwined");
        if (dst.source_of(emap[e]) != vmap[src.source_of(e)])
            issues.push_back("edge '" + name + "': source is not intertwined");
    }
    if (!issues.empty())
        throw error(errc::intertwining_violation,
                    "not a graph morphism (" + std::to_string(issues.size()) + " issue(s))",
                    std::move(issues));

    return GraphMorphism(std::move(vmap), std::move(emap));
}

GraphMorphism identity_morphism(const DirectedGraph& g)
{
    std::vector<std::size_t> v(g.vertex_count());
    std::vector<std::size_t> e(g.edge_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
    return GraphMorphism(std::move(v), std::move(e));
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner)
{
    std::vector<std::size_t> v(inner.vertex_map().size());
    std::vector<std::size_t> e(inner.edge_map().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = outer.vertex_image(inner.vertex_image(i));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = outer.edge_image(inner.edge_image(i));
    return GraphMorphism(std::move(v), std::move(e));
}

bool is_connected(const DirectedGraph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        auto visit = [&](std::size_t w) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
        };
        for (std::size_t e : g.receiving(v)) visit(g.source_of(e));
        for (std::size_t e : g.emitting(v)) visit(g.range_of(e));
    }
    return count == g.vertex_count();
}

SpanningTree spanning_tree(const DirectedGraph& g, const std::string& root)
{
    std::vector<std::size_t> order(g.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return spanning_tree(g, root, order);
}

SpanningTree spanning_tree(const DirectedGraph& g, const std::string& root,
                           const std::vector<std::size_t>& edge_order)
{
    std::size_t r = g.vertex_index(root);

    SpanningTree t;
    t.root_ = r;
    t.in_tree_.assign(g.edge_count(), false);
    t.parent_.assign(g.vertex_count(), std::nullopt);

    std::vector<bool> visited(g.vertex_count(), false);
    visited[r] = true;
    std::size_t visited_count = 1;
    std::vector<std::size_t> frontier{r};

    while (!frontier.empty()) {
        std::vector<bool> in_frontier(g.vertex_count(), false);
        for (std::size_t v : frontier) in_frontier[v] = true;
        std::vector<std::size_t> next;
        for (std::size_t e : edge_order) {
            std::size_t a = g.range_of(e);
            std::size_t b = g.source_of(e);
            // adopt an edge joining the previous layer to an unvisited vertex
            std::size_t parent, child;
            int exponent;
            if (in_frontier[a] && !visited[b]) {
                parent = a;
                child = b;
                exponent = -1; // traverse from r(e) to s(e)
            } else if (in_frontier[b] && !visited[a]) {
                parent = b;
                child = a;
                exponent = +1;
            } else {
                continue;
            }
            visited[child] = true;
            ++visited_count;
            t.in_tree_[e] = true;
            t.parent_[child] = SpanningTree::Arc{parent, e, exponent};
            next.push_back(child);
        }
        frontier = std::move(next);
    }

    if (visited_count != g.vertex_count())
        throw error(errc::disconnected, "graph is not connected; no spanning tree exists");

    // tree edges in canonical (input) order
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (t.in_tree_[e]) t.tree_edges_.push_back(e);
    return t;
}

namespace {

// word from the root to v, leftmost letter nearest v
UndirectedWord root_to_vertex(const DirectedGraph& g, const SpanningTree& t, std::size_t v)
{
    UndirectedWord w;
    std::size_t cur = v;
    while (cur != t.root()) {
        const auto& arc = t.parent_arc(cur);
        w.letters.push_back(Letter{g.edge(arc->edge).name, arc->exponent});
        cur = arc->parent;
    }
    return w;
}

} // namespace

UndirectedWord tree_path(const DirectedGraph& g, const SpanningTree& t,
                         const std::string& from, const std::string& to)
{
    UndirectedWord eta_to = root_to_vertex(g, t, g.vertex_index(to));
    UndirectedWord eta_from = root_to_vertex(g, t, g.vertex_index(from));
    UndirectedWord combined = eta_to;
    UndirectedWord back = inverse_word(eta_from);
    combined.letters.insert(combined.letters.end(), back.letters.begin(), back.letters.end());
    return free_reduce(std::move(combined));
}

} // namespace texsys
