#include "texsys/coloured.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace texsys {

std::vector<std::size_t> ColouredGraph::edges_of_colour(std::size_t colour) const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < colour_.size(); ++e)
        if (colour_[e] == colour) out.push_back(e);
    return out;
}

ColouredGraph validate_coloured(DirectedGraph g, std::size_t k,
                                const std::map<std::string, std::size_t>& colour)
{
    if (k < 1)
        throw error(errc::colour_out_of_range, "colour count must be at least 1");

    std::vector<std::string> issues;
    std::vector<std::size_t> per_edge(g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const std::string& name = g.edges()[e].name;
        auto it = colour.find(name);
        if (it == colour.end()) {
            issues.push_back("edge '" + name + "' has no colour");
            continue;
        }
        if (it->second < 1 || it->second > k) {
            issues.push_back("edge '" + name + "' has colour " + std::to_string(it->second) +
                             " outside 1.." + std::to_string(k));
            continue;
        }
        per_edge[e] = it->second;
    }
    if (!issues.empty()) {
        bool missing = std::any_of(issues.begin(), issues.end(), [](const std::string& s) {
            return s.find("no colour") != std::string::npos;
        });
        throw error(missing ? errc::missing_colour : errc::colour_out_of_range,
                    "invalid colouring (" + std::to_string(issues.size()) + " issue(s))",
                    std::move(issues));
    }

    ColouredGraph cg;
    cg.graph_ = std::move(g);
    cg.k_ = k;
    cg.colour_ = std::move(per_edge);
    return cg;
}

namespace {

std::string coords_name(const std::vector<std::size_t>& n)
{
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(n[i]);
    }
    return s;
}

} // namespace

ColouredGraph model_graph(std::size_t k, const std::vector<std::size_t>& m)
{
    if (m.size() != k)
        throw error(errc::usage_error, "model graph needs a k-tuple of bounds");

    // lattice points 0 <= n <= m in lexicographic order
    std::vector<std::vector<std::size_t>> points;
    std::vector<std::size_t> cur(k, 0);
    for (;;) {
        points.push_back(cur);
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == m[pos - 1]) --pos;
        if (pos == 0) break;
        ++cur[pos - 1];
        std::fill(cur.begin() + pos, cur.end(), 0);
    }

    std::vector<std::string> vertices;
    vertices.reserve(points.size());
    for (const auto& n : points) vertices.push_back(coords_name(n));

    std::vector<Edge> edges;
    std::map<std::string, std::size_t> colour;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& n : points) {
            if (n[i] >= m[i]) continue;
            auto up = n;
            ++up[i];
            std::string name = "e" + std::to_string(i + 1) + "(" + coords_name(n) + ")";
            edges.push_back(Edge{name, coords_name(n), coords_name(up)});
            colour[name] = i + 1;
        }
    }

    return validate_coloured(validate_graph(std::move(vertices), std::move(edges)), k, colour);
}

Square validate_square(const ColouredGraph& cg, Square s)
{
    const DirectedGraph& g = cg.graph();
    if (s.i >= s.j || s.i < 1 || s.j > cg.colour_count())
        throw error(errc::colour_out_of_range,
                    "square colour pair (" + std::to_string(s.i) + "," + std::to_string(s.j) +
                        ") is not an increasing pair in 1.." +
                        std::to_string(cg.colour_count()));

    std::size_t f = g.edge_index(s.f);
    std::size_t gg = g.edge_index(s.g);
    std::size_t gp = g.edge_index(s.gp);
    std::size_t fp = g.edge_index(s.fp);

    std::vector<std::string> issues;
    auto want_colour = [&](std::size_t e, const std::string& name, std::size_t c) {
        if (cg.colour_of(e) != c)
            issues.push_back("edge '" + name + "' should have colour " + std::to_string(c));
    };
    want_colour(f, s.f, s.i);
    want_colour(fp, s.fp, s.i);
    want_colour(gg, s.g, s.j);
    want_colour(gp, s.gp, s.j);
    if (!issues.empty())
        throw error(errc::colour_mismatch, "square edges have wrong colours", std::move(issues));

    auto corner = [&](std::size_t x, std::size_t y, const std::string& what) {
        if (x != y) issues.push_back("corner mismatch: " + what);
    };
    corner(g.range_of(f), g.range_of(gp), "r(" + s.f + ") != r(" + s.gp + ")");
    corner(g.source_of(f), g.range_of(gg), "s(" + s.f + ") != r(" + s.g + ")");
    corner(g.source_of(gp), g.range_of(fp), "s(" + s.gp + ") != r(" + s.fp + ")");
    corner(g.source_of(gg), g.source_of(fp), "s(" + s.g + ") != s(" + s.fp + ")");
    if (!issues.empty())
        throw error(errc::corner_mismatch, "square corners do not close", std::move(issues));

    return s;
}

SquareSet validate_squares(const ColouredGraph& cg, std::vector<Square> squares)
{
    std::set<std::tuple<std::size_t, std::size_t, std::string, std::string, std::string,
                        std::string>>
        seen;
    for (Square& s : squares) {
        s = validate_square(cg, s);
        if (!seen.emplace(s.i, s.j, s.f, s.g, s.gp, s.fp).second)
            throw error(errc::duplicate_square,
                        "duplicate square (" + s.f + "," + s.g + "," + s.gp + "," + s.fp + ")");
    }
    SquareSet set;
    set.squares_ = std::move(squares);
    return set;
}

namespace {

using PathKey = std::pair<std::string, std::string>;

// ordered pairs (first, second) with colour(first) = c1, colour(second) = c2,
// s(first) = r(second); canonical order
std::vector<PathKey> bicoloured_paths(const ColouredGraph& cg, std::size_t c1, std::size_t c2)
{
    const DirectedGraph& g = cg.graph();
    std::vector<PathKey> out;
    for (std::size_t f : cg.edges_of_colour(c1))
        for (std::size_t e : g.receiving(g.source_of(f)))
            if (cg.colour_of(e) == c2)
                out.emplace_back(g.edges()[f].name, g.edges()[e].name);
    return out;
}

} // namespace

CompletenessReport check_complete(const ColouredGraph& cg, const SquareSet& squares)
{
    CompletenessReport report;
    report.pairwise_only = cg.colour_count() >= 3;

    for (std::size_t i = 1; i <= cg.colour_count(); ++i) {
        for (std::size_t j = i + 1; j <= cg.colour_count(); ++j) {
            std::map<PathKey, std::size_t> fg_count, gpfp_count;
            for (const Square& s : squares.squares()) {
                if (s.i != i || s.j != j) continue;
                ++fg_count[{s.f, s.g}];
                ++gpfp_count[{s.gp, s.fp}];
            }
            for (const PathKey& p : bicoloured_paths(cg, i, j)) {
                auto it = fg_count.find(p);
                std::size_t n = it == fg_count.end() ? 0 : it->second;
                if (n != 1)
                    report.issues.push_back(PathIssue{i, j, true, p.first, p.second, n});
            }
            for (const PathKey& p : bicoloured_paths(cg, j, i)) {
                auto it = gpfp_count.find(p);
                std::size_t n = it == gpfp_count.end() ? 0 : it->second;
                if (n != 1)
                    report.issues.push_back(PathIssue{i, j, false, p.first, p.second, n});
            }
        }
    }
    report.complete = report.issues.empty();
    return report;
}

SquareSet deduce_squares(const ColouredGraph& cg)
{
    const DirectedGraph& g = cg.graph();
    std::vector<Square> squares;

    for (std::size_t i = 1; i <= cg.colour_count(); ++i) {
        for (std::size_t j = i + 1; j <= cg.colour_count(); ++j) {
            auto ij = bicoloured_paths(cg, i, j);
            auto ji = bicoloured_paths(cg, j, i);

            for (const PathKey& p : ij) {
                std::size_t f = g.edge_index(p.first);
                std::size_t gg = g.edge_index(p.second);
                std::vector<PathKey> candidates;
                for (const PathKey& q : ji) {
                    std::size_t gp = g.edge_index(q.first);
                    std::size_t fp = g.edge_index(q.second);
                    if (g.range_of(gp) == g.range_of(f) &&
                        g.source_of(fp) == g.source_of(gg))
                        candidates.push_back(q);
                }
                if (candidates.empty())
                    throw error(errc::no_candidate,
                                "no opposite factorisation for path " + p.first + "." + p.second);
                if (candidates.size() > 1) {
                    std::vector<std::string> listing;
                    for (const PathKey& q : candidates)
                        listing.push_back(q.first + "." + q.second);
                    throw error(errc::ambiguous_square,
                                "path " + p.first + "." + p.second + " has " +
                                    std::to_string(candidates.size()) + " opposite factorisations",
                                std::move(listing));
                }
                squares.push_back(
                    Square{i, j, p.first, p.second, candidates[0].first, candidates[0].second});
            }

            // the reverse direction must be unambiguous too, or the result
            // would not be a complete collection
            for (const PathKey& q : ji) {
                std::size_t gp = g.edge_index(q.first);
                std::size_t fp = g.edge_index(q.second);
                std::size_t count = 0;
                for (const PathKey& p : ij) {
                    std::size_t f = g.edge_index(p.first);
                    std::size_t gg = g.edge_index(p.second);
                    if (g.range_of(f) == g.range_of(gp) &&
                        g.source_of(gg) == g.source_of(fp))
                        ++count;
                }
                if (count == 0)
                    throw error(errc::no_candidate,
                                "no opposite factorisation for path " + q.first + "." + q.second);
                if (count > 1)
                    throw error(errc::ambiguous_square,
                                "path " + q.first + "." + q.second + " has " +
                                    std::to_string(count) + " opposite factorisations");
            }
        }
    }
    return validate_squares(cg, std::move(squares));
}

namespace {

struct IsoSearch {
    const ColouredGraph& a;
    const ColouredGraph& b;
    const SquareSet& ca;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t,
                        std::size_t>>
        b_squares;
    std::size_t budget;
    std::size_t nodes = 0;

    std::vector<std::size_t> vmap, emap;
    std::vector<bool> vused, eused;

    // per colour: (in-degree, out-degree)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> profile_a, profile_b;

    bool assign_vertex(std::size_t v);
    bool assign_edge(std::size_t e);
    bool squares_match() const;
    void tick()
    {
        if (++nodes > budget)
            throw error(errc::search_limit_exceeded,
                        "isomorphism search exceeded node budget of " + std::to_string(budget));
    }
};

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> degree_profiles(
    const ColouredGraph& cg)
{
    const DirectedGraph& g = cg.graph();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> prof(
        g.vertex_count(),
        std::vector<std::pair<std::size_t, std::size_t>>(cg.colour_count(), {0, 0}));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        prof[g.range_of(e)][cg.colour_of(e) - 1].first++;
        prof[g.source_of(e)][cg.colour_of(e) - 1].second++;
    }
    return prof;
}

bool IsoSearch::assign_vertex(std::size_t v)
{
    if (v == a.graph().vertex_count())
        return assign_edge(0);
    for (std::size_t w = 0; w < b.graph().vertex_count(); ++w) {
        if (vused[w] || profile_a[v] != profile_b[w]) continue;
        tick();
        vmap[v] = w;
        vused[w] = true;
        if (assign_vertex(v + 1)) return true;
        vused[w] = false;
    }
    return false;
}

bool IsoSearch::assign_edge(std::size_t e)
{
    if (e == a.graph().edge_count())
        return squares_match();
    const DirectedGraph& ga = a.graph();
    const DirectedGraph& gb = b.graph();
    for (std::size_t d = 0; d < gb.edge_count(); ++d) {
        if (eused[d] || b.colour_of(d) != a.colour_of(e)) continue;
        if (gb.range_of(d) != vmap[ga.range_of(e)]) continue;
        if (gb.source_of(d) != vmap[ga.source_of(e)]) continue;
        tick();
        emap[e] = d;
        eused[d] = true;
        if (assign_edge(e + 1)) return true;
        eused[d] = false;
    }
    return false;
}

bool IsoSearch::squares_match() const
{
    const DirectedGraph& ga = a.graph();
    for (const Square& s : ca.squares()) {
        auto key = std::make_tuple(s.i, s.j, emap[ga.edge_index(s.f)], emap[ga.edge_index(s.g)],
                                   emap[ga.edge_index(s.gp)], emap[ga.edge_index(s.fp)]);
        if (b_squares.count(key) == 0) return false;
    }
    return true;
}

} // namespace

std::optional<SquareIsomorphism> square_isomorphism(const ColouredGraph& a, const SquareSet& ca,
                                                    const ColouredGraph& b, const SquareSet& cb,
                                                    std::size_t node_budget)
{
    if (a.colour_count() != b.colour_count()) return std::nullopt;
    if (a.graph().vertex_count() != b.graph().vertex_count()) return std::nullopt;
    if (a.graph().edge_count() != b.graph().edge_count()) return std::nullopt;
    if (ca.size() != cb.size()) return std::nullopt;
    for (std::size_t c = 1; c <= a.colour_count(); ++c)
        if (a.edges_of_colour(c).size() != b.edges_of_colour(c).size()) return std::nullopt;

    IsoSearch search{a, b, ca, {}, node_budget, 0, {}, {}, {}, {}, {}, {}};
    const DirectedGraph& gb = b.graph();
    for (const Square& s : cb.squares())
        search.b_squares.emplace(s.i, s.j, gb.edge_index(s.f), gb.edge_index(s.g),
                                 gb.edge_index(s.gp), gb.edge_index(s.fp));
    search.vmap.assign(a.graph().vertex_count(), 0);
    search.emap.assign(a.graph().edge_count(), 0);
    search.vused.assign(b.graph().vertex_count(), false);
    search.eused.assign(b.graph().edge_count(), false);
    search.profile_a = degree_profiles(a);
    search.profile_b = degree_profiles(b);

    if (!search.assign_vertex(0))
        return std::nullopt;

    SquareIsomorphism iso;
    for (std::size_t v = 0; v < a.graph().vertex_count(); ++v)
        iso.vertex_map[a.graph().vertices()[v]] = b.graph().vertices()[search.vmap[v]];
    for (std::size_t e = 0; e < a.graph().edge_count(); ++e)
        iso.edge_map[a.graph().edges()[e].name] = b.graph().edges()[search.emap[e]].name;
    return iso;
}

} // namespace texsys
