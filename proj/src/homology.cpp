#include "texsys/homology.hpp"

#include <algorithm>
#include <set>

namespace texsys {

ChainComplex make_chain_complex(std::vector<std::string> basis0, std::vector<std::string> basis1,
                                std::vector<std::string> basis2, IntMatrix d1, IntMatrix d2)
{
    if (d1.rows() != basis0.size() || d1.cols() != basis1.size() ||
        d2.rows() != basis1.size() || d2.cols() != basis2.size())
        throw error(errc::not_a_complex, "boundary matrix shapes do not match the bases");
    if (!(d1 * d2).is_zero())
        throw error(errc::not_a_complex, "d1 * d2 != 0");
    return ChainComplex{std::move(basis0), std::move(basis1), std::move(basis2), std::move(d1),
                        std::move(d2)};
}

ChainComplex chain_complex_graph(const DirectedGraph& g)
{
    IntMatrix d1(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        d1.at(g.source_of(e), e) += 1;
        d1.at(g.range_of(e), e) -= 1;
    }
    std::vector<std::string> edges;
    for (const Edge& e : g.edges()) edges.push_back(e.name);
    return make_chain_complex(g.vertices(), std::move(edges), {}, std::move(d1),
                              IntMatrix(g.edge_count(), 0));
}

ChainComplex chain_complex_textile(const TextileSystem& t)
{
    const DirectedGraph& E = t.E();
    const DirectedGraph& F = t.F();
    auto [cg, squares] = to_coloured(t);
    (void)squares;

    const std::size_t n_blue = E.edge_count();
    const std::size_t n0 = E.vertex_count();
    const std::size_t n1 = n_blue + F.vertex_count();
    const std::size_t n2 = F.edge_count();

    IntMatrix d1(n0, n1);
    for (std::size_t e = 0; e < n_blue; ++e) {
        d1.at(E.source_of(e), e) += 1;
        d1.at(E.range_of(e), e) -= 1;
    }
    for (std::size_t w = 0; w < F.vertex_count(); ++w) {
        d1.at(t.p().vertex_image(w), n_blue + w) += 1;
        d1.at(t.q().vertex_image(w), n_blue + w) -= 1;
    }

    IntMatrix d2(n1, n2);
    for (std::size_t f = 0; f < n2; ++f) {
        d2.at(t.q().edge_image(f), f) += 1;
        d2.at(t.p().edge_image(f), f) -= 1;
        d2.at(n_blue + F.source_of(f), f) += 1;
        d2.at(n_blue + F.range_of(f), f) -= 1;
    }

    // C1 is labelled by the edges of the associated coloured graph, in order
    std::vector<std::string> basis1;
    for (const Edge& e : cg.graph().edges()) basis1.push_back(e.name);
    std::vector<std::string> basis2;
    for (const Edge& f : F.edges()) basis2.push_back(f.name);

    return make_chain_complex(E.vertices(), std::move(basis1), std::move(basis2), std::move(d1),
                              std::move(d2));
}

ChainComplex chain_complex_2graph(const ColouredGraph& cg, const SquareSet& squares)
{
    if (cg.colour_count() != 2)
        throw error(errc::usage_error, "square complexes need a 2-coloured graph");
    if (!check_complete(cg, squares).complete)
        throw error(errc::incomplete_squares, "the square collection is not complete");

    const DirectedGraph& g = cg.graph();
    auto blue = cg.edges_of_colour(1);
    auto red = cg.edges_of_colour(2);

    std::vector<std::string> basis1;
    std::map<std::string, std::size_t> pos;
    for (std::size_t e : blue) {
        pos[g.edges()[e].name] = basis1.size();
        basis1.push_back(g.edges()[e].name);
    }
    for (std::size_t e : red) {
        pos[g.edges()[e].name] = basis1.size();
        basis1.push_back(g.edges()[e].name);
    }

    IntMatrix d1(g.vertex_count(), basis1.size());
    for (std::size_t c = 0; c < basis1.size(); ++c) {
        std::size_t e = g.edge_index(basis1[c]);
        d1.at(g.source_of(e), c) += 1;
        d1.at(g.range_of(e), c) -= 1;
    }

    IntMatrix d2(basis1.size(), squares.size());
    std::vector<std::string> basis2;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const Square& s = squares.squares()[k];
        d2.at(pos.at(s.f), k) += 1;
        d2.at(pos.at(s.g), k) += 1;
        d2.at(pos.at(s.fp), k) -= 1;
        d2.at(pos.at(s.gp), k) -= 1;
        basis2.push_back("sq" + std::to_string(k));
    }

    return make_chain_complex(g.vertices(), std::move(basis1), std::move(basis2), std::move(d1),
                              std::move(d2));
}

HomologyResult homology(const ChainComplex& cx)
{
    if (!(cx.d1 * cx.d2).is_zero())
        throw error(errc::not_a_complex, "d1 * d2 != 0");

    const std::size_t n1 = cx.basis1.size();
    const std::size_t n2 = cx.basis2.size();

    SNFResult s1 = snf(cx.d1, true);
    HomologyResult result;
    {
        std::vector<Int> torsion(s1.diagonal.begin(), s1.diagonal.begin() + s1.rank);
        result.h0 = make_abelian(cx.basis0.size() - s1.rank, std::move(torsion));
    }

    // kernel coordinates: x in ker d1 iff the first rank(d1) coordinates of
    // V^-1 x vanish; express im d2 there and take its cokernel
    const std::size_t k = n1 - s1.rank;
    IntMatrix b = *s1.right_inverse * cx.d2;
    for (std::size_t r = 0; r < s1.rank; ++r)
        for (std::size_t c = 0; c < n2; ++c)
            if (b.at(r, c) != 0)
                throw error(errc::not_a_complex, "im d2 is not contained in ker d1");
    IntMatrix in_kernel(k, n2);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n2; ++c)
            in_kernel.at(r, c) = b.at(s1.rank + r, c);
    result.h1 = cokernel_invariants(in_kernel);

    SNFResult s2 = snf(cx.d2);
    result.h2 = make_abelian(n2 - s2.rank, {});
    return result;
}

std::vector<Int> trail(const ChainComplex& cx, const UndirectedWord& w)
{
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < cx.basis1.size(); ++i) pos[cx.basis1[i]] = i;

    std::vector<Int> t(cx.basis1.size());
    for (const Letter& l : w.letters) {
        auto it = pos.find(l.edge);
        if (it == pos.end())
            throw error(errc::unknown_basis_element,
                        "'" + l.edge + "' is not a degree-1 basis element");
        t[it->second] += l.exponent;
    }
    return t;
}

namespace {

// sign-normalise so the first nonzero coordinate is positive
std::vector<Int> normalise_trail(std::vector<Int> t)
{
    for (const Int& x : t) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : t) y = -y;
        break;
    }
    return t;
}

struct CircuitEnumerator {
    const DirectedGraph& f;
    std::size_t cap;
    std::size_t seen = 0;
    std::set<std::vector<Int>> trails;

    std::vector<bool> on_path;
    std::vector<Int> current;     // signed edge sums along the current path
    std::size_t start = 0;
    std::size_t last_edge = static_cast<std::size_t>(-1);
    int last_sign = 0;

    void record()
    {
        if (++seen > cap)
            throw error(errc::enumeration_limit_exceeded,
                        "more than " + std::to_string(cap) + " simple circuits");
        trails.insert(normalise_trail(current));
    }

    // extend the walk sitting at `at`
    void extend(std::size_t at)
    {
        auto try_step = [&](std::size_t e, int sign, std::size_t next) {
            if (e == last_edge && sign == -last_sign) return; // immediate backtrack
            if (next == start) {
                current[e] += sign;
                record();
                current[e] -= sign;
                return;
            }
            if (next < start || on_path[next]) return; // keep circuits vertex-simple,
                                                       // rooted at their least vertex
            current[e] += sign;
            on_path[next] = true;
            std::size_t saved_edge = last_edge;
            int saved_sign = last_sign;
            last_edge = e;
            last_sign = sign;
            extend(next);
            last_edge = saved_edge;
            last_sign = saved_sign;
            on_path[next] = false;
            current[e] -= sign;
        };

        for (std::size_t e : f.emitting(at)) try_step(e, +1, f.range_of(e));
        for (std::size_t e : f.receiving(at)) try_step(e, -1, f.source_of(e));
    }
};

} // namespace

H2Generators h2_circuit_generators(const TextileSystem& t, std::size_t circuit_cap)
{
    const DirectedGraph& F = t.F();
    const DirectedGraph& E = t.E();

    CircuitEnumerator enumerate{F, circuit_cap, 0, {}, {}, {}, 0,
                                static_cast<std::size_t>(-1), 0};
    enumerate.on_path.assign(F.vertex_count(), false);
    enumerate.current.assign(F.edge_count(), 0);
    for (std::size_t v = 0; v < F.vertex_count(); ++v) {
        enumerate.start = v;
        enumerate.last_edge = static_cast<std::size_t>(-1);
        enumerate.last_sign = 0;
        enumerate.extend(v);
    }

    H2Generators result;
    for (const Edge& e : F.edges()) result.basis.push_back(e.name);

    // keep trails whose pushforwards along p and q agree
    for (const std::vector<Int>& trail_vec : enumerate.trails) {
        std::vector<Int> push(E.edge_count());
        bool zero = true;
        for (std::size_t f = 0; f < F.edge_count(); ++f) {
            if (trail_vec[f] == 0) continue;
            push[t.q().edge_image(f)] += trail_vec[f];
            push[t.p().edge_image(f)] -= trail_vec[f];
        }
        for (const Int& x : push)
            if (x != 0) { zero = false; break; }
        if (zero && std::any_of(trail_vec.begin(), trail_vec.end(),
                                [](const Int& x) { return x != 0; }))
            result.trails.push_back(trail_vec);
    }

    // compare the span with ker d2 of the textile complex
    ChainComplex cx = chain_complex_textile(t);
    SNFResult s2 = snf(cx.d2, true);
    const std::size_t k = cx.basis2.size() - s2.rank;
    result.kernel_rank = k;

    IntMatrix stacked(cx.basis2.size(), result.trails.size());
    for (std::size_t c = 0; c < result.trails.size(); ++c)
        for (std::size_t r = 0; r < cx.basis2.size(); ++r)
            stacked.at(r, c) = result.trails[c][r];
    IntMatrix coords = *s2.right_inverse * stacked;
    bool in_kernel = true;
    for (std::size_t r = 0; r < s2.rank; ++r)
        for (std::size_t c = 0; c < coords.cols(); ++c)
            if (coords.at(r, c) != 0) in_kernel = false;
    IntMatrix kernel_coords(k, coords.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < coords.cols(); ++c)
            kernel_coords.at(r, c) = coords.at(s2.rank + r, c);
    AbelianInvariants span_quotient = cokernel_invariants(kernel_coords);
    result.spans_kernel = in_kernel && span_quotient.trivial();
    return result;
}

} // namespace texsys
