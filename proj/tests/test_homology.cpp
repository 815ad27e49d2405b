#include "texsys/homology.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "texsys/presentation.hpp"

#include <doctest.h>

#include <random>

using namespace texsys;

namespace {

std::vector<Int> column(const IntMatrix& m, std::size_t c)
{
    std::vector<Int> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m.at(r, c);
    return out;
}

} // namespace

TEST_CASE("graph chain complexes")
{
    DirectedGraph loop = validate_graph({"v"}, {{"e", "v", "v"}});
    ChainComplex cx = chain_complex_graph(loop);
    CHECK(cx.d1.at(0, 0) == 0);
    HomologyResult h = homology(cx);
    CHECK(h.h0 == AbelianInvariants{1, {}});
    CHECK(h.h1 == AbelianInvariants{1, {}});
    CHECK(h.h2.trivial());

    DirectedGraph f = validate_graph(
        {"a1", "a2"}, {{"c1", "a1", "a2"}, {"c2", "a2", "a1"}, {"l2", "a2", "a2"}});
    HomologyResult hf = homology(chain_complex_graph(f));
    CHECK(hf.h0 == AbelianInvariants{1, {}});
    CHECK(hf.h1 == AbelianInvariants{2, {}});

    DirectedGraph isolated = validate_graph({"a", "b"}, {});
    CHECK(homology(chain_complex_graph(isolated)).h0 == AbelianInvariants{2, {}});
}

TEST_CASE("textile chain complex of the two-loop example")
{
    TextileSystem t = testing::corpus_textile("extex1.tex.json");
    ChainComplex cx = chain_complex_textile(t);
    CHECK(cx.basis1 == std::vector<std::string>{"b1", "b2", "a1", "a2"});
    CHECK(cx.basis2 == std::vector<std::string>{"c1", "c2", "l2"});
    CHECK(column(cx.d2, 0) == std::vector<Int>{0, 0, -1, 1}); // c1: a2 - a1
    CHECK(column(cx.d2, 1) == std::vector<Int>{0, 0, 1, -1}); // c2: a1 - a2
    CHECK(column(cx.d2, 2) == std::vector<Int>{1, -1, 0, 0}); // l2: b1 - b2

    HomologyResult h = homology(cx);
    CHECK(h.h0 == AbelianInvariants{1, {}});
    CHECK(h.h1 == AbelianInvariants{2, {}});
    CHECK(h.h2 == AbelianInvariants{1, {}}); // generated by c1 + c2
}

TEST_CASE("textile chain complex of the quantum 3-sphere")
{
    TextileSystem t = testing::corpus_textile("quantum_sphere.tex.json");
    ChainComplex cx = chain_complex_textile(t);
    REQUIRE(cx.basis2 == std::vector<std::string>{"a", "b", "c"});
    CHECK(column(cx.d2, 0) == std::vector<Int>{0, 0, 0, 0, 0, 0});
    CHECK(column(cx.d2, 1) == std::vector<Int>{1, -1, 0, 0, 0, 0});  // (a - b) + 0
    CHECK(column(cx.d2, 2) == std::vector<Int>{0, 0, 0, -1, 1, 0});  // 0 + (v - u)

    HomologyResult h = homology(cx);
    CHECK(h.h0 == AbelianInvariants{1, {}});
    CHECK(h.h1 == AbelianInvariants{2, {}});
    CHECK(h.h2 == AbelianInvariants{1, {}});
}

TEST_CASE("sphere homology")
{
    HomologyResult h = homology(chain_complex_textile(testing::corpus_textile("sphere.tex.json")));
    CHECK(h.h0 == AbelianInvariants{1, {}});
    CHECK(h.h1.trivial());
    CHECK(h.h2 == AbelianInvariants{1, {}});
}

TEST_CASE("projective plane homology")
{
    auto [cg, squares] = testing::corpus_coloured("projective_plane.cg.json");
    ChainComplex cx = chain_complex_2graph(cg, squares);
    // independent check of the kernel rank of d2
    CHECK(testing::bareiss_rank(cx.d2) == 4); // all four columns independent
    HomologyResult h = homology(cx);
    CHECK(h.h0 == AbelianInvariants{1, {}});
    CHECK(h.h1 == AbelianInvariants{0, {2}});
    CHECK(h.h2.trivial());
}

TEST_CASE("square complex boundary columns")
{
    auto [cg, squares] = testing::corpus_coloured("sphere.cg.json");
    ChainComplex cx = chain_complex_2graph(cg, squares);
    // square (c, e, g, a): c + e - a - g over basis a,b,c,d,e,f,g,h
    CHECK(column(cx.d2, 0) == std::vector<Int>{-1, 0, 1, 0, 1, 0, -1, 0});
    // one-vertex loop square: boundary vanishes
    DirectedGraph rose = validate_graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
    ColouredGraph one = validate_coloured(rose, 2, {{"e", 1}, {"f", 2}});
    SquareSet sq = validate_squares(one, {Square{1, 2, "e", "f", "f", "e"}});
    ChainComplex tiny = chain_complex_2graph(one, sq);
    CHECK(column(tiny.d2, 0) == std::vector<Int>{0, 0});
    CHECK(homology(tiny).h2 == AbelianInvariants{1, {}});
}

TEST_CASE("square complex equals the textile complex of the conversion")
{
    for (const char* name : {"sphere.cg.json", "projective_plane.cg.json",
                             "f2_identity.cg.json", "f2_flip.cg.json", "locvx.cg.json"}) {
        auto [cg, squares] = testing::corpus_coloured(name);
        ChainComplex direct = chain_complex_2graph(cg, squares);
        ChainComplex via_textile = chain_complex_textile(from_2graph(cg, squares));
        CHECK(direct.basis0 == via_textile.basis0);
        CHECK(direct.basis1 == via_textile.basis1);
        CHECK(direct.basis2 == via_textile.basis2);
        CHECK(direct.d1 == via_textile.d1);
        CHECK(direct.d2 == via_textile.d2);
    }
}

TEST_CASE("make_chain_complex rejects non-complexes")
{
    IntMatrix d1(1, 1);
    d1.at(0, 0) = 1;
    IntMatrix d2(1, 1);
    d2.at(0, 0) = 1;
    CHECK_THROWS_AS(make_chain_complex({"v"}, {"e"}, {"s"}, d1, d2), error);
}

TEST_CASE("trail examples")
{
    DirectedGraph f = validate_graph({"e", "f", "g", "h"},
                                     {{"alpha", "g", "e"}, {"beta", "h", "e"},
                                      {"gamma", "h", "f"}, {"delta", "g", "f"}});
    ChainComplex cx = chain_complex_graph(f);

    CHECK(trail(cx, UndirectedWord{{{"alpha", 1}, {"alpha", -1}}}) ==
          std::vector<Int>{0, 0, 0, 0});

    UndirectedWord c_g{{{"alpha", 1}, {"beta", -1}, {"gamma", 1}, {"delta", -1}}};
    std::vector<Int> expected{1, -1, 1, -1};
    CHECK(trail(cx, c_g) == expected);

    // all rotations give the same trail
    UndirectedWord c_f{{{"delta", -1}, {"alpha", 1}, {"beta", -1}, {"gamma", 1}}};
    UndirectedWord c_h{{{"gamma", 1}, {"delta", -1}, {"alpha", 1}, {"beta", -1}}};
    UndirectedWord c_e{{{"beta", -1}, {"gamma", 1}, {"delta", -1}, {"alpha", 1}}};
    CHECK(trail(cx, c_f) == expected);
    CHECK(trail(cx, c_h) == expected);
    CHECK(trail(cx, c_e) == expected);

    CHECK_THROWS_AS(trail(cx, UndirectedWord{{{"nope", 1}}}), error);
}

TEST_CASE("h2 circuit generators of the sphere textile")
{
    H2Generators gens = h2_circuit_generators(testing::corpus_textile("sphere.tex.json"));
    CHECK(gens.basis == std::vector<std::string>{"alpha", "beta", "gamma", "delta"});
    REQUIRE(gens.trails.size() == 1);
    CHECK(gens.trails[0] == std::vector<Int>{1, -1, 1, -1});
    CHECK(gens.kernel_rank == 1);
    CHECK(gens.spans_kernel);
}

TEST_CASE("h2 circuit generators of the two-loop example")
{
    H2Generators gens = h2_circuit_generators(testing::corpus_textile("extex1.tex.json"));
    REQUIRE(gens.trails.size() == 1);
    CHECK(gens.trails[0] == std::vector<Int>{1, 1, 0}); // c1 + c2
    CHECK(gens.spans_kernel);
}

TEST_CASE("h2 circuit generators with a tree fibre graph")
{
    DirectedGraph e = validate_graph({"v"}, {{"b", "v", "v"}});
    DirectedGraph f = validate_graph({"w0", "w1"}, {{"c", "w0", "w1"}});
    TextileSystem t = validate_textile(e, f, {{"w0", "v"}, {"w1", "v"}}, {{"c", "b"}},
                                       {{"w0", "v"}, {"w1", "v"}}, {{"c", "b"}});
    H2Generators gens = h2_circuit_generators(t);
    CHECK(gens.trails.empty());
    CHECK(gens.kernel_rank == 0);
    CHECK(gens.spans_kernel);
}

TEST_CASE("boundary of boundary vanishes on random textiles")
{
    std::mt19937 rng(59);
    for (int it = 0; it < 100; ++it) {
        TextileSystem t = testing::random_textile(rng);
        ChainComplex cx = chain_complex_textile(t); // throws if d1 d2 != 0
        CHECK((cx.d1 * cx.d2).is_zero());
    }
}

TEST_CASE("textiles with p = q shift the graph homology")
{
    std::mt19937 rng(61);
    int done = 0;
    while (done < 50) {
        auto maybe = testing::random_resolving_textile(rng);
        if (!maybe) continue;
        const TextileSystem& t = *maybe;
        HomologyResult ht = homology(chain_complex_textile(t));
        HomologyResult he = homology(chain_complex_graph(t.E()));
        HomologyResult hf = homology(chain_complex_graph(t.F()));
        CHECK(ht.h0 == he.h0);
        CHECK(ht.h1 == make_abelian(he.h1.free_rank + hf.h0.free_rank, {}));
        CHECK(ht.h2 == hf.h1);
        ++done;
    }
}

TEST_CASE("abelianized fundamental group equals first homology on the corpus")
{
    using texsys::testing::corpus_coloured;
    using texsys::testing::corpus_textile;

    for (const char* name : {"sphere.cg.json", "projective_plane.cg.json",
                             "f2_identity.cg.json", "f2_flip.cg.json"}) {
        auto [cg, squares] = corpus_coloured(name);
        AbelianInvariants from_pi1 = abelianize(pi1(cg, squares, cg.graph().vertices().front()));
        AbelianInvariants from_chain = homology(chain_complex_2graph(cg, squares)).h1;
        CHECK(from_pi1 == from_chain);
    }
    for (const char* name : {"extex1.tex.json", "sphere.tex.json", "quantum_sphere.tex.json",
                             "t1.tex.json", "t3.tex.json"}) {
        TextileSystem t = corpus_textile(name);
        auto [cg, squares] = to_coloured(t);
        AbelianInvariants from_pi1 = abelianize(pi1(cg, squares, cg.graph().vertices().front()));
        AbelianInvariants from_chain = homology(chain_complex_textile(t)).h1;
        CHECK(from_pi1 == from_chain);
    }
}

TEST_CASE("second homology is torsion free")
{
    std::mt19937 rng(67);
    for (int it = 0; it < 100; ++it) {
        TextileSystem t = testing::random_textile(rng);
        CHECK(homology(chain_complex_textile(t)).h2.torsion.empty());
    }
}
