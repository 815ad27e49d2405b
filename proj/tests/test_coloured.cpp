#include "texsys/coloured.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <random>

using namespace texsys;

TEST_CASE("validate_coloured")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    CHECK(sphere.colour_count() == 2);
    CHECK(sphere.edges_of_colour(1).size() == 4);
    CHECK(sphere.edges_of_colour(2).size() == 4);

    DirectedGraph loop = validate_graph({"v"}, {{"e", "v", "v"}});
    CHECK_NOTHROW(validate_coloured(loop, 1, {{"e", 1}}));

    try {
        validate_coloured(loop, 1, {});
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::missing_colour);
    }
    try {
        validate_coloured(loop, 1, {{"e", 2}});
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::colour_out_of_range);
    }
}

TEST_CASE("model_graph shapes")
{
    ColouredGraph unit_square = model_graph(2, {1, 1});
    CHECK(unit_square.graph().vertex_count() == 4);
    CHECK(unit_square.graph().edge_count() == 4);
    CHECK(unit_square.graph().edge(unit_square.graph().edge_index("e1(0,0)")).range == "0,0");
    CHECK(unit_square.graph().edge(unit_square.graph().edge_index("e1(0,0)")).source == "1,0");

    ColouredGraph segment = model_graph(1, {3});
    CHECK(segment.graph().vertex_count() == 4);
    CHECK(segment.graph().edge_count() == 3);

    ColouredGraph cube = model_graph(3, {1, 1, 1});
    CHECK(cube.graph().vertex_count() == 8);
    CHECK(cube.graph().edge_count() == 12);
    CHECK(cube.colour_count() == 3);
}

TEST_CASE("model_graph counting formula")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> kd(1, 3), md(0, 3);
    for (int it = 0; it < 50; ++it) {
        std::size_t k = kd(rng);
        std::vector<std::size_t> m(k);
        for (auto& x : m) x = md(rng);
        ColouredGraph cg = model_graph(k, m);
        std::size_t vertices = 1, edges = 0;
        for (std::size_t t = 0; t < k; ++t) vertices *= m[t] + 1;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t count = m[i];
            for (std::size_t t = 0; t < k; ++t)
                if (t != i) count *= m[t] + 1;
            edges += count;
        }
        CHECK(cg.graph().vertex_count() == vertices);
        CHECK(cg.graph().edge_count() == edges);
    }
}

TEST_CASE("validate_square checks corners and colours")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    CHECK_NOTHROW(validate_square(sphere, Square{1, 2, "c", "e", "g", "a"}));

    DirectedGraph loop2 = validate_graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
    ColouredGraph onevertex = validate_coloured(loop2, 2, {{"e", 1}, {"f", 2}});
    CHECK_NOTHROW(validate_square(onevertex, Square{1, 2, "e", "f", "f", "e"}));

    try {
        validate_square(sphere, Square{1, 2, "c", "e", "g", "b"});
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::corner_mismatch);
    }
    try {
        validate_square(sphere, Square{1, 2, "e", "c", "g", "a"});
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::colour_mismatch);
    }
}

TEST_CASE("check_complete on the corpus")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    CHECK(check_complete(sphere, squares).complete);

    auto [f2, f2squares] = testing::corpus_coloured("f2_identity.cg.json");
    CHECK(check_complete(f2, f2squares).complete);

    // dropping one square orphans exactly one path in each order
    std::vector<Square> missing(squares.squares().begin(), squares.squares().end() - 1);
    SquareSet reduced = validate_squares(sphere, missing);
    CompletenessReport report = check_complete(sphere, reduced);
    CHECK_FALSE(report.complete);
    REQUIRE(report.issues.size() == 2);
    CHECK(report.issues[0].ij_order);
    CHECK(report.issues[0].first == "d");
    CHECK(report.issues[0].second == "f");
    CHECK(report.issues[0].cover_count == 0);
    CHECK_FALSE(report.issues[1].ij_order);
    CHECK(report.issues[1].first == "h");
    CHECK(report.issues[1].second == "b");
}

TEST_CASE("complete collections have matching path counts")
{
    for (const char* name : {"sphere.cg.json", "projective_plane.cg.json",
                             "f2_identity.cg.json", "f2_flip.cg.json", "locvx.cg.json"}) {
        auto [cg, squares] = testing::corpus_coloured(name);
        REQUIRE(check_complete(cg, squares).complete);
        const DirectedGraph& g = cg.graph();
        std::size_t ij = 0, ji = 0;
        for (std::size_t f : cg.edges_of_colour(1))
            for (std::size_t e : g.receiving(g.source_of(f)))
                if (cg.colour_of(e) == 2) ++ij;
        for (std::size_t f : cg.edges_of_colour(2))
            for (std::size_t e : g.receiving(g.source_of(f)))
                if (cg.colour_of(e) == 1) ++ji;
        CHECK(ij == squares.size());
        CHECK(ji == squares.size());
    }
}

TEST_CASE("deduce_squares recovers the sphere collection")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    SquareSet deduced = deduce_squares(sphere);
    REQUIRE(deduced.size() == 4);
    CHECK(check_complete(sphere, deduced).complete);
    for (const Square& s : squares.squares()) {
        bool found = false;
        for (const Square& d : deduced.squares())
            if (d == s) found = true;
        CHECK(found);
    }
}

TEST_CASE("deduce_squares matches the quantum 3-sphere square data")
{
    TextileSystem t = testing::corpus_textile("quantum_sphere.tex.json");
    auto [skeleton, squares] = to_coloured(t);
    SquareSet deduced = deduce_squares(skeleton);
    REQUIRE(deduced.size() == 3);
    CHECK(deduced == squares);
    CHECK(deduced.squares()[0] == Square{1, 2, "a", "u", "u", "a"});
    CHECK(deduced.squares()[1] == Square{1, 2, "a", "w", "w", "b"});
    CHECK(deduced.squares()[2] == Square{1, 2, "c", "v", "u", "c"});
}

TEST_CASE("deduce_squares is ambiguous on a doubled rose")
{
    DirectedGraph rose = validate_graph(
        {"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}, {"f1", "v", "v"}, {"f2", "v", "v"}});
    ColouredGraph cg = validate_coloured(rose, 2, {{"e1", 1}, {"e2", 1}, {"f1", 2}, {"f2", 2}});
    try {
        deduce_squares(cg);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::ambiguous_square);
        CHECK(e.details().size() == 4); // all four opposite paths have the same corners
    }
}

TEST_CASE("square_isomorphism finds the identity and relabellings")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    auto self = square_isomorphism(sphere, squares, sphere, squares);
    REQUIRE(self.has_value());
    CHECK(self->vertex_map.at("u") == "u");

    // consistent renaming of every vertex
    std::vector<std::string> renamed_vertices;
    for (const auto& v : sphere.graph().vertices()) renamed_vertices.push_back("X" + v);
    std::vector<Edge> renamed_edges;
    std::map<std::string, std::size_t> colours;
    for (std::size_t e = 0; e < sphere.graph().edge_count(); ++e) {
        const Edge& ed = sphere.graph().edges()[e];
        renamed_edges.push_back(Edge{ed.name, "X" + ed.range, "X" + ed.source});
        colours[ed.name] = sphere.colour_of(e);
    }
    ColouredGraph renamed =
        validate_coloured(validate_graph(renamed_vertices, renamed_edges), 2, colours);
    SquareSet renamed_squares = validate_squares(renamed, squares.squares());
    auto map = square_isomorphism(sphere, squares, renamed, renamed_squares);
    REQUIRE(map.has_value());
    for (const auto& [from, to] : map->vertex_map) CHECK(to == "X" + from);

    // found maps invert to found maps
    auto back = square_isomorphism(renamed, renamed_squares, sphere, squares);
    REQUIRE(back.has_value());
}

TEST_CASE("square_isomorphism certifies absence")
{
    auto [sphere, sphere_squares] = testing::corpus_coloured("sphere.cg.json");
    auto [projective, projective_squares] = testing::corpus_coloured("projective_plane.cg.json");
    CHECK_FALSE(
        square_isomorphism(sphere, sphere_squares, projective, projective_squares).has_value());

    auto [identity_graph, identity_squares] = testing::corpus_coloured("f2_identity.cg.json");
    auto [flip_graph, flip_squares] = testing::corpus_coloured("f2_flip.cg.json");
    // same skeleton, different squares
    CHECK_FALSE(
        square_isomorphism(identity_graph, identity_squares, flip_graph, flip_squares)
            .has_value());
}

TEST_CASE("square_isomorphism node budget")
{
    auto [sphere, squares] = testing::corpus_coloured("sphere.cg.json");
    try {
        square_isomorphism(sphere, squares, sphere, squares, 2);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(e.code() == errc::search_limit_exceeded);
    }
}

TEST_CASE("three-colour graphs are checked pairwise with a warning")
{
    ColouredGraph cube = model_graph(3, {1, 1, 1});
    SquareSet deduced = deduce_squares(cube);
    CHECK(deduced.size() == 6); // one square per face of the cube
    CompletenessReport report = check_complete(cube, deduced);
    CHECK(report.complete);
    CHECK(report.pairwise_only);

    CompletenessReport two_colour =
        check_complete(model_graph(2, {1, 1}), deduce_squares(model_graph(2, {1, 1})));
    CHECK_FALSE(two_colour.pairwise_only);
}

TEST_CASE("model_graph rejects mismatched bounds")
{
    CHECK_THROWS_AS(model_graph(2, {1}), error);
}

TEST_CASE("square_isomorphism is reflexive and symmetric over the corpus")
{
    const char* names[] = {"sphere.cg.json", "projective_plane.cg.json", "f2_identity.cg.json",
                           "f2_flip.cg.json", "locvx.cg.json"};
    std::vector<std::pair<ColouredGraph, SquareSet>> entries;
    for (const char* name : names) entries.push_back(testing::corpus_coloured(name));

    for (std::size_t i = 0; i < entries.size(); ++i)
        CHECK(square_isomorphism(entries[i].first, entries[i].second, entries[i].first,
                                 entries[i].second)
                  .has_value());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) {
            bool forward = square_isomorphism(entries[i].first, entries[i].second,
                                              entries[j].first, entries[j].second)
                               .has_value();
            bool backward = square_isomorphism(entries[j].first, entries[j].second,
                                               entries[i].first, entries[i].second)
                                .has_value();
            CHECK(forward == backward);
        }
}
