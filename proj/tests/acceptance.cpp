// Acceptance suite: one check function per numbered criterion, one printed
// PASS/FAIL line each. Everything is exact integer arithmetic; a criterion
// fails on the first violated check and reports it.

#include "texsys/cli.hpp"
#include "texsys/cohomology.hpp"
#include "texsys/homology.hpp"
#include "texsys/presentation.hpp"
#include "texsys/textile.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace texsys;
using texsys::testing::corpus_coloured;
using texsys::testing::corpus_textile;

namespace {

struct Failure {
    std::string detail;
};

#define ACCEPT(cond)                                                                    \
    do {                                                                                \
        if (!(cond))                                                                    \
            throw Failure{std::string(#cond) + " (line " + std::to_string(__LINE__) +   \
                          ")"};                                                         \
    } while (0)

const AbelianInvariants Z{1, {}};
const AbelianInvariants Z2{2, {}};
const AbelianInvariants trivial{0, {}};

AbelianInvariants group_of(const CoefficientGroup& a)
{
    return AbelianInvariants{a.free_rank, a.torsion};
}

// 1. sphere: trivial pi1, homology (Z, 0, Z), single spanning circuit trail
void criterion_sphere()
{
    auto [cg, squares] = corpus_coloured("sphere.cg.json");
    RecognizedGroup g = recognize(pi1(cg, squares, cg.graph().vertices().front()));
    ACCEPT(g.kind == GroupKind::trivial);

    TextileSystem t = corpus_textile("sphere.tex.json");
    HomologyResult h = homology(chain_complex_textile(t));
    ACCEPT(h.h0 == Z);
    ACCEPT(h.h1 == trivial);
    ACCEPT(h.h2 == Z);

    H2Generators gens = h2_circuit_generators(t);
    ACCEPT(gens.basis == std::vector<std::string>({"alpha", "beta", "gamma", "delta"}));
    ACCEPT(gens.trails.size() == 1);
    ACCEPT(gens.trails[0] == std::vector<Int>({1, -1, 1, -1}));
    ACCEPT(gens.spans_kernel);
}

// 2. projective plane: pi1 = Z/2, H1 = Z/2, H2 = 0
void criterion_projective_plane()
{
    auto [cg, squares] = corpus_coloured("projective_plane.cg.json");
    RecognizedGroup g = recognize(pi1(cg, squares, cg.graph().vertices().front()));
    ACCEPT(g.kind == GroupKind::finite_cyclic);
    ACCEPT(g.cyclic_order == 2);

    HomologyResult h = homology(chain_complex_2graph(cg, squares));
    ACCEPT((h.h1 == AbelianInvariants{0, {2}}));
    ACCEPT(h.h2 == trivial);
}

// 3. the two-loop system: lifting counterexamples, homology, Ab pi1, H^2 = A
void criterion_two_loop_system()
{
    TextileSystem t = corpus_textile("extex1.tex.json");
    Admits2Graph admits = admits_2graph(t);
    ACCEPT(!admits.admits);

    LiftingReport report = lifting(t);
    std::vector<LiftingViolation> expected_p_r{{"b1", "a2", 0}, {"b2", "a1", 0}, {"b2", "a2", 2}};
    std::vector<LiftingViolation> expected_q_s{{"b1", "a1", 0}, {"b1", "a2", 2}, {"b2", "a2", 0}};
    ACCEPT(report.p_r.violations == expected_p_r);
    ACCEPT(report.q_s.violations == expected_q_s);

    ChainComplex cx = chain_complex_textile(t);
    HomologyResult h = homology(cx);
    ACCEPT(h.h0 == Z);
    ACCEPT(h.h1 == Z2);
    ACCEPT(h.h2 == Z);

    auto [cg, squares] = to_coloured(t);
    ACCEPT(abelianize(pi1(cg, squares, "v")) == Z2);

    for (const char* expr : {"Z", "Z/2", "Z/6"}) {
        CoefficientGroup a = parse_coefficients(expr);
        ACCEPT(cohomology(cx, a).h2 == group_of(a));
    }
}

// 4. the cycle family T_n, n = 1..4
void criterion_tn_family()
{
    for (const char* name : {"t1.tex.json", "t2.tex.json", "t3.tex.json", "t4.tex.json"}) {
        TextileSystem t = corpus_textile(name);
        auto [cg, squares] = to_coloured(t);
        GroupPresentation p = pi1(cg, squares, "v");
        ACCEPT(abelianize(p) == Z2);
        TietzeResult simplified = tietze_simplify(p);
        ACCEPT(simplified.completed);
        ACCEPT(simplified.presentation.generators.size() <= 2);
        ACCEPT(simplified.presentation.relators.size() <= 1);
    }
}

// 5. the one-vertex examples: identity rank 4, flip rank 3
void criterion_one_vertex_examples()
{
    auto [id_cg, id_squares] = corpus_coloured("f2_identity.cg.json");
    ACCEPT((abelianize(pi1(id_cg, id_squares, "v")) == AbelianInvariants{4, {}}));

    auto [flip_cg, flip_squares] = corpus_coloured("f2_flip.cg.json");
    ACCEPT((abelianize(pi1(flip_cg, flip_squares, "v")) == AbelianInvariants{3, {}}));
}

// 6. quantum 3-sphere: admits, H^2 = A, representative class only nonzero on a
void criterion_quantum_sphere()
{
    TextileSystem t = corpus_textile("quantum_sphere.tex.json");
    ACCEPT(admits_2graph(t).admits);

    ChainComplex cx = chain_complex_textile(t);
    ACCEPT(cx.basis2 == std::vector<std::string>({"a", "b", "c"}));
    std::vector<Int> only_on_a{1, 0, 0};

    for (const char* expr : {"Z", "Z/2", "Z/4"}) {
        CoefficientGroup a = parse_coefficients(expr);
        ACCEPT(cohomology(cx, a).h2 == group_of(a));

        auto reps = h2_representatives(cx, a);
        ACCEPT(reps.size() == 1);
        Int expected_order = a.free_rank == 1 ? Int(0) : a.torsion[0];
        ACCEPT(reps[0].order == expected_order);
        std::vector<Int> difference(3);
        for (std::size_t i = 0; i < 3; ++i) difference[i] = reps[0].values[i] - only_on_a[i];
        ACCEPT(h2_is_coboundary(cx, a, difference));
        ACCEPT(!h2_is_coboundary(cx, a, reps[0].values));
    }
}

// 7. round trips on every admitting corpus entry
void criterion_round_trips()
{
    for (const char* name : {"sphere.cg.json", "projective_plane.cg.json",
                             "f2_identity.cg.json", "f2_flip.cg.json", "locvx.cg.json"}) {
        auto [cg, squares] = corpus_coloured(name);
        TextileSystem t = from_2graph(cg, squares);
        ACCEPT(admits_2graph(t).admits);
        auto [back, back_squares] = to_coloured(t);
        ACCEPT(back.graph().vertices() == cg.graph().vertices());
        ACCEPT(back.graph().edge_count() == cg.graph().edge_count());
        for (const Edge& e : cg.graph().edges()) {
            ACCEPT(back.graph().edge(back.graph().edge_index(e.name)) == e);
            ACCEPT(back.colour_of(e.name) == cg.colour_of(e.name));
        }
        ACCEPT(back_squares == squares);
        ACCEPT(textile_isomorphism(t, from_2graph(back, back_squares)).has_value());
    }
    for (const char* name : {"sphere.tex.json", "t1.tex.json", "quantum_sphere.tex.json"}) {
        TextileSystem t = corpus_textile(name);
        ACCEPT(admits_2graph(t).admits);
        auto [cg, squares] = to_coloured(t);
        ACCEPT(textile_isomorphism(t, from_2graph(cg, squares)).has_value());
    }
}

// 8. randomised property suite, 500 instances per family
void criterion_property_suite()
{
    std::mt19937 rng(20260808);

    // d1 d2 = 0 and the lifting/completeness equivalence, 500 random textiles
    std::size_t admitting = 0, non_admitting = 0;
    for (int it = 0; it < 500; ++it) {
        TextileSystem t = testing::random_textile(rng);
        ChainComplex cx = chain_complex_textile(t); // construction checks d1 d2 = 0
        ACCEPT((cx.d1 * cx.d2).is_zero());
        LiftingReport report = lifting(t);
        auto [cg, squares] = to_coloured(t);
        bool by_lifting = report.p_r.unique && report.q_s.unique;
        ACCEPT(by_lifting == check_complete(cg, squares).complete);
        (by_lifting ? admitting : non_admitting) += 1;
    }
    // both truth values of the equivalence must actually occur
    ACCEPT(admitting > 0);
    ACCEPT(non_admitting > 0);

    // Ab pi1 = H1 on 500 random one-vertex systems with m, n <= 3; these all
    // lift uniquely, exercising the positive direction of the equivalence
    for (int it = 0; it < 500; ++it) {
        std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        TextileSystem t = testing::theta_textile(m, n, testing::random_theta(rng, m, n));
        ACCEPT(admits_2graph(t).admits); // asserts the equivalence internally
        auto [cg, squares] = to_coloured(t);
        ACCEPT(abelianize(pi1(cg, squares, "v")) == homology(chain_complex_textile(t)).h1);
    }

    // abelianisation invariant under >= 3 trees per entry and all basepoints
    const char* names[] = {"sphere.cg.json", "projective_plane.cg.json", "f2_identity.cg.json",
                           "f2_flip.cg.json", "locvx.cg.json"};
    for (const char* name : names) {
        auto [cg, squares] = corpus_coloured(name);
        const DirectedGraph& g = cg.graph();
        AbelianInvariants expected = abelianize(pi1(cg, squares, g.vertices().front()));
        for (const auto& base : g.vertices())
            ACCEPT(abelianize(pi1(cg, squares, base)) == expected);
        for (int tree_case = 0; tree_case < 100; ++tree_case) {
            std::vector<std::size_t> order(g.edge_count());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::shuffle(order.begin(), order.end(), rng);
            ACCEPT(abelianize(pi1(cg, squares, spanning_tree(g, g.vertices().front(), order))) ==
                   expected);
        }
    }

    // universal coefficients match brute force on every corpus complex
    std::vector<ChainComplex> complexes;
    for (const char* name : names) {
        auto [cg, squares] = corpus_coloured(name);
        complexes.push_back(chain_complex_2graph(cg, squares));
    }
    for (const char* name : {"sphere.tex.json", "extex1.tex.json", "quantum_sphere.tex.json",
                             "t1.tex.json", "t2.tex.json", "t3.tex.json", "t4.tex.json"})
        complexes.push_back(chain_complex_textile(corpus_textile(name)));
    for (const ChainComplex& cx : complexes) {
        for (unsigned long m : {2UL, 3UL}) {
            CohomologyResult expected = brute_force_cohomology(cx, m);
            CohomologyResult got = cohomology(cx, CoefficientGroup{0, {Int(m)}});
            ACCEPT(got.h0 == expected.h0);
            ACCEPT(got.h1 == expected.h1);
            ACCEPT(got.h2 == expected.h2);
        }
    }
}

// 9. local convexity: the counterexample skeleton and the sphere table
void criterion_local_convexity()
{
    auto [locvx, locvx_squares] = corpus_coloured("locvx.cg.json");
    PropertyReport bad = properties(from_2graph(locvx, locvx_squares));
    ACCEPT(bad.locally_convex.has_value());
    ACCEPT(*bad.locally_convex == false);

    TextileSystem sphere = corpus_textile("sphere.tex.json");
    PropertyReport good = properties(sphere);
    ACCEPT(good.locally_convex.has_value());
    ACCEPT(*good.locally_convex == true);

    // the mediating-square counts equal the number of squares with the given
    // blue edge at f and red edge at gp
    auto [cg, squares] = to_coloured(sphere);
    ACCEPT(good.mce_table.size() == 2);
    for (const auto& [blue, red, count] : good.mce_table) {
        std::size_t by_squares = 0;
        for (const Square& s : squares.squares())
            if (s.f == blue && s.gp == red) ++by_squares;
        ACCEPT(count == by_squares);
    }
    ACCEPT(good.mce_table[0] ==
           (std::tuple<std::string, std::string, std::size_t>{"c", "g", 2}));
    ACCEPT(good.mce_table[1] ==
           (std::tuple<std::string, std::string, std::size_t>{"d", "h", 2}));
}

int run_criterion(int number, const char* title, const std::function<void()>& fn)
{
    try {
        fn();
        std::printf("criterion %d: PASS  %s\n", number, title);
        return 0;
    } catch (const Failure& f) {
        std::printf("criterion %d: FAIL  %s\n    failed check: %s\n", number, title,
                    f.detail.c_str());
    } catch (const std::exception& e) {
        std::printf("criterion %d: FAIL  %s\n    unexpected error: %s\n", number, title,
                    e.what());
    }
    return 1;
}

} // namespace

int main()
{
    int failures = 0;
    failures += run_criterion(1, "sphere: trivial pi1, homology (Z, 0, Z), circuit generator",
                              criterion_sphere);
    failures += run_criterion(2, "projective plane: pi1 = Z/2, H1 = Z/2, H2 = 0",
                              criterion_projective_plane);
    failures += run_criterion(3, "two-loop system: lifting, homology, Ab pi1, H^2 = A",
                              criterion_two_loop_system);
    failures += run_criterion(4, "cycle family T_n: Ab pi1 = Z^2, two generators one relator",
                              criterion_tn_family);
    failures += run_criterion(5, "one-vertex examples: abelianisation ranks 4 and 3",
                              criterion_one_vertex_examples);
    failures += run_criterion(6, "quantum 3-sphere: H^2 = A with matching representative",
                              criterion_quantum_sphere);
    failures += run_criterion(7, "round trips between textiles and coloured graphs",
                              criterion_round_trips);
    failures += run_criterion(8, "randomised property suite (500 instances per family)",
                              criterion_property_suite);
    failures += run_criterion(9, "local convexity reports and mediating-square table",
                              criterion_local_convexity);

    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
