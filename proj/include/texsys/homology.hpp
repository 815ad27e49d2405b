#pragma once

#include "texsys/abelian.hpp"
#include "texsys/coloured.hpp"
#include "texsys/graph.hpp"
#include "texsys/matrix.hpp"
#include "texsys/textile.hpp"

#include <string>
#include <vector>

namespace texsys {

/// A length-two chain complex of free Z-modules with labelled bases.
/// d1 * d2 = 0 is checked on construction.
struct ChainComplex {
    std::vector<std::string> basis0, basis1, basis2;
    IntMatrix d1; // |basis0| x |basis1|
    IntMatrix d2; // |basis1| x |basis2|
};

ChainComplex make_chain_complex(std::vector<std::string> basis0, std::vector<std::string> basis1,
                                std::vector<std::string> basis2, IntMatrix d1, IntMatrix d2);

/// Graph complex: d1(e) = s(e) - r(e), no 2-chains.
ChainComplex chain_complex_graph(const DirectedGraph& g);

/// Textile complex: C0 = ZE^0, C1 = ZE^1 + ZF^0, C2 = ZF^1 with
/// d1(e) = s(e) - r(e), d1(w) = p(w) - q(w), d2(f) = (q - p)(f) + (s - r)(f).
/// C1 labels follow the coloured-graph naming (so trails can be taken).
ChainComplex chain_complex_textile(const TextileSystem& t);

/// Square complex of a 2-coloured graph with a complete square collection:
/// d2(square) = f + g - fp - gp. Identical to the textile complex of
/// from_2graph under the canonical basis bijection.
ChainComplex chain_complex_2graph(const ColouredGraph& cg, const SquareSet& squares);

struct HomologyResult {
    AbelianInvariants h0, h1, h2;
};

/// H0 = coker d1, H1 = ker d1 / im d2 (via a kernel basis from the column
/// transform of snf(d1)), H2 = ker d2 (free).
HomologyResult homology(const ChainComplex& cx);

/// Signed sum of a word's letters over basis1 of the complex.
std::vector<Int> trail(const ChainComplex& cx, const UndirectedWord& w);

/// Trails of simple reduced undirected circuits in F whose pushforwards along
/// p and q agree, deduplicated up to rotation and reflection; these span
/// ker d2 of the textile complex. `basis` labels the coordinates (edges of F).
struct H2Generators {
    std::vector<std::vector<Int>> trails;
    std::vector<std::string> basis;
    bool spans_kernel = false;
    std::size_t kernel_rank = 0;
};

H2Generators h2_circuit_generators(const TextileSystem& t, std::size_t circuit_cap = 100000);

} // namespace texsys
