#pragma once

#include "texsys/abelian.hpp"
#include "texsys/homology.hpp"
#include "texsys/matrix.hpp"

#include <string>
#include <vector>

namespace texsys {

/// Finitely generated abelian coefficient group in invariant-factor form.
struct CoefficientGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion; // d_1 | d_2 | ..., each >= 2

    bool cyclic() const
    {
        return (free_rank == 1 && torsion.empty()) || (free_rank == 0 && torsion.size() == 1);
    }

    friend bool operator==(const CoefficientGroup&, const CoefficientGroup&) = default;
};

/// Grammar: "Z" | "Z/<n>" | "Z^<r>" | sums of those joined by "+".
/// The result is normalised, e.g. Z/2 + Z/3 becomes Z/6.
CoefficientGroup parse_coefficients(const std::string& text);

std::string to_string(const CoefficientGroup& a);

struct CohomologyResult {
    AbelianInvariants h0, h1, h2;
};

/// Cochain groups are Hom(C_n, A) with the transposed boundaries, so with
/// every C_n free and finitely generated the groups decompose as
/// H^n = Hom(H_n, A) + Ext(H_{n-1}, A), computed factorwise by gcd
/// arithmetic from the integral homology.
CohomologyResult cohomology(const ChainComplex& cx, const CoefficientGroup& a);

/// One representative degree-2 cocycle per invariant factor of H^2, for
/// cyclic coefficients. Values index basis2; order 0 means infinite. The
/// classes generate H^2 and none of them is a coboundary.
struct H2Representative {
    std::vector<Int> values;
    Int order;
};

std::vector<H2Representative> h2_representatives(const ChainComplex& cx,
                                                 const CoefficientGroup& a);

/// Membership of a degree-2 cochain in the image of delta^1 over cyclic A.
bool h2_is_coboundary(const ChainComplex& cx, const CoefficientGroup& a,
                      const std::vector<Int>& cochain);

/// Independent oracle: enumerates every cochain over Z/m and reads the
/// quotient group structure off element-order counts. Guarded by enumeration
/// bounds of 10^6 states per degree.
CohomologyResult brute_force_cohomology(const ChainComplex& cx, unsigned long m);

} // namespace texsys
