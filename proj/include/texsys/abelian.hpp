#pragma once

#include "texsys/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace texsys {

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_t in
/// invariant-factor form: d_1 | d_2 | ... with every d_i >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Normalises an arbitrary list of cyclic orders into a divisor chain by
/// repeated (gcd, lcm) exchanges; order 0 counts as a free summand and
/// order 1 summands vanish.
AbelianInvariants make_abelian(std::size_t free_rank, std::vector<Int> cyclic_orders);

std::string to_string(const AbelianInvariants& a);

} // namespace texsys
