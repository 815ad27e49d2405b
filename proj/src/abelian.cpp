#include "texsys/abelian.hpp"

#include <algorithm>

namespace texsys {

AbelianInvariants make_abelian(std::size_t free_rank, std::vector<Int> cyclic_orders)
{
    std::vector<Int> t;
    for (Int& d : cyclic_orders) {
        if (d < 0) d = -d;
        if (d == 0)
            ++free_rank; // Z/0 = Z
        else if (d > 1)
            t.push_back(std::move(d));
    }

    // pairwise (gcd, lcm) exchange converges to the invariant-factor chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                Int g = gcd(t[i], t[j]);
                if (g == t[i] || g == t[j])
                    continue;
                Int l = t[i] / g * t[j];
                t[i] = g;
                t[j] = l;
                changed = true;
            }
        }
    }

    std::sort(t.begin(), t.end());
    t.erase(std::remove(t.begin(), t.end(), Int(1)), t.end());
    return AbelianInvariants{free_rank, std::move(t)};
}

std::string to_string(const AbelianInvariants& a)
{
    if (a.trivial())
        return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (a.free_rank == 1)
        append("Z");
    else if (a.free_rank > 1)
        append("Z^" + std::to_string(a.free_rank));
    for (const Int& d : a.torsion)
        append("Z/" + d.str());
    return out;
}

} // namespace texsys
