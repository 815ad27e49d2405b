#include "texsys/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace texsys {

namespace {

std::string strip(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Int parse_positive(const std::string& s, const std::string& what)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw error(errc::parse_error, "expected a number after '" + what + "', got '" + s + "'");
    return Int(s);
}

} // namespace

CoefficientGroup parse_coefficients(const std::string& text)
{
    std::size_t free_rank = 0;
    std::vector<Int> orders;

    std::size_t start = 0;
    bool any = false;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string term = strip(text.substr(start, plus == std::string::npos
                                                        ? std::string::npos
                                                        : plus - start));
        start = plus == std::string::npos ? text.size() + 1 : plus + 1;
        if (term.empty()) {
            if (plus == std::string::npos && !any)
                throw error(errc::parse_error, "empty coefficient expression");
            throw error(errc::parse_error, "empty term in coefficient expression");
        }
        any = true;
        if (term == "Z") {
            ++free_rank;
        } else if (term.rfind("Z/", 0) == 0) {
            Int n = parse_positive(strip(term.substr(2)), "Z/");
            if (n == 0)
                throw error(errc::zero_modulus, "Z/0 is not a finite cyclic group; write Z");
            orders.push_back(n);
        } else if (term.rfind("Z^", 0) == 0) {
            Int r = parse_positive(strip(term.substr(2)), "Z^");
            free_rank += static_cast<std::size_t>(r);
        } else {
            throw error(errc::parse_error, "cannot parse coefficient term '" + term + "'");
        }
    }

    AbelianInvariants normal = make_abelian(free_rank, std::move(orders));
    return CoefficientGroup{normal.free_rank, std::move(normal.torsion)};
}

std::string to_string(const CoefficientGroup& a)
{
    return to_string(AbelianInvariants{a.free_rank, a.torsion});
}

namespace {

struct GroupBuilder {
    std::size_t free_rank = 0;
    std::vector<Int> orders;

    AbelianInvariants finish() { return make_abelian(free_rank, std::move(orders)); }
};

// Hom(H, A), H in invariant-factor form
void add_hom(GroupBuilder& out, const AbelianInvariants& h, const CoefficientGroup& a)
{
    out.free_rank += h.free_rank * a.free_rank;
    for (std::size_t i = 0; i < h.free_rank; ++i)
        out.orders.insert(out.orders.end(), a.torsion.begin(), a.torsion.end());
    for (const Int& d : h.torsion) // Hom(Z/d, A) = d-torsion of A
        for (const Int& t : a.torsion)
            out.orders.push_back(gcd(d, t));
}

// Ext(H, A)
void add_ext(GroupBuilder& out, const AbelianInvariants& h, const CoefficientGroup& a)
{
    for (const Int& d : h.torsion) { // Ext(Z/d, A) = A / dA
        for (std::size_t i = 0; i < a.free_rank; ++i)
            out.orders.push_back(d);
        for (const Int& t : a.torsion)
            out.orders.push_back(gcd(d, t));
    }
}

} // namespace

CohomologyResult cohomology(const ChainComplex& cx, const CoefficientGroup& a)
{
    HomologyResult h = homology(cx);

    CohomologyResult result;
    {
        GroupBuilder b;
        add_hom(b, h.h0, a);
        result.h0 = b.finish();
    }
    {
        GroupBuilder b;
        add_hom(b, h.h1, a);
        add_ext(b, h.h0, a);
        result.h1 = b.finish();
    }
    {
        GroupBuilder b;
        add_hom(b, h.h2, a);
        add_ext(b, h.h1, a);
        result.h2 = b.finish();
    }
    return result;
}

std::vector<H2Representative> h2_representatives(const ChainComplex& cx,
                                                 const CoefficientGroup& a)
{
    if (!a.cyclic())
        throw error(errc::unsupported_coefficients,
                    "representatives are available for cyclic coefficients only");
    bool integral = a.free_rank == 1;
    Int modulus = integral ? Int(0) : a.torsion[0];

    IntMatrix delta1 = cx.d2.transposed(); // C^1 -> C^2
    SNFResult s = snf(delta1, true);
    const IntMatrix& uinv = *s.left_inverse;
    const std::size_t n2 = cx.basis2.size();

    std::vector<H2Representative> reps;
    for (std::size_t i = 0; i < n2; ++i) {
        Int d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
        Int order = integral ? d : gcd(d, modulus); // gcd(0, m) = m; order 0 = infinite
        if (order == 1) continue;                   // trivial class

        H2Representative rep;
        rep.order = order;
        rep.values.resize(n2);
        for (std::size_t r = 0; r < n2; ++r) {
            Int v = uinv.at(r, i);
            if (!integral) {
                v %= modulus;
                if (v < 0) v += modulus;
            }
            rep.values[r] = v;
        }
        if (h2_is_coboundary(cx, a, rep.values))
            throw error(errc::internal_inconsistency,
                        "candidate cohomology class is a coboundary");
        reps.push_back(std::move(rep));
    }
    return reps;
}

bool h2_is_coboundary(const ChainComplex& cx, const CoefficientGroup& a,
                      const std::vector<Int>& cochain)
{
    if (!a.cyclic())
        throw error(errc::unsupported_coefficients,
                    "coboundary testing is available for cyclic coefficients only");
    if (cochain.size() != cx.basis2.size())
        throw error(errc::usage_error, "cochain length does not match the degree-2 basis");
    IntMatrix delta1 = cx.d2.transposed();
    if (a.free_rank == 1)
        return solve_integer(delta1, cochain).has_value();
    return solvable_mod(delta1, cochain, a.torsion[0]);
}

namespace {

using ModVec = std::vector<int>;

// y = M x over Z/m
ModVec apply_mod(const IntMatrix& m, const ModVec& x, unsigned long mod)
{
    ModVec y(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int sum = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) sum += m.at(r, c) * x[c];
        Int reduced = sum % static_cast<long>(mod);
        if (reduced < 0) reduced += static_cast<long>(mod);
        y[r] = static_cast<int>(reduced);
    }
    return y;
}

template <typename Visit>
void each_vector(std::size_t n, unsigned long m, Visit visit)
{
    ModVec v(n, 0);
    for (;;) {
        visit(v);
        std::size_t i = 0;
        while (i < n && static_cast<unsigned long>(++v[i]) == m) v[i++] = 0;
        if (i == n) break;
    }
}

void ensure_enumerable(std::size_t dim, unsigned long m)
{
    double states = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        states *= static_cast<double>(m);
        if (states > 1e6)
            throw error(errc::too_large, "m^" + std::to_string(dim) +
                                             " exceeds the enumeration bound of 10^6");
    }
}

// invariant factors of S/R from element-order counts; R must be a subgroup
// of S and every element order divides m
AbelianInvariants quotient_invariants(const std::vector<ModVec>& s,
                                      const std::set<ModVec>& r, unsigned long m)
{
    auto count_order_dividing = [&](unsigned long d) {
        std::size_t n = 0;
        for (const ModVec& x : s) {
            ModVec dx(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                dx[i] = static_cast<int>((static_cast<unsigned long>(x[i]) * d) % m);
            if (r.count(dx)) ++n;
        }
        return n / r.size();
    };

    // prime factorisation of m by trial division
    std::map<unsigned long, unsigned> primes;
    unsigned long rest = m;
    for (unsigned long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) { ++primes[p]; rest /= p; }
    if (rest > 1) ++primes[rest];

    // per prime: valuations of the cyclic factors, largest first
    std::map<unsigned long, std::vector<unsigned>> valuations;
    std::size_t factor_count = 0;
    for (auto [p, a] : primes) {
        std::vector<std::size_t> with_val_at_least; // index j-1: #factors with v_p >= j
        std::size_t prev = count_order_dividing(1); // = 1
        unsigned long pj = 1;
        for (unsigned j = 1; j <= a; ++j) {
            pj *= p;
            std::size_t now = count_order_dividing(pj);
            std::size_t ratio = now / prev;
            std::size_t c = 0;
            while (ratio > 1) { ratio /= p; ++c; }
            with_val_at_least.push_back(c);
            prev = now;
        }
        std::size_t total = with_val_at_least.empty() ? 0 : with_val_at_least[0];
        factor_count = std::max(factor_count, total);
        std::vector<unsigned> vals;
        for (std::size_t i = 1; i <= total; ++i) {
            unsigned v = 0;
            for (std::size_t j = 0; j < with_val_at_least.size(); ++j)
                if (with_val_at_least[j] >= i) v = static_cast<unsigned>(j + 1);
            vals.push_back(v);
        }
        valuations[p] = std::move(vals); // descending by construction
    }

    std::vector<Int> chain;
    for (std::size_t i = 0; i < factor_count; ++i) {
        Int factor = 1;
        for (auto& [p, vals] : valuations)
            if (i < vals.size())
                for (unsigned j = 0; j < vals[i]; ++j) factor *= p;
        chain.push_back(factor);
    }
    return make_abelian(0, std::move(chain));
}

} // namespace

CohomologyResult brute_force_cohomology(const ChainComplex& cx, unsigned long m)
{
    if (m < 2)
        throw error(errc::usage_error, "brute force needs a modulus of at least 2");
    const std::size_t n0 = cx.basis0.size();
    const std::size_t n1 = cx.basis1.size();
    const std::size_t n2 = cx.basis2.size();
    ensure_enumerable(n0, m);
    ensure_enumerable(n1, m);
    ensure_enumerable(n2, m);

    IntMatrix delta0 = cx.d1.transposed(); // C^0 -> C^1
    IntMatrix delta1 = cx.d2.transposed(); // C^1 -> C^2

    std::vector<ModVec> ker_delta0;
    std::set<ModVec> im_delta0;
    each_vector(n0, m, [&](const ModVec& x) {
        ModVec y = apply_mod(delta0, x, m);
        if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; }))
            ker_delta0.push_back(x);
        im_delta0.insert(std::move(y));
    });

    std::vector<ModVec> ker_delta1;
    std::set<ModVec> im_delta1;
    each_vector(n1, m, [&](const ModVec& x) {
        ModVec y = apply_mod(delta1, x, m);
        if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; }))
            ker_delta1.push_back(x);
        im_delta1.insert(std::move(y));
    });

    std::vector<ModVec> all_c2;
    each_vector(n2, m, [&](const ModVec& x) { all_c2.push_back(x); });

    CohomologyResult result;
    std::set<ModVec> zero0;
    zero0.insert(ModVec(n0, 0));
    result.h0 = quotient_invariants(ker_delta0, zero0, m);
    result.h1 = quotient_invariants(ker_delta1, im_delta0, m);
    result.h2 = quotient_invariants(all_c2, im_delta1, m);
    return result;
}

} // namespace texsys
