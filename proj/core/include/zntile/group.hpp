#pragma once

#include <optional>
#include <string_view>

#include "zntile/common.hpp"

namespace zntile {

/**
 * The ambient group Z_n^d: uniform modulus n, dimension d.
 *
 * Elements are coordinate vectors reduced into [0, n); all arithmetic is
 * componentwise mod n. group_order is kept exactly (n^d can exceed 64 bits);
 * operations that must enumerate the whole group go through
 * cardinality_checked() and fail fast when n^d exceeds enum_bound.
 */
struct GroupContext {
    Int n = 1;
    Int d = 1;
    BigInt group_order;                  // n^d, exact
    Int enum_bound = kDefaultEnumBound;  // cap for whole-group scans

    static GroupContext make(Int n, Int d, Int enum_bound = kDefaultEnumBound);

    bool operator==(const GroupContext& o) const { return n == o.n && d == o.d; }
    bool operator!=(const GroupContext& o) const { return !(*this == o); }

    Elem zero() const { return Elem(static_cast<std::size_t>(d), 0); }
    Int mod(Int v) const;
    Elem reduce(const std::vector<Int>& raw) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(Int k, const Elem& a) const;
    Int dot(const Elem& a, const Elem& b) const;  // inner product mod n
    bool canonical(const Elem& a) const;

    // Number of group elements as an Int, or BoundError when n^d > enum_bound.
    Int cardinality_checked(std::string_view what) const;
    // Bijection between [0, n^d) and elements; rank order equals the
    // lexicographic element order (first coordinate most significant).
    Elem unrank(Int r) const;
    Int rank(const Elem& a) const;
};

// n = p^k * m with p prime and gcd(p, m) = 1.
struct PrimePowerSplit {
    Int p = 2;
    Int k = 1;
    Int m = 1;
    Int prime_power() const;  // p^k
    static PrimePowerSplit of(Int n, Int p);
};

struct SubgroupDesc {
    std::vector<Elem> gens;
    std::vector<Elem> members;  // sorted, closed under + and -, contains 0
    Int size() const { return static_cast<Int>(members.size()); }
    bool contains(const Elem& x) const;
};

// All elements generating one cyclic subgroup; shares a common order.
struct CyclicClass {
    Elem canonical;  // lexicographically smallest member
    Int order = 1;
    std::vector<Elem> members;  // sorted; |members| = totient(order)
};

// Least t > 0 with t*x = 0; equals n / gcd(n, x_1, ..., x_d).
Int elem_order(const GroupContext& ctx, const Elem& x);

// {0, x, 2x, ..., (ord-1)x}, sorted.
SubgroupDesc cyclic_span(const GroupContext& ctx, const Elem& x);

// Closure of gens under addition (breadth-first), sorted.
SubgroupDesc subgroup_span(const GroupContext& ctx, const std::vector<Elem>& gens);

// H-perp = {x : <x, g> = 0 mod n for every generator g of H}.
SubgroupDesc orthogonal_group(const GroupContext& ctx, const SubgroupDesc& h);

// Partition of the group by "generates the same cyclic subgroup",
// sorted by (order, canonical representative).
std::vector<CyclicClass> equivalence_classes(const GroupContext& ctx);

// {0, h, 2h, ..., (p-1)h} for the canonical member h; requires p to be the
// smallest prime divisor of ord(E). The result D satisfies |D| = p,
// D \subseteq E + {0}, and every pairwise difference lies in E.
std::vector<Elem> derived_set(const GroupContext& ctx, const CyclicClass& e, Int p);

// Coordinatewise reduction of an integer vector into Z_{n_target}^d.
Elem project_point(const std::vector<Int>& x, Int n_target);
// Z_n^d -> Z_{n'}^d reduction; n' must divide n.
Elem project_element(const GroupContext& src, const Elem& x, Int n_target);

// x' in Z_{p^k}^d -> m*x' in Z_n^d; preserves element order.
Elem lift_p_power(const PrimePowerSplit& split, const GroupContext& target, const Elem& x_prime);

// All pairwise nonzero differences of a set of distinct elements, sorted.
std::vector<Elem> difference_set(const GroupContext& ctx, const std::vector<Elem>& s);

// Every subgroup of Z_n^d, found by spanning all d-tuples of elements.
// Brute force; intended for small groups (test and acceptance oracles).
std::vector<SubgroupDesc> all_subgroups(const GroupContext& ctx);

}  // namespace zntile
