#include "zntile/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zntile {

std::string elem_to_string(const Elem& e) {
    std::ostringstream os;
    if (e.size() == 1) {
        os << e[0];
        return os.str();
    }
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

std::string elems_to_string(const std::vector<Elem>& es) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) os << ' ';
        os << elem_to_string(es[i]);
    }
    os << '}';
    return os.str();
}

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Int totient(Int m) {
    if (m < 1) throw PreconditionError("totient: m must be >= 1");
    Int result = m;
    Int rest = m;
    for (Int q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        while (rest % q == 0) rest /= q;
        result -= result / q;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::vector<Int> sorted_divisors(Int m) {
    if (m < 1) throw PreconditionError("sorted_divisors: m must be >= 1");
    std::vector<Int> ds;
    for (Int a = 1; a * a <= m; ++a) {
        if (m % a) continue;
        ds.push_back(a);
        if (a != m / a) ds.push_back(m / a);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

GroupContext GroupContext::make(Int n, Int d, Int enum_bound) {
    if (n < 1) throw PreconditionError("GroupContext: n must be >= 1");
    if (n > 1'000'000'000) throw PreconditionError("GroupContext: n too large (max 10^9)");
    if (d < 1) throw PreconditionError("GroupContext: d must be >= 1");
    if (enum_bound < 1) throw PreconditionError("GroupContext: enumeration bound must be >= 1");
    GroupContext ctx;
    ctx.n = n;
    ctx.d = d;
    ctx.group_order = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d));
    ctx.enum_bound = enum_bound;
    return ctx;
}

Int GroupContext::mod(Int v) const {
    Int r = v % n;
    return r < 0 ? r + n : r;
}

Elem GroupContext::reduce(const std::vector<Int>& raw) const {
    if (static_cast<Int>(raw.size()) != d)
        throw PreconditionError("element has wrong number of coordinates");
    Elem e(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) e[i] = mod(raw[i]);
    return e;
}

Elem GroupContext::add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i]);
    return r;
}

Elem GroupContext::sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] - b[i]);
    return r;
}

Elem GroupContext::neg(const Elem& a) const {
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(-a[i]);
    return r;
}

Elem GroupContext::scale(Int k, const Elem& a) const {
    Int km = mod(k);
    Elem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(km * mod(a[i]) % n);
    return r;
}

Int GroupContext::dot(const Elem& a, const Elem& b) const {
    if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = mod(acc + mod(a[i]) * mod(b[i]) % n);
    return acc;
}

bool GroupContext::canonical(const Elem& a) const {
    if (static_cast<Int>(a.size()) != d) return false;
    return std::all_of(a.begin(), a.end(), [&](Int c) { return c >= 0 && c < n; });
}

Int GroupContext::cardinality_checked(std::string_view what) const {
    if (group_order > enum_bound) {
        std::ostringstream os;
        os << what << ": group order " << group_order << " exceeds enumeration bound "
           << enum_bound;
        throw BoundError(os.str());
    }
    return static_cast<Int>(group_order);
}

Elem GroupContext::unrank(Int r) const {
    Elem e(static_cast<std::size_t>(d));
    for (Int i = d - 1; i >= 0; --i) {
        e[static_cast<std::size_t>(i)] = r % n;
        r /= n;
    }
    return e;
}

Int GroupContext::rank(const Elem& a) const {
    Int r = 0;
    for (Int c : a) r = r * n + c;
    return r;
}

Int PrimePowerSplit::prime_power() const {
    Int pk = 1;
    for (Int i = 0; i < k; ++i) pk *= p;
    return pk;
}

PrimePowerSplit PrimePowerSplit::of(Int n, Int p) {
    if (!is_prime(p)) throw PreconditionError("PrimePowerSplit: p is not prime");
    if (n < 1 || n % p != 0) throw PreconditionError("PrimePowerSplit: p does not divide n");
    PrimePowerSplit s;
    s.p = p;
    s.k = 0;
    s.m = n;
    while (s.m % p == 0) {
        s.m /= p;
        ++s.k;
    }
    return s;
}

bool SubgroupDesc::contains(const Elem& x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Int elem_order(const GroupContext& ctx, const Elem& x) {
    if (static_cast<Int>(x.size()) != ctx.d)
        throw PreconditionError("elem_order: dimension mismatch");
    Int g = ctx.n;
    for (Int c : x) g = std::gcd(g, ctx.mod(c));
    return ctx.n / g;
}

SubgroupDesc cyclic_span(const GroupContext& ctx, const Elem& x) {
    const Elem xc = ctx.reduce(x);
    const Int ord = elem_order(ctx, xc);
    SubgroupDesc h;
    h.gens = {xc};
    h.members.reserve(static_cast<std::size_t>(ord));
    Elem cur = ctx.zero();
    for (Int k = 0; k < ord; ++k) {
        h.members.push_back(cur);
        cur = ctx.add(cur, xc);
    }
    std::sort(h.members.begin(), h.members.end());
    return h;
}

SubgroupDesc subgroup_span(const GroupContext& ctx, const std::vector<Elem>& gens) {
    ctx.cardinality_checked("subgroup_span");
    SubgroupDesc h;
    std::set<Elem> closed;
    closed.insert(ctx.zero());
    std::vector<Elem> work{ctx.zero()};
    std::vector<Elem> gc;
    for (const Elem& g : gens) gc.push_back(ctx.reduce(g));
    h.gens = gc;
    while (!work.empty()) {
        Elem u = std::move(work.back());
        work.pop_back();
        for (const Elem& g : gc) {
            Elem v = ctx.add(u, g);
            if (closed.insert(v).second) work.push_back(std::move(v));
        }
    }
    h.members.assign(closed.begin(), closed.end());
    return h;
}

SubgroupDesc orthogonal_group(const GroupContext& ctx, const SubgroupDesc& h) {
    const Int count = ctx.cardinality_checked("orthogonal_group");
    const std::vector<Elem>& probes = h.gens.empty() ? h.members : h.gens;
    SubgroupDesc perp;
    for (Int r = 0; r < count; ++r) {
        Elem x = ctx.unrank(r);
        bool ok = true;
        for (const Elem& g : probes) {
            if (ctx.dot(x, g) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) perp.members.push_back(std::move(x));
    }
    perp.gens = perp.members;
    return perp;
}

std::vector<CyclicClass> equivalence_classes(const GroupContext& ctx) {
    const Int count = ctx.cardinality_checked("equivalence_classes");
    std::vector<bool> assigned(static_cast<std::size_t>(count), false);
    std::vector<CyclicClass> classes;
    for (Int r = 0; r < count; ++r) {
        if (assigned[static_cast<std::size_t>(r)]) continue;
        Elem x = ctx.unrank(r);
        CyclicClass cls;
        cls.order = elem_order(ctx, x);
        // Generators of <x> are exactly the multiples k*x with gcd(k, ord) = 1.
        for (Int k = 1; k <= cls.order; ++k) {
            if (std::gcd(k, cls.order) != 1) continue;
            Elem y = ctx.scale(k, x);
            assigned[static_cast<std::size_t>(ctx.rank(y))] = true;
            cls.members.push_back(std::move(y));
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.canonical = cls.members.front();
        if (cls.canonical != x)
            throw InternalError("equivalence_classes: representative is not lex-minimal");
        classes.push_back(std::move(cls));
    }
    std::stable_sort(classes.begin(), classes.end(), [](const CyclicClass& a, const CyclicClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.canonical < b.canonical;
    });
    return classes;
}

std::vector<Elem> derived_set(const GroupContext& ctx, const CyclicClass& e, Int p) {
    if (e.order <= 1) throw PreconditionError("derived_set: class must be nontrivial");
    if (!is_prime(p)) throw PreconditionError("derived_set: p is not prime");
    if (e.order % p != 0) throw PreconditionError("derived_set: p does not divide ord(E)");
    for (Int q = 2; q < p; ++q)
        if (is_prime(q) && e.order % q == 0)
            throw PreconditionError("derived_set: p is not the smallest prime divisor of ord(E)");
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(p));
    for (Int k = 0; k < p; ++k) out.push_back(ctx.scale(k, e.canonical));
    std::sort(out.begin(), out.end());
    // Post-conditions of the construction; failures would be arithmetic bugs.
    if (static_cast<Int>(out.size()) != p || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InternalError("derived_set: multiples are not distinct");
    auto in_class = [&](const Elem& x) {
        return std::binary_search(e.members.begin(), e.members.end(), x);
    };
    for (const Elem& x : out)
        if (x != ctx.zero() && !in_class(x)) throw InternalError("derived_set: element escapes E");
    for (const Elem& x : out)
        for (const Elem& y : out) {
            if (x == y) continue;
            if (!in_class(ctx.sub(x, y))) throw InternalError("derived_set: difference escapes E");
        }
    return out;
}

Elem project_point(const std::vector<Int>& x, Int n_target) {
    if (n_target < 1) throw PreconditionError("project_point: target modulus must be >= 1");
    Elem e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Int r = x[i] % n_target;
        e[i] = r < 0 ? r + n_target : r;
    }
    return e;
}

Elem project_element(const GroupContext& src, const Elem& x, Int n_target) {
    if (n_target < 1 || src.n % n_target != 0)
        throw PreconditionError("project_element: target modulus must divide the source modulus");
    return project_point(src.reduce(x), n_target);
}

Elem lift_p_power(const PrimePowerSplit& split, const GroupContext& target, const Elem& x_prime) {
    const Int pk = split.prime_power();
    if (target.n != pk * split.m)
        throw PreconditionError("lift_p_power: split does not match the target modulus");
    if (static_cast<Int>(x_prime.size()) != target.d)
        throw PreconditionError("lift_p_power: dimension mismatch");
    std::vector<Int> raw(x_prime.size());
    for (std::size_t i = 0; i < x_prime.size(); ++i) {
        Int c = x_prime[i] % pk;
        if (c < 0) c += pk;
        raw[i] = split.m * c;
    }
    return target.reduce(raw);
}

std::vector<Elem> difference_set(const GroupContext& ctx, const std::vector<Elem>& s) {
    std::set<Elem> distinct(s.begin(), s.end());
    if (distinct.size() != s.size())
        throw PreconditionError("difference_set: input has repeated elements");
    std::set<Elem> out;
    for (const Elem& a : s)
        for (const Elem& b : s) {
            if (a == b) continue;
            out.insert(ctx.sub(a, b));
        }
    return {out.begin(), out.end()};
}

std::vector<SubgroupDesc> all_subgroups(const GroupContext& ctx) {
    const Int count = ctx.cardinality_checked("all_subgroups");
    // Every subgroup of Z_n^d is generated by at most d elements, so spanning
    // all d-tuples is exhaustive. Tuple count is count^d; keep it small.
    BigInt tuples = boost::multiprecision::pow(BigInt(count), static_cast<unsigned>(ctx.d));
    if (tuples > 2'000'000)
        throw BoundError("all_subgroups: too many generator tuples for brute force");
    std::map<std::vector<Elem>, SubgroupDesc> seen;
    std::vector<Int> idx(static_cast<std::size_t>(ctx.d), 0);
    while (true) {
        std::vector<Elem> gens;
        gens.reserve(idx.size());
        for (Int r : idx) gens.push_back(ctx.unrank(r));
        SubgroupDesc h = subgroup_span(ctx, gens);
        seen.emplace(h.members, h);
        // odometer over tuples
        Int pos = ctx.d - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < count) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::vector<SubgroupDesc> out;
    out.reserve(seen.size());
    for (auto& [members, h] : seen) out.push_back(std::move(h));
    std::sort(out.begin(), out.end(), [](const SubgroupDesc& a, const SubgroupDesc& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

}  // namespace zntile
