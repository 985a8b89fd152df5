#include "zntile/poly.hpp"

#include <algorithm>

namespace zntile::poly {

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const BigInt& c) { return c == 0; });
}

Int degree(const Poly& p) {
    for (Int i = static_cast<Int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return trimmed(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return trimmed(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trimmed(std::move(r));
}

Poly constant(BigInt c) {
    if (c == 0) return {};
    Poly r(1);
    r[0] = std::move(c);
    return r;
}

Poly x_pow_minus_one(Int m) {
    if (m < 1) throw PreconditionError("x_pow_minus_one: m must be >= 1");
    Poly r(static_cast<std::size_t>(m) + 1);
    r[0] = -1;
    r.back() = 1;
    return r;
}

DivMod divmod_monic(Poly dividend, const Poly& divisor) {
    Poly d = trimmed(divisor);
    if (d.empty()) throw PreconditionError("divmod_monic: divisor is zero");
    if (d.back() != 1) throw PreconditionError("divmod_monic: divisor is not monic");
    dividend = trimmed(std::move(dividend));
    const Int dd = degree(d);
    DivMod out;
    if (degree(dividend) < dd) {
        out.remainder = std::move(dividend);
        return out;
    }
    out.quotient.assign(dividend.size() - d.size() + 1, BigInt(0));
    for (Int i = static_cast<Int>(dividend.size()) - 1; i >= dd; --i) {
        BigInt c = dividend[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        out.quotient[static_cast<std::size_t>(i - dd)] = c;
        for (Int j = 0; j <= dd; ++j)
            dividend[static_cast<std::size_t>(i - dd + j)] -= c * d[static_cast<std::size_t>(j)];
    }
    out.quotient = trimmed(std::move(out.quotient));
    dividend.resize(static_cast<std::size_t>(dd));
    out.remainder = trimmed(std::move(dividend));
    return out;
}

Poly rem_monic(Poly dividend, const Poly& divisor) {
    return divmod_monic(std::move(dividend), divisor).remainder;
}

}  // namespace zntile::poly
