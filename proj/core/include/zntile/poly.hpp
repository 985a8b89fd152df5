#pragma once

#include "zntile/common.hpp"

namespace zntile::poly {

// Dense integer polynomial; coeffs[i] is the z^i coefficient.
// Normal form carries no trailing zero coefficients; the zero polynomial
// is the empty vector. All arithmetic is exact.
using Poly = std::vector<BigInt>;

Poly trimmed(Poly p);
bool is_zero(const Poly& p);
Int degree(const Poly& p);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly constant(BigInt c);
Poly x_pow_minus_one(Int m);  // z^m - 1

// Quotient and remainder by a monic divisor, exact integer arithmetic.
struct DivMod {
    Poly quotient;
    Poly remainder;
};
DivMod divmod_monic(Poly dividend, const Poly& divisor);
Poly rem_monic(Poly dividend, const Poly& divisor);

}  // namespace zntile::poly
