#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zntile {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// One element of Z_n^d: d coordinates, each reduced into [0, n).
// std::vector's lexicographic comparison doubles as the canonical element
// order used for all deterministic iteration.
using Elem = std::vector<Int>;

// Whole-group scans refuse to run on groups larger than this many elements
// unless the caller raises the bound explicitly.
inline constexpr Int kDefaultEnumBound = 10'000'000;

// A scan or search was asked to touch more state than its configured bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An identity the implementation itself guarantees failed to hold.
// Signals an arithmetic bug, never an input problem.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised only if a verified prime-size tile admits no spectrum construction.
// The construction rules this out; the trap exists so a failure would be loud.
struct TheoremViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string elem_to_string(const Elem& e);
std::string elems_to_string(const std::vector<Elem>& es);

bool is_prime(Int p);
Int totient(Int m);
std::vector<Int> sorted_divisors(Int m);

}  // namespace zntile
