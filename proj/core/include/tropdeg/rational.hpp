#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropdeg {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Builds a rational from numerator/denominator and canonicalizes it.
Rat make_rat(const Int& num, const Int& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on bad input.
Rat parse_rat(const std::string& text);

IntVec make_int_vec(std::initializer_list<long> values);
RatVec make_rat_vec(std::initializer_list<long> values);
RatVec to_rat_vec(const IntVec& v);

/// gcd of all entries (0 for the zero vector), always nonnegative.
Int content(const IntVec& v);

/// Divides out the content; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

/// Least common multiple of the denominators.
Int common_denominator(const RatVec& v);

bool is_zero(const IntVec& v);

}  // namespace tropdeg
