#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lincnf {

// Exact arithmetic everywhere a count or a mean appears. Model counts and
// binomial coefficients overflow 64 bits quickly, and the structural
// identities must be checked with zero tolerance, so no floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Canonical "p/q" form in lowest terms, denominator always explicit
// ("4/3", "2/1", "0/1"). This is the wire format for every rational in
// JSON reports and CSV output.
std::string to_fraction_string(const Rational& value);

// Inverse of to_fraction_string; also accepts a bare integer.
Rational parse_fraction(const std::string& text);

// ln C(n, k) in double precision, for growth charts only.
double ln_binomial(std::int64_t n, std::int64_t k);

}  // namespace lincnf
