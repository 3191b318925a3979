#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace randgrp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, std::uint64_t exp);

// Largest r with r^n <= x. Requires x >= 0, n >= 1.
BigInt nth_root_floor(const BigInt& x, unsigned n);

// log2 of a positive rational, accurate to well under 1e-12 relative error.
double log2_of(const BigRat& x);

// Parses "0.05", ".5", "1/20" or "3" into an exact rational.
BigRat parse_rational(const std::string& text);

std::string rational_to_string(const BigRat& x);

} // namespace randgrp
