#include "randgrp/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace randgrp {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

BigInt nth_root_floor(const BigInt& x, unsigned n) {
    if (x < 0) throw std::invalid_argument("nth_root_floor: negative radicand");
    if (n == 0) throw std::invalid_argument("nth_root_floor: zeroth root");
    if (x == 0 || x == 1 || n == 1) return x;
    // Newton iteration from an overestimate.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    BigInt r = BigInt(1) << (bits / n + 1);
    while (true) {
        BigInt rn1 = big_pow(r, n - 1);
        BigInt next = ((n - 1) * r + x / rn1) / n;
        if (next >= r) break;
        r = next;
    }
    while (big_pow(r, n) > x) --r;
    while (big_pow(r + 1, n) <= x) ++r;
    return r;
}

namespace {

double log2_of_int(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_of: nonpositive value");
    const unsigned msb = static_cast<unsigned>(boost::multiprecision::msb(v));
    if (msb < 63) return std::log2(v.convert_to<double>());
    // Take the top 63 bits as a mantissa and add back the shift.
    const unsigned shift = msb - 62;
    BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

} // namespace

double log2_of(const BigRat& x) {
    if (x <= 0) throw std::invalid_argument("log2_of: nonpositive value");
    return log2_of_int(numerator(x)) - log2_of_int(denominator(x));
}

BigRat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return BigRat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return BigRat(BigInt(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += '0';
    BigInt scale = big_pow(10, frac.size());
    BigInt num = BigInt(whole) * scale;
    if (!frac.empty()) {
        BigInt f(frac);
        num += negative ? -f : f;
    }
    return BigRat(num, scale);
}

std::string rational_to_string(const BigRat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

} // namespace randgrp
