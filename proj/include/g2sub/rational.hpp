#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace g2sub {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "p/q", with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

inline Integer numerator(const Rational& x) { return Integer(boost::multiprecision::numerator(x)); }
inline Integer denominator(const Rational& x) { return Integer(boost::multiprecision::denominator(x)); }

}  // namespace g2sub
