#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lss {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace lss
