#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sytkit {

// All combinatorial counts and exact statistics use arbitrary precision;
// tableau counts outgrow 64 bits around n = 34.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(long long n);

// m*(m-1)/2, the number of unordered pairs from m items.
Integer choose2(const Integer& m);
Integer choose2(long long m);

// "p/q", or just "p" when the denominator is one.
std::string rational_str(const Rational& value);

// Parses "p", "-p" or "p/q". Throws domain_error on malformed input.
Rational rational_parse(std::string_view text);

double to_double(const Rational& value);

}  // namespace sytkit
