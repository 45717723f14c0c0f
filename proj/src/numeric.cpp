#include "sytkit/numeric.hpp"

#include <stdexcept>

#include "sytkit/errors.hpp"

namespace sytkit {

Integer factorial(long long n) {
  if (n < 0) throw domain_error("factorial of a negative number");
  Integer acc = 1;
  for (long long k = 2; k <= n; ++k) acc *= k;
  return acc;
}

Integer choose2(const Integer& m) { return m * (m - 1) / 2; }

Integer choose2(long long m) { return choose2(Integer(m)); }

std::string rational_str(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) throw domain_error("rational with zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw domain_error("malformed rational: '" + std::string(text) + "'");
  }
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace sytkit
