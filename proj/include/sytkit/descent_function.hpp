#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sytkit/numeric.hpp"

namespace sytkit {

class DescentFunction;

// Certifies c1 <= f(i)/i^alpha <= c2 on a finite index range.
class GrowthWitness {
 public:
  GrowthWitness(double c1, double c2, double alpha);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double alpha() const { return alpha_; }

  // Checks the bracketing on i = 1..n-1.
  bool holds_on(const DescentFunction& f, long long n) const;

 private:
  double c1_;
  double c2_;
  double alpha_;
};

// A weight f on positions 1..n-1. A tableau statistic is the sum of f over
// the descent positions. Exact kinds (des, maj, integral powers, rational
// tables) support exact-rational arithmetic; fractional powers are
// float-only.
class DescentFunction {
 public:
  enum class Kind { des, maj, power, table };

  static DescentFunction des();
  static DescentFunction maj();
  static DescentFunction power(double alpha);  // alpha > 0
  static DescentFunction table(std::vector<Rational> values);

  // "des" | "maj" | "power:<alpha>".
  static DescentFunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool exact() const { return exact_; }

  Rational exact_at(long long i) const;  // throws domain_error if !exact()
  double real_at(long long i) const;

  std::optional<GrowthWitness> growth() const { return growth_; }
  DescentFunction with_growth(GrowthWitness w) const;

  std::string label() const;

 private:
  DescentFunction() = default;

  Kind kind_ = Kind::des;
  bool exact_ = true;
  double alpha_ = 1.0;
  long long int_alpha_ = 1;  // valid when kind == power && exact
  std::vector<Rational> table_;
  std::optional<GrowthWitness> growth_;
};

namespace detail {

// row_of[e] is the 1-based row of entry e; index 0 unused. Position i is a
// descent iff entry i+1 sits strictly below entry i.
inline bool is_descent(const std::vector<int>& row_of, long long i) {
  return row_of[static_cast<size_t>(i) + 1] > row_of[static_cast<size_t>(i)];
}

Rational statistic_exact(const std::vector<int>& row_of,
                         const DescentFunction& f);
double statistic_real(const std::vector<int>& row_of,
                      const DescentFunction& f);

}  // namespace detail

}  // namespace sytkit
