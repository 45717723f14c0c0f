#include "sytkit/descent_function.hpp"

#include <cmath>

#include "sytkit/errors.hpp"

namespace sytkit {

GrowthWitness::GrowthWitness(double c1, double c2, double alpha)
    : c1_(c1), c2_(c2), alpha_(alpha) {
  if (!(0 < c1 && c1 < c2))
    throw domain_error("growth witness needs 0 < c1 < c2");
  if (!(alpha > 0)) throw domain_error("growth witness needs alpha > 0");
}

bool GrowthWitness::holds_on(const DescentFunction& f, long long n) const {
  for (long long i = 1; i < n; ++i) {
    const double ratio = f.real_at(i) / std::pow(static_cast<double>(i), alpha_);
    if (!(c1_ <= ratio && ratio <= c2_)) return false;
  }
  return true;
}

DescentFunction DescentFunction::des() {
  DescentFunction f;
  f.kind_ = Kind::des;
  f.exact_ = true;
  // constant weight; any small alpha brackets it on desk-scale ranges
  f.growth_ = GrowthWitness(0.5, 2.0, 1e-3);
  return f;
}

DescentFunction DescentFunction::maj() {
  DescentFunction f;
  f.kind_ = Kind::maj;
  f.exact_ = true;
  f.growth_ = GrowthWitness(0.5, 2.0, 1.0);
  return f;
}

DescentFunction DescentFunction::power(double alpha) {
  if (!(alpha > 0)) throw domain_error("power weight needs alpha > 0");
  DescentFunction f;
  f.kind_ = Kind::power;
  f.alpha_ = alpha;
  f.exact_ = std::floor(alpha) == alpha && alpha <= 1e6;
  if (f.exact_) f.int_alpha_ = static_cast<long long>(alpha);
  f.growth_ = GrowthWitness(0.5, 2.0, alpha);
  return f;
}

DescentFunction DescentFunction::table(std::vector<Rational> values) {
  DescentFunction f;
  f.kind_ = Kind::table;
  f.exact_ = true;
  f.table_ = std::move(values);
  return f;
}

DescentFunction DescentFunction::parse(std::string_view spec) {
  if (spec == "des") return des();
  if (spec == "maj") return maj();
  constexpr std::string_view prefix = "power:";
  if (spec.substr(0, prefix.size()) == prefix) {
    const std::string text{spec.substr(prefix.size())};
    try {
      size_t used = 0;
      const double alpha = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return power(alpha);
    } catch (const std::invalid_argument&) {
      throw domain_error("malformed power weight: '" + std::string(spec) + "'");
    }
  }
  throw domain_error("unknown descent statistic: '" + std::string(spec) + "'");
}

Rational DescentFunction::exact_at(long long i) const {
  if (i < 1) throw domain_error("descent function index must be >= 1");
  switch (kind_) {
    case Kind::des:
      return 1;
    case Kind::maj:
      return i;
    case Kind::power: {
      if (!exact_)
        throw domain_error(
            "fractional power weight has no exact value; use the real mode");
      return Rational(boost::multiprecision::pow(
          Integer(i), static_cast<unsigned>(int_alpha_)));
    }
    case Kind::table: {
      if (static_cast<size_t>(i) > table_.size())
        throw domain_error("weight table has only " +
                           std::to_string(table_.size()) + " entries");
      return table_[static_cast<size_t>(i) - 1];
    }
  }
  throw internal_error("unreachable descent function kind");
}

double DescentFunction::real_at(long long i) const {
  if (i < 1) throw domain_error("descent function index must be >= 1");
  switch (kind_) {
    case Kind::des:
      return 1.0;
    case Kind::maj:
      return static_cast<double>(i);
    case Kind::power:
      return std::pow(static_cast<double>(i), alpha_);
    case Kind::table:
      return to_double(exact_at(i));
  }
  throw internal_error("unreachable descent function kind");
}

DescentFunction DescentFunction::with_growth(GrowthWitness w) const {
  DescentFunction f = *this;
  f.growth_ = w;
  return f;
}

std::string DescentFunction::label() const {
  switch (kind_) {
    case Kind::des:
      return "des";
    case Kind::maj:
      return "maj";
    case Kind::power: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "power:%g", alpha_);
      return buf;
    }
    case Kind::table:
      return "table[" + std::to_string(table_.size()) + "]";
  }
  return "?";
}

namespace detail {

Rational statistic_exact(const std::vector<int>& row_of,
                         const DescentFunction& f) {
  const long long n = static_cast<long long>(row_of.size()) - 1;
  Rational acc = 0;
  for (long long i = 1; i < n; ++i) {
    if (is_descent(row_of, i)) acc += f.exact_at(i);
  }
  return acc;
}

double statistic_real(const std::vector<int>& row_of,
                      const DescentFunction& f) {
  const long long n = static_cast<long long>(row_of.size()) - 1;
  double acc = 0;
  for (long long i = 1; i < n; ++i) {
    if (is_descent(row_of, i)) acc += f.real_at(i);
  }
  return acc;
}

}  // namespace detail

}  // namespace sytkit
