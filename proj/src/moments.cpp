#include "sytkit/moments.hpp"

#include <cmath>

#include "sytkit/errors.hpp"
#include "sytkit/sampling.hpp"

namespace sytkit {

namespace {

Integer pair_count_difference(const Partition& lam) {
  // C(n,2) - sum C(lam_i,2) + sum C(lam'_j,2)
  Integer acc = choose2(lam.n());
  for (int part : lam.parts()) acc -= choose2(part);
  const Partition conj = lam.conjugate();
  for (int part : conj.parts()) acc += choose2(part);
  return acc;
}

Rational sigma1_exact(const DescentFunction& f, long long n) {
  Rational acc = 0;
  for (long long i = 1; i < n; ++i) acc += f.exact_at(i);
  return acc;
}

Rational sigma2_exact(const DescentFunction& f, long long n) {
  Rational acc = 0;
  for (long long i = 1; i < n; ++i) {
    const Rational v = f.exact_at(i);
    acc += v * v;
  }
  return acc;
}

Rational sigma3_exact(const DescentFunction& f, long long n) {
  Rational acc = 0;
  for (long long i = 1; i + 1 < n; ++i) acc += f.exact_at(i) * f.exact_at(i + 1);
  return acc * 2;
}

double sigma1_real(const DescentFunction& f, long long n) {
  double acc = 0;
  for (long long i = 1; i < n; ++i) acc += f.real_at(i);
  return acc;
}

double sigma2_real(const DescentFunction& f, long long n) {
  double acc = 0;
  for (long long i = 1; i < n; ++i) {
    const double v = f.real_at(i);
    acc += v * v;
  }
  return acc;
}

double sigma3_real(const DescentFunction& f, long long n) {
  double acc = 0;
  for (long long i = 1; i + 1 < n; ++i) acc += f.real_at(i) * f.real_at(i + 1);
  return 2 * acc;
}

// Exact mean and variance of the statistic by full enumeration; the small-n
// route where the (2,2,...) class does not exist.
std::pair<Rational, Rational> enumeration_moments(const Partition& lam,
                                                  const DescentFunction& f) {
  Integer count = 0;
  Rational sum = 0, sum_sq = 0;
  for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
    const Rational d = detail::statistic_exact(row_of, f);
    sum += d;
    sum_sq += d * d;
    ++count;
    return true;
  });
  const Rational mean = sum / count;
  return {mean, sum_sq / count - mean * mean};
}

}  // namespace

Rational descent_position_probability(const Partition& lam) {
  const long long n = lam.n();
  if (n < 2) throw domain_error("descent positions need n >= 2");
  return Rational(pair_count_difference(lam), Integer(n) * (n - 1));
}

Rational expected_descent_statistic(const Partition& lam,
                                    const DescentFunction& f) {
  if (!f.exact())
    throw domain_error(
        "exact expectation requested for a non-exact weight; use the real "
        "mode");
  const long long n = lam.n();
  if (n < 2) return 0;  // no positions, empty statistic
  return descent_position_probability(lam) * sigma1_exact(f, n);
}

double expected_descent_statistic_real(const Partition& lam,
                                       const DescentFunction& f) {
  const long long n = lam.n();
  if (n < 2) return 0;
  return to_double(descent_position_probability(lam)) * sigma1_real(f, n);
}

Rational expected_maj(const Partition& lam) {
  return Rational(pair_count_difference(lam), 2);
}

Rational variance_maj(const Partition& lam) {
  Integer square_sum = 0;
  for (long long k = 1; k <= lam.n(); ++k) square_sum += Integer(k) * k;
  for (const auto& row : hook_lengths(lam)) {
    for (long long h : row) square_sum -= Integer(h) * h;
  }
  return Rational(square_sum, 12);
}

Rational variance_descent_statistic(const Partition& lam,
                                    const DescentFunction& f) {
  if (!f.exact())
    throw domain_error(
        "exact variance requested for a non-exact weight; use the real mode");
  const long long n = lam.n();
  if (n < 4) return enumeration_moments(lam, f).second;
  const JointDescentProbabilities p = joint_descent_probabilities(lam);
  const Rational s1 = sigma1_exact(f, n);
  const Rational s2 = sigma2_exact(f, n);
  const Rational s3 = sigma3_exact(f, n);
  return (p.p2 - p.p22) * s2 + (p.p3 - p.p22) * s3 +
         (p.p22 - p.p2 * p.p2) * s1 * s1;
}

double variance_descent_statistic_real(const Partition& lam,
                                       const DescentFunction& f) {
  const long long n = lam.n();
  if (n < 4) {
    // enumeration in doubles; shapes here have at most three cells
    long long count = 0;
    double sum = 0, sum_sq = 0;
    for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
      const double d = detail::statistic_real(row_of, f);
      sum += d;
      sum_sq += d * d;
      ++count;
      return true;
    });
    const double mean = sum / static_cast<double>(count);
    return sum_sq / static_cast<double>(count) - mean * mean;
  }
  const JointDescentProbabilities jp = joint_descent_probabilities(lam);
  const double p2 = to_double(jp.p2);
  const double p3 = to_double(jp.p3);
  const double p22 = to_double(jp.p22);
  const double s1 = sigma1_real(f, n);
  const double s2 = sigma2_real(f, n);
  const double s3 = sigma3_real(f, n);
  return (p2 - p22) * s2 + (p3 - p22) * s3 + (p22 - p2 * p2) * s1 * s1;
}

Rational chebyshev_tail_bound(const Partition& lam, const DescentFunction& f,
                              const Rational& t) {
  if (t <= 0) throw domain_error("tail bound needs t > 0");
  const Rational mean = expected_descent_statistic(lam, f);
  if (mean == 0)
    throw zero_expectation("statistic has zero expectation on shape " +
                           lam.to_string());
  const Rational variance = variance_descent_statistic(lam, f);
  return variance / (t * t * mean * mean);
}

MomentReport moment_report(const Partition& lam, const DescentFunction& f) {
  MomentReport r;
  r.shape = lam;
  r.stat = f.label();
  r.exact = f.exact();
  const long long n = lam.n();
  if (r.exact) {
    r.expectation = expected_descent_statistic(lam, f);
    r.variance = variance_descent_statistic(lam, f);
    r.sigma1 = sigma1_exact(f, n);
    r.sigma2 = sigma2_exact(f, n);
    r.sigma3 = sigma3_exact(f, n);
    r.expectation_d = to_double(r.expectation);
    r.variance_d = to_double(r.variance);
    r.sigma1_d = to_double(r.sigma1);
    r.sigma2_d = to_double(r.sigma2);
    r.sigma3_d = to_double(r.sigma3);
  } else {
    r.expectation_d = expected_descent_statistic_real(lam, f);
    r.variance_d = variance_descent_statistic_real(lam, f);
    r.sigma1_d = sigma1_real(f, n);
    r.sigma2_d = sigma2_real(f, n);
    r.sigma3_d = sigma3_real(f, n);
  }
  return r;
}

ExperimentReport run_concentration_experiment(const ConcentrationConfig& cfg,
                                              const Partition& lam,
                                              const DescentFunction& f) {
  if (!(cfg.delta > 0 && cfg.delta < 1))
    throw domain_error("concentration experiment needs 0 < delta < 1");
  if (!(cfg.epsilon > 0))
    throw domain_error("concentration experiment needs epsilon > 0");
  if (cfg.samples < 1) throw domain_error("experiment needs samples >= 1");
  if (!f.growth().has_value())
    throw domain_error("concentration experiment needs a growth witness on f");

  const long long n = lam.n();
  ExperimentReport r;
  r.shape = lam;
  r.stat = f.label();
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.stream = cfg.stream;
  r.delta = cfg.delta;
  r.epsilon = cfg.epsilon;
  r.t = cfg.t.value_or(
      std::pow(static_cast<double>(n), -0.5 + cfg.epsilon));
  if (!(r.t > 0)) throw domain_error("relative deviation t must be > 0");
  r.row_bound_ok =
      static_cast<double>(lam.row_length(1)) <= cfg.delta * static_cast<double>(n);
  r.growth_ok = f.growth()->holds_on(f, n);

  r.exact = f.exact();
  if (r.exact) {
    r.expectation = expected_descent_statistic(lam, f);
    r.variance = variance_descent_statistic(lam, f);
    r.expectation_d = to_double(r.expectation);
    r.variance_d = to_double(r.variance);
  } else {
    r.expectation_d = expected_descent_statistic_real(lam, f);
    r.variance_d = variance_descent_statistic_real(lam, f);
  }
  if (r.expectation_d == 0)
    throw zero_expectation("statistic has zero expectation on shape " +
                           lam.to_string());

  const RandomSource base(cfg.seed, cfg.stream);
  const std::vector<double> values =
      sample_statistics_real(lam, f, cfg.samples, base, cfg.workers);

  // compensated summation; reduction order fixed by sample index
  double mean_acc = 0, mean_c = 0;
  for (const double v : values) {
    const double y = v - mean_c;
    const double t_sum = mean_acc + y;
    mean_c = (t_sum - mean_acc) - y;
    mean_acc = t_sum;
  }
  r.empirical_mean = mean_acc / static_cast<double>(cfg.samples);

  double var_acc = 0, var_c = 0;
  long long outside = 0;
  for (const double v : values) {
    const double d = v - r.empirical_mean;
    const double y = d * d - var_c;
    const double t_sum = var_acc + y;
    var_c = (t_sum - var_acc) - y;
    var_acc = t_sum;
    if (std::fabs(v / r.expectation_d - 1.0) > r.t) ++outside;
  }
  r.empirical_variance =
      cfg.samples > 1 ? var_acc / static_cast<double>(cfg.samples - 1) : 0.0;
  r.outside_count = outside;
  r.outside_fraction =
      static_cast<double>(outside) / static_cast<double>(cfg.samples);

  r.var_over_e2 = r.variance_d / (r.expectation_d * r.expectation_d);
  r.chebyshev_bound = r.var_over_e2 / (r.t * r.t);

  if (n >= 4) {
    const CharRatios cr = char_ratios(lam);
    if (cr.r2 != 1) {
      const Rational denom = (1 - cr.r2) * (1 - cr.r2);
      const Rational coeff_square = (1 - cr.r22) / denom;
      const Rational coeff_adjacent =
          (4 * cr.r3 - 3 * cr.r22 - 1) / (3 * denom);
      const Rational coeff_constant = (cr.r22 - cr.r2 * cr.r2) / denom;
      if (r.exact) {
        const Rational s1 = sigma1_exact(f, n);
        if (s1 != 0) {
          const Rational s2 = sigma2_exact(f, n);
          const Rational s3 = sigma3_exact(f, n);
          r.term_square = coeff_square * s2 / (s1 * s1);
          r.term_adjacent = coeff_adjacent * s3 / (s1 * s1);
          r.term_constant = coeff_constant;
          r.term_square_d = to_double(r.term_square);
          r.term_adjacent_d = to_double(r.term_adjacent);
          r.term_constant_d = to_double(r.term_constant);
          r.terms_available = true;
          // the three terms are an exact decomposition of Var/E^2
          const Rational ratio =
              r.variance / (r.expectation * r.expectation);
          if (r.term_square + r.term_adjacent + r.term_constant != ratio)
            throw internal_error(
                "variance ratio decomposition mismatch on shape " +
                lam.to_string());
        }
      } else {
        const double s1 = sigma1_real(f, n);
        if (s1 != 0) {
          const double s1_sq = s1 * s1;
          r.term_square_d = to_double(coeff_square) * sigma2_real(f, n) / s1_sq;
          r.term_adjacent_d =
              to_double(coeff_adjacent) * sigma3_real(f, n) / s1_sq;
          r.term_constant_d = to_double(coeff_constant);
          r.terms_available = true;
        }
      }
    }
  }

  if (cfg.keep_samples) r.sample_values = values;
  return r;
}

HeckeExponentReport hecke_exponents(const Partition& lam, bool include_omega,
                                    const EnumerationOptions& opts) {
  if (lam.n() < 1) throw domain_error("exponent report needs n >= 1");
  HeckeExponentReport r;
  r.shape = lam;
  r.maj_exponent = expected_maj(lam);
  r.des_exponent = expected_descent_statistic(lam, DescentFunction::des());
  if (include_omega) {
    const long long n = lam.n();
    for_each_syt_rows(
        lam,
        [&](const std::vector<int>& row_of) {
          long long maj = 0;
          for (long long i = 1; i < n; ++i) {
            if (detail::is_descent(row_of, i)) maj += i;
          }
          r.omega_exponents.push_back(maj % n);
          return true;
        },
        opts);
    std::sort(r.omega_exponents.begin(), r.omega_exponents.end());
    r.has_omega = true;
  }
  return r;
}

}  // namespace sytkit
