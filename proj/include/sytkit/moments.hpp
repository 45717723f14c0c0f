#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sytkit/characters.hpp"
#include "sytkit/descent_function.hpp"
#include "sytkit/numeric.hpp"
#include "sytkit/partition.hpp"
#include "sytkit/tableau.hpp"

namespace sytkit {

// Probability that a fixed position 1 <= i < n is a descent of a uniform
// tableau of the shape:
// [C(n,2) - sum C(lam_i,2) + sum C(lam'_j,2)] / (n(n-1)).
// Requires n >= 2.
Rational descent_position_probability(const Partition& lam);

// Expected descent statistic: descent_position_probability * sum f(i).
// Exact variant requires an exact f; n = 1 gives 0.
Rational expected_descent_statistic(const Partition& lam,
                                    const DescentFunction& f);
double expected_descent_statistic_real(const Partition& lam,
                                       const DescentFunction& f);

// Closed forms for the major index:
// E = (1/2)[C(n,2) - sum C(lam_i,2) + sum C(lam'_j,2)],
// Var = (1/12)[sum k^2 - sum hook^2].
Rational expected_maj(const Partition& lam);
Rational variance_maj(const Partition& lam);

// Variance of a descent statistic from the joint descent probabilities:
// (P2-P22)*S2 + (P3-P22)*S3 + (P22-P2^2)*S1^2 with S1 = sum f(i),
// S2 = sum f(i)^2, S3 = 2 sum f(i)f(i+1). Shapes with n < 4 (where the
// (2,2,...) class does not exist) fall back to direct enumeration.
Rational variance_descent_statistic(const Partition& lam,
                                    const DescentFunction& f);
double variance_descent_statistic_real(const Partition& lam,
                                       const DescentFunction& f);

// Var / (t^2 E^2), the tail bound on Pr[|d_f - E| >= t E]. Throws
// zero_expectation when E = 0.
Rational chebyshev_tail_bound(const Partition& lam, const DescentFunction& f,
                              const Rational& t);

struct MomentReport {
  Partition shape;
  std::string stat;
  bool exact = true;
  // Valid when exact; sigma3 = 2 sum f(i) f(i+1).
  Rational expectation, variance, sigma1, sigma2, sigma3;
  // Always filled.
  double expectation_d = 0, variance_d = 0;
  double sigma1_d = 0, sigma2_d = 0, sigma3_d = 0;
};

MomentReport moment_report(const Partition& lam, const DescentFunction& f);

struct ConcentrationConfig {
  double delta = 0.5;       // row bound lam_1 <= delta * n
  double epsilon = 0.1;     // deviation exponent; t = n^(-1/2 + epsilon)
  std::optional<double> t;  // explicit relative deviation overrides epsilon
  long long samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  int workers = 1;
  bool keep_samples = false;
};

struct ExperimentReport {
  Partition shape;
  std::string stat;
  long long samples = 0;
  std::uint64_t seed = 0, stream = 0;
  double delta = 0, epsilon = 0;
  double t = 0;  // relative deviation actually used

  bool row_bound_ok = true;  // lam_1 <= delta * n
  bool growth_ok = true;     // declared witness holds on 1..n-1

  bool exact = true;  // moment arithmetic mode
  Rational expectation, variance;
  double expectation_d = 0, variance_d = 0;

  double empirical_mean = 0;
  double empirical_variance = 0;  // unbiased, N-1 denominator
  long long outside_count = 0;    // samples with |d/E - 1| > t
  double outside_fraction = 0;
  double chebyshev_bound = 0;  // Var/(t^2 E^2)
  double var_over_e2 = 0;

  // The three additive parts of Var/E^2 expressed through normalized
  // characters; available when n >= 4 and sum f(i) != 0. Rational fields
  // are valid in exact mode only, the double mirrors always.
  bool terms_available = false;
  Rational term_square, term_adjacent, term_constant;
  double term_square_d = 0, term_adjacent_d = 0, term_constant_d = 0;

  std::vector<double> sample_values;  // kept when cfg.keep_samples
};

// Samples the statistic and reports empirical concentration next to the
// exact moments and tail bound. Requires a declared growth witness and a
// nonzero expectation.
ExperimentReport run_concentration_experiment(const ConcentrationConfig& cfg,
                                              const Partition& lam,
                                              const DescentFunction& f);

struct HeckeExponentReport {
  Partition shape;
  Rational maj_exponent;  // expected maj
  Rational des_exponent;  // expected des
  bool has_omega = false;
  std::vector<long long> omega_exponents;  // maj(T) mod n, sorted, one per T
};

// Eigenvalue exponent report: the longest element's eigenvalues are
// +-q^(expected maj); the full cycle's are roots of unity to the power
// maj(T) times q^(expected des).
HeckeExponentReport hecke_exponents(const Partition& lam, bool include_omega,
                                    const EnumerationOptions& opts = {});

}  // namespace sytkit
