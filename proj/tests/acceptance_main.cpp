// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sytkit/moments.hpp"
#include "sytkit/sampling.hpp"
#include "sytkit/selftest.hpp"

using namespace sytkit;
namespace st = sytkit::selftest;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void report(int criterion, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("[%2d] %-68s %s  (%.2f s)%s%s\n", criterion, name.c_str(),
              pass ? "PASS" : "FAIL", seconds,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool all_pass(const std::vector<st::CheckResult>& checks, std::string* why) {
  for (const auto& c : checks) {
    if (!c.pass) {
      *why = c.name + ": " + c.detail;
      return false;
    }
  }
  return true;
}

void criterion_1() {
  Timer timer;
  const auto check = st::hook_count_agreement(9);
  const double sec = timer.seconds();
  report(1, "enumerated tableau count equals hook-formula count, n <= 9",
         check.pass && sec < 120.0, sec, check.detail);
}

void criterion_2() {
  Timer timer;
  std::string why;
  const bool pass =
      all_pass({st::genfun_vs_bruteforce(9), st::genfun_at_one_vs_count(20)},
               &why);
  report(2,
         "maj generating function: brute-force match n <= 9, q=1 count n <= 20",
         pass, timer.seconds(), why);
}

void criterion_3() {
  Timer timer;
  std::string why;
  bool pass = all_pass(
      {st::maj_moments_vs_enumeration(8), st::maj_moments_vs_genfun(12)},
      &why);
  const Partition square({2, 2});
  if (expected_maj(square) != 3 || variance_maj(square) != 1) {
    pass = false;
    why = "anchor (2,2) moments";
  }
  report(3, "closed-form maj moments: enumeration n <= 8, genfun n <= 12",
         pass, timer.seconds(), why);
}

void criterion_4() {
  Timer timer;
  std::string why;
  bool pass = all_pass({st::expected_statistic_vs_enumeration(8)}, &why);
  const Partition staircase({5, 4, 2, 1});
  if (expected_descent_statistic(staircase, DescentFunction::des()) != 5 ||
      expected_descent_statistic(staircase, DescentFunction::maj()) != 30) {
    pass = false;
    why = "anchor (5,4,2,1) expectations";
  }
  report(4, "expected descent statistic equals enumeration mean, 4 weights",
         pass, timer.seconds(), why);
}

void criterion_5() {
  Timer timer;
  std::string why;
  const bool pass = all_pass({st::weight_sums_position_independent(8)}, &why);
  report(5, "position weight sums independent of position, equal characters",
         pass, timer.seconds(), why);
}

void criterion_6() {
  Timer timer;
  std::string why;
  const bool pass = all_pass({st::descent_weight_char_vs_mn(7)}, &why);
  report(6, "descent-weight characters equal rim-hook characters, n <= 7",
         pass, timer.seconds(), why);
}

void criterion_7() {
  Timer timer;
  std::string why;
  const bool pass = all_pass(
      {st::probabilities_vs_frequencies(8), st::frobenius_ratios_vs_mn(10)},
      &why);
  report(7,
         "descent probabilities = frequencies n <= 8; ratio closed forms n <= 10",
         pass, timer.seconds(), why);
}

void criterion_8() {
  Timer timer;
  std::string why;
  bool pass = all_pass({st::variance_statistic_vs_enumeration(8)}, &why);
  if (variance_descent_statistic(Partition({2, 2}), DescentFunction::des()) !=
      Rational(1, 4)) {
    pass = false;
    why = "anchor (2,2) des variance";
  }
  report(8, "descent statistic variance equals enumeration variance, 4 weights",
         pass, timer.seconds(), why);
}

void criterion_9() {
  Timer timer;
  std::string why;
  bool pass = all_pass(
      {st::sampler_uniformity(
          {Partition({3, 2}), Partition({2, 2, 1}), Partition({3, 1, 1})}, 200,
          42)},
      &why);

  // byte-identical reruns of one sampling command
  const Partition lam({3, 2});
  const RandomSource base(42, 0);
  for (int run = 0; run < 2 && pass; ++run) {
    std::ostringstream first, second;
    for (const auto& v :
         sample_statistics(lam, DescentFunction::maj(), 1000, base, 1))
      first << rational_str(v) << "\n";
    for (const auto& v :
         sample_statistics(lam, DescentFunction::maj(), 1000, base, 1))
      second << rational_str(v) << "\n";
    if (first.str() != second.str()) {
      pass = false;
      why = "sample sequence not reproducible";
    }
  }
  report(9, "sampler chi-square uniformity on pinned seeds; determinism", pass,
         timer.seconds(), why);
}

void criterion_10() {
  Timer timer;
  std::string why;
  ConcentrationConfig cfg;
  cfg.samples = 1000;
  cfg.seed = 42;
  cfg.epsilon = 0.1;
  cfg.delta = 0.5;
  const auto exp = run_concentration_experiment(cfg, Partition({200, 200}),
                                                DescentFunction::maj());
  bool pass = exp.outside_fraction <= exp.chebyshev_bound + 0.01;
  if (!pass) why = "outside fraction over the tail bound";

  std::string decay_why;
  if (!all_pass({st::ratio_decay({50, 100, 200, 400}, 40.0)}, &decay_why)) {
    pass = false;
    why = decay_why;
  }
  const double sec = timer.seconds();
  std::ostringstream detail;
  detail << "outside=" << exp.outside_fraction
         << " bound=" << exp.chebyshev_bound << (why.empty() ? "" : " ") << why;
  report(10, "concentration on (200,200) within tail bound; ratio decay",
         pass && sec < 60.0, sec, detail.str());
}

void criterion_11() {
  Timer timer;
  const auto r = hecke_exponents(Partition({2, 2}), true);
  const bool pass = r.maj_exponent == 3 && r.des_exponent == Rational(3, 2) &&
                    r.omega_exponents == std::vector<long long>{0, 2};
  report(11, "eigenvalue exponent report anchor on the square shape", pass,
         timer.seconds());
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("ACCEPTANCE: %d/11 criteria passed (%.2f s)\n", 11 - failures,
              total.seconds());
  return failures == 0 ? 0 : 1;
}
