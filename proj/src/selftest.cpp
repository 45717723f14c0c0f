#include "sytkit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "sytkit/characters.hpp"
#include "sytkit/errors.hpp"
#include "sytkit/moments.hpp"
#include "sytkit/qpolynomial.hpp"
#include "sytkit/sampling.hpp"

namespace sytkit::selftest {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_)
        .count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

CheckResult finish(std::string name, bool pass, std::string detail,
                   const Stopwatch& watch) {
  return CheckResult{std::move(name), pass, std::move(detail), watch.ms()};
}

std::string shape_tag(const Partition& lam) { return "(" + lam.to_string() + ")"; }

// The four statistics every f-sweep exercises.
std::vector<DescentFunction> sweep_statistics() {
  return {DescentFunction::des(), DescentFunction::maj(),
          DescentFunction::power(2.0),
          DescentFunction::table(pinned_rational_table())};
}

// 99.9% chi-square quantiles for 1..30 degrees of freedom.
constexpr double kChi2Q999[30] = {
    10.8276, 13.8155, 16.2662, 18.4668, 20.5150, 22.4577, 24.3219, 26.1245,
    27.8772, 29.5883, 31.2641, 32.9095, 34.5282, 36.1233, 37.6973, 39.2524,
    40.7902, 42.3124, 43.8202, 45.3147, 46.7970, 48.2679, 49.7282, 51.1786,
    52.6197, 54.0520, 55.4760, 56.8923, 58.3012, 59.7031};

}  // namespace

const std::vector<Rational>& pinned_rational_table() {
  static const std::vector<Rational> table = {
      Rational(5, 3),  Rational(-7, 2), Rational(1, 6),  Rational(4),
      Rational(-2, 5), Rational(9, 7),  Rational(3, 8),  Rational(-11, 6),
      Rational(2, 9),  Rational(7, 4),  Rational(-1, 3), Rational(13, 5)};
  return table;
}

CheckResult hook_count_agreement(int max_n) {
  Stopwatch watch;
  long long shapes = 0;
  Integer tableaux = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      Integer enumerated = 0;
      for_each_syt_rows(lam, [&](const std::vector<int>&) {
        ++enumerated;
        return true;
      });
      if (enumerated != count_syt(lam))
        return finish("tableau count: enumeration vs hook formula", false,
                      "mismatch at " + shape_tag(lam), watch);
      ++shapes;
      tableaux += enumerated;
    }
  }
  return finish("tableau count: enumeration vs hook formula", true,
                std::to_string(shapes) + " shapes, " + tableaux.str() +
                    " tableaux, n <= " + std::to_string(max_n),
                watch);
}

CheckResult genfun_vs_bruteforce(int max_n) {
  Stopwatch watch;
  long long shapes = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      std::vector<Integer> brute(
          static_cast<size_t>(choose2(n).convert_to<long long>()) + 1);
      for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
        long long maj = 0;
        for (long long i = 1; i < n; ++i) {
          if (detail::is_descent(row_of, i)) maj += i;
        }
        brute[static_cast<size_t>(maj)] += 1;
        return true;
      });
      if (maj_generating_function(lam) != QPolynomial(std::move(brute)))
        return finish("maj generating function vs brute-force distribution",
                      false, "mismatch at " + shape_tag(lam), watch);
      ++shapes;
    }
  }
  return finish("maj generating function vs brute-force distribution", true,
                std::to_string(shapes) + " shapes, n <= " +
                    std::to_string(max_n),
                watch);
}

CheckResult genfun_at_one_vs_count(int max_n) {
  Stopwatch watch;
  long long shapes = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      if (maj_generating_function(lam).eval_one() != count_syt(lam))
        return finish("genfun at q=1 vs hook count", false,
                      "mismatch at " + shape_tag(lam), watch);
      ++shapes;
    }
  }
  return finish("genfun at q=1 vs hook count", true,
                std::to_string(shapes) + " shapes, n <= " +
                    std::to_string(max_n),
                watch);
}

CheckResult genfun_shape_properties(int max_n) {
  Stopwatch watch;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const QPolynomial gf = maj_generating_function(lam);
      for (const Integer& c : gf.coeffs()) {
        if (c < 0)
          return finish("genfun coefficients nonnegative, degree = max maj",
                        false, "negative coefficient at " + shape_tag(lam),
                        watch);
      }
      long long max_maj = 0;
      for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
        long long maj = 0;
        for (long long i = 1; i < n; ++i) {
          if (detail::is_descent(row_of, i)) maj += i;
        }
        max_maj = std::max(max_maj, maj);
        return true;
      });
      if (gf.degree() != max_maj)
        return finish("genfun coefficients nonnegative, degree = max maj",
                      false, "degree mismatch at " + shape_tag(lam), watch);
    }
  }
  return finish("genfun coefficients nonnegative, degree = max maj", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult maj_moments_vs_enumeration(int max_n) {
  Stopwatch watch;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      Integer count = 0;
      Integer sum = 0, sum_sq = 0;
      for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
        long long maj = 0;
        for (long long i = 1; i < n; ++i) {
          if (detail::is_descent(row_of, i)) maj += i;
        }
        sum += maj;
        sum_sq += Integer(maj) * maj;
        ++count;
        return true;
      });
      const Rational mean(sum, count);
      const Rational variance = Rational(sum_sq, count) - mean * mean;
      if (expected_maj(lam) != mean || variance_maj(lam) != variance)
        return finish("closed-form maj moments vs enumeration", false,
                      "mismatch at " + shape_tag(lam), watch);
    }
  }
  return finish("closed-form maj moments vs enumeration", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult maj_moments_vs_genfun(int max_n) {
  Stopwatch watch;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const GenfunMoments gm = moments_from_genfun(lam);
      if (gm.count != count_syt(lam) || gm.expectation != expected_maj(lam) ||
          gm.variance != variance_maj(lam))
        return finish("closed-form maj moments vs generating function", false,
                      "mismatch at " + shape_tag(lam), watch);
    }
  }
  return finish("closed-form maj moments vs generating function", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult expected_statistic_vs_enumeration(int max_n) {
  Stopwatch watch;
  const auto stats = sweep_statistics();
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      for (const DescentFunction& f : stats) {
        Integer count = 0;
        Rational sum = 0;
        for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
          sum += detail::statistic_exact(row_of, f);
          ++count;
          return true;
        });
        if (expected_descent_statistic(lam, f) != sum / count)
          return finish("expected descent statistic vs enumeration", false,
                        "mismatch at " + shape_tag(lam) + ", " + f.label(),
                        watch);
      }
    }
  }
  return finish("expected descent statistic vs enumeration", true,
                "4 statistics, n <= " + std::to_string(max_n), watch);
}

CheckResult variance_statistic_vs_enumeration(int max_n) {
  Stopwatch watch;
  const auto stats = sweep_statistics();
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      for (const DescentFunction& f : stats) {
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
        if (variance_descent_statistic(lam, f) !=
            sum_sq / count - mean * mean)
          return finish("variance of descent statistic vs enumeration", false,
                        "mismatch at " + shape_tag(lam) + ", " + f.label(),
                        watch);
      }
    }
  }
  return finish("variance of descent statistic vs enumeration", true,
                "4 statistics, n <= " + std::to_string(max_n), watch);
}

CheckResult weight_sums_position_independent(int max_n) {
  Stopwatch watch;
  for (int n = 2; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      std::vector<int> cls{2};
      for (int i = 0; i < n - 2; ++i) cls.push_back(1);
      const Integer chi2 = mn_character(lam, CycleType(cls));
      for (int i = 1; i < n; ++i) {
        if (weight_sum_transposition(lam, i) != chi2)
          return finish(
              "position weight sums constant and equal to characters", false,
              "transposition weight at " + shape_tag(lam) +
                  ", i=" + std::to_string(i),
              watch);
      }
      if (n >= 3) {
        std::vector<int> cls3{3};
        for (int i = 0; i < n - 3; ++i) cls3.push_back(1);
        const Integer chi3 = mn_character(lam, CycleType(cls3));
        for (int i = 1; i < n - 1; ++i) {
          if (weight_sum_three_cycle(lam, i) != chi3)
            return finish(
                "position weight sums constant and equal to characters", false,
                "three-cycle weight at " + shape_tag(lam) +
                    ", i=" + std::to_string(i),
                watch);
        }
      }
      if (n >= 4) {
        std::vector<int> cls22{2, 2};
        for (int i = 0; i < n - 4; ++i) cls22.push_back(1);
        const Integer chi22 = mn_character(lam, CycleType(cls22));
        for (int i = 1; i < n; ++i) {
          for (int j = i + 2; j < n; ++j) {
            if (weight_sum_double_transposition(lam, i, j) != chi22)
              return finish(
                  "position weight sums constant and equal to characters",
                  false,
                  "double-transposition weight at " + shape_tag(lam) + ", i=" +
                      std::to_string(i) + ", j=" + std::to_string(j),
                  watch);
          }
        }
      }
    }
  }
  return finish("position weight sums constant and equal to characters", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult descent_weight_char_vs_mn(int max_n) {
  Stopwatch watch;
  long long pairs = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto shapes = all_partitions(n);
    for (const Partition& lam : shapes) {
      for (const Partition& mu : shapes) {
        if (character_via_descent_weights(lam, mu) != mn_character(lam, mu))
          return finish("descent-weight character sum vs rim-hook recursion",
                        false,
                        "mismatch at shape " + shape_tag(lam) + ", class " +
                            shape_tag(mu),
                        watch);
        ++pairs;
      }
    }
  }
  return finish("descent-weight character sum vs rim-hook recursion", true,
                std::to_string(pairs) + " (shape, class) pairs, n <= " +
                    std::to_string(max_n),
                watch);
}

CheckResult frobenius_ratios_vs_mn(int max_n) {
  Stopwatch watch;
  for (int n = 2; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const Integer dim = count_syt(lam);
      std::vector<int> cls2{2};
      for (int i = 0; i < n - 2; ++i) cls2.push_back(1);
      if (frobenius_r2(lam) != Rational(mn_character(lam, CycleType(cls2)), dim))
        return finish("normalized character closed forms vs rim-hook recursion",
                      false, "transposition ratio at " + shape_tag(lam), watch);
      if (n >= 4) {
        std::vector<int> cls22{2, 2};
        for (int i = 0; i < n - 4; ++i) cls22.push_back(1);
        if (frobenius_r22(lam) !=
            Rational(mn_character(lam, CycleType(cls22)), dim))
          return finish(
              "normalized character closed forms vs rim-hook recursion", false,
              "double-transposition ratio at " + shape_tag(lam), watch);
      }
    }
  }
  return finish("normalized character closed forms vs rim-hook recursion",
                true, "n <= " + std::to_string(max_n), watch);
}

CheckResult probabilities_vs_frequencies(int max_n) {
  Stopwatch watch;
  for (int n = 2; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const Integer dim = count_syt(lam);
      std::vector<Integer> single(static_cast<size_t>(n), 0);
      std::vector<Integer> adjacent(static_cast<size_t>(n), 0);
      std::map<std::pair<int, int>, Integer> separated;
      for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) separated[{i, j}] = 0;
      }
      for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
        for (int i = 1; i < n; ++i) {
          if (!detail::is_descent(row_of, i)) continue;
          single[static_cast<size_t>(i)] += 1;
          if (i + 1 < n && detail::is_descent(row_of, i + 1))
            adjacent[static_cast<size_t>(i)] += 1;
          for (int j = i + 2; j < n; ++j) {
            if (detail::is_descent(row_of, j)) separated[{i, j}] += 1;
          }
        }
        return true;
      });

      // single-position frequency against the position probability
      const Rational p2 = descent_position_probability(lam);
      for (int i = 1; i < n; ++i) {
        if (Rational(single[static_cast<size_t>(i)], dim) != p2)
          return finish("joint descent probabilities vs enumeration", false,
                        "single-position frequency at " + shape_tag(lam) +
                            ", i=" + std::to_string(i),
                        watch);
      }
      if (n >= 4) {
        const JointDescentProbabilities jp = joint_descent_probabilities(lam);
        if (jp.p2 != p2)
          return finish("joint descent probabilities vs enumeration", false,
                        "probability routes disagree at " + shape_tag(lam),
                        watch);
        for (int i = 1; i < n - 1; ++i) {
          if (Rational(adjacent[static_cast<size_t>(i)], dim) != jp.p3)
            return finish("joint descent probabilities vs enumeration", false,
                          "adjacent-pair frequency at " + shape_tag(lam) +
                              ", i=" + std::to_string(i),
                          watch);
        }
        for (const auto& [pos, hits] : separated) {
          if (Rational(hits, dim) != jp.p22)
            return finish("joint descent probabilities vs enumeration", false,
                          "separated-pair frequency at " + shape_tag(lam) +
                              ", i=" + std::to_string(pos.first) +
                              ", j=" + std::to_string(pos.second),
                          watch);
        }
      }
    }
  }
  return finish("joint descent probabilities vs enumeration", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult normalized_character_bound(int max_n) {
  Stopwatch watch;
  for (int n = 4; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const CharRatios r = char_ratios(lam);
      using boost::multiprecision::abs;
      if (abs(r.r2) > 1 || abs(r.r3) > 1 || abs(r.r22) > 1)
        return finish("normalized characters bounded by one", false,
                      "bound violated at " + shape_tag(lam), watch);
    }
  }
  return finish("normalized characters bounded by one", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult partition_identities(int max_n) {
  Stopwatch watch;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      const Partition conj = lam.conjugate();
      if (conj.conjugate() != lam)
        return finish(
            "content identity, conjugation involution, hook symmetry", false,
            "conjugation not involutive at " + shape_tag(lam), watch);

      Integer pair_diff = 0;
      for (int part : lam.parts()) pair_diff += choose2(part);
      for (int part : conj.parts()) pair_diff -= choose2(part);
      if (pair_diff != content_sum(lam))
        return finish(
            "content identity, conjugation involution, hook symmetry", false,
            "content identity fails at " + shape_tag(lam), watch);

      std::vector<long long> hooks, conj_hooks;
      for (const auto& row : hook_lengths(lam))
        hooks.insert(hooks.end(), row.begin(), row.end());
      for (const auto& row : hook_lengths(conj))
        conj_hooks.insert(conj_hooks.end(), row.begin(), row.end());
      std::sort(hooks.begin(), hooks.end());
      std::sort(conj_hooks.begin(), conj_hooks.end());
      if (hooks != conj_hooks)
        return finish(
            "content identity, conjugation involution, hook symmetry", false,
            "hook multisets differ at " + shape_tag(lam), watch);
    }
  }
  return finish("content identity, conjugation involution, hook symmetry",
                true, "n <= " + std::to_string(max_n), watch);
}

CheckResult dominance_order_properties(int max_n) {
  Stopwatch watch;
  for (int n = 1; n <= max_n; ++n) {
    const auto shapes = all_partitions(n);
    for (const Partition& a : shapes) {
      if (!dominates(a, a))
        return finish("dominance partial order, content monotone", false,
                      "not reflexive at " + shape_tag(a), watch);
      for (const Partition& b : shapes) {
        const bool ab = dominates(a, b);
        if (ab && dominates(b, a) && !(a == b))
          return finish("dominance partial order, content monotone", false,
                        "antisymmetry fails at " + shape_tag(a) + ", " +
                            shape_tag(b),
                        watch);
        if (ab && content_sum(a) < content_sum(b))
          return finish("dominance partial order, content monotone", false,
                        "content not monotone at " + shape_tag(a) + ", " +
                            shape_tag(b),
                        watch);
        if (!ab) continue;
        for (const Partition& c : shapes) {
          if (dominates(b, c) && !dominates(a, c))
            return finish("dominance partial order, content monotone", false,
                          "transitivity fails at " + shape_tag(a) + ", " +
                              shape_tag(b) + ", " + shape_tag(c),
                          watch);
        }
      }
    }
  }
  return finish("dominance partial order, content monotone", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult conjugate_complements_descents(int max_n) {
  Stopwatch watch;
  for (int n = 2; n <= max_n; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      bool ok = true;
      for_each_syt(lam, [&](const StandardTableau& t) {
        // transpose the filling
        const Partition conj = lam.conjugate();
        std::vector<std::vector<int>> cols(
            static_cast<size_t>(conj.rows()));
        for (int j = 1; j <= conj.rows(); ++j)
          cols[static_cast<size_t>(j) - 1].resize(
              static_cast<size_t>(conj.row_length(j)));
        for (int i = 1; i <= lam.rows(); ++i) {
          for (int j = 1; j <= lam.row_length(i); ++j)
            cols[static_cast<size_t>(j) - 1][static_cast<size_t>(i) - 1] =
                t.rows()[static_cast<size_t>(i) - 1]
                        [static_cast<size_t>(j) - 1];
        }
        const StandardTableau transposed(conj, std::move(cols));
        std::vector<char> is_descent_orig(static_cast<size_t>(n), 0);
        for (int i : t.descent_set())
          is_descent_orig[static_cast<size_t>(i)] = 1;
        for (int i = 1; i < n; ++i) {
          const bool in_transposed =
              detail::is_descent(transposed.row_assignment(), i);
          if (in_transposed == static_cast<bool>(
                                   is_descent_orig[static_cast<size_t>(i)])) {
            ok = false;
            return false;
          }
        }
        return true;
      });
      if (!ok)
        return finish("conjugate tableau complements the descent set", false,
                      "complement fails at " + shape_tag(lam), watch);
    }
  }
  return finish("conjugate tableau complements the descent set", true,
                "n <= " + std::to_string(max_n), watch);
}

CheckResult sampler_uniformity(const std::vector<Partition>& shapes,
                               long long samples_per_tableau,
                               std::uint64_t seed) {
  Stopwatch watch;
  std::ostringstream detail;
  for (const Partition& lam : shapes) {
    // index the tableaux of the shape by stream order
    std::map<std::vector<int>, size_t> bin_of;
    for_each_syt_rows(lam, [&](const std::vector<int>& row_of) {
      const size_t next = bin_of.size();
      bin_of.emplace(row_of, next);
      return true;
    });
    const size_t bins = bin_of.size();
    if (bins <= 1) continue;
    if (bins - 1 > 30)
      return finish("sampler chi-square uniformity", false,
                    "no quantile pinned for " + std::to_string(bins - 1) +
                        " degrees of freedom",
                    watch);

    const long long count =
        samples_per_tableau * static_cast<long long>(bins);
    std::vector<long long> observed(bins, 0);
    RandomSource base(seed, 0);
    for (long long idx = 0; idx < count; ++idx) {
      RandomSource rng = base.substream(static_cast<std::uint64_t>(idx));
      const StandardTableau t = sample_syt(lam, rng);
      ++observed[bin_of.at(t.row_assignment())];
    }
    const double expected =
        static_cast<double>(count) / static_cast<double>(bins);
    double chi2 = 0;
    for (long long obs : observed) {
      const double d = static_cast<double>(obs) - expected;
      chi2 += d * d / expected;
    }
    const double quantile = kChi2Q999[bins - 2];
    detail << shape_tag(lam) << " chi2=" << chi2 << " q=" << quantile << "; ";
    if (chi2 >= quantile)
      return finish("sampler chi-square uniformity", false,
                    shape_tag(lam) + " chi2=" + std::to_string(chi2) +
                        " over the 99.9% quantile " + std::to_string(quantile),
                    watch);
  }
  return finish("sampler chi-square uniformity", true, detail.str(), watch);
}

CheckResult sampler_determinism(const Partition& shape, long long count,
                                std::uint64_t seed) {
  Stopwatch watch;
  const RandomSource base(seed, 0);
  const DescentFunction f = DescentFunction::maj();
  const auto first = sample_statistics(shape, f, count, base, 1);
  const auto second = sample_statistics(shape, f, count, base, 1);
  const auto striped = sample_statistics(shape, f, count, base, 4);
  if (first != second)
    return finish("sampler determinism", false,
                  "two runs with one seed differ", watch);
  if (first != striped)
    return finish("sampler determinism", false,
                  "worker split changed the sample sequence", watch);
  return finish("sampler determinism", true,
                std::to_string(count) + " samples of " + shape_tag(shape),
                watch);
}

CheckResult sampler_validity(int shapes, long long samples_each,
                             std::uint64_t seed) {
  Stopwatch watch;
  RandomSource shape_rng(seed, 1);
  for (int s = 0; s < shapes; ++s) {
    // a random partition of a random n, by greedy random parts
    const int n = 2 + static_cast<int>(shape_rng.below(39));
    std::vector<int> parts;
    int remaining = n;
    int largest = n;
    while (remaining > 0) {
      const int part = 1 + static_cast<int>(shape_rng.below(
                               static_cast<std::uint64_t>(
                                   std::min(remaining, largest))));
      parts.push_back(part);
      largest = part;
      remaining -= part;
    }
    const Partition lam(parts);
    RandomSource base(seed, 2 + static_cast<std::uint64_t>(s));
    for (long long i = 0; i < samples_each; ++i) {
      RandomSource rng = base.substream(static_cast<std::uint64_t>(i));
      try {
        sample_syt(lam, rng);  // construction validates
      } catch (const std::exception& e) {
        return finish("sampled tableaux are valid", false,
                      shape_tag(lam) + ": " + e.what(), watch);
      }
    }
  }
  return finish("sampled tableaux are valid", true,
                std::to_string(shapes) + " random shapes x " +
                    std::to_string(samples_each) + " samples",
                watch);
}

CheckResult sampler_mean_vs_closed_form(const Partition& shape,
                                        long long count, std::uint64_t seed) {
  Stopwatch watch;
  for (const DescentFunction& f :
       {DescentFunction::des(), DescentFunction::maj()}) {
    const RandomSource base(seed, 0);
    const auto values = sample_statistics_real(shape, f, count, base, 4);
    double sum = 0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(count);
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(count - 1));
    const double exact = to_double(expected_descent_statistic(shape, f));
    const double tolerance = 4.0 * sd / std::sqrt(static_cast<double>(count));
    if (std::fabs(mean - exact) > tolerance)
      return finish("sampler mean matches the closed form", false,
                    f.label() + " on " + shape_tag(shape) + ": |" +
                        std::to_string(mean) + " - " + std::to_string(exact) +
                        "| > " + std::to_string(tolerance),
                    watch);
  }
  return finish("sampler mean matches the closed form", true,
                shape_tag(shape) + ", " + std::to_string(count) +
                    " samples, des and maj",
                watch);
}

CheckResult ratio_decay(const std::vector<int>& sizes, double constant) {
  Stopwatch watch;
  std::ostringstream detail;
  double previous = 0;
  bool first = true;
  for (int n : sizes) {
    const Partition lam({(n + 1) / 2, n / 2});
    const double e = to_double(expected_maj(lam));
    const double v = to_double(variance_maj(lam));
    const double ratio = v / (e * e);
    detail << "n=" << n << " ratio=" << ratio << " n*ratio=" << n * ratio
           << "; ";
    if (!first && ratio >= previous)
      return finish("variance/mean^2 decays on two-row shapes", false,
                    "ratio not decreasing at n=" + std::to_string(n), watch);
    if (n * ratio > constant)
      return finish("variance/mean^2 decays on two-row shapes", false,
                    "n*ratio exceeds " + std::to_string(constant) + " at n=" +
                        std::to_string(n),
                    watch);
    previous = ratio;
    first = false;
  }
  return finish("variance/mean^2 decays on two-row shapes", true,
                detail.str(), watch);
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const int n = opts.max_n;
  std::vector<CheckResult> results;
  results.push_back(partition_identities(std::min(n, 14)));
  results.push_back(dominance_order_properties(std::min(n, 9)));
  results.push_back(hook_count_agreement(std::min(n, 10)));
  results.push_back(genfun_vs_bruteforce(std::min(n, 10)));
  results.push_back(genfun_at_one_vs_count(std::min(n, 24)));
  results.push_back(genfun_shape_properties(std::min(n, 9)));
  results.push_back(conjugate_complements_descents(std::min(n, 9)));
  results.push_back(maj_moments_vs_enumeration(std::min(n, 9)));
  results.push_back(maj_moments_vs_genfun(std::min(n, 14)));
  results.push_back(expected_statistic_vs_enumeration(std::min(n, 9)));
  results.push_back(variance_statistic_vs_enumeration(std::min(n, 9)));
  results.push_back(weight_sums_position_independent(std::min(n, 9)));
  results.push_back(descent_weight_char_vs_mn(std::min(n, 8)));
  results.push_back(frobenius_ratios_vs_mn(std::min(n, 12)));
  results.push_back(probabilities_vs_frequencies(std::min(n, 9)));
  results.push_back(normalized_character_bound(std::min(n, 12)));
  if (opts.include_sampling) {
    std::vector<Partition> shapes;
    for (int m = 2; m <= std::min(n, 6); ++m) {
      const auto all = all_partitions(m);
      shapes.insert(shapes.end(), all.begin(), all.end());
    }
    results.push_back(sampler_uniformity(shapes, 200, opts.seed));
    results.push_back(sampler_determinism(Partition({3, 2}), 500, opts.seed));
    results.push_back(sampler_validity(20, 1000, opts.seed));
  }
  return results;
}

}  // namespace sytkit::selftest
