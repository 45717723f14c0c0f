#include <doctest.h>

#include <cmath>
#include <map>

#include "sytkit/errors.hpp"
#include "sytkit/moments.hpp"
#include "sytkit/sampling.hpp"

using namespace sytkit;

TEST_CASE("random source determinism and independence") {
  RandomSource a(42, 0), b(42, 0), c(42, 1);
  bool all_equal = true, any_equal = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next(), y = b.next(), z = c.next();
    all_equal = all_equal && (x == y);
    any_equal = any_equal || (x == z);
  }
  CHECK(all_equal);
  CHECK_FALSE(any_equal);

  RandomSource base(7, 3);
  auto s1 = base.substream(5);
  auto s2 = base.substream(5);
  auto s3 = base.substream(6);
  CHECK(s1.next() == s2.next());
  CHECK(s1.next() != s3.next());
}

TEST_CASE("bounded draws stay in range") {
  RandomSource rng(1, 0);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull}) {
    for (int i = 0; i < 200; ++i) CHECK(rng.below(bound) < bound);
  }
}

TEST_CASE("degenerate shapes sample their unique tableau") {
  RandomSource rng(9, 0);
  const auto row = sample_syt(Partition({5}), rng);
  CHECK(row.rows() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
  const auto column = sample_syt(Partition({1, 1, 1}), rng);
  CHECK(column.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("sampled tableaux validate across random shapes") {
  RandomSource shape_rng(2024, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(shape_rng.below(25));
    std::vector<int> parts;
    int remaining = n, largest = n;
    while (remaining > 0) {
      const int part = 1 + static_cast<int>(shape_rng.below(
                               static_cast<std::uint64_t>(
                                   std::min(remaining, largest))));
      parts.push_back(part);
      largest = part;
      remaining -= part;
    }
    const Partition lam(parts);
    RandomSource rng(2025, static_cast<std::uint64_t>(trial));
    for (int i = 0; i < 200; ++i) CHECK_NOTHROW(sample_syt(lam, rng));
  }
}

TEST_CASE("frequencies are near-uniform on a five-tableau shape") {
  const Partition lam({3, 2});
  std::map<std::vector<std::vector<int>>, long long> seen;
  const long long count = 100000;
  const RandomSource base(42, 0);
  for (long long i = 0; i < count; ++i) {
    RandomSource rng = base.substream(static_cast<std::uint64_t>(i));
    seen[sample_syt(lam, rng).rows()] += 1;
  }
  REQUIRE(seen.size() == 5);
  for (const auto& [rows, hits] : seen) {
    const double freq = static_cast<double>(hits) / count;
    // 0.2 within four standard errors
    CHECK(freq == doctest::Approx(0.2).epsilon(0.05));
    CHECK(std::fabs(freq - 0.2) <= 0.01);
  }
}

TEST_CASE("statistics sequences are reproducible and worker-invariant") {
  const Partition lam({4, 3, 1});
  const RandomSource base(11, 5);
  const auto f = DescentFunction::maj();
  const auto one = sample_statistics(lam, f, 400, base, 1);
  const auto two = sample_statistics(lam, f, 400, base, 1);
  const auto four = sample_statistics(lam, f, 400, base, 4);
  CHECK(one == two);
  CHECK(one == four);
  // a different stream gives a different sequence
  const RandomSource other(11, 6);
  CHECK(one != sample_statistics(lam, f, 400, other, 1));
}

TEST_CASE("statistic values on degenerate shapes") {
  const RandomSource base(3, 0);
  for (const auto& v :
       sample_statistics(Partition({6}), DescentFunction::maj(), 50, base, 1))
    CHECK(v == 0);
  // both tableaux of the hook have exactly one descent
  for (const auto& v :
       sample_statistics(Partition({2, 1}), DescentFunction::des(), 50, base, 1))
    CHECK(v == 1);
}

TEST_CASE("sample means track the closed forms") {
  const Partition lam({10, 8, 7, 5});
  const long long count = 100000;
  const RandomSource base(42, 0);
  for (const auto& f : {DescentFunction::des(), DescentFunction::maj()}) {
    const auto values = sample_statistics_real(lam, f, count, base, 4);
    double sum = 0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(count);
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(count - 1));
    const double exact = to_double(expected_descent_statistic(lam, f));
    CHECK(std::fabs(mean - exact) <=
          4.0 * sd / std::sqrt(static_cast<double>(count)));
  }
}

TEST_CASE("exact sampling rejects non-exact weights") {
  const RandomSource base(1, 0);
  CHECK_THROWS_AS(sample_statistics(Partition({3, 2}),
                                    DescentFunction::power(1.5), 10, base, 1),
                  domain_error);
  CHECK_NOTHROW(sample_statistics_real(Partition({3, 2}),
                                       DescentFunction::power(1.5), 10, base,
                                       1));
}
