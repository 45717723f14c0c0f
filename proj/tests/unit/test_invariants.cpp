// Module invariants at their documented sweep bounds, through the same
// dual-route battery the verify subcommand runs.

#include <doctest.h>

#include "sytkit/moments.hpp"
#include "sytkit/selftest.hpp"

using namespace sytkit;
namespace st = sytkit::selftest;

namespace {

void expect_pass(const st::CheckResult& r) {
  INFO(r.name, ": ", r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("partition identities up to n = 12") {
  expect_pass(st::partition_identities(12));
}

TEST_CASE("dominance is a partial order with monotone content, n <= 8") {
  expect_pass(st::dominance_order_properties(8));
}

TEST_CASE("conjugating a tableau complements its descent set, n <= 8") {
  expect_pass(st::conjugate_complements_descents(8));
}

TEST_CASE("normalized character values stay within [-1, 1], n <= 10") {
  expect_pass(st::normalized_character_bound(10));
}

TEST_CASE("statistic kinds agree with direct counters, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      for_each_syt(lam, [&](const StandardTableau& t) {
        CHECK(descent_statistic(t, DescentFunction::des()) == t.des());
        CHECK(descent_statistic(t, DescentFunction::maj()) == t.maj());
        const auto ds = t.descent_set();
        for (int i : ds) CHECK((1 <= i && i < n));
        return true;
      });
    }
  }
}

TEST_CASE("maj specialization matches dedicated closed forms, 4 <= n <= 12") {
  for (int n = 4; n <= 12; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      CHECK(expected_descent_statistic(lam, DescentFunction::maj()) ==
            expected_maj(lam));
      CHECK(variance_descent_statistic(lam, DescentFunction::maj()) ==
            variance_maj(lam));
    }
  }
}

TEST_CASE("degenerate shapes") {
  const auto stats = {DescentFunction::des(), DescentFunction::maj(),
                      DescentFunction::power(2.0)};
  for (int n : {1, 2, 5, 9}) {
    const Partition row({n});
    std::vector<int> ones(static_cast<size_t>(n), 1);
    const Partition column(ones);
    for (const auto& f : stats) {
      CHECK(expected_descent_statistic(row, f) == 0);
      CHECK(variance_descent_statistic(row, f) == 0);
      CHECK(variance_descent_statistic(column, f) == 0);
      Rational total = 0;
      for (int i = 1; i < n; ++i) total += f.exact_at(i);
      CHECK(expected_descent_statistic(column, f) == total);
    }
  }
}

TEST_CASE("sampler chi-square uniformity over every shape of n <= 6") {
  std::vector<Partition> shapes;
  for (int n = 2; n <= 6; ++n) {
    const auto all = all_partitions(n);
    shapes.insert(shapes.end(), all.begin(), all.end());
  }
  expect_pass(st::sampler_uniformity(shapes, 200, 42));
}

TEST_CASE("sampler determinism and validity") {
  expect_pass(st::sampler_determinism(Partition({3, 2}), 500, 42));
  expect_pass(st::sampler_validity(20, 1000, 42));
}

TEST_CASE("omega exponent list has one entry per tableau") {
  for (const auto& parts : {std::vector<int>{2, 2}, std::vector<int>{3, 2},
                            std::vector<int>{3, 1, 1}}) {
    const Partition lam(parts);
    const auto report = hecke_exponents(lam, true);
    CHECK(Integer(report.omega_exponents.size()) == count_syt(lam));
  }
}
