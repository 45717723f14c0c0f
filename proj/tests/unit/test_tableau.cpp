#include <doctest.h>

#include "sytkit/errors.hpp"
#include "sytkit/tableau.hpp"

using namespace sytkit;

namespace {

const std::vector<std::vector<int>> kExampleRows = {
    {1, 3, 4, 6, 9}, {2, 7, 8, 12}, {5, 11}, {10}};

}  // namespace

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(StandardTableau::from_rows(kExampleRows));
  // repeated entry
  CHECK_THROWS_AS(StandardTableau::from_rows({{1, 2}, {2}}), domain_error);
  // row not increasing
  CHECK_THROWS_AS(StandardTableau::from_rows({{2, 1}, {3}}), domain_error);
  // column not increasing
  CHECK_THROWS_AS(StandardTableau::from_rows({{1, 4}, {2, 3}}), domain_error);
  CHECK_THROWS_AS(StandardTableau::from_rows({{2, 3}, {1}}), domain_error);
  // rows must form a partition
  CHECK_THROWS_AS(StandardTableau::from_rows({{1}, {2, 3}}), domain_error);
  // shape mismatch
  CHECK_THROWS_AS(StandardTableau(Partition({3, 1}), {{1, 2}, {3, 4}}),
                  domain_error);
}

TEST_CASE("descent set, des and maj") {
  const auto t = StandardTableau::from_rows(kExampleRows);
  CHECK(t.shape() == Partition({5, 4, 2, 1}));
  CHECK(t.descent_set() == std::vector<int>{1, 4, 6, 9});
  CHECK(t.des() == 4);
  CHECK(t.maj() == 20);

  const auto row = StandardTableau::from_rows({{1, 2, 3, 4, 5}});
  CHECK(row.descent_set().empty());
  CHECK(row.des() == 0);
  CHECK(row.maj() == 0);

  const auto column = StandardTableau::from_rows({{1}, {2}, {3}, {4}});
  CHECK(column.descent_set() == std::vector<int>{1, 2, 3});

  const auto square = StandardTableau::from_rows({{1, 3}, {2, 4}});
  CHECK(square.descent_set() == std::vector<int>{1, 3});
  CHECK(square.des() == 2);
  CHECK(square.maj() == 4);
}

TEST_CASE("descent statistics in both modes") {
  const auto square = StandardTableau::from_rows({{1, 3}, {2, 4}});
  CHECK(descent_statistic(square, DescentFunction::des()) == 2);
  CHECK(descent_statistic(square, DescentFunction::maj()) == 4);
  CHECK(descent_statistic(square, DescentFunction::power(2.0)) == 10);
  const auto table = DescentFunction::table(
      {Rational(1, 2), Rational(3), Rational(-1, 4)});
  CHECK(descent_statistic(square, table) == Rational(1, 4));
  CHECK_THROWS_AS(descent_statistic(square, DescentFunction::power(1.5)),
                  domain_error);
  CHECK(descent_statistic_real(square, DescentFunction::power(1.5)) ==
        doctest::Approx(1.0 + std::pow(3.0, 1.5)));
  // table too short for the positions of this shape
  const auto shortae = DescentFunction::table({Rational(1)});
  CHECK_THROWS_AS(descent_statistic(square, shortae), domain_error);
}

TEST_CASE("descent function parsing") {
  CHECK(DescentFunction::parse("des").label() == "des");
  CHECK(DescentFunction::parse("maj").label() == "maj");
  CHECK(DescentFunction::parse("power:2").exact());
  CHECK_FALSE(DescentFunction::parse("power:1.5").exact());
  CHECK_THROWS_AS(DescentFunction::parse("power:0"), domain_error);
  CHECK_THROWS_AS(DescentFunction::parse("power:x"), domain_error);
  CHECK_THROWS_AS(DescentFunction::parse("bogus"), domain_error);
}

TEST_CASE("growth witnesses") {
  CHECK_THROWS_AS(GrowthWitness(2.0, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(GrowthWitness(0.5, 2.0, 0.0), domain_error);
  CHECK(DescentFunction::maj().growth()->holds_on(DescentFunction::maj(), 100));
  const auto narrow = GrowthWitness(0.9, 1.1, 2.0);
  CHECK_FALSE(narrow.holds_on(DescentFunction::maj(), 10));
}

TEST_CASE("count via hooks") {
  CHECK(count_syt(Partition({2, 1})) == 2);
  CHECK(count_syt(Partition({3, 2})) == 5);
  CHECK(count_syt(Partition({1, 1, 1, 1, 1})) == 1);
  CHECK(count_syt(Partition({4, 3, 2, 1})) == 768);
  CHECK(count_syt(Partition()) == 1);
}

TEST_CASE("enumeration stream order is pinned") {
  const auto two_one = enumerate_syt(Partition({2, 1}));
  REQUIRE(two_one.size() == 2);
  CHECK(two_one[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(two_one[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});

  const auto square = enumerate_syt(Partition({2, 2}));
  REQUIRE(square.size() == 2);
  CHECK(square[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(square[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  CHECK(enumerate_syt(Partition({4})).size() == 1);
  CHECK(enumerate_syt(Partition({1, 1, 1})).size() == 1);
}

TEST_CASE("enumeration respects the cap") {
  EnumerationOptions opts;
  opts.cap = 4;
  CHECK_THROWS_AS(enumerate_syt(Partition({3, 2}), opts), cap_exceeded);
  CHECK_NOTHROW(enumerate_syt(Partition({2, 2}), opts));
}

TEST_CASE("enumeration count equals the hook count for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      Integer seen = 0;
      for_each_syt_rows(lam, [&](const std::vector<int>&) {
        ++seen;
        return true;
      });
      CHECK(seen == count_syt(lam));
    }
  }
}

TEST_CASE("early stop from the visitor") {
  int visits = 0;
  for_each_syt(Partition({3, 2}), [&](const StandardTableau&) {
    return ++visits < 2;
  });
  CHECK(visits == 2);
}

TEST_CASE("text form") {
  const auto t = StandardTableau::from_rows({{1, 3}, {2, 4}});
  CHECK(t.to_text() == "1 3\n2 4\n");
}
