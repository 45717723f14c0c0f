#include <doctest.h>

#include <algorithm>

#include "sytkit/errors.hpp"
#include "sytkit/partition.hpp"

using namespace sytkit;

namespace {

// Independent oracle: hook length as one plus the number of cells strictly
// right in the row plus the number strictly below in the column.
long long hook_by_counting(const Partition& lam, Cell c) {
  long long arm = 0, leg = 0;
  for (int j = c.col + 1; j <= lam.row_length(c.row); ++j) ++arm;
  for (int i = c.row + 1; i <= lam.rows(); ++i) {
    if (lam.row_length(i) >= c.col) ++leg;
  }
  return arm + leg + 1;
}

}  // namespace

TEST_CASE("partition construction validates") {
  CHECK(Partition({4, 4, 2, 1}).n() == 11);
  CHECK(Partition().n() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), domain_error);
  CHECK_THROWS_AS(Partition({3, 0}), domain_error);
  CHECK_THROWS_AS(Partition({-1}), domain_error);
}

TEST_CASE("partition parsing is strict") {
  CHECK(Partition::parse("4,4,2,1").parts() == std::vector<int>{4, 4, 2, 1});
  CHECK(Partition::parse("7").parts() == std::vector<int>{7});
  CHECK_THROWS_AS(Partition::parse("1,2"), domain_error);  // not sorted
  CHECK_THROWS_AS(Partition::parse("3,,1"), domain_error);
  CHECK_THROWS_AS(Partition::parse("3, 1"), domain_error);
  CHECK_THROWS_AS(Partition::parse(""), domain_error);
  CHECK_THROWS_AS(Partition::parse("a"), domain_error);
}

TEST_CASE("conjugate") {
  CHECK(Partition({4, 4, 2, 1}).conjugate() == Partition({4, 3, 2, 2}));
  CHECK(Partition({5, 4, 2, 1}).conjugate() == Partition({4, 3, 2, 2, 1}));
  CHECK(Partition({6}).conjugate() == Partition({1, 1, 1, 1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("conjugation is an involution for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      CHECK(lam.conjugate().conjugate() == lam);
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({4, 4, 2, 1}), Partition({4, 3, 2, 2})));
  CHECK(dominates(Partition({3, 2}), Partition({3, 2})));
  // incomparable pair of partitions of 6
  CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({3})), domain_error);
}

TEST_CASE("hook lengths") {
  CHECK(hook_length(Partition({2, 2}), Cell{1, 1}) == 3);
  CHECK(hook_length(Partition({1}), Cell{1, 1}) == 1);
  std::vector<long long> hooks;
  for (const auto& row : hook_lengths(Partition({2, 1})))
    hooks.insert(hooks.end(), row.begin(), row.end());
  std::sort(hooks.begin(), hooks.end());
  CHECK(hooks == std::vector<long long>{1, 1, 3});
  CHECK_THROWS_AS(hook_length(Partition({2, 1}), Cell{2, 2}), domain_error);
  CHECK_THROWS_AS(hook_length(Partition({2, 1}), Cell{0, 1}), domain_error);
}

TEST_CASE("hook formula matches cell counting for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      for (int i = 1; i <= lam.rows(); ++i) {
        for (int j = 1; j <= lam.row_length(i); ++j) {
          CHECK(hook_length(lam, Cell{i, j}) ==
                hook_by_counting(lam, Cell{i, j}));
        }
      }
    }
  }
}

TEST_CASE("content sums") {
  CHECK(content_sum(Partition({2, 2})) == 0);
  CHECK(content_sum(Partition({6})) == 15);  // 0 + 1 + ... + 5
  // cell-by-cell: rows give 6, 2, -3, -3
  CHECK(content_sum(Partition({4, 4, 2, 1})) == 2);
  CHECK(squared_content_sum(Partition({2, 2})) == 2);
}

TEST_CASE("pair-count identity for n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      Integer diff = 0;
      for (int part : lam.parts()) diff += choose2(part);
      const Partition conj = lam.conjugate();
      for (int part : conj.parts()) diff -= choose2(part);
      CHECK(diff == content_sum(lam));
    }
  }
}

TEST_CASE("all_partitions counts match the partition numbers") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n)
    CHECK(all_partitions(n).size() == static_cast<size_t>(expected[n]));
}
