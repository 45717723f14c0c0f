#include <doctest.h>

#include "sytkit/errors.hpp"
#include "sytkit/qpolynomial.hpp"
#include "sytkit/tableau.hpp"

using namespace sytkit;

namespace {

QPolynomial poly(std::vector<long long> coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return QPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_integer(1) == QPolynomial::one());
  CHECK(q_integer(2) == poly({1, 1}));
  CHECK(q_integer(4) == poly({1, 1, 1, 1}));
  CHECK_THROWS_AS(q_integer(0), domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(q_integer(2) * q_integer(2) == poly({1, 2, 1}));
  CHECK(poly({1, 1}) + poly({0, -1}) == poly({1}));
  CHECK((QPolynomial() * q_integer(3)).is_zero());
  CHECK(QPolynomial::monomial(3).degree() == 3);
  CHECK(poly({5, 0, 0}).degree() == 0);  // trailing zeros trimmed
}

TEST_CASE("exact division") {
  CHECK(exact_divide(q_integer(4), q_integer(2)) == poly({1, 0, 1}));
  CHECK(exact_divide(QPolynomial(), q_integer(3)).is_zero());
  CHECK_THROWS_AS(exact_divide(q_integer(2), q_integer(3)),
                  non_exact_division);
  CHECK_THROWS_AS(exact_divide(poly({1, 1, 1}), poly({1, 1})),
                  non_exact_division);
  CHECK_THROWS_AS(exact_divide(q_integer(2), QPolynomial()), domain_error);
}

TEST_CASE("pretty printing") {
  CHECK(QPolynomial().pretty() == "0");
  CHECK(poly({1, 0, 1, 2}).pretty() == "1 + q^2 + 2q^3");
  CHECK(poly({0, 1, 1}).pretty() == "q + q^2");
  CHECK(poly({-1, 3}).pretty() == "-1 + 3q");
}

TEST_CASE("maj generating functions of small shapes") {
  CHECK(maj_generating_function(Partition({2, 1})) == poly({0, 1, 1}));
  CHECK(maj_generating_function(Partition({2, 2})) == poly({0, 0, 1, 0, 1}));
  CHECK(maj_generating_function(Partition({5})) == QPolynomial::one());
  // single column: unique tableau with every position a descent
  CHECK(maj_generating_function(Partition({1, 1, 1})) ==
        QPolynomial::monomial(3));
}

TEST_CASE("generating function matches enumeration for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      std::vector<Integer> brute(static_cast<size_t>(n * (n - 1) / 2) + 1);
      for_each_syt(lam, [&](const StandardTableau& t) {
        brute[static_cast<size_t>(t.maj())] += 1;
        return true;
      });
      CHECK(maj_generating_function(lam) == QPolynomial(std::move(brute)));
    }
  }
}

TEST_CASE("value at q=1 equals the tableau count for n <= 16") {
  for (int n = 1; n <= 16; ++n) {
    for (const Partition& lam : all_partitions(n)) {
      CHECK(maj_generating_function(lam).eval_one() == count_syt(lam));
    }
  }
}

TEST_CASE("moments from the generating function") {
  const auto square = moments_from_genfun(Partition({2, 2}));
  CHECK(square.count == 2);
  CHECK(square.expectation == 3);
  CHECK(square.variance == 1);

  const auto hook = moments_from_genfun(Partition({2, 1}));
  CHECK(hook.count == 2);
  CHECK(hook.expectation == Rational(3, 2));
  CHECK(hook.variance == Rational(1, 4));

  const auto row = moments_from_genfun(Partition({6}));
  CHECK(row.count == 1);
  CHECK(row.expectation == 0);
  CHECK(row.variance == 0);
}
