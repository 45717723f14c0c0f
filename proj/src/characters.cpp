#include "sytkit/characters.hpp"

#include <algorithm>
#include <map>

#include "sytkit/errors.hpp"

namespace sytkit {

namespace {

// First-column displacements ("beta numbers") of a shape padded to k rows:
// b_i = lam_i + (k - i), strictly decreasing. Removing a border strip of
// length L is moving one b from b to b-L when b-L is unoccupied; the strip
// height is the number of occupied values passed on the way down.
std::vector<long long> beta_numbers(const std::vector<int>& shape) {
  const size_t k = shape.size();
  std::vector<long long> beta(k);
  for (size_t i = 0; i < k; ++i)
    beta[i] = static_cast<long long>(shape[i]) +
              static_cast<long long>(k - 1 - i);
  return beta;
}

std::vector<int> shape_from_beta(std::vector<long long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const size_t k = beta.size();
  std::vector<int> shape;
  shape.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    const long long part = beta[i] - static_cast<long long>(k - 1 - i);
    if (part > 0) shape.push_back(static_cast<int>(part));
  }
  return shape;
}

using MemoKey = std::pair<std::vector<int>, size_t>;

Integer mn_recurse(const std::vector<int>& shape, size_t idx,
                   const std::vector<int>& mu,
                   std::map<MemoKey, Integer>& memo) {
  if (shape.empty()) return 1;
  // Once only singleton parts remain the recursion is just counting
  // tableaux of what is left.
  if (mu[idx] == 1) return count_syt(Partition(shape));

  const MemoKey key{shape, idx};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const long long strip = mu[idx];
  const std::vector<long long> beta = beta_numbers(shape);
  Integer acc = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const long long target = beta[i] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (size_t j = i + 1; j < beta.size(); ++j) {
      if (beta[j] > target) ++height;
    }
    std::vector<long long> next = beta;
    next[i] = target;
    const Integer sub = mn_recurse(shape_from_beta(std::move(next)), idx + 1,
                                   mu, memo);
    acc += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = acc;
  return acc;
}

}  // namespace

Integer mn_character(const Partition& lam, const CycleType& mu) {
  if (lam.n() != mu.n())
    throw domain_error("character of shape " + lam.to_string() +
                       " at class " + mu.to_string() + ": size mismatch");
  if (lam.n() == 0) return 1;
  std::map<MemoKey, Integer> memo;
  return mn_recurse(lam.parts(), 0, mu.parts(), memo);
}

std::vector<long long> block_boundaries(const CycleType& mu) {
  std::vector<long long> bounds;
  bounds.reserve(mu.parts().size());
  long long acc = 0;
  for (int part : mu.parts()) {
    acc += part;
    bounds.push_back(acc);
  }
  return bounds;
}

int descent_weight_rows(const std::vector<int>& row_of, long long n,
                        const CycleType& mu) {
  std::vector<char> boundary(static_cast<size_t>(n) + 2, 0);
  for (long long b : block_boundaries(mu)) {
    if (b <= n + 1) boundary[static_cast<size_t>(b)] = 1;
  }
  int weight = 1;
  for (long long i = 1; i < n; ++i) {
    if (boundary[static_cast<size_t>(i)]) continue;
    if (detail::is_descent(row_of, i)) {
      weight = -weight;
    } else if (i + 1 < n && detail::is_descent(row_of, i + 1) &&
               !boundary[static_cast<size_t>(i) + 1]) {
      return 0;
    }
  }
  return weight;
}

int descent_weight(const StandardTableau& t, const CycleType& mu) {
  if (t.n() != mu.n())
    throw domain_error("descent weight: tableau and class sizes differ");
  return descent_weight_rows(t.row_assignment(), t.n(), mu);
}

Integer character_via_descent_weights(const Partition& lam,
                                      const CycleType& mu,
                                      const EnumerationOptions& opts) {
  if (lam.n() != mu.n())
    throw domain_error("character of shape " + lam.to_string() +
                       " at class " + mu.to_string() + ": size mismatch");
  const long long n = lam.n();
  Integer acc = 0;
  for_each_syt_rows(
      lam,
      [&](const std::vector<int>& row_of) {
        acc += descent_weight_rows(row_of, n, mu);
        return true;
      },
      opts);
  return acc;
}

Integer weight_sum_transposition(const Partition& lam, int i,
                                 const EnumerationOptions& opts) {
  const long long n = lam.n();
  if (!(1 <= i && i < n))
    throw domain_error("transposition weight position out of range");
  Integer acc = 0;
  for_each_syt_rows(
      lam,
      [&](const std::vector<int>& row_of) {
        acc += detail::is_descent(row_of, i) ? -1 : 1;
        return true;
      },
      opts);
  return acc;
}

Integer weight_sum_three_cycle(const Partition& lam, int i,
                               const EnumerationOptions& opts) {
  const long long n = lam.n();
  if (!(1 <= i && i < n - 1))
    throw domain_error("three-cycle weight position out of range");
  Integer acc = 0;
  for_each_syt_rows(
      lam,
      [&](const std::vector<int>& row_of) {
        const bool a = detail::is_descent(row_of, i);
        const bool b = detail::is_descent(row_of, i + 1);
        if (a == b)
          acc += 1;
        else if (a)
          acc -= 1;
        // a descent starting only at i+1 contributes zero
        return true;
      },
      opts);
  return acc;
}

Integer weight_sum_double_transposition(const Partition& lam, int i, int j,
                                        const EnumerationOptions& opts) {
  const long long n = lam.n();
  if (!(1 <= i && i < j - 1 && j - 1 < n - 1))
    throw domain_error("double-transposition weight positions out of range");
  Integer acc = 0;
  for_each_syt_rows(
      lam,
      [&](const std::vector<int>& row_of) {
        const bool a = detail::is_descent(row_of, i);
        const bool b = detail::is_descent(row_of, j);
        acc += (a == b) ? 1 : -1;
        return true;
      },
      opts);
  return acc;
}

Rational frobenius_r2(const Partition& lam) {
  if (lam.n() < 2) throw domain_error("transposition ratio needs n >= 2");
  Integer numerator = 0;
  for (int part : lam.parts()) numerator += choose2(part);
  const Partition conj = lam.conjugate();
  for (int part : conj.parts()) numerator -= choose2(part);
  return Rational(numerator, choose2(lam.n()));
}

Rational frobenius_r22(const Partition& lam) {
  const long long n = lam.n();
  if (n < 4) throw domain_error("double-transposition ratio needs n >= 4");
  const Integer cs = content_sum(lam);
  const Integer scs = squared_content_sum(lam);
  // n! / (2! 2! (n-4)!)
  const Integer multinomial = Integer(n) * (n - 1) * (n - 2) * (n - 3) / 4;
  return Rational(Integer(4), Integer(n - 2) * (n - 3)) +
         Rational(cs * cs - 3 * scs, multinomial);
}

CharRatios char_ratios(const Partition& lam) {
  const long long n = lam.n();
  if (n < 4) throw domain_error("character ratios need n >= 4");
  std::vector<int> three_class{3};
  for (long long i = 0; i < n - 3; ++i) three_class.push_back(1);
  const Rational r3 =
      Rational(mn_character(lam, CycleType(std::move(three_class))),
               count_syt(lam));
  return CharRatios{frobenius_r2(lam), r3, frobenius_r22(lam)};
}

JointDescentProbabilities joint_descent_probabilities(const Partition& lam) {
  const CharRatios r = char_ratios(lam);
  const Rational p2 = (1 - r.r2) / 2;
  return JointDescentProbabilities{
      p2,
      p2 - (1 - r.r3) / 3,
      p2 - (1 - r.r22) / 4,
  };
}

}  // namespace sytkit
