#include "sytkit/sampling.hpp"

#include <limits>
#include <thread>

#include "sytkit/errors.hpp"

namespace sytkit {

StandardTableau sample_syt(const Partition& lam, RandomSource& rng) {
  const long long n = lam.n();
  if (n > std::numeric_limits<int>::max())
    throw domain_error("shape too large to sample explicitly");

  const int k = lam.rows();
  std::vector<int> row_len(lam.parts());
  std::vector<int> col_len(lam.conjugate().parts());
  std::vector<std::vector<int>> rows(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    rows[static_cast<size_t>(i)].assign(
        static_cast<size_t>(row_len[static_cast<size_t>(i)]), 0);

  long long cells = n;
  for (long long m = n; m >= 1; --m) {
    // start at a uniform cell of the remaining diagram
    long long r = static_cast<long long>(
        rng.below(static_cast<std::uint64_t>(cells)));
    int i = 1;
    while (r >= row_len[static_cast<size_t>(i) - 1]) {
      r -= row_len[static_cast<size_t>(i) - 1];
      ++i;
    }
    int j = static_cast<int>(r) + 1;

    // hook walk: jump to a uniform *other* cell of the current hook until
    // both arm and leg are empty
    for (;;) {
      const int arm = row_len[static_cast<size_t>(i) - 1] - j;
      const int leg = col_len[static_cast<size_t>(j) - 1] - i;
      if (arm + leg == 0) break;
      const auto u = static_cast<int>(
          rng.below(static_cast<std::uint64_t>(arm + leg)));
      if (u < arm)
        j += 1 + u;
      else
        i += 1 + (u - arm);
    }

    rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
        static_cast<int>(m);
    --row_len[static_cast<size_t>(i) - 1];
    --col_len[static_cast<size_t>(j) - 1];
    --cells;
  }
  return StandardTableau(lam, std::move(rows));
}

namespace {

// Runs body(index) for 0..count-1, split into contiguous chunks across
// workers. Each index draws from its own substream, so the outcome does not
// depend on the split.
template <typename Body>
void for_each_sample(long long count, int workers, const Body& body) {
  if (count < 0) throw domain_error("sample count must be >= 1");
  workers = static_cast<int>(
      std::min<long long>(std::max(workers, 1), std::max<long long>(count, 1)));
  if (workers <= 1) {
    for (long long idx = 0; idx < count; ++idx) body(idx);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long begin = static_cast<long long>(w) * chunk;
    const long long end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (long long idx = begin; idx < end; ++idx) body(idx);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Rational> sample_statistics(const Partition& lam,
                                        const DescentFunction& f,
                                        long long count,
                                        const RandomSource& base,
                                        int workers) {
  if (count < 1) throw domain_error("sample count must be >= 1");
  if (!f.exact())
    throw domain_error(
        "exact sample statistics need an exact weight; use "
        "sample_statistics_real");
  std::vector<Rational> values(static_cast<size_t>(count));
  for_each_sample(count, workers, [&](long long idx) {
    RandomSource rng = base.substream(static_cast<std::uint64_t>(idx));
    const StandardTableau t = sample_syt(lam, rng);
    values[static_cast<size_t>(idx)] =
        detail::statistic_exact(t.row_assignment(), f);
  });
  return values;
}

std::vector<double> sample_statistics_real(const Partition& lam,
                                           const DescentFunction& f,
                                           long long count,
                                           const RandomSource& base,
                                           int workers) {
  if (count < 1) throw domain_error("sample count must be >= 1");
  std::vector<double> values(static_cast<size_t>(count));
  for_each_sample(count, workers, [&](long long idx) {
    RandomSource rng = base.substream(static_cast<std::uint64_t>(idx));
    const StandardTableau t = sample_syt(lam, rng);
    values[static_cast<size_t>(idx)] =
        detail::statistic_real(t.row_assignment(), f);
  });
  return values;
}

}  // namespace sytkit
