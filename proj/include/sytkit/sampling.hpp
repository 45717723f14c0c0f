#pragma once

#include <vector>

#include "sytkit/descent_function.hpp"
#include "sytkit/partition.hpp"
#include "sytkit/rng.hpp"
#include "sytkit/tableau.hpp"

namespace sytkit {

// Exactly uniform random standard tableau of the shape, by hook walks: for
// m = n down to 1, start at a uniformly random cell of the remaining diagram
// and repeatedly jump to a uniformly random *other* cell of the current
// cell's hook; the walk stops at a corner, which receives m and is deleted.
StandardTableau sample_syt(const Partition& lam, RandomSource& rng);

// Descent statistics of `count` independent uniform tableaux. Sample i draws
// from base.substream(i), so results are identical for any worker count and
// any fixed (seed, stream). Exact variant requires an exact f.
std::vector<Rational> sample_statistics(const Partition& lam,
                                        const DescentFunction& f,
                                        long long count,
                                        const RandomSource& base,
                                        int workers = 1);

std::vector<double> sample_statistics_real(const Partition& lam,
                                           const DescentFunction& f,
                                           long long count,
                                           const RandomSource& base,
                                           int workers = 1);

}  // namespace sytkit
