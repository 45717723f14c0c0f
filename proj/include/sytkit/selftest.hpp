#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sytkit/partition.hpp"

namespace sytkit::selftest {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0;
};

// Every check pits two independent routes against each other: closed forms
// against brute-force enumeration, descent weights against the rim-hook
// recursion, the sampler against exact distributions. Sweeps run over all
// partitions of every n up to the given bound.

CheckResult hook_count_agreement(int max_n);
CheckResult genfun_vs_bruteforce(int max_n);
CheckResult genfun_at_one_vs_count(int max_n);
CheckResult genfun_shape_properties(int max_n);
CheckResult maj_moments_vs_enumeration(int max_n);
CheckResult maj_moments_vs_genfun(int max_n);
CheckResult expected_statistic_vs_enumeration(int max_n);
CheckResult variance_statistic_vs_enumeration(int max_n);
CheckResult weight_sums_position_independent(int max_n);
CheckResult descent_weight_char_vs_mn(int max_n);
CheckResult frobenius_ratios_vs_mn(int max_n);
CheckResult probabilities_vs_frequencies(int max_n);
CheckResult normalized_character_bound(int max_n);
CheckResult partition_identities(int max_n);
CheckResult dominance_order_properties(int max_n);
CheckResult conjugate_complements_descents(int max_n);

CheckResult sampler_uniformity(const std::vector<Partition>& shapes,
                               long long samples_per_tableau,
                               std::uint64_t seed);
CheckResult sampler_determinism(const Partition& shape, long long count,
                                std::uint64_t seed);
CheckResult sampler_validity(int shapes, long long samples_each,
                             std::uint64_t seed);
CheckResult sampler_mean_vs_closed_form(const Partition& shape,
                                        long long count, std::uint64_t seed);

// Var/E^2 over two-row shapes of the given sizes must decrease, with
// n * Var/E^2 staying below the constant.
CheckResult ratio_decay(const std::vector<int>& sizes, double constant);

// The descent statistic table every f-sweep uses, frozen so reruns are
// byte-stable: des, maj, i^2 and a fixed rational table.
const std::vector<Rational>& pinned_rational_table();

struct VerifyOptions {
  int max_n = 7;
  std::uint64_t seed = 42;
  bool include_sampling = true;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace sytkit::selftest
