#pragma once

#include <vector>

#include "sytkit/numeric.hpp"
#include "sytkit/partition.hpp"
#include "sytkit/tableau.hpp"

namespace sytkit {

// Conjugacy classes of the symmetric group are cycle types, i.e. partitions.
using CycleType = Partition;

// Irreducible character value chi^lam at class mu via the Murnaghan-Nakayama
// rim-hook recursion. Serves as the independent oracle for every other
// character route here. Throws domain_error when |lam| != |mu|.
Integer mn_character(const Partition& lam, const CycleType& mu);

// Block boundaries of mu: the partial sums mu_1, mu_1+mu_2, ....
std::vector<long long> block_boundaries(const CycleType& mu);

// The per-tableau weight in {-1, 0, +1} whose sum over all tableaux of the
// shape gives chi^lam_mu. Product over positions i = 1..n-1 that are not
// block boundaries of: -1 if i is a descent; 0 if i is not a descent but
// i+1 is and i+1 is not a boundary; +1 otherwise.
int descent_weight(const StandardTableau& t, const CycleType& mu);
int descent_weight_rows(const std::vector<int>& row_of, long long n,
                        const CycleType& mu);

// Sum of descent_weight over all tableaux of the shape; equals mn_character.
Integer character_via_descent_weights(const Partition& lam,
                                      const CycleType& mu,
                                      const EnumerationOptions& opts = {});

// Position-indexed weight sums. Each is independent of the chosen positions
// and equals the character at the class named by the suffix.
Integer weight_sum_transposition(const Partition& lam, int i,
                                 const EnumerationOptions& opts = {});
Integer weight_sum_three_cycle(const Partition& lam, int i,
                               const EnumerationOptions& opts = {});
Integer weight_sum_double_transposition(const Partition& lam, int i, int j,
                                        const EnumerationOptions& opts = {});

// Frobenius closed form for chi at a transposition class, normalized by the
// dimension: [sum C(lam_i,2) - sum C(lam'_j,2)] / C(n,2). Requires n >= 2.
Rational frobenius_r2(const Partition& lam);

// Closed form for the normalized character at the (2,2,1,...) class,
// in terms of cell contents. Requires n >= 4.
Rational frobenius_r22(const Partition& lam);

// Normalized character values at the classes (2,1...), (3,1...), (2,2,1...).
struct CharRatios {
  Rational r2;
  Rational r3;
  Rational r22;
};

// r2 and r22 by closed form, r3 through the rim-hook oracle. Requires n >= 4.
CharRatios char_ratios(const Partition& lam);

struct JointDescentProbabilities {
  Rational p2;   // Pr[position i is a descent]
  Rational p3;   // Pr[i and i+1 both descents]
  Rational p22;  // Pr[i and j both descents], j - i > 1
};

// Exact descent probabilities of a uniform tableau of the shape, derived
// from the normalized characters. Requires n >= 4.
JointDescentProbabilities joint_descent_probabilities(const Partition& lam);

}  // namespace sytkit
