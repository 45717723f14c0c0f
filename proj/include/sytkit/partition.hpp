#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sytkit/numeric.hpp"

namespace sytkit {

// 1-based cell coordinates: (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// A partition of n: weakly decreasing positive parts. The empty partition
// (n = 0) is allowed; it shows up as the base case of shape recursions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "4,4,2,1". Non-monotone or non-positive input is rejected, never
  // reordered.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  long long n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }

  // 1-based; zero for rows past the end.
  int row_length(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }

  bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
  }

  Partition conjugate() const;

  std::string to_string() const;  // "4,4,2,1"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long long n_ = 0;
};

// True iff every prefix sum of mu is >= the matching prefix sum of lam.
// Throws domain_error when |mu| != |lam|.
bool dominates(const Partition& mu, const Partition& lam);

// lam_i + lam'_j - i - j + 1. Throws domain_error for cells outside lam.
long long hook_length(const Partition& lam, Cell c);

// Hook lengths for every cell, row by row.
std::vector<std::vector<long long>> hook_lengths(const Partition& lam);

// Sum of cell contents j - i, and of their squares.
Integer content_sum(const Partition& lam);
Integer squared_content_sum(const Partition& lam);

// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> all_partitions(int n);

}  // namespace sytkit
