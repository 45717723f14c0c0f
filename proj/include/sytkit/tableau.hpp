#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sytkit/descent_function.hpp"
#include "sytkit/numeric.hpp"
#include "sytkit/partition.hpp"

namespace sytkit {

// A bijective filling of a shape with 1..n, increasing along rows and down
// columns. Immutable after construction; construction validates.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  // Derives the shape from the row lengths.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  long long n() const { return shape_.n(); }

  // 1-based row index of an entry.
  int row_of(int entry) const;
  const std::vector<int>& row_assignment() const { return row_of_; }

  // Positions i with i+1 strictly below i, ascending.
  std::vector<int> descent_set() const;
  int des() const;
  long long maj() const;

  std::string to_text() const;  // one row per line, space-separated

  friend bool operator==(const StandardTableau&, const StandardTableau&) =
      default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

Rational descent_statistic(const StandardTableau& t, const DescentFunction& f);
double descent_statistic_real(const StandardTableau& t,
                              const DescentFunction& f);

// Count of standard tableaux, n! over the product of hook lengths. The
// division is exact; a remainder means the hooks are wrong and raises
// internal_error.
Integer count_syt(const Partition& lam);

// 10^7 unless overridden by the SYT_ENUM_CAP environment variable.
Integer default_enumeration_cap();

struct EnumerationOptions {
  Integer cap = default_enumeration_cap();
};

// Visits every standard tableau of the shape exactly once, inserting 1..n
// ascending with candidate cells scanned row-major, so the stream order is
// reproducible. The visitor sees the row assignment (row_of[e] for e = 1..n)
// and may return false to stop early. Throws cap_exceeded when the tableau
// count is over opts.cap.
void for_each_syt_rows(const Partition& lam,
                       const std::function<bool(const std::vector<int>&)>& visit,
                       const EnumerationOptions& opts = {});

void for_each_syt(const Partition& lam,
                  const std::function<bool(const StandardTableau&)>& visit,
                  const EnumerationOptions& opts = {});

std::vector<StandardTableau> enumerate_syt(const Partition& lam,
                                           const EnumerationOptions& opts = {});

// Rebuilds a tableau from a row assignment (entries 1..n).
StandardTableau tableau_from_row_assignment(const Partition& lam,
                                            const std::vector<int>& row_of);

}  // namespace sytkit
