#include "sytkit/tableau.hpp"

#include <cstdlib>
#include <limits>

#include "sytkit/errors.hpp"

namespace sytkit {

namespace {

std::vector<int> build_row_assignment(const Partition& shape,
                                      const std::vector<std::vector<int>>& rows) {
  const long long n = shape.n();
  if (n > std::numeric_limits<int>::max())
    throw domain_error("tableau too large for explicit entries");
  if (static_cast<int>(rows.size()) != shape.rows())
    throw domain_error("tableau row count does not match its shape");

  std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= shape.rows(); ++i) {
    const auto& row = rows[static_cast<size_t>(i) - 1];
    if (static_cast<int>(row.size()) != shape.row_length(i))
      throw domain_error("tableau row length does not match its shape");
    for (int j = 1; j <= static_cast<int>(row.size()); ++j) {
      const int e = row[static_cast<size_t>(j) - 1];
      if (e < 1 || e > n) throw domain_error("tableau entry out of range");
      if (row_of[static_cast<size_t>(e)] != 0)
        throw domain_error("tableau entry repeated");
      row_of[static_cast<size_t>(e)] = i;
      if (j > 1 && row[static_cast<size_t>(j) - 2] >= e)
        throw domain_error("tableau row not increasing");
      if (i > 1) {
        const int above = rows[static_cast<size_t>(i) - 2]
                              [static_cast<size_t>(j) - 1];
        if (above >= e) throw domain_error("tableau column not increasing");
      }
    }
  }
  return row_of;
}

}  // namespace

StandardTableau::StandardTableau(Partition shape,
                                 std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  row_of_ = build_row_assignment(shape_, rows_);
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return StandardTableau(Partition(std::move(parts)), std::move(rows));
}

int StandardTableau::row_of(int entry) const {
  if (entry < 1 || entry > n()) throw domain_error("entry out of range");
  return row_of_[static_cast<size_t>(entry)];
}

std::vector<int> StandardTableau::descent_set() const {
  std::vector<int> ds;
  for (long long i = 1; i < n(); ++i) {
    if (detail::is_descent(row_of_, i)) ds.push_back(static_cast<int>(i));
  }
  return ds;
}

int StandardTableau::des() const {
  int count = 0;
  for (long long i = 1; i < n(); ++i) {
    if (detail::is_descent(row_of_, i)) ++count;
  }
  return count;
}

long long StandardTableau::maj() const {
  long long acc = 0;
  for (long long i = 1; i < n(); ++i) {
    if (detail::is_descent(row_of_, i)) acc += i;
  }
  return acc;
}

std::string StandardTableau::to_text() const {
  std::string out;
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

Rational descent_statistic(const StandardTableau& t, const DescentFunction& f) {
  if (!f.exact())
    throw domain_error(
        "exact descent statistic requested for a non-exact weight; use "
        "descent_statistic_real");
  return detail::statistic_exact(t.row_assignment(), f);
}

double descent_statistic_real(const StandardTableau& t,
                              const DescentFunction& f) {
  return detail::statistic_real(t.row_assignment(), f);
}

Integer count_syt(const Partition& lam) {
  Integer numerator = factorial(lam.n());
  Integer denominator = 1;
  for (const auto& row : hook_lengths(lam)) {
    for (long long h : row) denominator *= h;
  }
  Integer quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0)
    throw internal_error("hook product does not divide n! for shape " +
                         lam.to_string());
  return quotient;
}

Integer default_enumeration_cap() {
  static const Integer cap = [] {
    if (const char* raw = std::getenv("SYT_ENUM_CAP")) {
      try {
        Integer v{std::string(raw)};
        if (v > 0) return v;
      } catch (const std::runtime_error&) {
      }
    }
    return Integer(10'000'000);
  }();
  return cap;
}

void for_each_syt_rows(const Partition& lam,
                       const std::function<bool(const std::vector<int>&)>& visit,
                       const EnumerationOptions& opts) {
  const Integer total = count_syt(lam);
  if (total > opts.cap)
    throw cap_exceeded("shape " + lam.to_string() + " has " + total.str() +
                       " tableaux, over the cap of " + opts.cap.str());
  const long long n = lam.n();
  if (n > std::numeric_limits<int>::max())
    throw domain_error("shape too large to enumerate");

  const int k = lam.rows();
  std::vector<int> filled(static_cast<size_t>(k), 0);
  std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);

  // Insert 1..n in order; a cell is available when it extends its row and
  // the cell above it is already filled. Row-major candidate scan keeps the
  // stream order reproducible.
  const std::function<bool(int)> place = [&](int m) -> bool {
    if (m > n) return visit(row_of);
    for (int i = 1; i <= k; ++i) {
      const int j = filled[static_cast<size_t>(i) - 1] + 1;
      if (j > lam.row_length(i)) continue;
      if (i > 1 && filled[static_cast<size_t>(i) - 2] < j) continue;
      filled[static_cast<size_t>(i) - 1] = j;
      row_of[static_cast<size_t>(m)] = i;
      const bool keep_going = place(m + 1);
      filled[static_cast<size_t>(i) - 1] = j - 1;
      if (!keep_going) return false;
    }
    return true;
  };
  place(1);
}

StandardTableau tableau_from_row_assignment(const Partition& lam,
                                            const std::vector<int>& row_of) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(lam.rows()));
  for (int i = 1; i <= lam.rows(); ++i)
    rows[static_cast<size_t>(i) - 1].reserve(
        static_cast<size_t>(lam.row_length(i)));
  for (long long e = 1; e <= lam.n(); ++e)
    rows[static_cast<size_t>(row_of[static_cast<size_t>(e)]) - 1].push_back(
        static_cast<int>(e));
  return StandardTableau(lam, std::move(rows));
}

void for_each_syt(const Partition& lam,
                  const std::function<bool(const StandardTableau&)>& visit,
                  const EnumerationOptions& opts) {
  for_each_syt_rows(
      lam,
      [&](const std::vector<int>& row_of) {
        return visit(tableau_from_row_assignment(lam, row_of));
      },
      opts);
}

std::vector<StandardTableau> enumerate_syt(const Partition& lam,
                                           const EnumerationOptions& opts) {
  std::vector<StandardTableau> out;
  for_each_syt(
      lam,
      [&](const StandardTableau& t) {
        out.push_back(t);
        return true;
      },
      opts);
  return out;
}

}  // namespace sytkit
