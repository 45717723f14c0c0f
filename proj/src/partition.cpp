#include "sytkit/partition.hpp"

#include <algorithm>
#include <charconv>

#include "sytkit/errors.hpp"

namespace sytkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw domain_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw domain_error("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw domain_error("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition();
  conj.resize(static_cast<size_t>(parts_[0]));
  for (int j = 1; j <= parts_[0]; ++j) {
    int count = 0;
    for (int part : parts_) {
      if (part >= j) ++count;
    }
    conj[static_cast<size_t>(j) - 1] = count;
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool dominates(const Partition& mu, const Partition& lam) {
  if (mu.n() != lam.n())
    throw domain_error("dominance comparison needs equal sizes");
  long long mu_prefix = 0, lam_prefix = 0;
  const int rows = std::max(mu.rows(), lam.rows());
  for (int i = 1; i <= rows; ++i) {
    mu_prefix += mu.row_length(i);
    lam_prefix += lam.row_length(i);
    if (lam_prefix > mu_prefix) return false;
  }
  return true;
}

long long hook_length(const Partition& lam, Cell c) {
  if (!lam.contains(c))
    throw domain_error("cell (" + std::to_string(c.row) + "," +
                       std::to_string(c.col) + ") outside shape " +
                       lam.to_string());
  // arm + leg + 1 via row and column lengths
  const Partition conj = lam.conjugate();
  return static_cast<long long>(lam.row_length(c.row)) +
         conj.row_length(c.col) - c.row - c.col + 1;
}

std::vector<std::vector<long long>> hook_lengths(const Partition& lam) {
  const Partition conj = lam.conjugate();
  std::vector<std::vector<long long>> out;
  out.reserve(static_cast<size_t>(lam.rows()));
  for (int i = 1; i <= lam.rows(); ++i) {
    std::vector<long long> row(static_cast<size_t>(lam.row_length(i)));
    for (int j = 1; j <= lam.row_length(i); ++j) {
      row[static_cast<size_t>(j) - 1] = static_cast<long long>(
          lam.row_length(i)) + conj.row_length(j) - i - j + 1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

Integer content_sum(const Partition& lam) {
  Integer acc = 0;
  for (int i = 1; i <= lam.rows(); ++i) {
    for (int j = 1; j <= lam.row_length(i); ++j) acc += j - i;
  }
  return acc;
}

Integer squared_content_sum(const Partition& lam) {
  Integer acc = 0;
  for (int i = 1; i <= lam.rows(); ++i) {
    for (int j = 1; j <= lam.row_length(i); ++j) {
      const long long c = j - i;
      acc += c * c;
    }
  }
  return acc;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    emit_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw domain_error("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  emit_partitions(n, n, current, out);
  return out;
}

}  // namespace sytkit
