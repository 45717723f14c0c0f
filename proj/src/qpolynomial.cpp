#include "sytkit/qpolynomial.hpp"

#include "sytkit/errors.hpp"

namespace sytkit {

QPolynomial::QPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::one() { return QPolynomial({Integer(1)}); }

QPolynomial QPolynomial::monomial(long long degree, Integer coeff) {
  if (degree < 0) throw domain_error("monomial degree must be >= 0");
  if (coeff == 0) return {};
  std::vector<Integer> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return QPolynomial(std::move(c));
}

Integer QPolynomial::coeff(long long m) const {
  if (m < 0 || m >= static_cast<long long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(m)];
}

Integer QPolynomial::eval_one() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

Integer QPolynomial::derivative_at_one() const {
  Integer acc = 0;
  for (size_t m = 1; m < coeffs_.size(); ++m)
    acc += coeffs_[m] * static_cast<long long>(m);
  return acc;
}

Integer QPolynomial::second_derivative_at_one() const {
  Integer acc = 0;
  for (size_t m = 2; m < coeffs_.size(); ++m)
    acc += coeffs_[m] * (static_cast<long long>(m) *
                         (static_cast<long long>(m) - 1));
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a] == 0) continue;
    for (size_t b = 0; b < rhs.coeffs_.size(); ++b)
      out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t m = 0; m < coeffs_.size(); ++m) {
    const Integer& c = coeffs_[m];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    if (m == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += (m == 1) ? "q" : "q^" + std::to_string(m);
    }
  }
  return out;
}

QPolynomial q_integer(long long m) {
  if (m < 1) throw domain_error("q-integer needs m >= 1");
  std::vector<Integer> c(static_cast<size_t>(m), Integer(1));
  return QPolynomial(std::move(c));
}

QPolynomial exact_divide(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw non_exact_division("quotient degree would be negative");

  std::vector<Integer> rem = a.coeffs();
  const std::vector<Integer>& div = b.coeffs();
  const Integer& lead = div.back();
  const size_t db = div.size() - 1;
  std::vector<Integer> quot(rem.size() - db);

  for (size_t m = rem.size(); m-- > db;) {
    if (rem[m] == 0) continue;
    Integer q, r;
    boost::multiprecision::divide_qr(rem[m], lead, q, r);
    if (r != 0) throw non_exact_division("leading coefficient does not divide");
    quot[m - db] = q;
    for (size_t j = 0; j <= db; ++j) rem[m - db + j] -= q * div[j];
  }
  for (const auto& c : rem) {
    if (c != 0) throw non_exact_division("nonzero remainder");
  }
  return QPolynomial(std::move(quot));
}

QPolynomial maj_generating_function(const Partition& lam) {
  long long shift = 0;
  for (int i = 1; i <= lam.rows(); ++i)
    shift += static_cast<long long>(i - 1) * lam.row_length(i);

  QPolynomial gf = QPolynomial::monomial(shift);
  for (long long k = 1; k <= lam.n(); ++k) gf = gf * q_integer(k);
  // Dividing hook by hook keeps intermediate degrees at C(n,2)+n and trips
  // non_exact_division at the first wrong hook.
  for (const auto& row : hook_lengths(lam)) {
    for (long long h : row) {
      if (h > 1) gf = exact_divide(gf, q_integer(h));
    }
  }
  return gf;
}

GenfunMoments moments_from_genfun(const Partition& lam) {
  const QPolynomial gf = maj_generating_function(lam);
  const Integer count = gf.eval_one();
  if (count == 0)
    throw internal_error("empty maj generating function for shape " +
                         lam.to_string());
  const Rational mean = Rational(gf.derivative_at_one(), count);
  const Rational second =
      Rational(gf.second_derivative_at_one() + gf.derivative_at_one(), count);
  return GenfunMoments{count, mean, second - mean * mean};
}

}  // namespace sytkit
