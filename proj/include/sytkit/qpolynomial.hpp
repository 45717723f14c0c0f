#pragma once

#include <string>
#include <vector>

#include "sytkit/numeric.hpp"
#include "sytkit/partition.hpp"

namespace sytkit {

// Dense polynomial in q with arbitrary-precision integer coefficients.
// Zero is the empty coefficient vector; otherwise the top coefficient is
// nonzero.
class QPolynomial {
 public:
  QPolynomial() = default;  // zero
  explicit QPolynomial(std::vector<Integer> coeffs);

  static QPolynomial one();
  static QPolynomial monomial(long long degree, Integer coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long long degree() const {
    return static_cast<long long>(coeffs_.size()) - 1;
  }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(long long m) const;

  Integer eval_one() const;           // sum of coefficients
  Integer derivative_at_one() const;  // sum of m*c_m
  Integer second_derivative_at_one() const;  // sum of m*(m-1)*c_m

  QPolynomial& operator+=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

  std::string pretty() const;  // "1 + q^2 + 2q^3"

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// [m]_q = 1 + q + ... + q^{m-1}. Throws domain_error for m < 1.
QPolynomial q_integer(long long m);

// Exact quotient in Z[q]; throws non_exact_division when any remainder
// arises, domain_error when b is zero.
QPolynomial exact_divide(const QPolynomial& a, const QPolynomial& b);

// The maj distribution over standard tableaux of the shape:
// q^{sum (i-1) lam_i} * prod_{k<=n} [k]_q / prod_{cells} [hook]_q,
// computed by accumulating the numerator and dividing one hook q-integer at
// a time.
QPolynomial maj_generating_function(const Partition& lam);

struct GenfunMoments {
  Integer count;         // value at q = 1
  Rational expectation;  // of maj
  Rational variance;     // of maj
};

// Exact maj moments read off the generating function's derivatives at q = 1.
GenfunMoments moments_from_genfun(const Partition& lam);

}  // namespace sytkit
