#pragma once

#include <vector>

#include <seqopt/bigint.hpp>

namespace seqopt {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of x^i. Invariant: the coefficient vector is
/// empty for the zero polynomial and otherwise ends in a nonzero entry.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& c, unsigned power);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero outside the stored range.
  const BigInt& coeff(unsigned i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  /// Multiply by the linear factor (a*x + b).
  IntPolynomial times_linear(const BigInt& a, const BigInt& b) const;

  Rational eval(const Rational& x) const;
  BigInt eval(const BigInt& x) const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace seqopt
