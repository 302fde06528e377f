#include <seqopt/poly.hpp>

#include <stdexcept>

namespace seqopt {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, unsigned power) {
  if (c == 0) return IntPolynomial{};
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = c;
  return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::coeff(unsigned i) const {
  if (i >= coeffs_.size()) return kZero;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial{};
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::times_linear(const BigInt& a, const BigInt& b) const {
  if (is_zero()) return IntPolynomial{};
  std::vector<BigInt> v(coeffs_.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i + 1] += a * coeffs_[i];
    v[i] += b * coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r *= x;
    r += Rational(coeffs_[i]);
  }
  return r;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    r *= x;
    r += coeffs_[i];
  }
  return r;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace seqopt
