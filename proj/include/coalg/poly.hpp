#pragma once

#include "coalg/scalar.hpp"

#include <optional>
#include <vector>

namespace coalg {

/// Univariate polynomial, coefficients low degree first, trailing zeros
/// stripped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly monomial(const Scalar& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }
  Poly monic() const;
  Scalar eval(const Scalar& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;
  /// Quotient and remainder.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Scalar> c_;
};

Poly gcd(Poly a, Poly b);
/// base^e mod m, e given as a GMP integer.
Poly powmod(Poly base, const mpz_class& e, const Poly& m);

struct RootResult {
  /// Distinct roots in the ground field, ascending by canonical value.
  std::vector<Scalar> roots;
  /// True when the polynomial is a product of linear factors over the field.
  bool split = false;
};

/// Roots of a nonzero polynomial over the field. Over Q this uses the rational
/// root test and throws std::runtime_error if the coefficients are too large to
/// factor by trial division.
RootResult roots_in_field(const Poly& f, const Field& field);

}  // namespace coalg
