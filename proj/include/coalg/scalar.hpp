#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coalg {

class Scalar;

/// Ground field tag: characteristic 0 means the rationals, otherwise GF(p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint64_t characteristic() const { return characteristic_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "3", "-3/2". A zero denominator (or one divisible by p) throws
  /// std::invalid_argument.
  Scalar parse(std::string_view text) const;
  /// Brings a scalar into this field (rationals are reduced mod p).
  Scalar coerce(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : characteristic_(p) {}
  std::uint64_t characteristic_ = 0;
};

/// Exact field element: an arbitrary-precision rational in lowest terms, or a
/// residue in [0, p). A rational operand meeting a residue is reduced mod p
/// first, which keeps integer literals usable in both fields.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Scalar residue(const mpz_class& v, std::uint64_t p);

  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }
  std::uint64_t modulus() const { return p_; }
  Field field() const { return Field(p_); }

  /// Only meaningful for rational scalars.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend class Field;
  // Brings *this and o to a common modulus (mutating only *this).
  std::uint64_t unify(const Scalar& o, std::uint64_t& other_residue) const;
  static std::uint64_t reduce(const mpq_class& q, std::uint64_t p);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

}  // namespace coalg
