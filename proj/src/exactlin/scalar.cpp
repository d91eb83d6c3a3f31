#include "coalg/scalar.hpp"

namespace coalg {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  mpz_class p;
  mpz_import(p.get_mpz_t(), 1, 1, sizeof(characteristic_), 0, 0, &characteristic_);
  mpz_class d = den % p;
  if (d == 0) throw std::invalid_argument("denominator vanishes in " + name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  mpz_class v = (num % p) * inv % p;
  if (v < 0) v += p;
  return Scalar::residue(v, characteristic_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed scalar '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::coerce(const Scalar& s) const {
  if (s.p_ == characteristic_) return s;
  if (s.p_ != 0) throw std::invalid_argument("scalar from " + s.field().name() + " used in " + name());
  return from_rational(s.q_);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

Scalar Scalar::residue(const mpz_class& v, std::uint64_t p) {
  Scalar s;
  mpz_class m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class r = v % m;
  if (r < 0) r += m;
  s.p_ = p;
  s.r_ = 0;
  mpz_export(&s.r_, nullptr, 1, sizeof(s.r_), 0, 0, r.get_mpz_t());
  return s;
}

std::uint64_t Scalar::reduce(const mpq_class& q, std::uint64_t p) {
  return Field(p).from_rational(q).r_;
}

std::uint64_t Scalar::unify(const Scalar& o, std::uint64_t& other_residue) const {
  if (p_ == o.p_) {
    other_residue = o.r_;
    return p_;
  }
  if (o.p_ == 0) {
    other_residue = reduce(o.q_, p_);
    return p_;
  }
  if (p_ == 0) {
    other_residue = o.r_;
    return o.p_;
  }
  throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, p_ - 2, p_);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint64_t orr = 0;
  std::uint64_t p = unify(o, orr);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  if (p_ == 0) r_ = reduce(q_, p), p_ = p;
  r_ = r_ + orr;
  if (r_ >= p_ || r_ < orr) r_ -= p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint64_t orr = 0;
  std::uint64_t p = unify(o, orr);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  if (p_ == 0) r_ = reduce(q_, p), p_ = p;
  r_ = mul_mod(r_, orr, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  std::uint64_t orr = 0;
  a.unify(b, orr);
  std::uint64_t ar = a.p_ == 0 ? Scalar::reduce(a.q_, b.p_) : a.r_;
  return ar == orr;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace coalg
