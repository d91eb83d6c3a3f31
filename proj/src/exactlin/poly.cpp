#include "coalg/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace coalg {

namespace {

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

// Prime-power factorisation by trial division; nullopt when a cofactor too
// large to certify remains.
std::optional<std::vector<std::pair<mpz_class, unsigned>>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  n = abs(n);
  for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(d), e);
  }
  if (n > 1) {
    if (mpz_class(1000000) * 1000000 < n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  auto f = factor(n);
  if (!f) throw std::runtime_error("rational root search: coefficient " + n.get_str() + " too large to factor");
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : *f) {
    std::size_t base = ds.size();
    if (base * (e + 1) > 200000) throw std::runtime_error("rational root search: too many candidate roots");
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Removes every factor (x - r) and reports the multiplicity.
unsigned deflate(Poly& f, const Scalar& r) {
  unsigned m = 0;
  Poly lin(std::vector<Scalar>{-r, f.lead().field().one()});
  while (f.degree() > 0) {
    auto [q, rem] = Poly::divmod(f, lin);
    if (!rem.is_zero()) break;
    f = q;
    ++m;
  }
  return m;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.modulus() != 0) return a.residue_value() < b.residue_value();
  return a.rational() < b.rational();
}

RootResult finish(Poly f, std::vector<Scalar> candidates) {
  RootResult r;
  std::sort(candidates.begin(), candidates.end(), scalar_less);
  for (const auto& c : candidates)
    if (deflate(f, c) > 0) r.roots.push_back(c);
  r.split = f.degree() == 0;
  return r;
}

RootResult rational_roots(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f.coeffs()) z.push_back(mpz_class(c.rational() * l));
  std::vector<Scalar> candidates;
  std::size_t shift = 0;
  while (z[shift] == 0) ++shift;
  if (shift > 0) candidates.push_back(Scalar(0));
  if (z.size() - shift > 1) {
    auto ps = divisors(z[shift]);
    auto qs = divisors(z.back());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          Scalar s{mpq_class(mpz_class(sign * p), q)};
          if (f.eval(s).is_zero() &&
              std::find(candidates.begin(), candidates.end(), s) == candidates.end())
            candidates.push_back(s);
        }
  }
  return finish(f, std::move(candidates));
}

// Distinct roots of a squarefree product of linear factors over GF(p), p odd.
void equal_degree_split(const Poly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.degree() <= 0) return;
  Field fld = g.lead().field();
  if (g.degree() == 1) {
    Poly m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  mpz_class half = (to_mpz(p) - 1) / 2;
  for (;;) {
    Scalar a = Scalar::residue(to_mpz(rng() % p), p);
    Poly shifted(std::vector<Scalar>{a, fld.one()});
    Poly h = powmod(shifted, half, g) - Poly(std::vector<Scalar>{fld.one()});
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, p, rng, out);
      equal_degree_split(Poly::divmod(g, d).first, p, rng, out);
      return;
    }
  }
}

RootResult residue_roots(const Poly& f, std::uint64_t p) {
  std::vector<Scalar> candidates;
  if (p <= 65536) {
    for (std::uint64_t v = 0; v < p; ++v) {
      Scalar s = Scalar::residue(to_mpz(v), p);
      if (f.eval(s).is_zero()) candidates.push_back(s);
    }
    return finish(f, std::move(candidates));
  }
  Field fld = f.lead().field();
  Poly x(std::vector<Scalar>{fld.zero(), fld.one()});
  Poly xp = powmod(x, to_mpz(p), f);
  Poly g = gcd(f, xp - x);
  std::mt19937_64 rng(0x5eed);
  equal_degree_split(g, p, rng, candidates);
  return finish(f, std::move(candidates));
}

}  // namespace

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  std::vector<Scalar> v;
  for (const auto& c : c_) v.push_back(c * inv);
  return Poly(std::move(v));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = x.field().zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.lead().field().zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quot(a.c_.size() - b.c_.size() + 1, b.lead().field().zero());
  Scalar inv = b.lead().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Scalar c = rem[k + b.c_.size() - 1] * inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= c * b.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, const mpz_class& e, const Poly& m) {
  Poly result(std::vector<Scalar>{m.lead().field().one()});
  result = Poly::divmod(result, m).second;
  base = Poly::divmod(base, m).second;
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result = Poly::divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = Poly::divmod(result * base, m).second;
  }
  return result;
}

RootResult roots_in_field(const Poly& f, const Field& field) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Scalar> c;
  for (const auto& x : f.coeffs()) c.push_back(field.coerce(x));
  Poly g(std::move(c));
  if (g.degree() == 0) return RootResult{{}, true};
  if (field.is_rational()) return rational_roots(g);
  return residue_roots(g, field.characteristic());
}

}  // namespace coalg
