#pragma once

#include "coalg/subspace.hpp"

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>

namespace coalg::testing {

/// Seeded generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Index below(Index n) { return std::uniform_int_distribution<Index>(0, n - 1)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Scalar scalar(const Field& f) {
    if (f.is_rational()) {
      long num = small(-4, 4);
      long den = small(1, 3);
      return f.from_rational(mpq_class(num, den));
    }
    return f.from_int(small(0, static_cast<long>(std::min<std::uint64_t>(f.characteristic(), 1000)) - 1));
  }

  Scalar nonzero(const Field& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  SparseVector vector(const Field& f, Index dim, double density = 0.5) {
    std::vector<Entry> e;
    for (Index i = 0; i < dim; ++i)
      if (chance(density)) e.push_back({i, nonzero(f)});
    return SparseVector::from_entries(std::move(e));
  }

  Matrix matrix(const Field& f, Index rows, Index cols, double density = 0.5) {
    std::vector<SparseVector> c;
    for (Index j = 0; j < cols; ++j) c.push_back(vector(f, rows, density));
    return Matrix::from_columns(rows, std::move(c));
  }

  Matrix invertible(const Field& f, Index n) {
    for (;;) {
      Matrix m = matrix(f, n, n, 0.6);
      if (rank(m) == n) return m;
    }
  }

  Subspace subspace(const Field& f, Index ambient) {
    Index k = below(ambient + 1);
    std::vector<SparseVector> vs;
    for (Index i = 0; i < k; ++i) vs.push_back(vector(f, ambient));
    return Subspace::span(ambient, vs);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Column-major flattening of a matrix.
inline SparseVector flatten(const Matrix& m) {
  VectorBuilder b;
  for (Index j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j).entries()) b.add(j * m.rows() + e.index, e.value);
  return b.build();
}

/// Concatenates vectors of known lengths into one.
class Stacker {
 public:
  void add(const SparseVector& v, Index dim) {
    for (const auto& e : v.entries()) b_.add(offset_ + e.index, e.value);
    offset_ += dim;
  }
  void add(const Matrix& m) { add(flatten(m), m.rows() * m.cols()); }
  SparseVector build() const { return b_.build(); }
  Index size() const { return offset_; }

 private:
  VectorBuilder b_;
  Index offset_ = 0;
};

/// Solution set {particular + span(directions)} of a linear system in an
/// unknown rows x cols matrix.
struct AffineMaps {
  Matrix particular;
  std::vector<Matrix> directions;
};

/// All X with lin(X) = target, where lin is linear; nullopt if inconsistent.
inline std::optional<AffineMaps> solve_maps(const Field& f, Index rows, Index cols, Index out_dim,
                                            const std::function<SparseVector(const Matrix&)>& lin,
                                            const SparseVector& target) {
  std::vector<SparseVector> cols_of_a;
  auto unit = [&](Index k) {
    Matrix e(rows, cols);
    e.set_column(k / rows, SparseVector::unit(k % rows, f.one()));
    return e;
  };
  for (Index k = 0; k < rows * cols; ++k) cols_of_a.push_back(lin(unit(k)));
  Matrix a = Matrix::from_columns(out_dim, cols_of_a);
  auto x = solve(a, target);
  if (!x) return std::nullopt;
  auto to_matrix = [&](const SparseVector& v) {
    std::vector<std::vector<Entry>> c(cols);
    for (const auto& e : v.entries()) c[e.index / rows].push_back({e.index % rows, e.value});
    std::vector<SparseVector> cs;
    for (auto& es : c) cs.push_back(SparseVector::from_entries(std::move(es)));
    return Matrix::from_columns(rows, std::move(cs));
  };
  AffineMaps out{to_matrix(*x), {}};
  Subspace null = kernel(a);
  for (const auto& k : null.basis()) out.directions.push_back(to_matrix(k));
  return out;
}

/// Visits every point of an affine solution set over GF(p).
inline void for_each_point(const Field& f, const AffineMaps& s, const std::function<void(const Matrix&)>& fn,
                           std::uint64_t cap = 2000000) {
  if (f.is_rational()) throw std::invalid_argument("enumeration needs a finite field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.directions.size(); ++i) {
    if (total > cap / p) throw std::length_error("solution set too large to enumerate");
    total *= p;
  }
  std::vector<std::uint64_t> digits(s.directions.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    Matrix x = s.particular;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      Scalar c = f.from_int(static_cast<long>(r % p));
      r /= p;
      if (!c.is_zero()) x = x + c * s.directions[i];
    }
    fn(x);
  }
}

}  // namespace coalg::testing
