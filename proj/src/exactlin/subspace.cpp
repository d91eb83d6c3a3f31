#include "coalg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalg {

Subspace Subspace::full(Index ambient, const Field& field) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) {
    s.basis_.push_back(SparseVector::unit(i, field.one()));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Index ambient, const std::vector<SparseVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

SparseVector Subspace::reduce(SparseVector v) const {
  if (basis_.empty() || v.is_zero()) return v;
  // Basis vectors vanish on each other's pivots, so the coefficient to remove
  // is read off the original vector.
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& e : v.entries()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), e.index);
    if (it != pivots_.end() && *it == e.index) hits.emplace_back(it - pivots_.begin(), e.value);
  }
  if (hits.empty()) return v;
  if (hits.size() == 1) {
    v.axpy(-hits[0].second, basis_[hits[0].first]);
    return v;
  }
  VectorBuilder b;
  b.add(Scalar(1), v);
  for (const auto& [k, c] : hits) b.add(-c, basis_[k]);
  return b.build();
}

bool Subspace::insert(SparseVector v) {
  if (!v.is_zero() && v.max_index() >= ambient_) throw std::invalid_argument("vector outside ambient space");
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v = v.scaled(v.leading_value().inverse());
  Index p = v.leading_index();
  for (auto& b : basis_) {
    Scalar c = b.get(p);
    if (!c.is_zero()) b.axpy(-c, v);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto pos = it - pivots_.begin();
  pivots_.insert(it, p);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace containment: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const SparseVector& v) { return contains(v); });
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
  std::vector<Entry> out;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Scalar c = v.get(pivots_[k]);
    if (!c.is_zero()) out.push_back({k, c});
  }
  return SparseVector::from_entries(std::move(out));
}

Matrix Subspace::inclusion() const { return Matrix::from_columns(ambient_, basis_); }

Matrix Subspace::coordinate_map() const {
  Matrix m(dim(), ambient_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) m.set_column(pivots_[k], SparseVector::unit(k));
  return m;
}

std::vector<Index> Subspace::non_pivots() const {
  std::vector<Index> out;
  std::size_t k = 0;
  for (Index i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

Matrix Subspace::quotient_map() const {
  std::vector<Index> free = non_pivots();
  std::vector<Index> position(ambient_, ambient_);
  for (Index k = 0; k < free.size(); ++k) position[free[k]] = k;
  Matrix q(free.size(), ambient_);
  for (Index j = 0; j < ambient_; ++j) {
    SparseVector r = reduce(SparseVector::unit(j));
    std::vector<Entry> e;
    for (const auto& x : r.entries()) e.push_back({position[x.index], x.value});
    q.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return q;
}

std::optional<SparseVector> ColumnEchelon::add(SparseVector image, SparseVector combo) {
  while (!image.is_zero()) {
    auto it = pivots_.find(image.leading_index());
    if (it == pivots_.end()) {
      Scalar inv = image.leading_value().inverse();
      Index p = image.leading_index();
      pivots_.emplace(p, Row{image.scaled(inv), combo.scaled(inv)});
      return std::nullopt;
    }
    Scalar c = image.leading_value();
    image.axpy(-c, it->second.image);
    combo.axpy(-c, it->second.combo);
  }
  return combo;
}

std::optional<SparseVector> ColumnEchelon::express(SparseVector target) const {
  SparseVector combo;
  while (!target.is_zero()) {
    auto it = pivots_.find(target.leading_index());
    if (it == pivots_.end()) return std::nullopt;
    Scalar c = target.leading_value();
    target.axpy(-c, it->second.image);
    combo.axpy(c, it->second.combo);
  }
  return combo;
}

Subspace kernel(const Matrix& m) {
  ColumnEchelon ech(m.cols());
  Subspace k(m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    Scalar one = m.column(j).is_zero() ? Scalar(1) : m.column(j).leading_value().field().one();
    if (auto z = ech.add(m.column(j), SparseVector::unit(j, one))) k.insert(std::move(*z));
  }
  return k;
}

Subspace image(const Matrix& m) { return Subspace::span(m.rows(), m.columns()); }

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
  Subspace s = u;
  for (const auto& b : v.basis()) s.insert(b);
  return s;
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient()) throw std::invalid_argument("preimage: dimension mismatch");
  std::vector<SparseVector> reduced;
  reduced.reserve(m.cols());
  for (const auto& c : m.columns()) reduced.push_back(w.reduce(c));
  return kernel(Matrix::from_columns(m.rows(), std::move(reduced)));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace intersection: ambient mismatch");
  Matrix inc = u.inclusion();
  Subspace coeffs = preimage(inc, v);
  Subspace out(u.ambient());
  for (const auto& c : coeffs.basis()) out.insert(inc.apply(c));
  return out;
}

Subspace image_of(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw std::invalid_argument("image_of: dimension mismatch");
  Subspace out(m.rows());
  for (const auto& b : u.basis()) out.insert(m.apply(b));
  return out;
}

Subspace tensor(const Subspace& u, const Subspace& v) {
  Subspace out(u.ambient() * v.ambient());
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) out.insert(kron(a, b, v.ambient()));
  return out;
}

std::optional<SparseVector> solve(const Matrix& m, const SparseVector& b) {
  ColumnEchelon ech(m.cols());
  for (Index j = 0; j < m.cols(); ++j) ech.add(m.column(j), SparseVector::unit(j));
  return ech.express(b);
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  ColumnEchelon ech(m.cols());
  for (Index j = 0; j < m.cols(); ++j) ech.add(m.column(j), SparseVector::unit(j));
  Matrix x(m.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto s = ech.express(b.column(j));
    if (!s) return std::nullopt;
    x.set_column(j, std::move(*s));
  }
  return x;
}

}  // namespace coalg
