#include "coalg/matrix.hpp"

#include "coalg/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coalg {

SparseVector SparseVector::unit(Index i, const Scalar& one) {
  SparseVector v;
  if (!one.is_zero()) v.entries_.push_back({i, one});
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
      if (v.entries_.back().value.is_zero()) v.entries_.pop_back();
    } else if (!e.value.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Scalar> dense) {
  SparseVector v;
  for (Index i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.entries_.push_back({i, dense[i]});
  return v;
}

Scalar SparseVector::get(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Scalar(0);
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
  if (c.is_zero() || other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      out.push_back({b->index, c * b->value});
      ++b;
    } else {
      Scalar s = a->value + c * b->value;
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector v;
  if (c.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({e.index, e.value * c});
  return v;
}

std::vector<Scalar> SparseVector::to_dense(Index dim) const {
  std::vector<Scalar> d(dim);
  for (const auto& e : entries_) d.at(e.index) = e.value;
  return d;
}

SparseVector kron(const SparseVector& a, const SparseVector& b, Index right_dim) {
  std::vector<Entry> out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.entries())
    for (const auto& y : b.entries()) out.push_back({x.index * right_dim + y.index, x.value * y.value});
  // already sorted: left index major, right entries sorted and < right_dim
  return SparseVector::from_entries(std::move(out));
}

void VectorBuilder::add(Index i, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(i, v);
  if (!inserted) it->second += v;
}

void VectorBuilder::add(const Scalar& c, const SparseVector& v) {
  for (const auto& e : v.entries()) add(e.index, c * e.value);
}

SparseVector VectorBuilder::build() const {
  std::vector<Entry> entries;
  entries.reserve(acc_.size());
  for (const auto& [i, v] : acc_)
    if (!v.is_zero()) entries.push_back({i, v});
  return SparseVector::from_entries(std::move(entries));
}

Matrix::Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), columns_(cols) {}

Matrix Matrix::identity(Index n, const Field& field) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i, field.one());
  return m;
}

Matrix Matrix::from_columns(Index rows, std::vector<SparseVector> columns) {
  Matrix m(rows, columns.size());
  for (auto& c : columns)
    if (!c.is_zero() && c.max_index() >= rows) throw std::invalid_argument("column exceeds row count");
  m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Index r = rows.size();
  Index c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (Index j = 0; j < c; ++j) {
    std::vector<Entry> e;
    for (Index i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      if (!rows[i][j].is_zero()) e.push_back({i, rows[i][j]});
    }
    m.columns_[j] = SparseVector::from_entries(std::move(e));
  }
  return m;
}

Matrix Matrix::row(const SparseVector& v, Index cols) {
  Matrix m(1, cols);
  for (const auto& e : v.entries()) m.columns_.at(e.index) = SparseVector::unit(0, e.value);
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

SparseVector Matrix::apply(const SparseVector& v) const {
  if (!v.is_zero() && v.max_index() >= cols_) throw std::invalid_argument("vector exceeds matrix columns");
  if (v.nnz() == 1) return columns_[v.leading_index()].scaled(v.leading_value());
  VectorBuilder b;
  for (const auto& e : v.entries()) b.add(e.value, columns_[e.index]);
  return b.build();
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<Entry>> rows(rows_);
  for (Index j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j].entries()) rows[e.index].push_back({j, e.value});
  Matrix t(cols_, rows_);
  for (Index i = 0; i < rows_; ++i) t.columns_[i] = SparseVector::from_entries(std::move(rows[i]));
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.is_zero(); });
}

Index Matrix::first_difference(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return 0;
  for (Index j = 0; j < cols_; ++j)
    if (!(columns_[j] == other.columns_[j])) return j;
  return cols_;
}

Matrix Matrix::operator-() const { return Scalar(-1) * *this; }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix m = a;
  for (Index j = 0; j < a.cols_; ++j) m.columns_[j] += b.columns_[j];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference: dimension mismatch");
  Matrix m = a;
  for (Index j = 0; j < a.cols_; ++j) m.columns_[j] -= b.columns_[j];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (Index j = 0; j < b.cols_; ++j) m.columns_[j] = a.apply(b.columns_[j]);
  return m;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (Index j = 0; j < m.cols_; ++j) r.columns_[j] = m.columns_[j].scaled(c);
  return r;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (Index j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j].entries()) d[e.index][j] = e.value;
  return d;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  auto d = to_dense();
  os << "[";
  for (Index i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (Index j = 0; j < cols_; ++j) os << (j ? ", " : "") << d[i][j].to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix tensor_map(const Matrix& f, const Matrix& g) {
  Matrix m(f.rows() * g.rows(), f.cols() * g.cols());
  std::vector<SparseVector> cols;
  cols.reserve(f.cols() * g.cols());
  for (Index i = 0; i < f.cols(); ++i)
    for (Index j = 0; j < g.cols(); ++j) cols.push_back(kron(f.column(i), g.column(j), g.rows()));
  return Matrix::from_columns(f.rows() * g.rows(), std::move(cols));
}

Matrix tensor_map(std::initializer_list<Matrix> factors) {
  if (factors.size() == 0) throw std::invalid_argument("empty tensor product");
  auto it = factors.begin();
  Matrix acc = *it++;
  for (; it != factors.end(); ++it) acc = tensor_map(acc, *it);
  return acc;
}

SparseVector tensor_apply(const Matrix& f, const Matrix& g, const SparseVector& v) {
  const Index gc = g.cols();
  if (!v.is_zero() && v.max_index() >= f.cols() * gc)
    throw std::invalid_argument("tensor_apply: vector exceeds source dimension");
  if (v.nnz() == 1) {
    const auto& e = v.entries().front();
    return kron(f.column(e.index / gc), g.column(e.index % gc), g.rows()).scaled(e.value);
  }
  VectorBuilder b;
  for (const auto& e : v.entries()) b.add(e.value, kron(f.column(e.index / gc), g.column(e.index % gc), g.rows()));
  return b.build();
}

Matrix tensor_compose(const Matrix& f, const Matrix& g, const Matrix& m) {
  if (m.rows() != f.cols() * g.cols()) throw std::invalid_argument("tensor_compose: dimension mismatch");
  Matrix out(f.rows() * g.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) out.set_column(j, tensor_apply(f, g, m.column(j)));
  return out;
}

SparseVector apply_first(const Matrix& f, const SparseVector& v, unsigned factors) {
  if (factors == 0) throw std::invalid_argument("apply_first: no tensor factors");
  const Index rest = checked_pow(f.cols(), factors - 1);
  VectorBuilder b;
  for (const auto& e : v.entries()) {
    Index head = e.index / rest, tail = e.index % rest;
    for (const auto& x : f.column(head).entries()) b.add(x.index * rest + tail, e.value * x.value);
  }
  return b.build();
}

SparseVector apply_each(const Matrix& f, const SparseVector& v, unsigned factors) {
  // one slot at a time: slots before p already live in W, the rest in V
  const Index n = f.cols(), m = f.rows();
  Index rest = 1;
  for (unsigned p = 1; p < factors; ++p) rest *= n;
  SparseVector cur = v;
  for (unsigned p = 0; p < factors; ++p) {
    VectorBuilder b;
    for (const auto& e : cur.entries()) {
      const Index suffix = e.index % rest, digit = (e.index / rest) % n, prefix = e.index / rest / n;
      for (const auto& c : f.column(digit).entries()) b.add((prefix * m + c.index) * rest + suffix, e.value * c.value);
    }
    cur = b.build();
    if (p + 1 < factors) rest /= n;
  }
  return cur;
}

Matrix rref(const Matrix& m) {
  Matrix t = m.transpose();
  Subspace s = Subspace::span(m.cols(), t.columns());
  std::vector<SparseVector> rows = s.basis();
  rows.resize(m.rows());
  return Matrix::from_columns(m.cols(), std::move(rows)).transpose();
}

Index rank(const Matrix& m) { return image(m).dim(); }

Matrix stack_rows(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  Index cols = blocks[0].cols();
  Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("stack_rows: column count mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    std::vector<Entry> e;
    Index offset = 0;
    for (const auto& b : blocks) {
      for (const auto& x : b.column(j).entries()) e.push_back({x.index + offset, x.value});
      offset += b.rows();
    }
    m.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return m;
}

Matrix stack_cols(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  Index rows = blocks[0].rows();
  std::vector<SparseVector> cols;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("stack_cols: row count mismatch");
    cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  }
  return Matrix::from_columns(rows, std::move(cols));
}

Matrix swap_map(Index v_dim, Index w_dim) {
  Matrix m(v_dim * w_dim, v_dim * w_dim);
  for (Index i = 0; i < v_dim; ++i)
    for (Index j = 0; j < w_dim; ++j) m.set_column(i * w_dim + j, SparseVector::unit(j * v_dim + i));
  return m;
}

Index checked_pow(Index base, unsigned exp) {
  Index r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("tensor power index overflow");
    r *= base;
  }
  return r;
}

}  // namespace coalg
