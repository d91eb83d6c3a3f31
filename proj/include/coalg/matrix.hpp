#pragma once

#include "coalg/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

/// Coordinates in a tensor power can exceed 32 bits (dim^k), hence 64-bit.
using Index = std::uint64_t;

struct Entry {
  Index index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  static SparseVector unit(Index i, const Scalar& one = Scalar(1));
  /// Accepts unsorted input with repeated indices; sums duplicates.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector from_dense(std::span<const Scalar> dense);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Scalar get(Index i) const;
  Index leading_index() const { return entries_.front().index; }
  const Scalar& leading_value() const { return entries_.front().value; }
  Index max_index() const { return entries_.back().index; }

  /// this += c * other
  void axpy(const Scalar& c, const SparseVector& other);
  SparseVector scaled(const Scalar& c) const;
  std::vector<Scalar> to_dense(Index dim) const;

  SparseVector operator-() const { return scaled(Scalar(-1)); }
  SparseVector& operator+=(const SparseVector& o) {
    axpy(Scalar(1), o);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    axpy(Scalar(-1), o);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Kronecker product of vectors: index (i, j) -> i * right_dim + j.
SparseVector kron(const SparseVector& a, const SparseVector& b, Index right_dim);

/// Accumulates contributions by index, then freezes into a SparseVector.
class VectorBuilder {
 public:
  void add(Index i, const Scalar& v);
  void add(const Scalar& c, const SparseVector& v);
  SparseVector build() const;

 private:
  std::map<Index, Scalar> acc_;
};

/// Linear map stored column-wise: column j is the image of the j-th source
/// basis vector. Applies on the left to column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols);
  static Matrix identity(Index n, const Field& field = Field());
  static Matrix zero(Index rows, Index cols) { return Matrix(rows, cols); }
  static Matrix from_columns(Index rows, std::vector<SparseVector> columns);
  /// Row-major dense input.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Single-row matrix, e.g. a functional.
  static Matrix row(const SparseVector& v, Index cols);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const SparseVector& column(Index j) const { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  void set_column(Index j, SparseVector v) { columns_[j] = std::move(v); }
  Scalar at(Index r, Index c) const { return columns_[c].get(r); }
  std::size_t nnz() const;

  SparseVector apply(const SparseVector& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  /// Smallest column index where the two matrices differ, or cols() if equal.
  Index first_difference(const Matrix& other) const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);  // composition a after b
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::vector<std::vector<Scalar>> to_dense() const;
  std::string to_string() const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Kronecker product acting on the lexicographic (left factor major) tensor
/// basis.
Matrix tensor_map(const Matrix& f, const Matrix& g);
Matrix tensor_map(std::initializer_list<Matrix> factors);
/// (f⊗g)(v) without materialising the Kronecker matrix; v lives in the
/// tensor product of the source spaces.
SparseVector tensor_apply(const Matrix& f, const Matrix& g, const SparseVector& v);
/// (f⊗g)∘m, column by column.
Matrix tensor_compose(const Matrix& f, const Matrix& g, const Matrix& m);

/// Applies f: V -> W to the first factor of v in V^{⊗factors}; the result
/// lives in W ⊗ V^{⊗(factors-1)}.
SparseVector apply_first(const Matrix& f, const SparseVector& v, unsigned factors);
/// f^{⊗factors}(v) for v in V^{⊗factors}.
SparseVector apply_each(const Matrix& f, const SparseVector& v, unsigned factors);

/// Reduced row-echelon form of the rows; zero rows kept at the bottom so the
/// shape is preserved.
Matrix rref(const Matrix& m);
Index rank(const Matrix& m);

/// Blocks placed on top of each other (same column count). The kernel of the
/// result is the intersection of the kernels.
Matrix stack_rows(const std::vector<Matrix>& blocks);
/// Blocks placed side by side (same row count).
Matrix stack_cols(const std::vector<Matrix>& blocks);

/// Swaps the tensor factors: V (x) W -> W (x) V.
Matrix swap_map(Index v_dim, Index w_dim);

Index checked_pow(Index base, unsigned exp);

}  // namespace coalg
