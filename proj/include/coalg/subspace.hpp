#pragma once

#include "coalg/matrix.hpp"

#include <optional>
#include <vector>

namespace coalg {

/// Subspace of an ambient coordinate space, held as its reduced row-echelon
/// basis: pivots strictly increasing, pivot coefficient 1, every other basis
/// vector zero at each pivot. The form is unique, so operator== is equality
/// of subspaces.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}
  static Subspace zero(Index ambient) { return Subspace(ambient); }
  static Subspace full(Index ambient, const Field& field = Field());
  static Subspace span(Index ambient, const std::vector<SparseVector>& vectors);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Inserts v; returns false if it was already contained.
  bool insert(SparseVector v);
  /// Canonical coset representative: zero at every pivot.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;
  /// Coefficients w.r.t. basis(); only valid for contained vectors.
  SparseVector coordinates(const SparseVector& v) const;
  /// Basis vectors as the columns of an ambient x dim matrix.
  Matrix inclusion() const;
  /// Coordinates map ambient -> dim (left inverse of inclusion on the subspace).
  Matrix coordinate_map() const;
  /// Quotient map onto the complement spanned by the non-pivot coordinates.
  Matrix quotient_map() const;
  std::vector<Index> non_pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Index ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
};

/// Incremental column elimination that tracks how each reduced column was
/// combined from the inputs. Drives kernel, solve and preimage.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(Index combo_dim) : combo_dim_(combo_dim) {}
  /// Adds image with its combination vector; returns the combination if the
  /// image reduced to zero (a kernel vector).
  std::optional<SparseVector> add(SparseVector image, SparseVector combo);
  /// Finds x with sum x_j * image_j = target; nullopt if not in the span.
  std::optional<SparseVector> express(SparseVector target) const;

 private:
  struct Row {
    SparseVector image;
    SparseVector combo;
  };
  Index combo_dim_;
  std::map<Index, Row> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// {x : m x in w}
Subspace preimage(const Matrix& m, const Subspace& w);
/// Image of a subspace under m.
Subspace image_of(const Matrix& m, const Subspace& u);
/// Span of u_i (x) v_j inside U (x) V.
Subspace tensor(const Subspace& u, const Subspace& v);
/// Some x with m x = b, or nullopt.
std::optional<SparseVector> solve(const Matrix& m, const SparseVector& b);
/// Unique solution X of m X = b (columnwise); nullopt if any column fails.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b);

}  // namespace coalg
