#pragma once

#include "coalg/report.hpp"
#include "coalg/subspace.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace coalg {

/// (i, j, k, c): the b_i component of the structure contains c * (b_j (x) b_k)
/// for a comultiplication, or b_i b_j contains c * b_k for a product.
using StructureConstant = std::tuple<Index, Index, Index, Scalar>;

/// Finite-dimensional coalgebra on a named basis. delta is the dim^2 x dim
/// matrix of the comultiplication on the left-major tensor basis; counit has
/// one entry per basis element.
struct Coalgebra {
  Field field;
  std::vector<std::string> names;
  Matrix delta;
  SparseVector counit;

  Coalgebra() = default;
  Coalgebra(Field f, std::vector<std::string> basis, Matrix comult, SparseVector eps);
  static Coalgebra from_constants(Field f, std::vector<std::string> basis,
                                  const std::vector<StructureConstant>& delta, SparseVector eps);

  Index dim() const { return names.size(); }
  /// ε as a 1 x dim matrix.
  Matrix counit_map() const { return Matrix::row(counit, dim()); }
  Matrix identity() const { return Matrix::identity(dim(), field); }
  Index index_of(const std::string& name) const;
  /// Human-readable name of a basis element of the k-th tensor power.
  std::string tensor_name(Index idx, unsigned power) const;
  /// Nonzero structure constants, ordered by (i, j, k).
  std::vector<StructureConstant> constants() const;
  std::string format(const SparseVector& v) const;
};

struct Algebra {
  Field field;
  std::vector<std::string> names;
  /// dim x dim^2
  Matrix mult;
  SparseVector unit;

  Algebra() = default;
  Algebra(Field f, std::vector<std::string> basis, Matrix m, SparseVector u);
  static Algebra from_constants(Field f, std::vector<std::string> basis,
                                const std::vector<StructureConstant>& mult, SparseVector unit);

  Index dim() const { return names.size(); }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  /// Matrix of y -> x y.
  Matrix left_mult(const SparseVector& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const SparseVector& x) const;
  Matrix unit_map() const;
};

struct CoalgebraMorphism {
  Coalgebra source;
  Coalgebra target;
  /// dim(target) x dim(source)
  Matrix matrix;
};

Report check_coalgebra(const Coalgebra& c);
Report check_algebra(const Algebra& a);
Report check_morphism(const CoalgebraMorphism& f);

bool is_setlike(const Coalgebra& c, const SparseVector& x);
/// Δ(I) ⊆ I⊗C + C⊗I and ε(I) = 0.
bool coideal_check(const Coalgebra& c, const Subspace& i);
/// Δ(D) ⊆ D⊗D.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& d);

struct DirectSum {
  Coalgebra sum;
  std::vector<Matrix> injections;
  std::vector<Matrix> projections;
};
DirectSum direct_sum(const std::vector<Coalgebra>& cs);

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);
Algebra dual_algebra(const Coalgebra& c);
Coalgebra matrix_coalgebra(Index n, const Field& field = Field());
Coalgebra setlike_coalgebra(const std::vector<std::string>& names, const Field& field = Field());
/// Comultiplication of the trivial coalgebra k.
Coalgebra ground_coalgebra(const Field& field = Field());

struct Quotient {
  Coalgebra quotient;
  /// dim(quotient) x dim(c); the coordinate projection onto the non-pivot
  /// coordinates of the coideal's echelon basis.
  Matrix projection;
};
/// Throws std::invalid_argument if i is not a coideal.
Quotient quotient_coalgebra(const Coalgebra& c, const Subspace& i);

/// Largest subcoalgebra contained in w.
Subspace subcoalgebra_closure(const Coalgebra& c, const Subspace& w);
/// Smallest subcoalgebra containing w.
Subspace generated_subcoalgebra(const Coalgebra& c, const Subspace& w);

struct Restriction {
  Coalgebra sub;
  /// dim(c) x dim(sub); columns are the echelon basis of d.
  Matrix inclusion;
};
/// Coalgebra structure on a subcoalgebra d, basis = echelon basis of d.
/// Throws std::invalid_argument if d is not a subcoalgebra.
Restriction restrict_to(const Coalgebra& c, const Subspace& d);

/// Structure transported along the basis change b'_j = Σ_i p_ij b_i.
Coalgebra transport(const Coalgebra& c, const Matrix& p);
/// True iff m is an invertible coalgebra morphism c -> d.
bool is_isomorphism(const Coalgebra& c, const Coalgebra& d, const Matrix& m);
/// Matrix sending each basis element of c to the equally named basis element
/// of d; throws if the name sets differ.
Matrix rename_map(const Coalgebra& c, const Coalgebra& d);

/// (Δ⊗id)Δ and (id⊗Δ)Δ.
Matrix delta_left(const Coalgebra& c);
Matrix delta_right(const Coalgebra& c);

}  // namespace coalg
