#pragma once

#include "coalg/coalgebra.hpp"
#include "coalg/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coalg {

/// Thrown when the trace-form radical would be unreliable (GF(p), p <= dim).
class UnsupportedCharacteristic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// X ∧ Y as the preimage Δ^{-1}(C⊗Y + X⊗C), with the sum built explicitly.
Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y);
/// X ∧ Y as ker((π_X ⊗ π_Y)∘Δ).
Subspace wedge_via_quotient(const Coalgebra& c, const Subspace& x, const Subspace& y);

/// Radical of a finite-dimensional algebra: kernel of the trace form
/// (x, y) -> tr(L_xy), checked to be a nilpotent two-sided ideal.
Subspace jacobson_radical(const Algebra& a);

/// Annihilator of the radical of the dual algebra.
Subspace coradical(const Coalgebra& c);

struct Filtration {
  std::vector<Subspace> terms;
  bool exhaustive = false;
};
/// C_0 = coradical, C_n = C_{n-1} ∧ C_0, up to the first repeat.
Filtration coradical_filtration(const Coalgebra& c);

enum class PointedVerdict { pointed, not_pointed, not_split };

struct PointedResult {
  PointedVerdict verdict = PointedVerdict::not_pointed;
  /// Basis of the coradical made of set-like elements (pointed case only).
  std::vector<SparseVector> setlikes;
  Subspace coradical;
  std::string reason;
  bool pointed() const { return verdict == PointedVerdict::pointed; }
};

/// Decides whether the coradical is spanned by set-like elements over the
/// ground field. The dual of C_0 is split into one-dimensional blocks by
/// eigenspaces of multiplication operators; a multiplication operator whose
/// minimal polynomial does not split yields PointedVerdict::not_split.
PointedResult is_pointed(const Coalgebra& c);

/// Minimal polynomial of x inside the subalgebra with unit e (x = x e).
Poly minimal_polynomial(const Algebra& a, const SparseVector& x, const SparseVector& e);

/// Canonical order on vectors used for deterministic output.
bool vector_less(const SparseVector& a, const SparseVector& b);

}  // namespace coalg
