#pragma once

#include "coalg/coalgebra.hpp"
#include "coalg/coradical.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

/// A coalgebra with a retraction δ onto the span of a chosen family of
/// set-like elements (the colors). δ is stored as an endomorphism of C.
struct SimplyColored {
  Coalgebra coalgebra;
  std::vector<SparseVector> colors;
  std::vector<std::string> color_names;
  Matrix retraction;

  Index dim() const { return coalgebra.dim(); }
  /// ker δ, in echelon form.
  Subspace coideal() const { return kernel(retraction); }
  Subspace color_span() const { return Subspace::span(dim(), colors); }
  std::size_t color_index(const std::string& name) const;
};

/// Colors are the set-like basis vectors named in `colors`; δ is given by its
/// matrix.
SimplyColored make_simply_colored(Coalgebra c, const std::vector<std::string>& colors, Matrix retraction);

/// Idempotence, counit and comultiplicativity of δ, set-likeness of the
/// colors, image(δ) = span(colors) and C = span(colors) ⊕ ker δ.
Report check_retraction(const SimplyColored& sc);

struct Coactions {
  Matrix left;   // (δ⊗id)Δ
  Matrix right;  // (id⊗δ)Δ
};
Coactions coactions(const SimplyColored& sc);

/// Every comodule, compatibility and base-coaction identity induced by the
/// retraction, each as an exact matrix equation.
Report verify_bicomodule(const SimplyColored& sc);

/// Δ̄ = Δ - ω_l - ω_r as a dim^2 x dim matrix on all of C.
Matrix reduced_delta(const SimplyColored& sc);
/// (Δ̄⊗id)Δ̄ = (id⊗Δ̄)Δ̄.
bool check_reduced_coassoc(const SimplyColored& sc);

/// Left-iterated power Δ̄^n(x) = (Δ̄⊗id^{n-1})Δ̄^{n-1}(x) in C^{⊗(n+1)};
/// n = 0 is the identity.
SparseVector iterate(const Matrix& op, const SparseVector& x, unsigned n);

struct Conilpotency {
  bool conilpotent = false;
  /// K_1 ⊂ K_2 ⊂ ... with K_n = ker(Δ̄^n) ∩ ker δ, strictly increasing.
  std::vector<Subspace> kernel_chain;
  /// Echelon basis of ker δ with the least n such that Δ̄^n kills it
  /// (0 when the chain never reaches it).
  std::vector<SparseVector> basis;
  std::vector<unsigned> index;
  unsigned bound() const { return static_cast<unsigned>(kernel_chain.size()); }
};
Conilpotency conilpotency(const SimplyColored& sc);
/// Least n with Δ̄^n(x) = 0 for x in ker δ, read off a computed chain; 0 for
/// x = 0 and throws if x is not killed by any term.
unsigned conilpotency_index(const Conilpotency& c, const SparseVector& x);

struct OrthoIdempotents {
  /// e_g as functionals on C, one per color.
  std::vector<SparseVector> functionals;
};
/// e_g = (coefficient of g) ∘ δ; verified orthonormal in the dual algebra.
OrthoIdempotents ortho_idempotents(const SimplyColored& sc);

/// Component ᵍCʰ = {x : ω_l(x) = g⊗x, ω_r(x) = x⊗h}, keyed by color indices
/// (g, h). Verifies the direct sum, the graded comultiplication and the
/// splitting of ker δ along the components.
std::map<std::pair<std::size_t, std::size_t>, Subspace> bigraded_decomposition(const SimplyColored& sc);

/// Simply colored structure with G = the set-likes of C_0 and the given
/// retraction; throws std::invalid_argument if C is not pointed or δ is not a
/// retraction onto C_0.
SimplyColored from_pointed_with_splitting(const Coalgebra& c, const Matrix& retraction);

/// Coradical(C) = span(G), and every set-like found by is_pointed lies in
/// span(G).
Report verify_pointed(const SimplyColored& sc);

/// π^{⊗(n+1)} Δ̄^n = π^{⊗(n+1)} Δ^n on ker δ, with π = id - δ and n the number
/// of applications.
bool projection_identity_check(const SimplyColored& sc, unsigned n);

/// Counit-free G-bigraded coalgebra on a homogeneous basis.
struct ReducedColored {
  Field field;
  std::vector<std::string> colors;
  std::vector<std::string> names;
  /// (left color, right color) of each basis element.
  std::vector<std::pair<std::size_t, std::size_t>> degree;
  Matrix delta_bar;

  Index dim() const { return names.size(); }
  std::map<std::pair<std::size_t, std::size_t>, Subspace> components() const;
};

/// Graded comultiplication, coassociativity and conilpotency of Δ̄.
Report check_reduced(const ReducedColored& rc);

ReducedColored reduce(const SimplyColored& sc);
/// Columns: the carrier vectors behind the basis of reduce(sc), in order.
Matrix reduced_basis(const SimplyColored& sc);
/// Basis: colors first, then the reduced basis. Throws on invalid input.
SimplyColored unreduce(const ReducedColored& rc);

/// Pair (f̄, i) between reduced objects.
struct ColoredMorphism {
  Matrix fbar;
  std::vector<std::size_t> color_map;
};
/// Grading along the color map and compatibility with Δ̄.
Report check_colored_morphism(const ColoredMorphism& f, const ReducedColored& src, const ReducedColored& dst);

/// Coalgebra morphism unreduce(src) -> unreduce(dst) with g -> i(g) and f̄ on
/// the coideal. Throws std::invalid_argument on incompatible input.
CoalgebraMorphism extend_morphism(const ColoredMorphism& f, const ReducedColored& src, const ReducedColored& dst);

/// Colors g⊗s, retraction δ_C⊗δ_D.
SimplyColored tensor_colored(const SimplyColored& a, const SimplyColored& b);

/// The full validation suite for a simply colored instance.
Report validate_colored(const SimplyColored& sc);

}  // namespace coalg
