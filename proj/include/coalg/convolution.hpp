#pragma once

#include "coalg/colored.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coalg {

/// Element of Hom(C, A): dim A x dim C.
struct ConvMap {
  Coalgebra source;
  Algebra target;
  Matrix matrix;
};

/// (f ⋆ g) = m∘(f⊗g)∘Δ.
ConvMap convolve(const ConvMap& f, const ConvMap& g);
/// x -> ε(x) 1_A.
ConvMap conv_unit(const Coalgebra& c, const Algebra& a);

/// Refusal of conv_inverse: f(g) has no two-sided inverse in A.
class NotInvertible : public std::runtime_error {
 public:
  NotInvertible(const std::string& what, std::string color) : std::runtime_error(what), color(std::move(color)) {}
  std::string color;
};

/// Two-sided inverse of a in A, if any.
std::optional<SparseVector> algebra_inverse(const Algebra& a, const SparseVector& x);

/// Convolution inverse through the colors: g₀ = f(g)^{-1} on each color,
/// extended by zero on ker δ, then h = g₀ ⋆ Σ_{n≤N} (u - f⋆g₀)^{⋆n} with N the
/// conilpotency bound. Throws NotInvertible naming the first color whose
/// value is not invertible; the result is checked on both sides.
ConvMap conv_inverse(const SimplyColored& sc, const ConvMap& f);

/// Same scheme for an arbitrary subcoalgebra F₀ with complement M: f|_{F₀} is
/// inverted by an exact linear solve in Hom(F₀, A), and the series length is
/// the least N with π_M^{⊗(N+1)}Δ^N = 0 (checked before use). Throws
/// std::invalid_argument if F₀ is not a subcoalgebra, the pair does not
/// split C, or the vanishing condition fails; NotInvertible if f|_{F₀} has
/// no inverse.
ConvMap conv_inverse_general(const ConvMap& f, const Subspace& f0, const Subspace& complement);

struct Bialgebra {
  Coalgebra coalgebra;
  Algebra algebra;
};

/// Unit set-like, Δ and ε multiplicative, plus the algebra and coalgebra
/// axioms.
Report check_bialgebra(const Bialgebra& b);

/// Refusal of antipode: the set-likes are not a group.
class NoAntipode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks that the colors form a group under the product (unit, closure,
/// inverses inside span(G)) and returns the convolution inverse of id.
ConvMap antipode(const Bialgebra& b, const SimplyColored& sc);

}  // namespace coalg
