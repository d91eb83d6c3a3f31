#pragma once

#include "coalg/colored.hpp"

#include <string>
#include <vector>

namespace coalg {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
};

/// Directed multigraph; loops and parallel arrows allowed.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& name) const;
  /// Throws on duplicate names or dangling endpoints.
  void validate() const;
};

/// Paths as arrow index sequences in traversal order (first arrow first).
std::vector<std::vector<std::size_t>> quiver_paths(const Quiver& q, unsigned length);

/// Name of a path: arrow names joined by '.', later arrow first ("b.a").
std::string path_name(const Quiver& q, const std::vector<std::size_t>& path);

/// Paths of length <= max_len; vertices first, then paths by length and by
/// arrow sequence in written order. A path p from u to w has
/// Δ(p) = w⊗p + Σ (later part)⊗(earlier part) + p⊗u. Colors are the
/// vertices, δ projects onto them.
SimplyColored path_coalgebra(const Quiver& q, unsigned max_len, const Field& field = Field());
/// Path lengths in the basis order of path_coalgebra.
std::vector<unsigned> path_lengths(const Quiver& q, unsigned max_len);

struct GradedCoalgebra {
  Coalgebra coalgebra;
  std::vector<unsigned> degree;
};

/// Δ(C(n)) ⊆ Σ_{i+j=n} C(i)⊗C(j) on basis vectors and ε = 0 in positive
/// degree.
Report check_grading(const GradedCoalgebra& g);

/// Degree-0 basis vectors as colors, δ the degree-0 projection. Throws
/// std::invalid_argument if the grading fails or a degree-0 basis vector is
/// not set-like.
SimplyColored space_like_check(const GradedCoalgebra& g);

GradedCoalgebra path_graded(const Quiver& q, unsigned max_len, const Field& field = Field());

/// Bicomodule over a base coalgebra S: ρ_l: M -> S⊗M, ρ_r: M -> M⊗S.
struct Bicomodule {
  Coalgebra base;
  std::vector<std::string> names;
  Matrix left;
  Matrix right;

  Index dim() const { return names.size(); }
};

/// Over the set-like coalgebra on `colors`, with basis element i in
/// component (left color, right color) = degree[i].
Bicomodule colored_bicomodule(const Field& field, const std::vector<std::string>& colors,
                              const std::vector<std::string>& names,
                              const std::vector<std::pair<std::size_t, std::size_t>>& degree);

/// Coassociativity and counit of both coactions and their commutation.
Report check_bicomodule(const Bicomodule& m);

/// M□N = ker(ρ_R⊗id - id⊗ρ_L) inside M⊗N, using the right coaction of `m`
/// and the left coaction of `n`.
Subspace cotensor(const Bicomodule& m, const Bicomodule& n);

/// M□N as a bicomodule on the echelon basis of the cotensor subspace, with
/// the left coaction of M and the right coaction of N.
struct CotensorProduct {
  Bicomodule bicomodule;
  /// columns: basis vectors of M□N inside M⊗N
  Matrix inclusion;
};
CotensorProduct cotensor_product(const Bicomodule& m, const Bicomodule& n);

/// Truncated CoT_S(M) = S ⊕ M ⊕ M□M ⊕ ... ⊕ M^{□L} with deconcatenation.
struct CotensorCoalgebra {
  SimplyColored colored;
  Bicomodule module;
  unsigned max_words = 0;
  /// word length of each basis element
  std::vector<unsigned> word_length;
  /// first basis index of each word length (size max_words + 2)
  std::vector<Index> offset;
  /// echelon basis of M^{□n} inside M^{⊗n}, for n = 0..max_words (n = 0 is S)
  std::vector<Subspace> words;
};

/// Requires a set-like base; its basis vectors become the colors.
CotensorCoalgebra cotensor_coalgebra(const Bicomodule& m, unsigned max_words);
GradedCoalgebra word_graded(const CotensorCoalgebra& t);

/// Coordinates of v ∈ M^{⊗n} in the basis of M^{□n}, as a carrier vector of
/// the cotensor coalgebra. Throws if v is not in M^{□n}.
SparseVector embed_word(const CotensorCoalgebra& t, unsigned n, const SparseVector& v);

struct CofreeMap {
  CotensorCoalgebra target;
  CoalgebraMorphism map;
};

/// The coalgebra map F: C -> CoT_{C[S]}(V) with π_V∘F = f on ker δ:
/// F(g) = φ(g), and the word-length-n part of F(x) is f^{⊗n}Δ̄^{n-1}(x) for x
/// in ker δ. `f` is dim V x dim C; only its restriction to ker δ is used.
/// Throws std::invalid_argument if f does not respect the bigradings along φ
/// or max_words is below the conilpotency bound.
CofreeMap cofree_universal_map(const SimplyColored& c, const Bicomodule& v, const Matrix& f,
                               const std::vector<std::size_t>& phi, unsigned max_words);

/// Projection of the cotensor coalgebra onto its word-length-1 part M.
Matrix word_projection(const CotensorCoalgebra& t);

}  // namespace coalg
