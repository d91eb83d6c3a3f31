#pragma once

#include "coalg/constructions.hpp"

#include <string>
#include <vector>

namespace coalg {

struct ColoredCoproduct {
  SimplyColored sum;
  /// dim(sum) x dim(summand k)
  std::vector<Matrix> injections;
};

/// Direct sum with colors concatenated and δ block-diagonal. If basis or
/// color names collide across summands, every name of summand k gets the
/// suffix "_k" (1-based). Throws std::invalid_argument on an empty list or
/// mixed fields.
ColoredCoproduct coproduct(const std::vector<SimplyColored>& scs);

struct Equalizer {
  /// largest subcoalgebra inside ker(f - g)
  Subspace subspace;
  /// the subcoalgebra on the echelon basis of `subspace`, δ restricted
  SimplyColored object;
  /// dim(source) x dim(subspace)
  Matrix inclusion;
};

/// Throws std::invalid_argument unless f and g are parallel maps out of
/// `sc`. Throws std::logic_error if δ does not restrict.
Equalizer equalizer(const SimplyColored& sc, const CoalgebraMorphism& f, const CoalgebraMorphism& g);

struct Coequalizer {
  ReducedColored object;
  /// (p, color classes) from the target of the pair
  ColoredMorphism projection;
};

/// Coequalizer of (f, a), (g, b): src -> dst. Colors of dst are merged along
/// a(x) ~ b(x); each class is named by its first member and classes are
/// ordered by first member. dst is regraded by classes and divided by
/// Im(f̄ - ḡ), keeping the basis elements of dst at the non-pivot
/// coordinates. Throws std::invalid_argument if either input is not a valid
/// colored morphism, std::logic_error if an internal verification fails.
Coequalizer coequalizer_reduced(const ColoredMorphism& f, const ColoredMorphism& g, const ReducedColored& src,
                                const ReducedColored& dst);

/// Color classes of a ~ b over `count` colors: class index of each color.
std::vector<std::size_t> merge_colors(std::size_t count, const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b);

struct TruncatedProduct {
  ReducedColored object;
  std::vector<ColoredMorphism> projections;
  unsigned max_words = 0;
  /// Only cones whose filtration degree fits max_words are guaranteed to
  /// factor.
  bool approximate = true;
};

/// Largest sub-object of the word-truncated cotensor coalgebra on the
/// colored product space over which every projection is a morphism. Colors
/// are tuples, first factor most significant, named "(g,h)". Throws
/// std::invalid_argument on an empty list, mixed fields, max_words = 0 or an
/// invalid factor.
TruncatedProduct product_truncated(const std::vector<ReducedColored>& rcs, unsigned max_words);

}  // namespace coalg
