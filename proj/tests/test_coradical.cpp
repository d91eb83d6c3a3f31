#include "coalg/coradical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace coalg;
using coalg::testing::Rng;

namespace {

SparseVector e(Index i) { return SparseVector::unit(i); }

Coalgebra primitive_line(const Field& f = Field()) {
  return Coalgebra::from_constants(f, {"g", "x"}, {{0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, e(0));
}

// g, x1, x2 with Δ(x2) = g⊗x2 + x1⊗x1 + x2⊗g
Coalgebra divided_powers(const Field& f = Field()) {
  return Coalgebra::from_constants(
      f, {"g", "x1", "x2"},
      {{0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 0, 2, 1}, {2, 1, 1, 1}, {2, 2, 0, 1}}, e(0));
}

// Dual coalgebra of Q(i): Δ(a) = a⊗a - b⊗b, Δ(b) = a⊗b + b⊗a
Coalgebra gaussian(const Field& f = Field()) {
  return Coalgebra::from_constants(f, {"a", "b"}, {{0, 0, 0, 1}, {0, 1, 1, -1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, e(0));
}

Algebra truncated_poly(Index n, const Field& f = Field()) {
  std::vector<std::string> names;
  std::vector<StructureConstant> m;
  for (Index i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    for (Index j = 0; i + j < n; ++j) m.emplace_back(i, j, i + j, 1);
  }
  return Algebra::from_constants(f, names, m, e(0));
}

}  // namespace

TEST(Wedge, Examples) {
  Coalgebra c = primitive_line();
  Subspace full = Subspace::full(2), g = Subspace::span(2, {e(0)}), zero(2);
  EXPECT_EQ(wedge(c, full, full), full);
  EXPECT_EQ(wedge(c, g, g), full);
  EXPECT_EQ(wedge(c, zero, zero), zero);
  EXPECT_EQ(wedge_via_quotient(c, g, g), full);
  EXPECT_EQ(wedge_via_quotient(c, zero, zero), zero);
}

TEST(Wedge, RoutesAgreeAndAssociative) {
  Rng rng(31);
  std::vector<Coalgebra> bases{primitive_line(), divided_powers(), matrix_coalgebra(2), gaussian(),
                               direct_sum({primitive_line(), setlike_coalgebra({"h", "k"})}).sum};
  for (int t = 0; t < 40; ++t) {
    Coalgebra c = transport(bases[t % bases.size()], rng.invertible(Field(), bases[t % bases.size()].dim()));
    Subspace x = rng.subspace(Field(), c.dim()), y = rng.subspace(Field(), c.dim()), z = rng.subspace(Field(), c.dim());
    EXPECT_EQ(wedge(c, x, y), wedge_via_quotient(c, x, y));
    EXPECT_EQ(wedge(c, wedge(c, x, y), z), wedge(c, x, wedge(c, y, z)));
  }
}

TEST(Radical, Examples) {
  Algebra m2 = dual_algebra(matrix_coalgebra(2));
  EXPECT_TRUE(jacobson_radical(m2).is_zero());
  Algebra dual_numbers = truncated_poly(2);
  EXPECT_EQ(jacobson_radical(dual_numbers), Subspace::span(2, {e(1)}));
  EXPECT_TRUE(jacobson_radical(dual_algebra(setlike_coalgebra({"g", "h"}))).is_zero());
  EXPECT_EQ(jacobson_radical(truncated_poly(4)), Subspace::span(4, {e(1), e(2), e(3)}));
  EXPECT_EQ(jacobson_radical(truncated_poly(3, Field::prime(5))), Subspace::span(3, {e(1), e(2)}));
}

TEST(Radical, RefusesSmallCharacteristic) {
  EXPECT_THROW(jacobson_radical(truncated_poly(3, Field::prime(3))), UnsupportedCharacteristic);
  EXPECT_THROW(coradical(matrix_coalgebra(2, Field::prime(3))), UnsupportedCharacteristic);
  EXPECT_NO_THROW(coradical(matrix_coalgebra(2, Field::prime(5))));
}

TEST(Coradical, Examples) {
  EXPECT_EQ(coradical(setlike_coalgebra({"g", "h", "k"})), Subspace::full(3));
  EXPECT_EQ(coradical(primitive_line()), Subspace::span(2, {e(0)}));
  EXPECT_EQ(coradical(matrix_coalgebra(2)), Subspace::full(4));
  EXPECT_EQ(coradical(divided_powers()), Subspace::span(3, {e(0)}));
  DirectSum d = direct_sum({primitive_line(), matrix_coalgebra(2)});
  EXPECT_EQ(coradical(d.sum), Subspace::span(6, {e(0), e(2), e(3), e(4), e(5)}));
}

TEST(Coradical, InvariantUnderBasisChange) {
  Rng rng(17);
  Coalgebra c = direct_sum({divided_powers(), matrix_coalgebra(2)}).sum;
  Subspace c0 = coradical(c);
  for (int t = 0; t < 5; ++t) {
    Matrix p = rng.invertible(Field(), c.dim());
    Coalgebra tc = transport(c, p);
    auto pinv = solve_columns(p, c.identity());
    EXPECT_EQ(coradical(tc), image_of(*pinv, c0));
  }
}

TEST(Filtration, Examples) {
  Filtration f = coradical_filtration(setlike_coalgebra({"g", "h"}));
  EXPECT_EQ(f.terms.size(), 1u);
  EXPECT_TRUE(f.exhaustive);
  Filtration p = coradical_filtration(primitive_line());
  ASSERT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.terms[0], Subspace::span(2, {e(0)}));
  EXPECT_TRUE(p.terms[1].is_full());
  EXPECT_TRUE(p.exhaustive);
  Filtration d = coradical_filtration(divided_powers());
  ASSERT_EQ(d.terms.size(), 3u);
  EXPECT_EQ(d.terms[1], Subspace::span(3, {e(0), e(1)}));
}

TEST(Pointed, Examples) {
  PointedResult m = is_pointed(matrix_coalgebra(2));
  EXPECT_FALSE(m.pointed());
  EXPECT_EQ(m.verdict, PointedVerdict::not_pointed);
  PointedResult s = is_pointed(setlike_coalgebra({"g", "h"}));
  EXPECT_TRUE(s.pointed());
  EXPECT_EQ(s.setlikes, (std::vector<SparseVector>{e(0), e(1)}));
  EXPECT_TRUE(is_pointed(matrix_coalgebra(1)).pointed());
  for (Index n = 2; n <= 4; ++n) EXPECT_FALSE(is_pointed(matrix_coalgebra(n)).pointed());
}

TEST(Pointed, SplittingDependsOnField) {
  PointedResult q = is_pointed(gaussian());
  EXPECT_EQ(q.verdict, PointedVerdict::not_split);
  PointedResult f7 = is_pointed(gaussian(Field::prime(7)));
  EXPECT_EQ(f7.verdict, PointedVerdict::not_split);
  PointedResult f5 = is_pointed(gaussian(Field::prime(5)));
  ASSERT_TRUE(f5.pointed());
  ASSERT_EQ(f5.setlikes.size(), 2u);
  Coalgebra c = gaussian(Field::prime(5));
  for (const auto& g : f5.setlikes) EXPECT_TRUE(is_setlike(c, g));
}

TEST(Pointed, HiddenSetlikesUnderBasisChange) {
  Rng rng(23);
  Coalgebra base = direct_sum({setlike_coalgebra({"h", "k"}), primitive_line()}).sum;
  for (int t = 0; t < 8; ++t) {
    Coalgebra c = transport(base, rng.invertible(Field(), base.dim()));
    PointedResult r = is_pointed(c);
    ASSERT_TRUE(r.pointed());
    EXPECT_EQ(r.setlikes.size(), 3u);
    EXPECT_EQ(Subspace::span(c.dim(), r.setlikes), r.coradical);
    for (const auto& g : r.setlikes) {
      EXPECT_TRUE(is_setlike(c, g));
      EXPECT_TRUE(is_subcoalgebra(c, Subspace::span(c.dim(), {g})));
    }
  }
}

TEST(Pointed, SurjectiveImageLemma) {
  // quotient of a pointed coalgebra: f(C_0) = D_0 and D pointed
  Coalgebra c = divided_powers();
  Quotient q = quotient_coalgebra(c, Subspace::span(3, {e(1)}));
  PointedResult r = is_pointed(q.quotient);
  EXPECT_TRUE(r.pointed());
  EXPECT_EQ(image_of(q.projection, coradical(c)), coradical(q.quotient));
  Coalgebra gh = direct_sum({primitive_line(), setlike_coalgebra({"h"})}).sum;
  Quotient q2 = quotient_coalgebra(gh, Subspace::span(3, {e(0) - e(2)}));
  EXPECT_TRUE(is_pointed(q2.quotient).pointed());
  EXPECT_EQ(image_of(q2.projection, coradical(gh)), coradical(q2.quotient));
}
