#include "coalg/convolution.hpp"

namespace coalg {

namespace {

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  return a.field == b.field && a.names == b.names && a.delta == b.delta && a.counit == b.counit;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.field == b.field && a.names == b.names && a.mult == b.mult && a.unit == b.unit;
}

void require_pair(const ConvMap& f, const ConvMap& g) {
  if (!same_coalgebra(f.source, g.source) || !same_algebra(f.target, g.target))
    throw std::invalid_argument("convolution of maps between different spaces");
}

ConvMap with_matrix(const ConvMap& like, Matrix m) { return {like.source, like.target, std::move(m)}; }

ConvMap geometric_inverse(const ConvMap& f, const ConvMap& g0, unsigned terms) {
  ConvMap u = conv_unit(f.source, f.target);
  ConvMap r = with_matrix(u, u.matrix - convolve(f, g0).matrix);
  ConvMap sum = u, power = u;
  for (unsigned n = 1; n <= terms; ++n) {
    power = convolve(power, r);
    sum.matrix = sum.matrix + power.matrix;
  }
  ConvMap h = convolve(g0, sum);
  if (!(convolve(f, h).matrix == u.matrix) || !(convolve(h, f).matrix == u.matrix))
    throw std::logic_error("convolution inverse failed verification");
  return h;
}

// Projection onto `part` along `rest`, as coordinates on the basis of `part`.
Matrix coordinates_along(const Matrix& part, const Subspace& rest, Index n) {
  std::vector<SparseVector> cols = part.columns();
  cols.insert(cols.end(), rest.basis().begin(), rest.basis().end());
  auto inv = solve_columns(Matrix::from_columns(n, cols), Matrix::identity(n));
  if (cols.size() != n || !inv) throw std::invalid_argument("subcoalgebra and complement do not split the carrier");
  Matrix out(part.cols(), n);
  for (Index j = 0; j < n; ++j) {
    std::vector<Entry> e;
    for (const auto& x : inv->column(j).entries())
      if (x.index < part.cols()) e.push_back(x);
    out.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return out;
}

}  // namespace

ConvMap convolve(const ConvMap& f, const ConvMap& g) {
  require_pair(f, g);
  return with_matrix(f, f.target.mult * tensor_compose(f.matrix, g.matrix, f.source.delta));
}

ConvMap conv_unit(const Coalgebra& c, const Algebra& a) {
  if (c.field != a.field) throw std::invalid_argument("coalgebra and algebra over different fields");
  Matrix m(a.dim(), c.dim());
  for (const auto& e : c.counit.entries()) m.set_column(e.index, a.unit.scaled(e.value));
  return {c, a, std::move(m)};
}

std::optional<SparseVector> algebra_inverse(const Algebra& a, const SparseVector& x) {
  auto y = solve(a.left_mult(x), a.unit);
  if (!y) return std::nullopt;
  if (!(a.multiply(*y, x) == a.unit)) return std::nullopt;
  return y;
}

ConvMap conv_inverse(const SimplyColored& sc, const ConvMap& f) {
  if (!same_coalgebra(sc.coalgebra, f.source)) throw std::invalid_argument("map is not defined on this coalgebra");
  auto coeffs = solve_columns(Matrix::from_columns(sc.dim(), sc.colors), sc.retraction);
  if (!coeffs) throw std::invalid_argument("image of the retraction is not spanned by the colors");
  std::vector<SparseVector> inverses;
  for (std::size_t g = 0; g < sc.colors.size(); ++g) {
    auto inv = algebra_inverse(f.target, f.matrix.apply(sc.colors[g]));
    if (!inv) throw NotInvertible("value on color " + sc.color_names[g] + " is not invertible", sc.color_names[g]);
    inverses.push_back(std::move(*inv));
  }
  Conilpotency cn = conilpotency(sc);
  if (!cn.conilpotent) throw std::invalid_argument("coalgebra is not conilpotent over its colors");
  ConvMap g0 = with_matrix(f, Matrix::from_columns(f.target.dim(), inverses) * *coeffs);
  return geometric_inverse(f, g0, cn.bound());
}

ConvMap conv_inverse_general(const ConvMap& f, const Subspace& f0, const Subspace& complement) {
  const Coalgebra& c = f.source;
  const Algebra& a = f.target;
  const Index n = c.dim();
  if (!is_subcoalgebra(c, f0)) throw std::invalid_argument("F0 is not a subcoalgebra");
  Restriction res = restrict_to(c, f0);
  Matrix coords = coordinates_along(res.inclusion, complement, n);
  Matrix pi = c.identity() - res.inclusion * coords;
  // least N with π^{⊗(N+1)}Δ^N = 0
  unsigned terms = 0;
  for (;; ++terms) {
    if (terms > n + 1) throw std::invalid_argument("iterated comultiplication never vanishes on the complement");
    bool vanishes = true;
    for (Index j = 0; j < n && vanishes; ++j)
      vanishes = apply_each(pi, iterate(c.delta, SparseVector::unit(j, c.field.one()), terms), terms + 1).is_zero();
    if (vanishes) break;
  }
  // invert f on F₀ by solving f₀⋆g = u and g⋆f₀ = u, linear in g
  const Index d0 = res.sub.dim(), ad = a.dim();
  ConvMap f0map{res.sub, a, f.matrix * res.inclusion};
  ConvMap u0 = conv_unit(res.sub, a);
  std::vector<SparseVector> columns;
  auto flat2 = [&](const Matrix& x, const Matrix& y) {
    VectorBuilder b;
    for (Index j = 0; j < d0; ++j) {
      for (const auto& e : x.column(j).entries()) b.add(j * ad + e.index, e.value);
      for (const auto& e : y.column(j).entries()) b.add((d0 + j) * ad + e.index, e.value);
    }
    return b.build();
  };
  for (Index j = 0; j < d0; ++j)
    for (Index i = 0; i < ad; ++i) {
      Matrix unit(ad, d0);
      unit.set_column(j, SparseVector::unit(i, a.field.one()));
      ConvMap g{res.sub, a, unit};
      columns.push_back(flat2(convolve(f0map, g).matrix, convolve(g, f0map).matrix));
    }
  auto sol = solve(Matrix::from_columns(2 * d0 * ad, columns), flat2(u0.matrix, u0.matrix));
  if (!sol) throw NotInvertible("restriction to F0 is not convolution invertible", "");
  Matrix g(ad, d0);
  std::vector<std::vector<Entry>> cols(d0);
  for (const auto& e : sol->entries()) cols[e.index / ad].push_back({e.index % ad, e.value});
  for (Index j = 0; j < d0; ++j) g.set_column(j, SparseVector::from_entries(std::move(cols[j])));
  return geometric_inverse(f, with_matrix(f, g * coords), terms);
}

Report check_bialgebra(const Bialgebra& b) {
  const Coalgebra& c = b.coalgebra;
  const Algebra& a = b.algebra;
  Report r;
  r.add("same carrier", c.field == a.field && c.names == a.names);
  if (!r.ok()) return r;
  r.append(check_coalgebra(c));
  r.append(check_algebra(a));
  r.add("unit is set-like", is_setlike(c, a.unit));
  const Index n = c.dim();
  std::string bad_delta, bad_eps;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      SparseVector bi = SparseVector::unit(i, c.field.one()), bj = SparseVector::unit(j, c.field.one());
      SparseVector prod = a.multiply(bi, bj);
      VectorBuilder rhs;
      for (const auto& x : c.delta.column(i).entries())
        for (const auto& y : c.delta.column(j).entries()) {
          SparseVector l = a.multiply(SparseVector::unit(x.index / n, c.field.one()),
                                      SparseVector::unit(y.index / n, c.field.one()));
          SparseVector rr = a.multiply(SparseVector::unit(x.index % n, c.field.one()),
                                       SparseVector::unit(y.index % n, c.field.one()));
          rhs.add(x.value * y.value, kron(l, rr, n));
        }
      if (bad_delta.empty() && !(c.delta.apply(prod) == rhs.build())) bad_delta = a.names[i] + "*" + a.names[j];
      Scalar lhs = c.field.zero();
      for (const auto& e : prod.entries()) lhs += e.value * c.counit.get(e.index);
      if (bad_eps.empty() && !(lhs == c.counit.get(i) * c.counit.get(j))) bad_eps = a.names[i] + "*" + a.names[j];
    }
  r.add("comultiplication is multiplicative", bad_delta.empty(), bad_delta);
  r.add("counit is multiplicative", bad_eps.empty(), bad_eps);
  return r;
}

ConvMap antipode(const Bialgebra& b, const SimplyColored& sc) {
  if (!same_coalgebra(b.coalgebra, sc.coalgebra)) throw std::invalid_argument("bialgebra and coloring disagree");
  const Algebra& a = b.algebra;
  auto color_of = [&](const SparseVector& v) -> std::optional<std::size_t> {
    for (std::size_t g = 0; g < sc.colors.size(); ++g)
      if (sc.colors[g] == v) return g;
    return std::nullopt;
  };
  if (!color_of(a.unit)) throw NoAntipode("the unit is not among the set-likes");
  for (std::size_t g = 0; g < sc.colors.size(); ++g)
    for (std::size_t h = 0; h < sc.colors.size(); ++h)
      if (!color_of(a.multiply(sc.colors[g], sc.colors[h])))
        throw NoAntipode("product " + sc.color_names[g] + "*" + sc.color_names[h] + " is not a set-like");
  Matrix span = Matrix::from_columns(sc.dim(), sc.colors);
  for (std::size_t g = 0; g < sc.colors.size(); ++g) {
    auto left = solve(a.left_mult(sc.colors[g]) * span, a.unit);
    auto right = solve(a.right_mult(sc.colors[g]) * span, a.unit);
    if (!left || !right) throw NoAntipode(sc.color_names[g] + " has no inverse among the set-likes");
  }
  return conv_inverse(sc, {b.coalgebra, a, b.coalgebra.identity()});
}

}  // namespace coalg
