#include "coalg/coradical.hpp"

#include <algorithm>

namespace coalg {

namespace {

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.modulus() != 0 || b.modulus() != 0) return a.residue_value() < b.residue_value();
  return a.rational() < b.rational();
}

Matrix functionals(const Subspace& s) {
  // rows = basis vectors, as a dim(s) x ambient matrix
  return Matrix::from_columns(s.ambient(), s.basis()).transpose();
}

}  // namespace

bool vector_less(const SparseVector& a, const SparseVector& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i].index != y[i].index) return x[i].index < y[i].index;
    if (!(x[i].value == y[i].value)) return scalar_less(x[i].value, y[i].value);
  }
  return x.size() < y.size();
}

Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y) {
  if (x.ambient() != c.dim() || y.ambient() != c.dim()) throw std::invalid_argument("wedge: ambient mismatch");
  Subspace full = Subspace::full(c.dim(), c.field);
  return preimage(c.delta, sum(tensor(full, y), tensor(x, full)));
}

Subspace wedge_via_quotient(const Coalgebra& c, const Subspace& x, const Subspace& y) {
  if (x.ambient() != c.dim() || y.ambient() != c.dim()) throw std::invalid_argument("wedge: ambient mismatch");
  return kernel(tensor_compose(x.quotient_map(), y.quotient_map(), c.delta));
}

Subspace jacobson_radical(const Algebra& a) {
  const Index n = a.dim();
  if (!a.field.is_rational() && a.field.characteristic() <= n)
    throw UnsupportedCharacteristic("radical via the trace form needs characteristic 0 or p > " + std::to_string(n) +
                                    "; field is " + a.field.name());
  // t_k = tr(L_{b_k}); the form is (b_i, b_j) -> Σ_k (b_i b_j)_k t_k.
  std::vector<Scalar> t(n, a.field.zero());
  for (Index k = 0; k < n; ++k)
    for (Index b = 0; b < n; ++b) t[k] += a.mult.at(b, k * n + b);
  Matrix form(n, n);
  for (Index i = 0; i < n; ++i) {
    std::vector<Entry> col;
    for (Index j = 0; j < n; ++j) {
      Scalar s = a.field.zero();
      for (const auto& e : a.mult.column(i * n + j).entries()) s += e.value * t[e.index];
      if (!s.is_zero()) col.push_back({j, s});
    }
    form.set_column(i, SparseVector::from_entries(std::move(col)));
  }
  Subspace rad = kernel(form);
  for (const auto& r : rad.basis())
    for (Index b = 0; b < n; ++b) {
      SparseVector eb = SparseVector::unit(b, a.field.one());
      if (!rad.contains(a.multiply(r, eb)) || !rad.contains(a.multiply(eb, r)))
        throw std::logic_error("trace-form kernel is not an ideal");
    }
  Subspace power = rad;
  for (Index k = 0; !power.is_zero(); ++k) {
    if (k > n) throw std::logic_error("trace-form kernel is not nilpotent");
    Subspace next(n);
    for (const auto& p : power.basis())
      for (const auto& r : rad.basis()) next.insert(a.multiply(p, r));
    power = next;
  }
  return rad;
}

Subspace coradical(const Coalgebra& c) {
  Subspace j = jacobson_radical(dual_algebra(c));
  Subspace c0 = kernel(functionals(j));
  if (!(subcoalgebra_closure(c, c0) == c0)) throw std::logic_error("coradical is not a subcoalgebra");
  return c0;
}

Filtration coradical_filtration(const Coalgebra& c) {
  Filtration f;
  Subspace c0 = coradical(c);
  f.terms.push_back(c0);
  for (;;) {
    Subspace next = wedge_via_quotient(c, f.terms.back(), c0);
    if (next == f.terms.back()) break;
    if (!next.contains(f.terms.back())) throw std::logic_error("filtration is not ascending");
    f.terms.push_back(std::move(next));
  }
  f.exhaustive = f.terms.back().is_full();
  return f;
}

Poly minimal_polynomial(const Algebra& a, const SparseVector& x, const SparseVector& e) {
  ColumnEchelon ech(a.dim() + 1);
  SparseVector p = e;
  for (Index k = 0; k <= a.dim(); ++k) {
    if (auto z = ech.add(p, SparseVector::unit(k, a.field.one()))) {
      std::vector<Scalar> coeffs(k + 1, a.field.zero());
      for (const auto& en : z->entries()) coeffs[en.index] = en.value;
      return Poly(std::move(coeffs)).monic();
    }
    p = a.multiply(x, p);
  }
  throw std::logic_error("minimal polynomial search exceeded the dimension");
}

PointedResult is_pointed(const Coalgebra& c) {
  PointedResult res;
  res.coradical = coradical(c);
  Restriction r = restrict_to(c, res.coradical);
  Algebra a = dual_algebra(r.sub);
  const Index n = a.dim();
  if (!(a.mult == a.mult * swap_map(n, n))) {
    res.verdict = PointedVerdict::not_pointed;
    res.reason = "dual of the coradical is not commutative";
    return res;
  }
  auto block_dim = [&](const SparseVector& e) { return rank(a.left_mult(e)); };
  std::vector<SparseVector> blocks{a.unit};
  for (Index b = 0; b < n; ++b) {
    SparseVector eb = SparseVector::unit(b, a.field.one());
    std::vector<SparseVector> next;
    for (const auto& e : blocks) {
      if (block_dim(e) == 1) {
        next.push_back(e);
        continue;
      }
      SparseVector y = a.multiply(eb, e);
      Poly mp = minimal_polynomial(a, y, e);
      RootResult roots = roots_in_field(mp, a.field);
      if (!roots.split) {
        res.verdict = PointedVerdict::not_split;
        res.reason = "multiplication by " + a.names[b] + " has an eigenvalue outside " + a.field.name();
        return res;
      }
      if (roots.roots.size() != static_cast<std::size_t>(mp.degree()))
        throw std::logic_error("dual of the coradical is not semisimple");
      if (roots.roots.size() == 1) {
        next.push_back(e);
        continue;
      }
      for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        SparseVector idem = e;
        for (std::size_t j = 0; j < roots.roots.size(); ++j) {
          if (i == j) continue;
          SparseVector factor = y;
          factor.axpy(-roots.roots[j], e);
          idem = a.multiply(factor, idem).scaled((roots.roots[i] - roots.roots[j]).inverse());
        }
        next.push_back(idem);
      }
    }
    blocks = std::move(next);
  }
  for (const auto& e : blocks)
    if (block_dim(e) != 1) throw std::logic_error("idempotent splitting left a block of dimension > 1");
  // Each primitive idempotent e gives a character χ (φ e = χ(φ) e); the
  // set-like is Σ_k χ(d_k*) d_k.
  for (const auto& e : blocks) {
    Index lead = e.leading_index();
    Scalar le = e.leading_value();
    std::vector<Entry> g;
    for (Index k = 0; k < n; ++k) {
      Scalar chi = a.multiply(SparseVector::unit(k, a.field.one()), e).get(lead) / le;
      if (!chi.is_zero()) g.push_back({k, chi});
    }
    SparseVector gc = r.inclusion.apply(SparseVector::from_entries(std::move(g)));
    if (!is_setlike(c, gc)) {
      res.verdict = PointedVerdict::not_pointed;
      res.reason = "block of the coradical gives no set-like element";
      res.setlikes.clear();
      return res;
    }
    res.setlikes.push_back(std::move(gc));
  }
  std::sort(res.setlikes.begin(), res.setlikes.end(), vector_less);
  res.verdict = PointedVerdict::pointed;
  return res;
}

}  // namespace coalg
