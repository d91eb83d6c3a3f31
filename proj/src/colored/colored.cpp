#include "coalg/colored.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalg {

namespace {

std::string column_witness(const Coalgebra& c, const Matrix& a, const Matrix& b) {
  Index j = a.first_difference(b);
  return j < a.cols() ? c.names[j] : std::string();
}

std::string vector_name(const Coalgebra& c, const SparseVector& v) {
  if (v.nnz() == 1 && v.leading_value().is_one()) return c.names[v.leading_index()];
  return "(" + c.format(v) + ")";
}

// K_n = ker(op^n) on span(basis), for n = 1, 2, ... until the chain stops
// growing or exhausts the span. Returned subspaces live in `ambient`.
// op^n = (op^(n-1) ⊗ id) op, so ker op^n = op^-1(ker op^(n-1) ⊗ V) and no
// tensor power beyond V ⊗ V is ever formed.
std::vector<Subspace> kernel_chain(const Matrix& op, const std::vector<SparseVector>& basis, Index ambient,
                                   const Field& field, bool& exhausted) {
  std::vector<Subspace> chain;
  const Subspace span = Subspace::span(ambient, basis);
  const Subspace all = Subspace::full(ambient, field);
  Subspace whole(ambient), prev(ambient);
  exhausted = basis.empty();
  while (!exhausted) {
    whole = preimage(op, tensor(whole, all));
    Subspace k = intersect(whole, span);
    if (k == prev) break;
    chain.push_back(k);
    prev = k;
    exhausted = k.dim() == span.dim();
  }
  return chain;
}

Matrix retraction_coordinates(const SimplyColored& sc) {
  // k x n matrix: coefficients of δ(x) on the colors
  Matrix g = Matrix::from_columns(sc.dim(), sc.colors);
  auto coeffs = solve_columns(g, sc.retraction);
  if (!coeffs) throw std::invalid_argument("image of the retraction is not spanned by the colors");
  return *coeffs;
}

}  // namespace

std::size_t SimplyColored::color_index(const std::string& name) const {
  auto it = std::find(color_names.begin(), color_names.end(), name);
  if (it == color_names.end()) throw std::invalid_argument("unknown color '" + name + "'");
  return it - color_names.begin();
}

SimplyColored make_simply_colored(Coalgebra c, const std::vector<std::string>& colors, Matrix retraction) {
  if (retraction.rows() != c.dim() || retraction.cols() != c.dim())
    throw std::invalid_argument("retraction has wrong shape");
  SimplyColored sc;
  for (const auto& name : colors) {
    if (std::find(sc.color_names.begin(), sc.color_names.end(), name) != sc.color_names.end())
      throw std::invalid_argument("duplicate color '" + name + "'");
    sc.colors.push_back(SparseVector::unit(c.index_of(name), c.field.one()));
    sc.color_names.push_back(name);
  }
  std::vector<SparseVector> cols;
  for (const auto& col : retraction.columns()) {
    std::vector<Entry> e;
    for (const auto& x : col.entries()) e.push_back({x.index, c.field.coerce(x.value)});
    cols.push_back(SparseVector::from_entries(std::move(e)));
  }
  sc.retraction = Matrix::from_columns(c.dim(), std::move(cols));
  sc.coalgebra = std::move(c);
  return sc;
}

Report check_retraction(const SimplyColored& sc) {
  const Coalgebra& c = sc.coalgebra;
  const Matrix& d = sc.retraction;
  Report r;
  std::string bad;
  for (std::size_t i = 0; i < sc.colors.size() && bad.empty(); ++i)
    if (!is_setlike(c, sc.colors[i])) bad = sc.color_names[i];
  r.add("colors are set-like", bad.empty(), bad);
  Subspace g = sc.color_span();
  r.add("colors are independent", g.dim() == sc.colors.size());
  Matrix dd = d * d;
  r.add("retraction is idempotent", dd == d, column_witness(c, dd, d));
  Matrix ed = c.counit_map() * d;
  r.add("retraction preserves the counit", ed == c.counit_map(), column_witness(c, ed, c.counit_map()));
  Matrix lhs = c.delta * d;
  Matrix rhs = tensor_compose(d, d, c.delta);
  r.add("retraction is comultiplicative", lhs == rhs, column_witness(c, lhs, rhs));
  r.add("image of retraction is the span of the colors", image(d) == g);
  Subspace i = kernel(d);
  r.add("carrier splits as colors plus kernel", g.dim() + i.dim() == c.dim() && intersect(g, i).is_zero());
  return r;
}

Coactions coactions(const SimplyColored& sc) {
  const Matrix id = sc.coalgebra.identity();
  return {tensor_compose(sc.retraction, id, sc.coalgebra.delta), tensor_compose(id, sc.retraction, sc.coalgebra.delta)};
}

Report verify_bicomodule(const SimplyColored& sc) {
  const Coalgebra& c = sc.coalgebra;
  const Matrix id = c.identity();
  const Matrix& delta = c.delta;
  const Matrix eps = c.counit_map();
  auto [wl, wr] = coactions(sc);
  Report r;
  auto eq = [&](const char* name, const Matrix& a, const Matrix& b) { r.add(name, a == b, column_witness(c, a, b)); };
  eq("right coaction is coassociative", tensor_compose(wr, id, wr), tensor_compose(id, delta, wr));
  eq("right coaction is counital", tensor_compose(id, eps, wr), id);
  eq("left coaction is coassociative", tensor_compose(id, wl, wl), tensor_compose(delta, id, wl));
  eq("left coaction is counital", tensor_compose(eps, id, wl), id);
  eq("coactions commute", tensor_compose(wl, id, wr), tensor_compose(id, wr, wl));
  eq("comultiplication factors through the cotensor product", tensor_compose(wr, id, delta),
     tensor_compose(id, wl, delta));
  eq("left coaction is compatible with comultiplication", tensor_compose(id, delta, wl),
     tensor_compose(wl, id, delta));
  eq("right coaction is compatible with comultiplication", tensor_compose(id, wr, delta),
     tensor_compose(delta, id, wr));
  Matrix r1 = tensor_compose(id, wr, wr), r2 = tensor_compose(id, wl, wr), r3 = tensor_compose(id, delta, wr),
         r4 = tensor_compose(wr, id, wr);
  eq("colors of the right coaction: right vs left coaction", r1, r2);
  eq("colors of the right coaction: left coaction vs comultiplication", r2, r3);
  eq("colors of the right coaction: comultiplication vs outer coaction", r3, r4);
  Matrix l1 = tensor_compose(wl, id, wl), l2 = tensor_compose(wr, id, wl), l3 = tensor_compose(delta, id, wl),
         l4 = tensor_compose(id, wl, wl);
  eq("colors of the left coaction: left vs right coaction", l1, l2);
  eq("colors of the left coaction: right coaction vs comultiplication", l2, l3);
  eq("colors of the left coaction: comultiplication vs outer coaction", l3, l4);
  return r;
}

Matrix reduced_delta(const SimplyColored& sc) {
  auto [wl, wr] = coactions(sc);
  return sc.coalgebra.delta - wl - wr;
}

bool check_reduced_coassoc(const SimplyColored& sc) {
  Matrix db = reduced_delta(sc);
  Matrix id = sc.coalgebra.identity();
  return tensor_compose(db, id, db) == tensor_compose(id, db, db);
}

SparseVector iterate(const Matrix& op, const SparseVector& x, unsigned n) {
  SparseVector v = x;
  for (unsigned k = 1; k <= n; ++k) v = apply_first(op, v, k);
  return v;
}

Conilpotency conilpotency(const SimplyColored& sc) {
  Conilpotency out;
  Subspace i = sc.coideal();
  out.basis = i.basis();
  bool exhausted = false;
  out.kernel_chain = kernel_chain(reduced_delta(sc), i.basis(), sc.dim(), sc.coalgebra.field, exhausted);
  out.conilpotent = exhausted;
  for (const auto& b : out.basis) {
    unsigned idx = 0;
    for (std::size_t n = 0; n < out.kernel_chain.size(); ++n)
      if (out.kernel_chain[n].contains(b)) {
        idx = static_cast<unsigned>(n + 1);
        break;
      }
    out.index.push_back(idx);
  }
  return out;
}

unsigned conilpotency_index(const Conilpotency& c, const SparseVector& x) {
  if (x.is_zero()) return 0;
  for (std::size_t n = 0; n < c.kernel_chain.size(); ++n)
    if (c.kernel_chain[n].contains(x)) return static_cast<unsigned>(n + 1);
  throw std::invalid_argument("vector is not killed by any iterate of the reduced comultiplication");
}

OrthoIdempotents ortho_idempotents(const SimplyColored& sc) {
  Matrix coords = retraction_coordinates(sc).transpose();  // n x k
  OrthoIdempotents out;
  for (std::size_t g = 0; g < sc.colors.size(); ++g) out.functionals.push_back(coords.column(g));
  Algebra a = dual_algebra(sc.coalgebra);
  SparseVector total;
  for (std::size_t g = 0; g < out.functionals.size(); ++g) {
    total += out.functionals[g];
    for (std::size_t h = 0; h < out.functionals.size(); ++h) {
      SparseVector p = a.multiply(out.functionals[g], out.functionals[h]);
      if (!(p == (g == h ? out.functionals[g] : SparseVector())))
        throw std::invalid_argument("retraction does not give orthogonal idempotents");
    }
  }
  if (!(total == sc.coalgebra.counit)) throw std::invalid_argument("idempotents do not sum to the counit");
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, Subspace> bigraded_decomposition(const SimplyColored& sc) {
  const Coalgebra& c = sc.coalgebra;
  const Index n = c.dim();
  const std::size_t k = sc.colors.size();
  OrthoIdempotents oi = ortho_idempotents(sc);
  Matrix id = c.identity();
  std::vector<Matrix> left_act, right_act;  // L_e: (id⊗e)Δ, R_e: (e⊗id)Δ
  for (const auto& e : oi.functionals) {
    Matrix row = Matrix::row(e, n);
    left_act.push_back(tensor_compose(id, row, c.delta));
    right_act.push_back(tensor_compose(row, id, c.delta));
  }
  std::map<std::pair<std::size_t, std::size_t>, Matrix> proj;
  std::map<std::pair<std::size_t, std::size_t>, Subspace> comp;
  Subspace total(n);
  Index dims = 0;
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h) {
      Matrix p = left_act[h] * right_act[g];
      comp[{g, h}] = image(p);
      proj[{g, h}] = std::move(p);
      total = sum(total, comp[{g, h}]);
      dims += comp[{g, h}].dim();
    }
  if (dims != n || !total.is_full()) throw std::logic_error("bigraded components do not form a direct sum");
  for (const auto& [key, s] : comp)
    for (const auto& x : s.basis()) {
      SparseVector dx = c.delta.apply(x);
      SparseVector acc;
      for (std::size_t t = 0; t < k; ++t)
        acc += tensor_apply(proj[{key.first, t}], proj[{t, key.second}], dx);
      if (!(acc == dx)) throw std::logic_error("comultiplication does not respect the bigrading");
    }
  Subspace i = sc.coideal();
  Subspace split(n);
  for (const auto& [key, s] : comp) {
    if (key.first != key.second && !i.contains(s)) throw std::logic_error("off-diagonal component meets the colors");
    split = sum(split, intersect(s, i));
  }
  if (!(split == i)) throw std::logic_error("coideal does not split along the bigrading");
  return comp;
}

SimplyColored from_pointed_with_splitting(const Coalgebra& c, const Matrix& retraction) {
  PointedResult pr = is_pointed(c);
  if (!pr.pointed()) throw std::invalid_argument("coalgebra is not pointed: " + pr.reason);
  if (retraction.rows() != c.dim() || retraction.cols() != c.dim())
    throw std::invalid_argument("retraction has wrong shape");
  SimplyColored sc;
  sc.coalgebra = c;
  sc.retraction = retraction;
  if (!(retraction * retraction == retraction)) throw std::invalid_argument("splitting is not idempotent");
  if (!(image(retraction) == pr.coradical)) throw std::invalid_argument("splitting does not map onto the coradical");
  if (!check_morphism({c, c, retraction}).ok()) throw std::invalid_argument("splitting is not a coalgebra morphism");
  for (const auto& g : pr.setlikes) {
    sc.colors.push_back(g);
    sc.color_names.push_back(vector_name(c, g));
  }
  if (!check_retraction(sc).ok()) throw std::logic_error("retraction checks failed on a pointed coalgebra");
  if (!conilpotency(sc).conilpotent) throw std::logic_error("pointed coalgebra with splitting is not conilpotent");
  return sc;
}

Report verify_pointed(const SimplyColored& sc) {
  Report r;
  Subspace g = sc.color_span();
  Subspace c0 = coradical(sc.coalgebra);
  std::string w;
  for (const auto& b : c0.basis())
    if (!g.contains(b)) {
      w = sc.coalgebra.format(b);
      break;
    }
  if (w.empty() && !(c0 == g)) w = "colors outside the coradical";
  r.add("coradical equals the span of the colors", c0 == g, w);
  PointedResult pr = is_pointed(sc.coalgebra);
  std::string outside = pr.pointed() ? "" : pr.reason;
  for (const auto& s : pr.setlikes)
    if (!g.contains(s)) {
      outside = sc.coalgebra.format(s);
      break;
    }
  r.add("every set-like lies in the span of the colors", outside.empty(), outside);
  return r;
}

bool projection_identity_check(const SimplyColored& sc, unsigned n) {
  Matrix pi = sc.coalgebra.identity() - sc.retraction;
  Matrix db = reduced_delta(sc);
  Subspace i = sc.coideal();
  for (const auto& b : i.basis()) {
    SparseVector lhs = apply_each(pi, iterate(db, b, n), n + 1);
    SparseVector rhs = apply_each(pi, iterate(sc.coalgebra.delta, b, n), n + 1);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::map<std::pair<std::size_t, std::size_t>, Subspace> ReducedColored::components() const {
  std::map<std::pair<std::size_t, std::size_t>, Subspace> out;
  for (std::size_t g = 0; g < colors.size(); ++g)
    for (std::size_t h = 0; h < colors.size(); ++h) out[{g, h}] = Subspace(dim());
  for (Index i = 0; i < dim(); ++i) out[degree[i]].insert(SparseVector::unit(i, field.one()));
  return out;
}

Report check_reduced(const ReducedColored& rc) {
  Report r;
  const Index m = rc.dim();
  bool shape = rc.degree.size() == m && rc.delta_bar.rows() == m * m && rc.delta_bar.cols() == m;
  for (const auto& [g, h] : rc.degree) shape = shape && g < rc.colors.size() && h < rc.colors.size();
  r.add("shape", shape);
  if (!shape) return r;
  std::string bad;
  for (Index i = 0; i < m && bad.empty(); ++i)
    for (const auto& e : rc.delta_bar.column(i).entries()) {
      auto da = rc.degree[e.index / m], db = rc.degree[e.index % m];
      if (da.first != rc.degree[i].first || db.second != rc.degree[i].second || da.second != db.first) {
        bad = rc.names[i];
        break;
      }
    }
  r.add("comultiplication respects the bigrading", bad.empty(), bad);
  Matrix id = Matrix::identity(m, rc.field);
  Matrix a = tensor_compose(rc.delta_bar, id, rc.delta_bar), b = tensor_compose(id, rc.delta_bar, rc.delta_bar);
  Index j = a.first_difference(b);
  r.add("reduced comultiplication is coassociative", j == a.cols(), j < a.cols() ? rc.names[j] : "");
  std::vector<SparseVector> basis;
  for (Index i = 0; i < m; ++i) basis.push_back(SparseVector::unit(i, rc.field.one()));
  bool exhausted = false;
  kernel_chain(rc.delta_bar, basis, m, rc.field, exhausted);
  r.add("conilpotent", exhausted);
  return r;
}

Matrix reduced_basis(const SimplyColored& sc) {
  auto comps = bigraded_decomposition(sc);
  Subspace i = sc.coideal();
  std::vector<SparseVector> basis;
  for (const auto& [key, s] : comps) {
    Subspace part = intersect(s, i);
    basis.insert(basis.end(), part.basis().begin(), part.basis().end());
  }
  return Matrix::from_columns(sc.dim(), std::move(basis));
}

ReducedColored reduce(const SimplyColored& sc) {
  const Coalgebra& c = sc.coalgebra;
  auto comps = bigraded_decomposition(sc);
  Subspace i = sc.coideal();
  ReducedColored rc;
  rc.field = c.field;
  rc.colors = sc.color_names;
  std::vector<SparseVector> basis;
  for (const auto& [key, s] : comps) {
    Subspace part = intersect(s, i);
    for (const auto& b : part.basis()) {
      basis.push_back(b);
      rc.degree.push_back(key);
      rc.names.push_back(vector_name(c, b));
    }
  }
  const Index m = basis.size();
  std::vector<SparseVector> full = basis;
  full.insert(full.end(), sc.colors.begin(), sc.colors.end());
  auto inv = solve_columns(Matrix::from_columns(c.dim(), full), c.identity());
  if (!inv) throw std::logic_error("coideal and colors do not span the carrier");
  Matrix p(m, c.dim());
  for (Index j = 0; j < c.dim(); ++j) {
    std::vector<Entry> e;
    for (const auto& x : inv->column(j).entries())
      if (x.index < m) e.push_back(x);
    p.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  rc.delta_bar = tensor_compose(p, p, reduced_delta(sc) * Matrix::from_columns(c.dim(), basis));
  return rc;
}

SimplyColored unreduce(const ReducedColored& rc) {
  Report r = check_reduced(rc);
  if (!r.ok()) throw std::invalid_argument("invalid reduced object: " + r.first_failure()->name);
  const Index k = rc.colors.size(), m = rc.dim(), n = k + m;
  std::vector<std::string> names = rc.colors;
  names.insert(names.end(), rc.names.begin(), rc.names.end());
  std::vector<StructureConstant> consts;
  std::vector<Entry> eps;
  for (Index g = 0; g < k; ++g) {
    consts.emplace_back(g, g, g, rc.field.one());
    eps.push_back({g, rc.field.one()});
  }
  for (Index i = 0; i < m; ++i) {
    auto [g, h] = rc.degree[i];
    consts.emplace_back(k + i, g, k + i, rc.field.one());
    consts.emplace_back(k + i, k + i, h, rc.field.one());
    for (const auto& e : rc.delta_bar.column(i).entries())
      consts.emplace_back(k + i, k + e.index / m, k + e.index % m, e.value);
  }
  Coalgebra c = Coalgebra::from_constants(rc.field, names, consts, SparseVector::from_entries(std::move(eps)));
  Matrix d(n, n);
  for (Index g = 0; g < k; ++g) d.set_column(g, SparseVector::unit(g, rc.field.one()));
  return make_simply_colored(std::move(c), rc.colors, d);
}

Report check_colored_morphism(const ColoredMorphism& f, const ReducedColored& src, const ReducedColored& dst) {
  Report r;
  bool shape = f.fbar.rows() == dst.dim() && f.fbar.cols() == src.dim() && f.color_map.size() == src.colors.size();
  for (auto c : f.color_map) shape = shape && c < dst.colors.size();
  r.add("shape", shape);
  if (!shape) return r;
  std::string bad;
  for (Index i = 0; i < src.dim() && bad.empty(); ++i) {
    std::pair<std::size_t, std::size_t> want{f.color_map[src.degree[i].first], f.color_map[src.degree[i].second]};
    for (const auto& e : f.fbar.column(i).entries())
      if (dst.degree[e.index] != want) {
        bad = src.names[i];
        break;
      }
  }
  r.add("respects the bigrading along the color map", bad.empty(), bad);
  Matrix a = dst.delta_bar * f.fbar;
  Matrix b = tensor_compose(f.fbar, f.fbar, src.delta_bar);
  Index j = a.first_difference(b);
  r.add("commutes with the reduced comultiplication", j == a.cols(), j < a.cols() ? src.names[j] : "");
  return r;
}

CoalgebraMorphism extend_morphism(const ColoredMorphism& f, const ReducedColored& src, const ReducedColored& dst) {
  Report r = check_colored_morphism(f, src, dst);
  if (!r.ok()) throw std::invalid_argument("cannot extend: " + r.first_failure()->name);
  SimplyColored a = unreduce(src), b = unreduce(dst);
  const Index ks = src.colors.size(), kd = dst.colors.size();
  Matrix m(b.dim(), a.dim());
  for (Index g = 0; g < ks; ++g) m.set_column(g, SparseVector::unit(f.color_map[g], src.field.one()));
  for (Index i = 0; i < src.dim(); ++i) {
    std::vector<Entry> e;
    for (const auto& x : f.fbar.column(i).entries()) e.push_back({kd + x.index, x.value});
    m.set_column(ks + i, SparseVector::from_entries(std::move(e)));
  }
  CoalgebraMorphism out{a.coalgebra, b.coalgebra, std::move(m)};
  if (!check_morphism(out).ok()) throw std::logic_error("extension is not a coalgebra morphism");
  return out;
}

SimplyColored tensor_colored(const SimplyColored& a, const SimplyColored& b) {
  SimplyColored out;
  out.coalgebra = tensor_coalgebra(a.coalgebra, b.coalgebra);
  for (std::size_t i = 0; i < a.colors.size(); ++i)
    for (std::size_t j = 0; j < b.colors.size(); ++j) {
      out.colors.push_back(kron(a.colors[i], b.colors[j], b.dim()));
      out.color_names.push_back(a.color_names[i] + "⊗" + b.color_names[j]);
    }
  out.retraction = tensor_map(a.retraction, b.retraction);
  return out;
}

Report validate_colored(const SimplyColored& sc) {
  Report r = check_coalgebra(sc.coalgebra);
  r.append(check_retraction(sc));
  if (!r.ok()) return r;
  r.append(verify_bicomodule(sc));
  r.add("reduced comultiplication is coassociative", check_reduced_coassoc(sc));
  r.add("conilpotent", conilpotency(sc).conilpotent);
  return r;
}

}  // namespace coalg
