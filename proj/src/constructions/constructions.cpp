#include "coalg/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coalg {

namespace {

constexpr Index kMaxCarrier = 20000;

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  return a.field == b.field && a.names == b.names && a.delta == b.delta && a.counit == b.counit;
}

bool is_setlike_coalgebra(const Coalgebra& c) {
  for (Index i = 0; i < c.dim(); ++i)
    if (!is_setlike(c, SparseVector::unit(i, c.field.one()))) return false;
  return true;
}

std::string scalar_prefix(const Field& f, Scalar c, bool first) {
  bool neg = f.is_rational() && c.rational() < 0;
  if (neg) c = -c;
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (!c.is_one()) out += c.to_string() + "*";
  return out;
}

// "[x|y]" for a unit word, "([x|y] - 2*[z|w])" otherwise; factor k uses names[k].
std::string word_name(const Field& f, const std::vector<const std::vector<std::string>*>& names,
                      const SparseVector& v) {
  auto word = [&](Index idx) {
    std::vector<std::string> parts(names.size());
    for (std::size_t k = names.size(); k-- > 0;) {
      Index d = names[k]->size();
      parts[k] = (*names[k])[idx % d];
      idx /= d;
    }
    std::string s = "[";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "|" : "") + parts[k];
    return s + "]";
  };
  if (v.nnz() == 1 && v.leading_value().is_one()) return word(v.leading_index());
  std::string out = "(";
  bool first = true;
  for (const auto& e : v.entries()) {
    out += scalar_prefix(f, e.value, first) + word(e.index);
    first = false;
  }
  return out + ")";
}

// (id^{⊗(factors-1)} ⊗ f)(v)
SparseVector apply_last(const Matrix& f, const SparseVector& v) {
  VectorBuilder b;
  for (const auto& e : v.entries()) {
    Index head = e.index / f.cols(), last = e.index % f.cols();
    for (const auto& x : f.column(last).entries()) b.add(head * f.rows() + x.index, e.value * x.value);
  }
  return b.build();
}

// Splits v ∈ K^{⊗} ⊗ X (k-major) into its K-slices.
std::map<Index, SparseVector> slices_major(const SparseVector& v, Index inner) {
  std::map<Index, std::vector<Entry>> parts;
  for (const auto& e : v.entries()) parts[e.index / inner].push_back({e.index % inner, e.value});
  std::map<Index, SparseVector> out;
  for (auto& [k, es] : parts) out[k] = SparseVector::from_entries(std::move(es));
  return out;
}

// Splits v ∈ X ⊗ K (k-minor) into its K-slices.
std::map<Index, SparseVector> slices_minor(const SparseVector& v, Index k_dim) {
  std::map<Index, std::vector<Entry>> parts;
  for (const auto& e : v.entries()) parts[e.index % k_dim].push_back({e.index / k_dim, e.value});
  std::map<Index, SparseVector> out;
  for (auto& [k, es] : parts) out[k] = SparseVector::from_entries(std::move(es));
  return out;
}

SparseVector checked_coordinates(const Subspace& s, const SparseVector& v, const char* what) {
  if (!s.contains(v)) throw std::logic_error(std::string(what) + ": vector leaves the expected subspace");
  return s.coordinates(v);
}

Matrix retraction_coefficients(const SimplyColored& sc) {
  auto coeffs = solve_columns(Matrix::from_columns(sc.dim(), sc.colors), sc.retraction);
  if (!coeffs) throw std::invalid_argument("image of the retraction is not spanned by the colors");
  return *coeffs;
}

}  // namespace

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) throw std::invalid_argument("unknown vertex '" + name + "'");
  return it - vertices.begin();
}

void Quiver::validate() const {
  std::vector<std::string> seen = vertices;
  for (const auto& a : arrows) {
    vertex_index(a.source);
    vertex_index(a.target);
    seen.push_back(a.name);
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) throw std::invalid_argument("duplicate quiver name '" + *dup + "'");
}

std::vector<std::vector<std::size_t>> quiver_paths(const Quiver& q, unsigned length) {
  std::vector<std::vector<std::size_t>> out;
  if (length == 0) return out;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out.push_back({a});
  for (unsigned l = 1; l < length; ++l) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : out)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == q.arrows[p.back()].target) {
          next.push_back(p);
          next.back().push_back(a);
          if (next.size() > kMaxCarrier) throw std::length_error("too many paths");
        }
    out = std::move(next);
  }
  // written order: later arrow first
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

std::string path_name(const Quiver& q, const std::vector<std::size_t>& path) {
  std::string s;
  for (auto it = path.rbegin(); it != path.rend(); ++it) s += (s.empty() ? "" : ".") + q.arrows[*it].name;
  return s;
}

std::vector<unsigned> path_lengths(const Quiver& q, unsigned max_len) {
  std::vector<unsigned> out(q.vertices.size(), 0);
  for (unsigned l = 1; l <= max_len; ++l) out.insert(out.end(), quiver_paths(q, l).size(), l);
  return out;
}

SimplyColored path_coalgebra(const Quiver& q, unsigned max_len, const Field& f) {
  q.validate();
  std::vector<std::string> names = q.vertices;
  std::map<std::vector<std::size_t>, Index> index;
  std::vector<std::vector<std::size_t>> paths;
  for (unsigned l = 1; l <= max_len; ++l)
    for (auto& p : quiver_paths(q, l)) {
      index[p] = names.size();
      names.push_back(path_name(q, p));
      paths.push_back(std::move(p));
      if (names.size() > kMaxCarrier) throw std::length_error("path coalgebra too large");
    }
  std::vector<StructureConstant> consts;
  std::vector<Entry> eps;
  const Index nv = q.vertices.size();
  for (Index v = 0; v < nv; ++v) {
    consts.emplace_back(v, v, v, 1);
    eps.push_back({v, f.one()});
  }
  for (const auto& p : paths) {
    Index k = index.at(p);
    Index src = q.vertex_index(q.arrows[p.front()].source), dst = q.vertex_index(q.arrows[p.back()].target);
    consts.emplace_back(k, dst, k, 1);
    consts.emplace_back(k, k, src, 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
      std::vector<std::size_t> early(p.begin(), p.begin() + i), late(p.begin() + i, p.end());
      consts.emplace_back(k, index.at(late), index.at(early), 1);
    }
  }
  Coalgebra c = Coalgebra::from_constants(f, std::move(names), consts, SparseVector::from_entries(std::move(eps)));
  Matrix d(c.dim(), c.dim());
  for (Index v = 0; v < nv; ++v) d.set_column(v, SparseVector::unit(v, f.one()));
  return make_simply_colored(std::move(c), q.vertices, std::move(d));
}

GradedCoalgebra path_graded(const Quiver& q, unsigned max_len, const Field& field) {
  return {path_coalgebra(q, max_len, field).coalgebra, path_lengths(q, max_len)};
}

Report check_grading(const GradedCoalgebra& g) {
  Report r;
  const Coalgebra& c = g.coalgebra;
  r.add("one degree per basis element", g.degree.size() == c.dim());
  if (!r.ok()) return r;
  std::string bad;
  for (Index k = 0; k < c.dim() && bad.empty(); ++k)
    for (const auto& e : c.delta.column(k).entries())
      if (g.degree[e.index / c.dim()] + g.degree[e.index % c.dim()] != g.degree[k]) {
        bad = c.names[k];
        break;
      }
  r.add("comultiplication preserves degree", bad.empty(), bad);
  bad.clear();
  for (const auto& e : c.counit.entries())
    if (g.degree[e.index] > 0) {
      bad = c.names[e.index];
      break;
    }
  r.add("counit vanishes in positive degree", bad.empty(), bad);
  return r;
}

SimplyColored space_like_check(const GradedCoalgebra& g) {
  Report r = check_grading(g);
  if (!r.ok()) throw std::invalid_argument("not a graded coalgebra: " + r.first_failure()->name);
  const Coalgebra& c = g.coalgebra;
  std::vector<std::string> colors;
  Matrix d(c.dim(), c.dim());
  for (Index i = 0; i < c.dim(); ++i) {
    if (g.degree[i] != 0) continue;
    if (!is_setlike(c, SparseVector::unit(i, c.field.one())))
      throw std::invalid_argument("degree-0 element '" + c.names[i] + "' is not set-like");
    colors.push_back(c.names[i]);
    d.set_column(i, SparseVector::unit(i, c.field.one()));
  }
  SimplyColored sc = make_simply_colored(c, colors, std::move(d));
  if (!check_retraction(sc).ok()) throw std::logic_error("degree-0 projection is not a retraction");
  return sc;
}

Bicomodule colored_bicomodule(const Field& field, const std::vector<std::string>& colors,
                              const std::vector<std::string>& names,
                              const std::vector<std::pair<std::size_t, std::size_t>>& degree) {
  if (degree.size() != names.size()) throw std::invalid_argument("one degree per basis element required");
  const Index k = colors.size(), m = names.size();
  Bicomodule out{setlike_coalgebra(colors, field), names, Matrix(k * m, m), Matrix(m * k, m)};
  for (Index i = 0; i < m; ++i) {
    auto [g, h] = degree[i];
    if (g >= k || h >= k) throw std::invalid_argument("degree refers to an unknown color");
    out.left.set_column(i, SparseVector::unit(g * m + i, field.one()));
    out.right.set_column(i, SparseVector::unit(i * k + h, field.one()));
  }
  return out;
}

Report check_bicomodule(const Bicomodule& m) {
  Report r;
  const Coalgebra& s = m.base;
  const Index n = m.dim(), k = s.dim();
  bool shape = m.left.rows() == k * n && m.left.cols() == n && m.right.rows() == n * k && m.right.cols() == n;
  r.add("shape", shape);
  if (!shape) return r;
  Matrix id = Matrix::identity(n, s.field), ids = s.identity(), eps = s.counit_map();
  auto eq = [&](const char* name, const Matrix& a, const Matrix& b) {
    Index j = a.first_difference(b);
    r.add(name, j == a.cols(), j < a.cols() ? m.names[j] : "");
  };
  eq("left coaction is coassociative", tensor_compose(s.delta, id, m.left), tensor_compose(ids, m.left, m.left));
  eq("left coaction is counital", tensor_compose(eps, id, m.left), id);
  eq("right coaction is coassociative", tensor_compose(m.right, ids, m.right), tensor_compose(id, s.delta, m.right));
  eq("right coaction is counital", tensor_compose(id, eps, m.right), id);
  eq("coactions commute", tensor_compose(m.left, ids, m.right), tensor_compose(ids, m.right, m.left));
  return r;
}

Subspace cotensor(const Bicomodule& m, const Bicomodule& n) {
  if (!same_coalgebra(m.base, n.base)) throw std::invalid_argument("cotensor: comodules over different bases");
  Matrix a = tensor_map(m.right, Matrix::identity(n.dim(), n.base.field));
  Matrix b = tensor_map(Matrix::identity(m.dim(), m.base.field), n.left);
  return kernel(a - b);
}

CotensorProduct cotensor_product(const Bicomodule& m, const Bicomodule& n) {
  Subspace s = cotensor(m, n);
  const Index k = m.base.dim(), mn = m.dim() * n.dim();
  Matrix idm = Matrix::identity(m.dim(), m.base.field), idn = Matrix::identity(n.dim(), n.base.field);
  CotensorProduct out;
  out.inclusion = s.inclusion();
  out.bicomodule.base = m.base;
  out.bicomodule.left = Matrix(k * s.dim(), s.dim());
  out.bicomodule.right = Matrix(s.dim() * k, s.dim());
  for (Index j = 0; j < s.dim(); ++j) {
    const SparseVector& b = s.basis()[j];
    out.bicomodule.names.push_back(word_name(m.base.field, {&m.names, &n.names}, b));
    VectorBuilder left, right;
    for (const auto& [c, v] : slices_major(tensor_apply(m.left, idn, b), mn))
      for (SparseVector cv = checked_coordinates(s, v, "cotensor left coaction"); const auto& e : cv.entries())
        left.add(c * s.dim() + e.index, e.value);
    for (const auto& [c, v] : slices_minor(tensor_apply(idm, n.right, b), k))
      for (SparseVector cv = checked_coordinates(s, v, "cotensor right coaction"); const auto& e : cv.entries())
        right.add(e.index * k + c, e.value);
    out.bicomodule.left.set_column(j, left.build());
    out.bicomodule.right.set_column(j, right.build());
  }
  return out;
}

CotensorCoalgebra cotensor_coalgebra(const Bicomodule& m, unsigned max_words) {
  if (!is_setlike_coalgebra(m.base)) throw std::invalid_argument("cotensor coalgebra needs a set-like base");
  Report br = check_bicomodule(m);
  if (!br.ok()) throw std::invalid_argument("invalid bicomodule: " + br.first_failure()->name);
  const Field& f = m.base.field;
  const Index k = m.base.dim(), md = m.dim();
  CotensorCoalgebra t;
  t.module = m;
  t.max_words = max_words;
  t.words.push_back(Subspace::full(k, f));
  if (max_words >= 1) t.words.push_back(Subspace::full(md, f));
  for (unsigned n = 2; n <= max_words; ++n) {
    // impose the cotensor condition at the last junction on M^{□(n-1)} ⊗ M
    Subspace cand = tensor(t.words[n - 1], Subspace::full(md, f));
    Index head = checked_pow(md, n - 2);
    std::vector<SparseVector> images;
    for (const auto& w : cand.basis()) {
      VectorBuilder b;
      for (const auto& e : w.entries()) {
        Index h = e.index / (md * md), mid = (e.index / md) % md, last = e.index % md;
        for (const auto& x : m.right.column(mid).entries())  // x.index = mid' * k + c
          b.add(((h * md + x.index / k) * k + x.index % k) * md + last, e.value * x.value);
        for (const auto& x : m.left.column(last).entries())  // x.index = c * md + last'
          b.add(((h * md + mid) * k + x.index / md) * md + x.index % md, -(e.value * x.value));
      }
      images.push_back(b.build());
    }
    Subspace combos = kernel(Matrix::from_columns(head * md * k * md, images));
    t.words.push_back(image_of(cand.inclusion(), combos));
    if (t.words.back().ambient() != checked_pow(md, n)) throw std::logic_error("cotensor power has wrong ambient");
  }
  Index total = 0;
  for (unsigned n = 0; n <= max_words; ++n) {
    t.offset.push_back(total);
    total += t.words[n].dim();
    t.word_length.insert(t.word_length.end(), t.words[n].dim(), n);
  }
  t.offset.push_back(total);
  if (total > kMaxCarrier) throw std::length_error("cotensor coalgebra too large");

  std::vector<std::string> names = m.base.names;
  for (unsigned n = 1; n <= max_words; ++n) {
    std::vector<const std::vector<std::string>*> factors(n, &m.names);
    for (const auto& w : t.words[n].basis()) names.push_back(word_name(f, factors, w));
  }
  Matrix delta(total * total, total);
  for (Index i = 0; i < k; ++i) {
    VectorBuilder b;
    for (const auto& e : m.base.delta.column(i).entries()) b.add((e.index / k) * total + e.index % k, e.value);
    delta.set_column(i, b.build());
  }
  for (unsigned n = 1; n <= max_words; ++n) {
    const Subspace& wn = t.words[n];
    Index rest = checked_pow(md, n);
    for (Index j = 0; j < wn.dim(); ++j) {
      const SparseVector& w = wn.basis()[j];
      VectorBuilder b;
      for (const auto& [c, v] : slices_major(apply_first(m.left, w, n), rest))
        for (SparseVector cv = checked_coordinates(wn, v, "left boundary term"); const auto& e : cv.entries())
          b.add(c * total + t.offset[n] + e.index, e.value);
      for (unsigned i = 1; i < n; ++i) {
        const Subspace &a = t.words[i], &z = t.words[n - i];
        Index tail = checked_pow(md, n - i);
        SparseVector rebuilt;
        for (std::size_t p = 0; p < a.dim(); ++p)
          for (std::size_t q = 0; q < z.dim(); ++q) {
            Scalar c = w.get(a.pivots()[p] * tail + z.pivots()[q]);
            if (c.is_zero()) continue;
            b.add((t.offset[i] + p) * total + t.offset[n - i] + q, c);
            rebuilt.axpy(c, kron(a.basis()[p], z.basis()[q], tail));
          }
        if (!(rebuilt == w)) throw std::logic_error("deconcatenation leaves the cotensor powers");
      }
      for (const auto& [c, v] : slices_minor(apply_last(m.right, w), k))
        for (SparseVector cv = checked_coordinates(wn, v, "right boundary term"); const auto& e : cv.entries())
          b.add((t.offset[n] + e.index) * total + c, e.value);
      delta.set_column(t.offset[n] + j, b.build());
    }
  }
  Coalgebra c(f, std::move(names), std::move(delta), m.base.counit);
  Report cr = check_coalgebra(c);
  if (!cr.ok()) throw std::logic_error("cotensor coalgebra fails " + cr.first_failure()->name);
  Matrix d(total, total);
  for (Index i = 0; i < k; ++i) d.set_column(i, SparseVector::unit(i, f.one()));
  t.colored = make_simply_colored(std::move(c), m.base.names, std::move(d));
  return t;
}

GradedCoalgebra word_graded(const CotensorCoalgebra& t) { return {t.colored.coalgebra, t.word_length}; }

SparseVector embed_word(const CotensorCoalgebra& t, unsigned n, const SparseVector& v) {
  if (n > t.max_words) throw std::invalid_argument("word longer than the truncation");
  const Subspace& w = t.words[n];
  if (!w.contains(v)) throw std::invalid_argument("vector is not in the cotensor power");
  VectorBuilder b;
  for (SparseVector cv = w.coordinates(v); const auto& e : cv.entries()) b.add(t.offset[n] + e.index, e.value);
  return b.build();
}

Matrix word_projection(const CotensorCoalgebra& t) {
  const Index md = t.module.dim();
  Matrix p(md, t.colored.dim());
  if (t.max_words >= 1)
    for (Index i = 0; i < md; ++i) p.set_column(t.offset[1] + i, SparseVector::unit(i, t.module.base.field.one()));
  return p;
}

CofreeMap cofree_universal_map(const SimplyColored& c, const Bicomodule& v, const Matrix& f,
                               const std::vector<std::size_t>& phi, unsigned max_words) {
  const Index vd = v.dim(), k = v.base.dim();
  if (f.rows() != vd || f.cols() != c.dim()) throw std::invalid_argument("f has wrong shape");
  if (phi.size() != c.colors.size()) throw std::invalid_argument("color map has wrong length");
  for (auto s : phi)
    if (s >= k) throw std::invalid_argument("color map leaves the target colors");
  Conilpotency cn = conilpotency(c);
  if (!cn.conilpotent) throw std::invalid_argument("source is not conilpotent");
  if (max_words < cn.bound())
    throw std::invalid_argument("max_words " + std::to_string(max_words) + " is below the conilpotency bound " +
                                std::to_string(cn.bound()));
  Subspace i = c.coideal();
  for (const auto& [key, comp] : bigraded_decomposition(c)) {
    Subspace part = intersect(comp, i);
    for (const auto& x : part.basis()) {
      SparseVector y = f.apply(x);
      SparseVector g = SparseVector::unit(phi[key.first], v.base.field.one());
      SparseVector h = SparseVector::unit(phi[key.second], v.base.field.one());
      if (!(v.left.apply(y) == kron(g, y, vd)) || !(v.right.apply(y) == kron(y, h, k)))
        throw std::invalid_argument("f does not respect the bigradings along the color map");
    }
  }
  CotensorCoalgebra t = cotensor_coalgebra(v, max_words);
  Matrix coeffs = retraction_coefficients(c);
  Matrix pi = c.coalgebra.identity() - c.retraction;
  Matrix db = reduced_delta(c);
  Matrix fmap(t.colored.dim(), c.dim());
  for (Index j = 0; j < c.dim(); ++j) {
    VectorBuilder b;
    for (const auto& e : coeffs.column(j).entries()) b.add(phi[e.index], e.value);
    SparseVector x = pi.apply(SparseVector::unit(j, c.coalgebra.field.one()));
    for (unsigned n = 1; n <= max_words && !x.is_zero(); ++n) {
      SparseVector w = apply_each(f, iterate(db, x, n - 1), n);
      b.add(Scalar(1), embed_word(t, n, w));
    }
    fmap.set_column(j, b.build());
  }
  CofreeMap out{t, {c.coalgebra, t.colored.coalgebra, std::move(fmap)}};
  Report r = check_morphism(out.map);
  if (!r.ok()) throw std::logic_error("cofree map is not a coalgebra morphism: " + r.first_failure()->name);
  if (!(word_projection(t) * out.map.matrix * pi == f * pi)) throw std::logic_error("cofree triangle does not commute");
  return out;
}

}  // namespace coalg
