#include "coalg/category_ops.hpp"

#include <numeric>
#include <set>

namespace coalg {

namespace {

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  return a.field == b.field && a.names == b.names && a.delta == b.delta && a.counit == b.counit;
}

std::string carrier_name(const Coalgebra& c, const SparseVector& v) {
  if (v.entries().size() == 1 && v.entries()[0].value.is_one()) return c.names[v.entries()[0].index];
  return "(" + c.format(v) + ")";
}

// Rows [from, rows) of m, shifted up.
Matrix drop_rows(const Matrix& m, Index from) {
  Matrix out(m.rows() - from, m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    std::vector<Entry> e;
    for (const auto& x : m.column(j).entries())
      if (x.index >= from) e.push_back({x.index - from, x.value});
    out.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return out;
}

void require_valid(const Report& r, const std::string& what) {
  if (!r.ok()) throw std::invalid_argument(what + ": " + r.first_failure()->name);
}

void require_verified(const Report& r, const std::string& what) {
  if (!r.ok()) throw std::logic_error(what + ": " + r.first_failure()->name);
}

}  // namespace

ColoredCoproduct coproduct(const std::vector<SimplyColored>& scs) {
  if (scs.empty()) throw std::invalid_argument("coproduct of no objects");
  std::set<std::string> basis_seen, color_seen;
  bool clash = false;
  for (const auto& sc : scs) {
    for (const auto& n : sc.coalgebra.names) clash = !basis_seen.insert(n).second || clash;
    for (const auto& n : sc.color_names) clash = !color_seen.insert(n).second || clash;
  }
  auto rename = [&](const std::string& n, std::size_t k) { return clash ? n + "_" + std::to_string(k + 1) : n; };
  std::vector<Coalgebra> cs;
  for (std::size_t k = 0; k < scs.size(); ++k) {
    Coalgebra c = scs[k].coalgebra;
    for (auto& n : c.names) n = rename(n, k);
    cs.push_back(std::move(c));
  }
  DirectSum ds = direct_sum(cs);
  ColoredCoproduct out;
  out.sum.coalgebra = ds.sum;
  out.sum.retraction = Matrix(ds.sum.dim(), ds.sum.dim());
  for (std::size_t k = 0; k < scs.size(); ++k) {
    for (std::size_t g = 0; g < scs[k].colors.size(); ++g) {
      out.sum.colors.push_back(ds.injections[k].apply(scs[k].colors[g]));
      out.sum.color_names.push_back(rename(scs[k].color_names[g], k));
    }
    out.sum.retraction = out.sum.retraction + ds.injections[k] * scs[k].retraction * ds.projections[k];
  }
  out.injections = std::move(ds.injections);
  return out;
}

Equalizer equalizer(const SimplyColored& sc, const CoalgebraMorphism& f, const CoalgebraMorphism& g) {
  if (!same_coalgebra(f.source, sc.coalgebra) || !same_coalgebra(g.source, sc.coalgebra) ||
      !same_coalgebra(f.target, g.target))
    throw std::invalid_argument("equalizer needs a parallel pair out of the given object");
  const Coalgebra& c = sc.coalgebra;
  Equalizer out;
  out.subspace = subcoalgebra_closure(c, kernel(f.matrix - g.matrix));
  Restriction r = restrict_to(c, out.subspace);
  out.inclusion = r.inclusion;
  SimplyColored& obj = out.object;
  obj.coalgebra = r.sub;
  for (std::size_t k = 0; k < sc.colors.size(); ++k)
    if (out.subspace.contains(sc.colors[k])) {
      obj.colors.push_back(out.subspace.coordinates(sc.colors[k]));
      obj.color_names.push_back(sc.color_names[k]);
    }
  std::vector<SparseVector> cols;
  for (Index j = 0; j < r.inclusion.cols(); ++j) {
    SparseVector y = sc.retraction.apply(r.inclusion.column(j));
    if (!out.subspace.contains(y)) throw std::logic_error("retraction does not restrict to the equalizer");
    cols.push_back(out.subspace.coordinates(y));
  }
  obj.retraction = Matrix::from_columns(r.sub.dim(), std::move(cols));
  return out;
}

std::vector<std::size_t> merge_colors(std::size_t count, const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("color maps of different length");
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= count || b[i] >= count) throw std::invalid_argument("color map out of range");
    std::size_t x = find(a[i]), y = find(b[i]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> cls(count), id(count, count);
  std::size_t next = 0;
  for (std::size_t x = 0; x < count; ++x) {
    std::size_t root = find(x);
    if (id[root] == count) id[root] = next++;
    cls[x] = id[root];
  }
  return cls;
}

Coequalizer coequalizer_reduced(const ColoredMorphism& f, const ColoredMorphism& g, const ReducedColored& src,
                                const ReducedColored& dst) {
  require_valid(check_reduced(src), "source");
  require_valid(check_reduced(dst), "target");
  require_valid(check_colored_morphism(f, src, dst), "first morphism");
  require_valid(check_colored_morphism(g, src, dst), "second morphism");
  std::vector<std::size_t> cls = merge_colors(dst.colors.size(), f.color_map, g.color_map);
  ReducedColored q;
  q.field = dst.field;
  for (std::size_t x = 0; x < cls.size(); ++x)
    if (cls[x] == q.colors.size()) q.colors.push_back(dst.colors[x]);
  std::vector<std::pair<std::size_t, std::size_t>> merged;
  for (const auto& [l, r] : dst.degree) merged.emplace_back(cls[l], cls[r]);

  Subspace im = Subspace::span(dst.dim(), (f.fbar - g.fbar).columns());
  for (const auto& v : im.basis())
    for (const auto& e : v.entries())
      if (merged[e.index] != merged[v.entries()[0].index])
        throw std::logic_error("image of f - g is not graded by the merged colors");
  Matrix p = im.quotient_map();
  for (const auto& v : im.basis())
    if (!tensor_apply(p, p, dst.delta_bar.apply(v)).is_zero())
      throw std::logic_error("image of f - g is not a coideal");

  std::vector<Index> keep = im.non_pivots();
  std::vector<SparseVector> inc;
  for (Index i : keep) {
    inc.push_back(SparseVector::unit(i, dst.field.one()));
    q.names.push_back(dst.names[i]);
    q.degree.push_back(merged[i]);
  }
  q.delta_bar = tensor_compose(p, p, dst.delta_bar * Matrix::from_columns(dst.dim(), std::move(inc)));
  Coequalizer out{std::move(q), {std::move(p), std::move(cls)}};
  require_verified(check_reduced(out.object), "coequalizer");
  require_verified(check_colored_morphism(out.projection, dst, out.object), "coequalizer projection");
  if (!(out.projection.fbar * f.fbar == out.projection.fbar * g.fbar))
    throw std::logic_error("projection does not coequalize");
  return out;
}

TruncatedProduct product_truncated(const std::vector<ReducedColored>& rcs, unsigned max_words) {
  if (rcs.empty()) throw std::invalid_argument("product of no objects");
  if (max_words == 0) throw std::invalid_argument("product needs max_words >= 1");
  const Field field = rcs[0].field;
  for (std::size_t a = 0; a < rcs.size(); ++a) {
    if (!(rcs[a].field == field)) throw std::invalid_argument("product: mixed fields");
    require_valid(check_reduced(rcs[a]), "factor " + std::to_string(a + 1));
  }
  const std::size_t nf = rcs.size();
  std::size_t total = 1;
  for (const auto& rc : rcs) total *= rc.colors.size();
  TruncatedProduct out;
  out.max_words = max_words;
  out.object.field = field;
  if (total == 0) {
    for (const auto& rc : rcs) out.projections.push_back({Matrix(rc.dim(), 0), {}});
    return out;
  }

  // color tuples in mixed radix, first factor most significant
  auto tuple_of = [&](std::size_t idx) {
    std::vector<std::size_t> t(nf);
    for (std::size_t a = nf; a-- > 0;) {
      t[a] = idx % rcs[a].colors.size();
      idx /= rcs[a].colors.size();
    }
    return t;
  };
  std::vector<std::string> pnames;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto t = tuple_of(idx);
    std::string n = "(";
    for (std::size_t a = 0; a < nf; ++a) n += (a ? "," : "") + rcs[a].colors[t[a]];
    pnames.push_back(n + ")");
  }

  // colored product space: one copy of each homogeneous basis element of
  // each factor per compatible pair of tuples
  struct Slot {
    std::size_t factor;
    Index elem;
  };
  std::vector<std::string> vnames;
  std::vector<std::pair<std::size_t, std::size_t>> vdeg;
  std::vector<Slot> slots;
  for (std::size_t l = 0; l < total; ++l)
    for (std::size_t r = 0; r < total; ++r) {
      auto tl = tuple_of(l), tr = tuple_of(r);
      for (std::size_t a = 0; a < nf; ++a)
        for (Index x = 0; x < rcs[a].dim(); ++x) {
          if (rcs[a].degree[x] != std::make_pair(tl[a], tr[a])) continue;
          std::string n = rcs[a].names[x] + "@" + std::to_string(a + 1);
          if (total > 1) n += "{" + pnames[l] + "," + pnames[r] + "}";
          vnames.push_back(std::move(n));
          vdeg.emplace_back(l, r);
          slots.push_back({a, x});
        }
    }
  CotensorCoalgebra t = cotensor_coalgebra(colored_bicomodule(field, pnames, vnames, vdeg), max_words);
  const Coalgebra& tc = t.colored.coalgebra;
  const Index n = tc.dim();

  // each projection as a coalgebra map into the unreduced factor
  std::vector<Matrix> proj;
  std::vector<Matrix> defects;
  for (std::size_t a = 0; a < nf; ++a) {
    SimplyColored fa = unreduce(rcs[a]);
    const Index k = rcs[a].colors.size();
    Matrix p(fa.dim(), n);
    for (Index j = 0; j < n; ++j) {
      if (t.word_length[j] == 0) {
        p.set_column(j, SparseVector::unit(tuple_of(j - t.offset[0])[a], field.one()));
      } else if (t.word_length[j] == 1) {
        VectorBuilder b;
        for (const auto& e : t.words[1].basis()[j - t.offset[1]].entries())
          if (slots[e.index].factor == a) b.add(k + slots[e.index].elem, e.value);
        p.set_column(j, b.build());
      }
    }
    defects.push_back(fa.coalgebra.delta * p - tensor_compose(p, p, tc.delta));
    proj.push_back(std::move(p));
  }
  Subspace e = subcoalgebra_closure(tc, kernel(stack_rows(defects)));
  for (const auto& c : t.colored.colors)
    if (!e.contains(c)) throw std::logic_error("product sub-object lost a color");
  Restriction r = restrict_to(tc, e);
  SimplyColored se;
  se.coalgebra = r.sub;
  se.color_names = pnames;
  for (const auto& c : t.colored.colors) se.colors.push_back(e.coordinates(c));
  std::vector<SparseVector> cols;
  for (Index j = 0; j < r.inclusion.cols(); ++j)
    cols.push_back(e.coordinates(t.colored.retraction.apply(r.inclusion.column(j))));
  se.retraction = Matrix::from_columns(r.sub.dim(), std::move(cols));

  out.object = reduce(se);
  Matrix rb = r.inclusion * reduced_basis(se);
  for (Index j = 0; j < rb.cols(); ++j) out.object.names[j] = carrier_name(tc, rb.column(j));
  for (std::size_t a = 0; a < nf; ++a) {
    ColoredMorphism m{drop_rows(proj[a] * rb, rcs[a].colors.size()), {}};
    for (std::size_t idx = 0; idx < total; ++idx) m.color_map.push_back(tuple_of(idx)[a]);
    out.projections.push_back(std::move(m));
  }
  require_verified(check_reduced(out.object), "product");
  for (std::size_t a = 0; a < nf; ++a)
    require_verified(check_colored_morphism(out.projections[a], out.object, rcs[a]), "product projection");
  return out;
}

}  // namespace coalg
