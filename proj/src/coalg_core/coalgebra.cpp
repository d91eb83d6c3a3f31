#include "coalg/coalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coalg {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " name '" + n + "'");
}

SparseVector coerce(const Field& f, const SparseVector& v) {
  std::vector<Entry> e;
  for (const auto& x : v.entries()) e.push_back({x.index, f.coerce(x.value)});
  return SparseVector::from_entries(std::move(e));
}

Matrix coerce(const Field& f, const Matrix& m) {
  std::vector<SparseVector> cols;
  for (const auto& c : m.columns()) cols.push_back(coerce(f, c));
  return Matrix::from_columns(m.rows(), std::move(cols));
}

std::string witness(const Coalgebra& c, const Matrix& a, const Matrix& b, unsigned power) {
  Index j = a.first_difference(b);
  if (j >= a.cols()) return {};
  return c.tensor_name(j, power);
}

}  // namespace

Coalgebra::Coalgebra(Field f, std::vector<std::string> basis, Matrix comult, SparseVector eps)
    : field(f), names(std::move(basis)), delta(coerce(f, comult)), counit(coerce(f, eps)) {
  require_distinct(names, "basis");
  Index n = names.size();
  if (delta.cols() != n || delta.rows() != n * n) throw std::invalid_argument("comultiplication has wrong shape");
  if (!counit.is_zero() && counit.max_index() >= n) throw std::invalid_argument("counit has wrong length");
}

Coalgebra Coalgebra::from_constants(Field f, std::vector<std::string> basis, const std::vector<StructureConstant>& delta,
                                    SparseVector eps) {
  Index n = basis.size();
  std::vector<std::vector<Entry>> cols(n);
  for (const auto& [i, j, k, c] : delta) {
    if (i >= n || j >= n || k >= n) throw std::invalid_argument("structure constant index out of range");
    cols[i].push_back({j * n + k, f.coerce(c)});
  }
  std::vector<SparseVector> sv;
  for (auto& c : cols) sv.push_back(SparseVector::from_entries(std::move(c)));
  return Coalgebra(f, std::move(basis), Matrix::from_columns(n * n, std::move(sv)), std::move(eps));
}

Index Coalgebra::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown basis element '" + name + "'");
  return it - names.begin();
}

std::string Coalgebra::tensor_name(Index idx, unsigned power) const {
  Index n = dim();
  std::vector<std::string> parts(power);
  for (unsigned p = power; p-- > 0;) {
    parts[p] = n ? names[idx % n] : "?";
    idx = n ? idx / n : 0;
  }
  std::string out;
  for (unsigned p = 0; p < power; ++p) out += (p ? "⊗" : "") + parts[p];
  return out;
}

std::vector<StructureConstant> Coalgebra::constants() const {
  std::vector<StructureConstant> out;
  Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (const auto& e : delta.column(i).entries()) out.emplace_back(i, e.index / n, e.index % n, e.value);
  return out;
}

std::string Coalgebra::format(const SparseVector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : v.entries()) {
    Scalar c = e.value;
    bool neg = field.is_rational() && c.rational() < 0;
    if (neg) c = -c;
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (!c.is_one()) out += c.to_string() + "*";
    out += names.at(e.index);
    first = false;
  }
  return out;
}

Algebra::Algebra(Field f, std::vector<std::string> basis, Matrix m, SparseVector u)
    : field(f), names(std::move(basis)), mult(coerce(f, m)), unit(coerce(f, u)) {
  require_distinct(names, "basis");
  Index n = names.size();
  if (mult.rows() != n || mult.cols() != n * n) throw std::invalid_argument("multiplication has wrong shape");
  if (!unit.is_zero() && unit.max_index() >= n) throw std::invalid_argument("unit has wrong length");
}

Algebra Algebra::from_constants(Field f, std::vector<std::string> basis, const std::vector<StructureConstant>& mult,
                                SparseVector unit) {
  Index n = basis.size();
  std::vector<std::vector<Entry>> cols(n * n);
  for (const auto& [i, j, k, c] : mult) {
    if (i >= n || j >= n || k >= n) throw std::invalid_argument("structure constant index out of range");
    cols[i * n + j].push_back({k, f.coerce(c)});
  }
  std::vector<SparseVector> sv;
  for (auto& c : cols) sv.push_back(SparseVector::from_entries(std::move(c)));
  return Algebra(f, std::move(basis), Matrix::from_columns(n, std::move(sv)), std::move(unit));
}

SparseVector Algebra::multiply(const SparseVector& x, const SparseVector& y) const {
  return mult.apply(kron(x, y, dim()));
}

Matrix Algebra::left_mult(const SparseVector& x) const {
  Matrix m(dim(), dim());
  for (Index b = 0; b < dim(); ++b) m.set_column(b, multiply(x, SparseVector::unit(b, field.one())));
  return m;
}

Matrix Algebra::right_mult(const SparseVector& x) const {
  Matrix m(dim(), dim());
  for (Index b = 0; b < dim(); ++b) m.set_column(b, multiply(SparseVector::unit(b, field.one()), x));
  return m;
}

Matrix Algebra::unit_map() const { return Matrix::from_columns(dim(), {unit}); }

Matrix delta_left(const Coalgebra& c) { return tensor_compose(c.delta, c.identity(), c.delta); }
Matrix delta_right(const Coalgebra& c) { return tensor_compose(c.identity(), c.delta, c.delta); }

Report check_coalgebra(const Coalgebra& c) {
  Report r;
  Matrix l = delta_left(c), rt = delta_right(c);
  r.add("coassociativity", l == rt, witness(c, l, rt, 1));
  Matrix id = c.identity();
  // (ε⊗id)Δ lands in k⊗C = C, (id⊗ε)Δ in C⊗k = C.
  Matrix left = tensor_compose(c.counit_map(), id, c.delta);
  Matrix right = tensor_compose(id, c.counit_map(), c.delta);
  r.add("left counit", left == id, witness(c, left, id, 1));
  r.add("right counit", right == id, witness(c, right, id, 1));
  return r;
}

Report check_algebra(const Algebra& a) {
  Report r;
  Index n = a.dim();
  Matrix id = Matrix::identity(n, a.field);
  Matrix l = a.mult * tensor_map(a.mult, id);
  Matrix rt = a.mult * tensor_map(id, a.mult);
  Index j = l.first_difference(rt);
  auto name3 = [&](Index idx) {
    return a.names[idx / (n * n)] + "⊗" + a.names[(idx / n) % n] + "⊗" + a.names[idx % n];
  };
  r.add("associativity", j == l.cols(), j < l.cols() ? name3(j) : "");
  Matrix lu = a.mult * tensor_map(a.unit_map(), id);
  Matrix ru = a.mult * tensor_map(id, a.unit_map());
  Index jl = lu.first_difference(id), jr = ru.first_difference(id);
  r.add("left unit", jl == n, jl < n ? a.names[jl] : "");
  r.add("right unit", jr == n, jr < n ? a.names[jr] : "");
  return r;
}

Report check_morphism(const CoalgebraMorphism& f) {
  const Coalgebra& c = f.source;
  const Coalgebra& d = f.target;
  if (f.matrix.rows() != d.dim() || f.matrix.cols() != c.dim())
    throw std::invalid_argument("morphism matrix has wrong shape");
  Report r;
  Matrix lhs = d.delta * f.matrix;
  Matrix rhs = tensor_compose(f.matrix, f.matrix, c.delta);
  r.add("comultiplicative", lhs == rhs, witness(c, lhs, rhs, 1));
  Matrix el = d.counit_map() * f.matrix;
  Matrix er = c.counit_map();
  r.add("counital", el == er, witness(c, el, er, 1));
  return r;
}

bool is_setlike(const Coalgebra& c, const SparseVector& x) {
  if (!x.is_zero() && x.max_index() >= c.dim()) throw std::invalid_argument("vector outside carrier");
  Scalar e = c.counit_map().apply(x).get(0);
  if (!(e == c.field.one())) return false;
  return c.delta.apply(x) == kron(x, x, c.dim());
}

bool coideal_check(const Coalgebra& c, const Subspace& i) {
  if (i.ambient() != c.dim()) throw std::invalid_argument("coideal: ambient mismatch");
  Matrix q = i.quotient_map();
  for (const auto& b : i.basis()) {
    if (!c.counit_map().apply(b).is_zero()) return false;
    if (!tensor_apply(q, q, c.delta.apply(b)).is_zero()) return false;
  }
  return true;
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& d) {
  if (d.ambient() != c.dim()) throw std::invalid_argument("subcoalgebra: ambient mismatch");
  Matrix q = d.quotient_map();
  Matrix id = c.identity();
  for (const auto& b : d.basis()) {
    SparseVector db = c.delta.apply(b);
    if (!tensor_apply(q, id, db).is_zero() || !tensor_apply(id, q, db).is_zero()) return false;
  }
  return true;
}

DirectSum direct_sum(const std::vector<Coalgebra>& cs) {
  if (cs.empty()) throw std::invalid_argument("direct sum of no coalgebras");
  Field f = cs[0].field;
  Index n = 0;
  std::vector<std::string> names;
  for (const auto& c : cs) {
    if (!(c.field == f)) throw std::invalid_argument("direct sum: mixed fields");
    n += c.dim();
    names.insert(names.end(), c.names.begin(), c.names.end());
  }
  std::vector<StructureConstant> consts;
  std::vector<Entry> eps;
  DirectSum out;
  Index off = 0;
  for (const auto& c : cs) {
    for (const auto& [i, j, k, v] : c.constants()) consts.emplace_back(i + off, j + off, k + off, v);
    for (const auto& e : c.counit.entries()) eps.push_back({e.index + off, e.value});
    Matrix inj(n, c.dim()), proj(c.dim(), n);
    for (Index i = 0; i < c.dim(); ++i) {
      inj.set_column(i, SparseVector::unit(i + off, f.one()));
      proj.set_column(i + off, SparseVector::unit(i, f.one()));
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
    off += c.dim();
  }
  out.sum = Coalgebra::from_constants(f, std::move(names), consts, SparseVector::from_entries(std::move(eps)));
  return out;
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  if (!(c.field == d.field)) throw std::invalid_argument("tensor coalgebra: mixed fields");
  Index n = c.dim(), m = d.dim();
  std::vector<std::string> names;
  for (const auto& a : c.names)
    for (const auto& b : d.names) names.push_back(a + "⊗" + b);
  // Δ(a⊗b) = Σ (a1⊗b1)⊗(a2⊗b2), the middle swap of Δa⊗Δb.
  std::vector<SparseVector> cols;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < m; ++b) {
      VectorBuilder vb;
      for (const auto& x : c.delta.column(a).entries())
        for (const auto& y : d.delta.column(b).entries()) {
          Index a1 = x.index / n, a2 = x.index % n;
          Index b1 = y.index / m, b2 = y.index % m;
          vb.add((a1 * m + b1) * (n * m) + (a2 * m + b2), x.value * y.value);
        }
      cols.push_back(vb.build());
    }
  SparseVector eps = kron(c.counit, d.counit, m);
  return Coalgebra(c.field, std::move(names), Matrix::from_columns(n * m * n * m, std::move(cols)), eps);
}

Algebra dual_algebra(const Coalgebra& c) {
  std::vector<std::string> names;
  for (const auto& n : c.names) names.push_back(n + "*");
  return Algebra(c.field, std::move(names), c.delta.transpose(), c.counit);
}

Coalgebra matrix_coalgebra(Index n, const Field& field) {
  if (n == 0) throw std::invalid_argument("matrix coalgebra needs n >= 1");
  std::vector<std::string> names;
  auto idx = [n](Index i, Index j) { return i * n + j; };
  for (Index i = 1; i <= n; ++i)
    for (Index j = 1; j <= n; ++j)
      names.push_back(n < 10 ? "e" + std::to_string(i) + std::to_string(j)
                             : "e" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<StructureConstant> consts;
  std::vector<Entry> eps;
  for (Index i = 0; i < n; ++i) {
    eps.push_back({idx(i, i), field.one()});
    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < n; ++t) consts.emplace_back(idx(i, j), idx(i, t), idx(t, j), field.one());
  }
  return Coalgebra::from_constants(field, std::move(names), consts, SparseVector::from_entries(std::move(eps)));
}

Coalgebra setlike_coalgebra(const std::vector<std::string>& names, const Field& field) {
  require_distinct(names, "set-like");
  std::vector<StructureConstant> consts;
  std::vector<Entry> eps;
  for (Index i = 0; i < names.size(); ++i) {
    consts.emplace_back(i, i, i, field.one());
    eps.push_back({i, field.one()});
  }
  return Coalgebra::from_constants(field, names, consts, SparseVector::from_entries(std::move(eps)));
}

Coalgebra ground_coalgebra(const Field& field) { return setlike_coalgebra({"1"}, field); }

Quotient quotient_coalgebra(const Coalgebra& c, const Subspace& i) {
  if (!coideal_check(c, i)) throw std::invalid_argument("quotient: subspace is not a coideal");
  std::vector<Index> keep = i.non_pivots();
  Matrix q = i.quotient_map();
  std::vector<std::string> names;
  std::vector<SparseVector> cols;
  std::vector<Entry> eps;
  for (Index k = 0; k < keep.size(); ++k) {
    names.push_back(c.names[keep[k]]);
    cols.push_back(tensor_apply(q, q, c.delta.column(keep[k])));
    Scalar e = c.counit.get(keep[k]);
    if (!e.is_zero()) eps.push_back({k, e});
  }
  Index m = keep.size();
  Coalgebra quot(c.field, std::move(names), Matrix::from_columns(m * m, std::move(cols)),
                 SparseVector::from_entries(std::move(eps)));
  return {std::move(quot), std::move(q)};
}

Subspace subcoalgebra_closure(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim()) throw std::invalid_argument("closure: ambient mismatch");
  Subspace cur = w;
  Matrix id = c.identity();
  for (;;) {
    if (cur.is_zero()) return cur;
    Matrix q = cur.quotient_map();
    Matrix inc = cur.inclusion();
    Matrix dd = c.delta * inc;
    Matrix test = stack_rows({tensor_compose(q, id, dd), tensor_compose(id, q, dd)});
    Subspace coords = kernel(test);
    if (coords.dim() == cur.dim()) return cur;
    cur = image_of(inc, coords);
  }
}

Subspace generated_subcoalgebra(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim()) throw std::invalid_argument("generated subcoalgebra: ambient mismatch");
  Index n = c.dim();
  Subspace out(n);
  Matrix id = c.identity();
  for (const auto& x : w.basis()) {
    SparseVector d2 = tensor_apply(c.delta, id, c.delta.apply(x));
    std::map<std::pair<Index, Index>, std::vector<Entry>> slices;
    for (const auto& e : d2.entries()) {
      Index k = e.index % n, j = (e.index / n) % n, i = e.index / (n * n);
      slices[{i, k}].push_back({j, e.value});
    }
    for (auto& [key, entries] : slices) out.insert(SparseVector::from_entries(std::move(entries)));
  }
  return out;
}

Restriction restrict_to(const Coalgebra& c, const Subspace& d) {
  if (!is_subcoalgebra(c, d)) throw std::invalid_argument("restriction: subspace is not a subcoalgebra");
  Matrix p = d.coordinate_map();
  Matrix inc = d.inclusion();
  std::vector<std::string> names;
  for (const auto& b : d.basis()) {
    if (b.nnz() == 1 && b.leading_value().is_one())
      names.push_back(c.names[b.leading_index()]);
    else
      names.push_back("(" + c.format(b) + ")");
  }
  Matrix delta = tensor_compose(p, p, c.delta * inc);
  SparseVector eps = (c.counit_map() * inc).transpose().column(0);
  return {Coalgebra(c.field, std::move(names), std::move(delta), std::move(eps)), std::move(inc)};
}

Coalgebra transport(const Coalgebra& c, const Matrix& p) {
  auto inv = solve_columns(p, c.identity());
  if (!inv || p.rows() != p.cols()) throw std::invalid_argument("transport: basis change is not invertible");
  Matrix delta = tensor_compose(*inv, *inv, c.delta * p);
  SparseVector eps = (c.counit_map() * p).transpose().column(0);
  std::vector<std::string> names;
  for (Index j = 0; j < c.dim(); ++j) names.push_back("b" + std::to_string(j));
  return Coalgebra(c.field, std::move(names), std::move(delta), std::move(eps));
}

bool is_isomorphism(const Coalgebra& c, const Coalgebra& d, const Matrix& m) {
  if (c.dim() != d.dim() || m.rows() != d.dim() || m.cols() != c.dim()) return false;
  if (rank(m) != c.dim()) return false;
  return check_morphism({c, d, m}).ok();
}

Matrix rename_map(const Coalgebra& c, const Coalgebra& d) {
  if (c.dim() != d.dim()) throw std::invalid_argument("rename: dimensions differ");
  Matrix m(d.dim(), c.dim());
  for (Index i = 0; i < c.dim(); ++i) m.set_column(i, SparseVector::unit(d.index_of(c.names[i]), c.field.one()));
  return m;
}

}  // namespace coalg
