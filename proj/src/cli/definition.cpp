#include "coalg/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace coalg::cli {

using Json = nlohmann::ordered_json;

struct SourceText {
  std::string name;
  std::string text;

  // Byte offset of the value at a JSON pointer, falling back to the nearest
  // enclosing value that exists.
  std::size_t locate(std::string pointer) const;
  std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }
};

namespace {

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// Appended to a pointer to locate the member's key rather than its value.
constexpr char kKeyMark = '\x01';

std::string key_at(const std::string& ptr, const std::string& key) { return ptr + "/" + pointer_token(key) + kKeyMark; }

// Walks text that nlohmann already accepted.
class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  std::size_t find(const std::string& path, const std::string& target) {
    space();
    if (path == target) return i_;
    if (i_ >= s_.size()) return npos;
    char c = s_[i_];
    if (c == '{' || c == '[') {
      const bool object = c == '{';
      ++i_;
      space();
      if (i_ < s_.size() && s_[i_] == (object ? '}' : ']')) {
        ++i_;
        return npos;
      }
      for (std::size_t k = 0;; ++k) {
        space();
        std::string key = std::to_string(k);
        if (object) {
          std::size_t key_at = i_;
          key = string();
          if (path + "/" + pointer_token(key) + kKeyMark == target) return key_at;
          space();
          ++i_;  // ':'
        }
        std::size_t r = find(path + "/" + pointer_token(key), target);
        if (r != npos) return r;
        space();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        ++i_;
        return npos;
      }
    }
    if (c == '"') {
      string();
      return npos;
    }
    while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) ++i_;
    return npos;
  }

  static constexpr std::size_t npos = std::string::npos;

 private:
  void space() {
    while (i_ < s_.size() && std::string_view(" \t\r\n").find(s_[i_]) != std::string_view::npos) ++i_;
  }
  std::string string() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        ++i_;
        switch (s_[i_]) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case 'b': out += '\b'; break;
          case 'f': out += '\f'; break;
          case 'u': out += "\\u"; break;  // only used for locating
          default: out += s_[i_];
        }
      } else {
        out += s_[i_];
      }
      ++i_;
    }
    ++i_;
    return out;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

std::size_t SourceText::locate(std::string pointer) const {
  for (;;) {
    std::size_t r = Scanner(text).find("", pointer);
    if (r != Scanner::npos || pointer.empty()) return r == Scanner::npos ? 0 : r;
    pointer = pointer.substr(0, pointer.rfind('/'));
  }
}

ParseError::ParseError(const std::string& src, std::size_t l, std::size_t c, const std::string& why)
    : std::runtime_error(src + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + why),
      source(src),
      line(l),
      column(c),
      reason(why) {}

void Definition::fail(const std::string& reason, const std::string& pointer) const {
  if (!text) throw ParseError("<definition>", 1, 1, reason);
  auto [line, col] = text->line_column(text->locate(pointer.empty() ? where : pointer));
  throw ParseError(text->name, line, col, reason);
}

namespace {

class Reader {
 public:
  Reader(std::shared_ptr<const SourceText> text) : text_(std::move(text)) {}

  Definition object(const Json& j, const std::string& ptr, const Field* inherited) {
    Definition d;
    d.text = text_;
    d.where = ptr;
    if (!j.is_object()) fail(d, "definition must be a JSON object", ptr);
    static const std::set<std::string> known{"description", "field",      "coalgebra", "splitting", "algebra",
                                             "quiver",      "bicomodule", "maps",      "color_maps", "max_words",
                                             "source",      "target"};
    for (const auto& [k, v] : j.items())
      if (!known.count(k)) fail(d, "unknown key '" + k + "'", key_at(ptr, k));

    if (j.contains("description")) d.description = str(d, j["description"], ptr + "/description");
    if (j.contains("field")) {
      d.field = field(d, j["field"], ptr + "/field");
    } else if (inherited) {
      d.field = *inherited;
    }
    if (j.contains("quiver") && j.contains("coalgebra"))
      fail(d, "give either a quiver or a coalgebra, not both", ptr + "/quiver");
    if (j.contains("coalgebra")) d.coalgebra = coalgebra(d, j["coalgebra"], ptr + "/coalgebra");
    if (j.contains("quiver")) quiver(d, j["quiver"], ptr + "/quiver");
    if (j.contains("splitting")) {
      if (!d.coalgebra) fail(d, "splitting needs a coalgebra block", ptr + "/splitting");
      if (d.quiver) fail(d, "a quiver already carries its splitting", ptr + "/splitting");
      splitting(d, j["splitting"], ptr + "/splitting");
    }
    if (j.contains("algebra")) d.algebra = algebra(d, j["algebra"], ptr + "/algebra");
    if (j.contains("bicomodule")) bicomodule(d, j["bicomodule"], ptr + "/bicomodule");
    if (j.contains("maps")) maps(d, j["maps"], ptr + "/maps");
    if (j.contains("color_maps")) color_maps(d, j["color_maps"], ptr + "/color_maps");
    if (j.contains("max_words")) d.max_words = count(d, j["max_words"], ptr + "/max_words");
    if (j.contains("source"))
      d.source = std::make_shared<Definition>(object(j["source"], ptr + "/source", &d.field));
    if (j.contains("target"))
      d.target = std::make_shared<Definition>(object(j["target"], ptr + "/target", &d.field));
    return d;
  }

 private:
  [[noreturn]] void fail(const Definition& d, const std::string& reason, const std::string& ptr) {
    d.fail(reason, ptr);
  }

  std::string str(const Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_string()) fail(d, "expected a string", ptr);
    return j.get<std::string>();
  }

  unsigned count(const Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 1000000) fail(d, "expected a non-negative integer", ptr);
    return j.get<unsigned>();
  }

  Scalar scalar(const Definition& d, const Json& j, const std::string& ptr) {
    try {
      if (j.is_string()) return d.field.parse(j.get<std::string>());
      if (j.is_number_integer()) return d.field.from_int(j.get<long>());
    } catch (const std::exception& e) {
      fail(d, e.what(), ptr);
    }
    fail(d, "coefficient must be an integer or a fraction string", ptr);
  }

  Field field(const Definition& d, const Json& j, const std::string& ptr) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
      const Json& p = j["Fp"];
      if (!p.is_number_unsigned()) fail(d, "characteristic must be a positive integer", ptr + "/Fp");
      try {
        return Field::prime(p.get<std::uint64_t>());
      } catch (const std::exception& e) {
        fail(d, e.what(), ptr + "/Fp");
      }
    }
    fail(d, "field must be \"Q\" or {\"Fp\": p}", ptr);
  }

  std::vector<std::string> names(const Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_array()) fail(d, "expected an array of names", ptr);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string n = str(d, j[i], ptr + "/" + std::to_string(i));
      if (n.empty()) fail(d, "empty name", ptr + "/" + std::to_string(i));
      if (!seen.insert(n).second) fail(d, "duplicate name '" + n + "'", ptr + "/" + std::to_string(i));
      out.push_back(std::move(n));
    }
    return out;
  }

  Index lookup(const Definition& d, const std::vector<std::string>& basis, const Json& j, const std::string& ptr) {
    std::string n = str(d, j, ptr);
    auto it = std::find(basis.begin(), basis.end(), n);
    if (it == basis.end()) fail(d, "unknown name '" + n + "'", ptr);
    return static_cast<Index>(it - basis.begin());
  }

  // {name: coefficient} over a basis
  SparseVector vector(const Definition& d, const std::vector<std::string>& basis, const Json& j,
                      const std::string& ptr) {
    if (!j.is_object()) fail(d, "expected an object of coefficients", ptr);
    VectorBuilder b;
    for (const auto& [k, v] : j.items()) {
      std::string p = ptr + "/" + pointer_token(k);
      auto it = std::find(basis.begin(), basis.end(), k);
      if (it == basis.end()) fail(d, "unknown name '" + k + "'", p);
      b.add(static_cast<Index>(it - basis.begin()), scalar(d, v, p));
    }
    return b.build();
  }

  std::vector<StructureConstant> constants(const Definition& d, const std::vector<std::string>& basis,
                                           const Json& j, const std::string& ptr) {
    if (!j.is_array()) fail(d, "expected an array of [name, name, name, coefficient]", ptr);
    std::vector<StructureConstant> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
      std::string p = ptr + "/" + std::to_string(t);
      if (!j[t].is_array() || j[t].size() != 4) fail(d, "expected [name, name, name, coefficient]", p);
      Index a = lookup(d, basis, j[t][0], p + "/0");
      Index b = lookup(d, basis, j[t][1], p + "/1");
      Index c = lookup(d, basis, j[t][2], p + "/2");
      Scalar v = scalar(d, j[t][3], p + "/3");
      // (element, left, right) for Δ, (left, right, result) for products
      out.emplace_back(a, b, c, v);
    }
    return out;
  }

  Coalgebra coalgebra(const Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "coalgebra must be an object", ptr);
    for (const auto& [k, v] : j.items())
      if (k != "basis" && k != "delta" && k != "counit") fail(d, "unknown key '" + k + "'", key_at(ptr, k));
    if (!j.contains("basis")) fail(d, "coalgebra needs a basis", ptr);
    std::vector<std::string> basis = names(d, j["basis"], ptr + "/basis");
    std::vector<StructureConstant> delta;
    if (j.contains("delta")) delta = constants(d, basis, j["delta"], ptr + "/delta");
    SparseVector eps;
    if (j.contains("counit")) eps = vector(d, basis, j["counit"], ptr + "/counit");
    try {
      return Coalgebra::from_constants(d.field, basis, delta, eps);
    } catch (const std::exception& e) {
      fail(d, e.what(), ptr);
    }
  }

  void quiver(Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "quiver must be an object", ptr);
    for (const auto& [k, v] : j.items())
      if (k != "vertices" && k != "arrows" && k != "max_length") fail(d, "unknown key '" + k + "'", key_at(ptr, k));
    Quiver q;
    if (!j.contains("vertices")) fail(d, "quiver needs vertices", ptr);
    q.vertices = names(d, j["vertices"], ptr + "/vertices");
    if (j.contains("arrows")) {
      const Json& a = j["arrows"];
      if (!a.is_array()) fail(d, "arrows must be an array of [name, source, target]", ptr + "/arrows");
      for (std::size_t t = 0; t < a.size(); ++t) {
        std::string p = ptr + "/arrows/" + std::to_string(t);
        if (!a[t].is_array() || a[t].size() != 3) fail(d, "expected [name, source, target]", p);
        Arrow arrow{str(d, a[t][0], p + "/0"), str(d, a[t][1], p + "/1"), str(d, a[t][2], p + "/2")};
        lookup(d, q.vertices, a[t][1], p + "/1");
        lookup(d, q.vertices, a[t][2], p + "/2");
        q.arrows.push_back(std::move(arrow));
      }
    }
    d.max_length = j.contains("max_length") ? count(d, j["max_length"], ptr + "/max_length") : 1;
    try {
      q.validate();
      d.colored = path_coalgebra(q, d.max_length, d.field);
    } catch (const std::exception& e) {
      fail(d, e.what(), ptr);
    }
    d.coalgebra = d.colored->coalgebra;
    d.quiver = std::move(q);
  }

  void splitting(Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "splitting must be an object", ptr);
    for (const auto& [k, v] : j.items())
      if (k != "colors" && k != "retraction") fail(d, "unknown key '" + k + "'", key_at(ptr, k));
    const Coalgebra& c = *d.coalgebra;
    if (!j.contains("colors")) fail(d, "splitting needs colors", ptr);
    std::vector<std::string> colors = names(d, j["colors"], ptr + "/colors");
    for (std::size_t i = 0; i < colors.size(); ++i)
      lookup(d, c.names, j["colors"][i], ptr + "/colors/" + std::to_string(i));
    Matrix r(c.dim(), c.dim());
    if (j.contains("retraction")) {
      const Json& rj = j["retraction"];
      if (!rj.is_object()) fail(d, "retraction must map names to coefficient objects", ptr + "/retraction");
      for (const auto& [k, v] : rj.items()) {
        std::string p = ptr + "/retraction/" + pointer_token(k);
        auto it = std::find(c.names.begin(), c.names.end(), k);
        if (it == c.names.end()) fail(d, "unknown name '" + k + "'", p);
        r.set_column(static_cast<Index>(it - c.names.begin()), vector(d, c.names, v, p));
      }
    } else {
      for (const auto& g : colors) {
        Index i = c.index_of(g);
        r.set_column(i, SparseVector::unit(i, c.field.one()));
      }
    }
    try {
      d.colored = make_simply_colored(c, colors, r);
    } catch (const std::exception& e) {
      fail(d, e.what(), ptr);
    }
  }

  Algebra algebra(const Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "algebra must be an object", ptr);
    for (const auto& [k, v] : j.items())
      if (k != "basis" && k != "mult" && k != "unit") fail(d, "unknown key '" + k + "'", key_at(ptr, k));
    std::vector<std::string> basis;
    if (j.contains("basis")) basis = names(d, j["basis"], ptr + "/basis");
    else if (d.coalgebra) basis = d.coalgebra->names;
    else fail(d, "algebra needs a basis when there is no coalgebra", ptr);
    std::vector<StructureConstant> mult;
    if (j.contains("mult")) mult = constants(d, basis, j["mult"], ptr + "/mult");
    if (!j.contains("unit")) fail(d, "algebra needs a unit", ptr);
    SparseVector unit = vector(d, basis, j["unit"], ptr + "/unit");
    try {
      return Algebra::from_constants(d.field, basis, mult, unit);
    } catch (const std::exception& e) {
      fail(d, e.what(), ptr);
    }
  }

  void bicomodule(Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "bicomodule must be an object", ptr);
    for (const auto& [k, v] : j.items())
      if (k != "colors" && k != "basis" && k != "degree") fail(d, "unknown key '" + k + "'", key_at(ptr, k));
    if (!j.contains("colors") || !j.contains("basis")) fail(d, "bicomodule needs colors and basis", ptr);
    d.bicomodule_colors = names(d, j["colors"], ptr + "/colors");
    std::vector<std::string> basis = names(d, j["basis"], ptr + "/basis");
    const Json empty = Json::object();
    const Json& deg = j.contains("degree") ? j["degree"] : empty;
    if (!deg.is_object()) fail(d, "degree must map names to [left, right]", ptr + "/degree");
    for (const auto& [k, v] : deg.items())
      if (std::find(basis.begin(), basis.end(), k) == basis.end())
        fail(d, "unknown name '" + k + "'", ptr + "/degree/" + pointer_token(k));
    d.bicomodule_degree.clear();
    for (const auto& n : basis) {
      std::string p = ptr + "/degree/" + pointer_token(n);
      if (!deg.contains(n)) fail(d, "missing degree of '" + n + "'", ptr + "/degree");
      const Json& v = deg[n];
      if (!v.is_array() || v.size() != 2) fail(d, "expected [left color, right color]", p);
      d.bicomodule_degree.emplace_back(lookup(d, d.bicomodule_colors, v[0], p + "/0"),
                                       lookup(d, d.bicomodule_colors, v[1], p + "/1"));
    }
    d.bicomodule = colored_bicomodule(d.field, d.bicomodule_colors, basis, d.bicomodule_degree);
  }

  void maps(Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "maps must be an object", ptr);
    for (const auto& [name, m] : j.items()) {
      std::string p = ptr + "/" + pointer_token(name);
      if (!m.is_object()) fail(d, "a map sends names to coefficient objects", p);
      RawMap raw;
      raw.where = p;
      for (const auto& [col, v] : m.items()) {
        std::string pc = p + "/" + pointer_token(col);
        raw.columns.push_back(col);
        if (!v.is_object()) fail(d, "expected an object of coefficients", pc);
        for (const auto& [row, x] : v.items()) {
          std::string pr = pc + "/" + pointer_token(row);
          raw.terms.push_back({col, row, scalar(d, x, pr), pr});
        }
      }
      d.maps[name] = std::move(raw);
    }
  }

  void color_maps(Definition& d, const Json& j, const std::string& ptr) {
    if (!j.is_object()) fail(d, "color_maps must be an object", ptr);
    for (const auto& [name, m] : j.items()) {
      std::string p = ptr + "/" + pointer_token(name);
      if (!m.is_object()) fail(d, "a color map sends names to names", p);
      RawColorMap raw;
      raw.where = p;
      for (const auto& [from, to] : m.items()) raw.pairs.emplace_back(from, str(d, to, p + "/" + pointer_token(from)));
      d.color_maps[name] = std::move(raw);
    }
  }

  std::shared_ptr<const SourceText> text_;
};

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json vector_json(const std::vector<std::string>& basis, const SparseVector& v) {
  Json o = Json::object();
  for (const auto& e : v.entries()) o[basis[e.index]] = scalar_json(e.value);
  return o;
}

Json definition_json(const Definition& d) {
  Json j = Json::object();
  if (!d.description.empty()) j["description"] = d.description;
  if (d.field.is_rational()) j["field"] = "Q";
  else j["field"] = Json{{"Fp", d.field.characteristic()}};
  if (d.quiver) {
    Json arrows = Json::array();
    for (const auto& a : d.quiver->arrows) arrows.push_back(Json::array({a.name, a.source, a.target}));
    j["quiver"] = Json{{"vertices", d.quiver->vertices}, {"arrows", arrows}, {"max_length", d.max_length}};
  } else if (d.coalgebra) {
    const Coalgebra& c = *d.coalgebra;
    Json delta = Json::array();
    for (const auto& [i, a, b, v] : c.constants())
      delta.push_back(Json::array({c.names[i], c.names[a], c.names[b], scalar_json(v)}));
    j["coalgebra"] = Json{{"basis", c.names}, {"delta", delta}, {"counit", vector_json(c.names, c.counit)}};
    if (d.colored) {
      Json r = Json::object();
      for (Index col = 0; col < c.dim(); ++col)
        if (!d.colored->retraction.column(col).is_zero())
          r[c.names[col]] = vector_json(c.names, d.colored->retraction.column(col));
      j["splitting"] = Json{{"colors", d.colored->color_names}, {"retraction", r}};
    }
  }
  if (d.algebra) {
    const Algebra& a = *d.algebra;
    const Index n = a.dim();
    Json mult = Json::array();
    for (Index col = 0; col < n * n; ++col)
      for (const auto& e : a.mult.column(col).entries())
        mult.push_back(Json::array({a.names[col / n], a.names[col % n], a.names[e.index], scalar_json(e.value)}));
    j["algebra"] = Json{{"basis", a.names}, {"mult", mult}, {"unit", vector_json(a.names, a.unit)}};
  }
  if (d.bicomodule) {
    Json deg = Json::object();
    for (Index i = 0; i < d.bicomodule->dim(); ++i)
      deg[d.bicomodule->names[i]] = Json::array(
          {d.bicomodule_colors[d.bicomodule_degree[i].first], d.bicomodule_colors[d.bicomodule_degree[i].second]});
    j["bicomodule"] = Json{{"colors", d.bicomodule_colors}, {"basis", d.bicomodule->names}, {"degree", deg}};
  }
  if (!d.maps.empty()) {
    Json maps = Json::object();
    for (const auto& [name, raw] : d.maps) {
      Json m = Json::object();
      for (const auto& col : raw.columns) m[col] = Json::object();
      for (const auto& t : raw.terms) m[t.column][t.row] = scalar_json(t.value);
      maps[name] = m;
    }
    j["maps"] = maps;
  }
  if (!d.color_maps.empty()) {
    Json cm = Json::object();
    for (const auto& [name, raw] : d.color_maps) {
      Json m = Json::object();
      for (const auto& [from, to] : raw.pairs) m[from] = to;
      cm[name] = m;
    }
    j["color_maps"] = cm;
  }
  if (d.max_words) j["max_words"] = *d.max_words;
  if (d.source) j["source"] = definition_json(*d.source);
  if (d.target) j["target"] = definition_json(*d.target);
  return j;
}

}  // namespace

Matrix Definition::resolve_map(const std::string& name, const std::vector<std::string>& rows,
                               const std::vector<std::string>& cols) const {
  auto it = maps.find(name);
  if (it == maps.end()) fail("missing map '" + name + "'", where + "/maps");
  std::vector<std::vector<Entry>> c(cols.size());
  for (const auto& t : it->second.terms) {
    auto ci = std::find(cols.begin(), cols.end(), t.column);
    if (ci == cols.end()) fail("unknown source name '" + t.column + "'", t.where);
    auto ri = std::find(rows.begin(), rows.end(), t.row);
    if (ri == rows.end()) fail("unknown target name '" + t.row + "'", t.where);
    c[ci - cols.begin()].push_back({static_cast<Index>(ri - rows.begin()), t.value});
  }
  for (const auto& col : it->second.columns)
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
      fail("unknown source name '" + col + "'", it->second.where);
  std::vector<SparseVector> vs;
  for (auto& es : c) {
    VectorBuilder b;
    for (const auto& e : es) b.add(e.index, e.value);
    vs.push_back(b.build());
  }
  return Matrix::from_columns(rows.size(), std::move(vs));
}

std::vector<std::size_t> Definition::resolve_color_map(const std::string& name, const std::vector<std::string>& from,
                                                       const std::vector<std::string>& to) const {
  auto it = color_maps.find(name);
  if (it == color_maps.end()) fail("missing color map '" + name + "'", where + "/color_maps");
  std::vector<std::size_t> out(from.size(), to.size());
  for (const auto& [a, b] : it->second.pairs) {
    auto ai = std::find(from.begin(), from.end(), a);
    auto bi = std::find(to.begin(), to.end(), b);
    if (ai == from.end()) fail("unknown color '" + a + "'", it->second.where);
    if (bi == to.end()) fail("unknown color '" + b + "'", it->second.where);
    out[ai - from.begin()] = static_cast<std::size_t>(bi - to.begin());
  }
  for (std::size_t i = 0; i < from.size(); ++i)
    if (out[i] == to.size()) fail("color '" + from[i] + "' is not mapped", it->second.where);
  return out;
}

Definition parse_definition(const std::string& text, const std::string& source_name) {
  auto src = std::make_shared<SourceText>(SourceText{source_name, text});
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = src->line_column(e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    auto pos = what.find("parse error");
    throw ParseError(source_name, line, col, "malformed JSON: " + (pos == std::string::npos ? what : what.substr(pos)));
  }
  return Reader(src).object(j, "", nullptr);
}

Definition load_definition(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str(), path);
}

std::string emit_definition(const Definition& d) { return definition_json(d).dump(2) + "\n"; }

}  // namespace coalg::cli
