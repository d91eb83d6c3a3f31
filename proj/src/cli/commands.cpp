#include "coalg/cli.hpp"
#include "coalg/coradical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace coalg::cli {

using Json = nlohmann::ordered_json;

namespace {

// A check that fails with the report already filled in.
struct Outcome {
  Json report = Json::object();
  int code = 0;
};

Json checks_json(const Report& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) {
    Json o{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed && !c.witness.empty()) o["witness"] = c.witness;
    a.push_back(o);
  }
  return a;
}

Json names_json(const Coalgebra& c, const std::vector<SparseVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(c.format(v));
  return a;
}

Json matrix_json(const Matrix& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  Json o = Json::object();
  for (Index j = 0; j < m.cols(); ++j) {
    Json col = Json::object();
    for (const auto& e : m.column(j).entries()) col[rows[e.index]] = e.value.to_string();
    o[cols[j]] = col;
  }
  return o;
}

Json reduced_json(const ReducedColored& rc) {
  Json basis = Json::array();
  for (Index i = 0; i < rc.dim(); ++i)
    basis.push_back(Json{{"name", rc.names[i]},
                         {"left", rc.colors[rc.degree[i].first]},
                         {"right", rc.colors[rc.degree[i].second]}});
  const Index m = rc.dim();
  Json delta = Json::array();
  for (Index j = 0; j < m; ++j)
    for (const auto& e : rc.delta_bar.column(j).entries())
      delta.push_back(Json::array({rc.names[j], rc.names[e.index / m], rc.names[e.index % m], e.value.to_string()}));
  return Json{{"colors", rc.colors}, {"basis", basis}, {"delta_bar", delta}};
}

Json colored_json(const SimplyColored& sc, const std::string& description) {
  Definition d;
  d.description = description;
  d.field = sc.coalgebra.field;
  d.coalgebra = sc.coalgebra;
  d.colored = sc;
  return Json::parse(emit_definition(d));
}

const Coalgebra& need_coalgebra(const Definition& d) {
  if (!d.coalgebra) d.fail("needs a coalgebra or a quiver block");
  return *d.coalgebra;
}

const SimplyColored& need_colored(const Definition& d) {
  if (!d.colored) d.fail("needs a splitting block or a quiver");
  return *d.colored;
}

unsigned need_max_words(const Definition& d) {
  if (!d.max_words) d.fail("needs max_words");
  return *d.max_words;
}

Outcome from_report(Json head, const Report& r) {
  head["ok"] = r.ok();
  head["checks"] = checks_json(r);
  return {head, r.ok() ? 0 : 1};
}

Outcome validate(const Definition& d) {
  Report r;
  if (d.colored) r.append(validate_colored(*d.colored));
  else if (d.coalgebra) r.append(check_coalgebra(*d.coalgebra));
  if (d.algebra) {
    if (d.coalgebra && d.algebra->names == d.coalgebra->names) r.append(check_bialgebra({*d.coalgebra, *d.algebra}));
    else r.append(check_algebra(*d.algebra));
  }
  if (d.bicomodule) r.append(check_bicomodule(*d.bicomodule));
  if (r.checks.empty()) d.fail("nothing to validate");
  return from_report(Json::object(), r);
}

Outcome coradical_cmd(const Definition& d) {
  const Coalgebra& c = need_coalgebra(d);
  Subspace c0 = coradical(c);
  return {Json{{"dimension", c0.dim()}, {"basis", names_json(c, c0.basis())}}, 0};
}

Outcome filtration_cmd(const Definition& d) {
  const Coalgebra& c = need_coalgebra(d);
  Filtration f = coradical_filtration(c);
  Json levels = Json::array();
  for (const auto& t : f.terms) levels.push_back(Json{{"dimension", t.dim()}, {"basis", names_json(c, t.basis())}});
  return {Json{{"exhaustive", f.exhaustive}, {"levels", levels}}, 0};
}

Outcome conilpotency_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  const Coalgebra& c = sc.coalgebra;
  Conilpotency cn = conilpotency(sc);
  Json chain = Json::array();
  for (const auto& k : cn.kernel_chain) chain.push_back(k.dim());
  Json index = Json::object();
  for (Index i = 0; i < c.dim(); ++i) {
    SparseVector b = SparseVector::unit(i, c.field.one());
    if (!sc.retraction.apply(b).is_zero()) continue;
    bool reached = !cn.kernel_chain.empty() && cn.kernel_chain.back().contains(b);
    index[c.names[i]] = reached ? Json(conilpotency_index(cn, b)) : Json(nullptr);
  }
  Json out{{"conilpotent", cn.conilpotent}, {"bound", cn.bound()}, {"kernel_chain", chain}, {"index", index}};
  return {out, cn.conilpotent ? 0 : 1};
}

Outcome bigrade_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  Json comps = Json::array();
  for (const auto& [key, s] : bigraded_decomposition(sc))
    comps.push_back(Json{{"left", sc.color_names[key.first]},
                         {"right", sc.color_names[key.second]},
                         {"dimension", s.dim()}});
  return {Json{{"colors", sc.color_names}, {"components", comps}}, 0};
}

Outcome pointed_cmd(const Definition& d) {
  const Coalgebra& c = need_coalgebra(d);
  PointedResult p = is_pointed(c);
  const char* verdict = p.verdict == PointedVerdict::pointed       ? "pointed"
                        : p.verdict == PointedVerdict::not_pointed ? "not pointed"
                                                                   : "coradical does not split over the field";
  Json out{{"pointed", p.pointed()}, {"verdict", verdict}, {"coradical_dimension", p.coradical.dim()}};
  if (!p.reason.empty()) out["reason"] = p.reason;
  out["setlikes"] = names_json(c, p.setlikes);
  int code = p.pointed() ? 0 : 1;
  if (d.colored && p.pointed()) {
    Report r = verify_pointed(*d.colored);
    out["checks"] = checks_json(r);
    if (!r.ok()) code = 1;
  }
  return {out, code};
}

Outcome pathcoalg_cmd(const Definition& d, unsigned length) {
  if (!d.quiver) d.fail("needs a quiver block");
  SimplyColored sc = path_coalgebra(*d.quiver, length, d.field);
  Json out = colored_json(sc, d.description);
  Json lengths = Json::object();
  std::vector<unsigned> ls = path_lengths(*d.quiver, length);
  for (Index i = 0; i < sc.dim(); ++i) lengths[sc.coalgebra.names[i]] = ls[i];
  out["length"] = lengths;
  return {out, 0};
}

Outcome cotensor_cmd(const Definition& d) {
  if (!d.bicomodule) d.fail("needs a bicomodule block");
  CotensorCoalgebra t = cotensor_coalgebra(*d.bicomodule, need_max_words(d));
  Json out = colored_json(t.colored, d.description);
  Json words = Json::object();
  for (Index i = 0; i < t.colored.dim(); ++i) words[t.colored.coalgebra.names[i]] = t.word_length[i];
  out["word_length"] = words;
  return {out, 0};
}

Outcome cofree_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  if (!d.bicomodule) d.fail("needs a bicomodule block");
  const Coalgebra& c = sc.coalgebra;
  Matrix f = d.resolve_map("f", d.bicomodule->names, c.names);
  std::vector<std::size_t> phi = d.resolve_color_map("phi", sc.color_names, d.bicomodule_colors);
  CofreeMap m = cofree_universal_map(sc, *d.bicomodule, f, phi, need_max_words(d));
  const Coalgebra& t = m.target.colored.coalgebra;
  Report r = check_morphism(m.map);
  Matrix pi = c.identity() - sc.retraction;
  r.add("projection onto the generators recovers f", word_projection(m.target) * m.map.matrix == f * pi);
  Json out{{"target_dimension", t.dim()},
           {"target_basis", t.names},
           {"map", matrix_json(m.map.matrix, t.names, c.names)}};
  return from_report(out, r);
}

Outcome convinv_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  if (!d.algebra) d.fail("needs an algebra block");
  const Algebra& a = *d.algebra;
  ConvMap f{sc.coalgebra, a, d.resolve_map("f", a.names, sc.coalgebra.names)};
  try {
    ConvMap h = conv_inverse(sc, f);
    return {Json{{"ok", true}, {"inverse", matrix_json(h.matrix, a.names, sc.coalgebra.names)}}, 0};
  } catch (const NotInvertible& e) {
    return {Json{{"ok", false}, {"error", e.what()}, {"color", e.color}}, 1};
  }
}

Outcome antipode_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  if (!d.algebra) d.fail("needs an algebra block");
  Bialgebra b{sc.coalgebra, *d.algebra};
  Report r = check_bialgebra(b);
  if (!r.ok()) return from_report(Json::object(), r);
  try {
    ConvMap s = antipode(b, sc);
    return {Json{{"ok", true}, {"antipode", matrix_json(s.matrix, b.algebra.names, sc.coalgebra.names)}}, 0};
  } catch (const NoAntipode& e) {
    return {Json{{"ok", false}, {"error", e.what()}}, 1};
  }
}

Outcome coproduct_cmd(const std::vector<Definition>& ds) {
  std::vector<SimplyColored> scs;
  for (const auto& d : ds) scs.push_back(need_colored(d));
  ColoredCoproduct cp = coproduct(scs);
  Json out = colored_json(cp.sum, "coproduct");
  Json inj = Json::array();
  for (std::size_t k = 0; k < scs.size(); ++k)
    inj.push_back(matrix_json(cp.injections[k], cp.sum.coalgebra.names, scs[k].coalgebra.names));
  out["injections"] = inj;
  return {out, 0};
}

Outcome equalizer_cmd(const Definition& d) {
  const SimplyColored& sc = need_colored(d);
  const Coalgebra& c = sc.coalgebra;
  const Coalgebra& t = d.target ? need_coalgebra(*d.target) : c;
  CoalgebraMorphism f{c, t, d.resolve_map("f", t.names, c.names)};
  CoalgebraMorphism g{c, t, d.resolve_map("g", t.names, c.names)};
  Report r;
  for (const auto& [name, m] : {std::pair{"f", &f}, std::pair{"g", &g}})
    for (auto chk : check_morphism(*m).checks) {
      chk.name = std::string(name) + ": " + chk.name;
      r.checks.push_back(chk);
    }
  if (!r.ok()) return from_report(Json::object(), r);
  Equalizer eq = equalizer(sc, f, g);
  return {Json{{"dimension", eq.subspace.dim()},
               {"basis", names_json(c, eq.subspace.basis())},
               {"colors", eq.object.color_names}},
          0};
}

Outcome coequalizer_cmd(const Definition& d) {
  if (!d.source) d.fail("needs a source block");
  ReducedColored dst = reduce(need_colored(d));
  ReducedColored src = reduce(need_colored(*d.source));
  ColoredMorphism f{d.resolve_map("f", dst.names, src.names), d.resolve_color_map("f", src.colors, dst.colors)};
  ColoredMorphism g{d.resolve_map("g", dst.names, src.names), d.resolve_color_map("g", src.colors, dst.colors)};
  Coequalizer q = coequalizer_reduced(f, g, src, dst);
  Json classes = Json::object();
  for (std::size_t x = 0; x < dst.colors.size(); ++x)
    classes[dst.colors[x]] = q.object.colors[q.projection.color_map[x]];
  Json out = reduced_json(q.object);
  out["color_classes"] = classes;
  out["projection"] = matrix_json(q.projection.fbar, q.object.names, dst.names);
  return {out, 0};
}

Outcome product_cmd(const std::vector<Definition>& ds, unsigned max_words) {
  std::vector<ReducedColored> rcs;
  for (const auto& d : ds) rcs.push_back(reduce(need_colored(d)));
  TruncatedProduct p = product_truncated(rcs, max_words);
  Json out = reduced_json(p.object);
  out["approximate"] = p.approximate;
  out["max_words"] = p.max_words;
  Json proj = Json::array();
  for (std::size_t a = 0; a < rcs.size(); ++a) {
    Json colors = Json::object();
    for (std::size_t x = 0; x < p.object.colors.size(); ++x)
      colors[p.object.colors[x]] = rcs[a].colors[p.projections[a].color_map[x]];
    proj.push_back(Json{{"colors", colors}, {"map", matrix_json(p.projections[a].fbar, rcs[a].names, p.object.names)}});
  }
  out["projections"] = proj;
  return {out, 0};
}

// Plain-text rendering of a report, indentation by nesting depth.
void render_text(const Json& j, std::ostream& out, int depth = 0) {
  const std::string pad(2 * depth, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto simple = [](const Json& v) { return !v.is_structured() || v.empty(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (simple(v)) {
        out << pad << k << ": " << (v.is_structured() ? (v.is_array() ? "[]" : "{}") : scalar(v)) << "\n";
      } else {
        out << pad << k << ":\n";
        render_text(v, out, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (simple(v)) {
        out << pad << "- " << (v.is_structured() ? (v.is_array() ? "[]" : "{}") : scalar(v)) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); })) {
        out << pad << "-";
        for (const auto& x : v) out << " " << scalar(x);
        out << "\n";
      } else {
        out << pad << "-\n";
        render_text(v, out, depth + 1);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with simply colored coalgebras", "coalg"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "text";
  std::string output_dir;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output-dir", output_dir, "Write the report into this directory instead of stdout");

  std::vector<std::string> files;
  std::string file;
  unsigned length = 0, max_words = 0;
  struct Entry {
    const char* name;
    const char* help;
    std::function<Outcome(const std::vector<Definition>&)> fn;
    bool many = false;
  };
  std::vector<Entry> entries{
      {"validate", "Check coalgebra, retraction, bicomodule and bialgebra axioms",
       [](auto& ds) { return validate(ds[0]); }},
      {"coradical", "Coradical C0", [](auto& ds) { return coradical_cmd(ds[0]); }},
      {"filtration", "Coradical filtration", [](auto& ds) { return filtration_cmd(ds[0]); }},
      {"conilpotency", "Kernel chain and conilpotency index of each basis element",
       [](auto& ds) { return conilpotency_cmd(ds[0]); }},
      {"bigrade", "Dimensions of the bigraded components", [](auto& ds) { return bigrade_cmd(ds[0]); }},
      {"pointed", "Decide pointedness", [](auto& ds) { return pointed_cmd(ds[0]); }},
      {"pathcoalg", "Truncated path coalgebra of a quiver", [&](auto& ds) { return pathcoalg_cmd(ds[0], length); }},
      {"cotensor", "Truncated cotensor coalgebra of a bicomodule", [](auto& ds) { return cotensor_cmd(ds[0]); }},
      {"cofree", "Universal map into the cotensor coalgebra", [](auto& ds) { return cofree_cmd(ds[0]); }},
      {"convinv", "Convolution inverse of a map into an algebra", [](auto& ds) { return convinv_cmd(ds[0]); }},
      {"antipode", "Antipode of a bialgebra", [](auto& ds) { return antipode_cmd(ds[0]); }},
      {"coproduct", "Coproduct of simply colored coalgebras", [](auto& ds) { return coproduct_cmd(ds); }, true},
      {"equalizer", "Equalizer of two morphisms", [](auto& ds) { return equalizer_cmd(ds[0]); }},
      {"coequalizer", "Coequalizer of two colored morphisms", [](auto& ds) { return coequalizer_cmd(ds[0]); }},
      {"product", "Word-truncated product of colored coalgebras",
       [&](auto& ds) { return product_cmd(ds, max_words); }, true},
  };
  for (auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    if (e.many) sub->add_option("files", files, "Definition files")->required()->check(CLI::ExistingFile);
    else sub->add_option("file", file, "Definition file")->required()->check(CLI::ExistingFile);
    if (std::string(e.name) == "pathcoalg") sub->add_option("length", length, "Maximal path length")->required();
    if (std::string(e.name) == "product")
      sub->add_option("--max-words", max_words, "Word-length truncation")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!file.empty()) files = {file};
  const Entry* chosen = nullptr;
  for (const auto& e : entries)
    if (app.got_subcommand(e.name)) chosen = &e;

  Outcome result;
  try {
    std::vector<Definition> ds;
    for (const auto& f : files) ds.push_back(load_definition(f));
    result = chosen->fn(ds);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    result = {Json{{"ok", false}, {"error", e.what()}}, 1};
  }

  Json report{{"command", chosen->name}};
  for (const auto& [k, v] : result.report.items()) report[k] = v;
  std::string text;
  if (format == "json") {
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream s;
    render_text(report, s);
    text = s.str();
  }
  if (output_dir.empty()) {
    out << text;
  } else {
    std::filesystem::create_directories(output_dir);
    std::string stem = std::filesystem::path(files.front()).stem().string();
    auto path = std::filesystem::path(output_dir) / (stem + "." + chosen->name + (format == "json" ? ".json" : ".txt"));
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
      err << "cannot write " << path.string() << "\n";
      return 2;
    }
  }
  return result.code;
}

}  // namespace coalg::cli
