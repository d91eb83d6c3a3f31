#pragma once

#include "coalg/category_ops.hpp"
#include "coalg/convolution.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coalg::cli {

/// Malformed definition file, located at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& reason);
  std::string source;
  std::size_t line;
  std::size_t column;
  std::string reason;
};

struct SourceText;

/// Linear map given by name: column name -> (row name -> coefficient).
/// Names are resolved against bases only when the map is used.
struct RawMap {
  struct Term {
    std::string column;
    std::string row;
    Scalar value;
    std::string where;  // JSON pointer, for error locations
  };
  std::vector<Term> terms;
  std::vector<std::string> columns;  // file order, including empty columns
  std::string where;
};

struct RawColorMap {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string where;
};

/// One parsed definition file (or nested "source"/"target" object).
struct Definition {
  std::string description;
  Field field;
  std::optional<Coalgebra> coalgebra;
  /// present when a splitting block or a quiver is given
  std::optional<SimplyColored> colored;
  std::optional<Algebra> algebra;
  std::optional<Quiver> quiver;
  unsigned max_length = 0;
  std::optional<Bicomodule> bicomodule;
  std::vector<std::string> bicomodule_colors;
  std::vector<std::pair<std::size_t, std::size_t>> bicomodule_degree;
  std::map<std::string, RawMap> maps;
  std::map<std::string, RawColorMap> color_maps;
  std::optional<unsigned> max_words;
  std::shared_ptr<Definition> source;
  std::shared_ptr<Definition> target;
  std::shared_ptr<const SourceText> text;
  std::string where;

  /// Resolves a named map into a rows x cols matrix; positioned ParseError
  /// on a missing map or an unknown name.
  Matrix resolve_map(const std::string& name, const std::vector<std::string>& rows,
                     const std::vector<std::string>& cols) const;
  /// Resolves a named color map from `from` into indices of `to`.
  std::vector<std::size_t> resolve_color_map(const std::string& name, const std::vector<std::string>& from,
                                             const std::vector<std::string>& to) const;
  /// ParseError located at this definition (or at `pointer` inside the file).
  [[noreturn]] void fail(const std::string& reason, const std::string& pointer = {}) const;
};

Definition parse_definition(const std::string& text, const std::string& source_name = "<input>");
Definition load_definition(const std::string& path);

/// Canonical JSON text of a definition; parse_definition reads it back to an
/// equal object.
std::string emit_definition(const Definition& d);

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 when a check fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coalg::cli
