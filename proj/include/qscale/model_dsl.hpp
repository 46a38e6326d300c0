#pragma once

// Reader and writer for .qrm model files.
//
//   document   := { statement } ;
//   statement  := system | law | directive ;
//   system     := "system" STRING "{" { dofline } "}" ;
//   dofline    := ( "qudit" "levels" "=" INT
//                 | "continuous" ( "action_h" "=" NUM | "dq" "=" NUM "dp" "=" NUM "h" "=" NUM )
//                 | "angular" "dj_hbar" "=" NUM ) [ "count" "=" INT ] ";" ;
//   law        := "law" STRING "{" "c" "=" NUM ";" "alpha" "=" NUM ";" "beta" "=" NUM ";" "}" ;
//   directive  := ( "analyze" STRING | "curve" STRING "n" "=" INT ".." INT
//                 | "hydrogen" "n_qubits" "=" INT | "tile" "[" INT { "," INT } "]" ) ";" ;
//
// "#" starts a comment that runs to the end of the line.  LF and CRLF line
// endings are both accepted.  Strings are double-quoted and understand the
// escapes \" \\ \n \t \r.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qscale/phase_space.hpp"
#include "qscale/scaling.hpp"

namespace qscale::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::string snippet);

  /// 1-based.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  /// 1-based, counted in code points.
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }
  /// Full text of the offending line.
  [[nodiscard]] const std::string& snippet() const noexcept { return snippet_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string snippet_;
};

struct NamedLaw {
  std::string name;
  GrowthLaw law;
  friend bool operator==(const NamedLaw&, const NamedLaw&) = default;
};

struct AnalyzeDirective {
  std::string target;
  friend bool operator==(const AnalyzeDirective&, const AnalyzeDirective&) = default;
};

struct CurveDirective {
  std::string law;
  std::uint64_t n_start;
  std::uint64_t n_end;
  friend bool operator==(const CurveDirective&, const CurveDirective&) = default;
};

struct HydrogenDirective {
  std::uint64_t n_qubits;
  friend bool operator==(const HydrogenDirective&, const HydrogenDirective&) = default;
};

struct TileDirective {
  std::vector<std::uint64_t> dims;
  friend bool operator==(const TileDirective&, const TileDirective&) = default;
};

using Directive = std::variant<AnalyzeDirective, CurveDirective, HydrogenDirective, TileDirective>;

/// Systems and laws share one namespace; names are unique across both.
struct ModelDocument {
  std::vector<SystemModel> systems;
  std::vector<NamedLaw> laws;
  std::vector<Directive> directives;

  [[nodiscard]] const SystemModel* find_system(std::string_view name) const;
  [[nodiscard]] const NamedLaw* find_law(std::string_view name) const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Throws ParseError at the first offending position.
ModelDocument parse(std::string_view source);

/// Canonical text; parse(render(doc)) == doc.
std::string render(const ModelDocument& doc);

}  // namespace qscale::dsl
