#include "qscale/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qscale/errors.hpp"
#include "qscale/format.hpp"
#include "qscale/hydrogen.hpp"
#include "qscale/model_dsl.hpp"
#include "qscale/phase_space.hpp"
#include "qscale/scaling.hpp"
#include "qscale/tiling.hpp"

namespace qscale::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t max_safe_json_integer = (std::int64_t{1} << 53) - 1;

const char* spin_note =
    "spin is ignored; including it multiplies state counts by a small constant without changing the scaling";

// Integers beyond 2^53-1 become decimal strings so JSON readers keep every digit.
Json json_integer(const BigInt& value) {
  if (abs(value) <= max_safe_json_integer) return value.convert_to<std::int64_t>();
  return to_decimal(value);
}

Json json_real(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

// Exact value only when it fits 64 bits, unless the caller asked for it.
Json json_dimension(const BigInt& value, bool exact) {
  if (exact || bit_length(value) <= 64) return json_integer(value);
  return nullptr;
}

std::string text_dimension(const BigInt& value, double log2_value, bool exact) {
  if (exact || bit_length(value) <= 64) return to_decimal(value);
  return "2^" + format_real(log2_value);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool color) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
      }
      out << '\n';
    };
    if (color) out << "\033[1m";
    line(header_);
    if (color) out << "\033[0m";
    for (const auto& row : rows_) line(row);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return ReportFormat::Table;
}

void emit_json(std::ostream& out, const Json& value) { out << value.dump(2) << '\n'; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

dsl::ModelDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return dsl::parse(buffer.str());
}

// --- analyze ---------------------------------------------------------------

struct SystemRow {
  const SystemModel* system;
  DimensionBudget budget;
};

struct LawRow {
  const dsl::NamedLaw* law;
  ScalingVerdict symbolic;
  ScalingVerdict numeric;
};

std::vector<std::uint64_t> numeric_probe_grid() {
  std::vector<std::uint64_t> grid;
  for (unsigned k = 4; k <= 20; ++k) grid.push_back(std::uint64_t{1} << k);
  return grid;
}

Json curve_json(const std::string& law_name, const ResourceCurve& result) {
  Json points = Json::array();
  for (const auto& p : result.points) {
    points.push_back({{"n", p.n},
                      {"t", p.t},
                      {"action_per_dof_log2", p.action_per_dof_log2},
                      {"total_action_log2", p.total_action_log2}});
  }
  return {{"law", law_name}, {"points", points}};
}

Json hydrogen_json(const hydrogen::HydrogenReport& report) {
  return {{"target_qubits", report.target_qubits},
          {"n_min", json_integer(report.n_min)},
          {"state_count", json_integer(report.state_count)},
          {"radius_a0", json_integer(report.radius_a0)},
          {"radius_km", report.radius_km},
          {"sun_diameter_ratio", report.sun_diameter_ratio},
          {"note", spin_note}};
}

Json cells_json(const std::vector<tiling::CellLabel>& cells) {
  Json rows = Json::array();
  for (const auto& cell : cells) {
    rows.push_back({{"flat_index", cell.flat_index},
                    {"multi_index", cell.multi_index},
                    {"binary_label", cell.binary_label},
                    {"unary_label", cell.unary_label}});
  }
  return rows;
}

void print_curve_table(std::ostream& out, const ResourceCurve& result, bool color) {
  Table table({"N", "T", "log2(A/h)", "log2(TA/h)"});
  for (const auto& p : result.points) {
    table.add({std::to_string(p.n), std::to_string(p.t), format_real(p.action_per_dof_log2),
               format_real(p.total_action_log2)});
  }
  table.print(out, color);
}

void print_hydrogen_table(std::ostream& out, const hydrogen::HydrogenReport& report, bool color) {
  Table table({"field", "value"});
  table.add({"target_qubits", std::to_string(report.target_qubits)});
  table.add({"n_min", to_decimal(report.n_min)});
  table.add({"state_count", to_decimal(report.state_count)});
  table.add({"radius_a0", to_decimal(report.radius_a0)});
  table.add({"radius_km", format_real(report.radius_km)});
  table.add({"sun_diameter_ratio", format_real(report.sun_diameter_ratio)});
  table.print(out, color);
  out << "note: " << spin_note << '\n';
}

void print_cells_table(std::ostream& out, const std::vector<tiling::CellLabel>& cells, bool color) {
  Table table({"flat_index", "multi_index", "binary", "unary"});
  for (const auto& cell : cells) {
    std::string index;
    for (std::size_t i = 0; i < cell.multi_index.size(); ++i) {
      index += (i ? "," : "") + std::to_string(cell.multi_index[i]);
    }
    table.add({std::to_string(cell.flat_index), "(" + index + ")", cell.binary_label, cell.unary_label});
  }
  table.print(out, color);
}

Json tagged(const char* directive, const Json& body) {
  Json entry{{"directive", directive}};
  for (const auto& [key, value] : body.items()) entry[key] = value;
  return entry;
}

struct AnalyzeArgs {
  std::string file;
  std::string format = "table";
  bool exact = false;
  NumericThresholds thresholds;
};

int analyze(const AnalyzeArgs& args, std::ostream& out, const RunOptions& options) {
  const dsl::ModelDocument doc = load(args.file);

  // Explicit analyze directives narrow the report to the named items.
  std::vector<std::string> targets;
  for (const auto& d : doc.directives) {
    if (const auto* a = std::get_if<dsl::AnalyzeDirective>(&d)) targets.push_back(a->target);
  }
  const auto wanted = [&](const std::string& name) {
    return targets.empty() || std::find(targets.begin(), targets.end(), name) != targets.end();
  };

  std::vector<SystemRow> systems;
  for (const auto& system : doc.systems) {
    if (wanted(system.name())) systems.push_back({&system, system_dimension(system)});
  }
  const auto grid = numeric_probe_grid();
  std::vector<LawRow> laws;
  for (const auto& law : doc.laws) {
    if (!wanted(law.name)) continue;
    const auto samples = sample_law(law.law, grid);
    laws.push_back({&law, classify(law.law), classify_numeric(samples, args.thresholds)});
  }

  const ReportFormat format = parse_format(args.format);
  if (format == ReportFormat::Csv) {
    csv_row(out, {"kind", "name", "dof_count", "dimension", "dimension_log2", "qubit_equivalent", "c", "alpha",
                  "beta", "verdict", "numeric_verdict", "implied_qudit_levels"});
    for (const auto& row : systems) {
      const Json dim = json_dimension(row.budget.exact, args.exact);
      csv_row(out, {"system", row.system->name(), to_decimal(row.system->dof_count()),
                    dim.is_null() ? "" : to_decimal(row.budget.exact), format_real(row.budget.log2),
                    std::to_string(qubit_equivalent(row.budget)), "", "", "", "", "", ""});
    }
    for (const auto& row : laws) {
      const auto& law = row.law->law;
      csv_row(out, {"law", row.law->name, "", "", "", "", format_real(law.c()), format_real(law.alpha()),
                    format_real(law.beta()), std::string(to_string(row.symbolic.category)),
                    std::string(to_string(row.numeric.category)),
                    row.symbolic.implied_qudit_levels ? format_real(*row.symbolic.implied_qudit_levels) : ""});
    }
    return exit_ok;
  }

  // Remaining directives run after the per-item report.
  Json directive_results = Json::array();
  std::ostringstream directive_tables;
  for (const auto& d : doc.directives) {
    if (const auto* c = std::get_if<dsl::CurveDirective>(&d)) {
      const auto points = geometric_grid(c->n_start, c->n_end, 16);
      const auto result = curve(doc.find_law(c->law)->law, points);
      directive_results.push_back(tagged("curve", curve_json(c->law, result)));
      directive_tables << "\ncurve \"" << c->law << "\" n = " << c->n_start << ".." << c->n_end << '\n';
      print_curve_table(directive_tables, result, options.color);
    } else if (const auto* h = std::get_if<dsl::HydrogenDirective>(&d)) {
      const auto report = hydrogen::radius_report(h->n_qubits);
      directive_results.push_back(tagged("hydrogen", hydrogen_json(report)));
      directive_tables << "\nhydrogen n_qubits = " << h->n_qubits << '\n';
      print_hydrogen_table(directive_tables, report, options.color);
    } else if (const auto* t = std::get_if<dsl::TileDirective>(&d)) {
      const auto cells = tiling::enumerate_cells(t->dims);
      directive_results.push_back({{"directive", "tile"}, {"dims", t->dims}, {"cells", cells_json(cells)}});
      directive_tables << "\ntile\n";
      print_cells_table(directive_tables, cells, options.color);
    }
  }

  if (format == ReportFormat::Json) {
    Json systems_json = Json::array();
    for (const auto& row : systems) {
      systems_json.push_back({{"name", row.system->name()},
                              {"dof_count", json_integer(row.system->dof_count())},
                              {"dimension", json_dimension(row.budget.exact, args.exact)},
                              {"dimension_log2", row.budget.log2},
                              {"phase_space_volume_log2", json_real(row.budget.phase_space_volume_log2)},
                              {"qubit_equivalent", qubit_equivalent(row.budget)}});
    }
    Json laws_json = Json::array();
    for (const auto& row : laws) {
      const auto& law = row.law->law;
      laws_json.push_back(
          {{"name", row.law->name},
           {"c", law.c()},
           {"alpha", law.alpha()},
           {"beta", law.beta()},
           {"verdict", to_string(row.symbolic.category)},
           {"implied_qudit_levels",
            row.symbolic.implied_qudit_levels ? Json(*row.symbolic.implied_qudit_levels) : Json(nullptr)},
           {"evidence", row.symbolic.evidence},
           {"numeric_verdict", to_string(row.numeric.category)},
           {"numeric_evidence", row.numeric.evidence}});
    }
    emit_json(out, {{"systems", systems_json}, {"laws", laws_json}, {"directives", directive_results}});
    return exit_ok;
  }

  if (!systems.empty()) {
    Table table({"system", "dofs", "dimension", "log2(dim)", "qubits"});
    for (const auto& row : systems) {
      table.add({row.system->name(), to_decimal(row.system->dof_count()),
                 text_dimension(row.budget.exact, row.budget.log2, args.exact), format_real(row.budget.log2),
                 std::to_string(qubit_equivalent(row.budget))});
    }
    table.print(out, options.color);
  }
  if (!laws.empty()) {
    if (!systems.empty()) out << '\n';
    Table table({"law", "verdict", "numeric probe", "D"});
    for (const auto& row : laws) {
      table.add({row.law->name, std::string(to_string(row.symbolic.category)),
                 std::string(to_string(row.numeric.category)),
                 row.symbolic.implied_qudit_levels ? format_real(*row.symbolic.implied_qudit_levels) : "-"});
    }
    table.print(out, options.color);
    for (const auto& row : laws) out << "  " << row.law->name << ": " << row.symbolic.evidence << '\n';
  }
  out << directive_tables.str();
  return exit_ok;
}

// --- curve -----------------------------------------------------------------

struct CurveArgs {
  std::string file;
  std::string law;
  std::optional<std::uint64_t> n_start;
  std::optional<std::uint64_t> n_end;
  std::size_t points = 16;
  std::string format = "table";
};

int curve_command(const CurveArgs& args, std::ostream& out, const RunOptions& options) {
  const dsl::ModelDocument doc = load(args.file);
  const dsl::NamedLaw* law = nullptr;
  if (!args.law.empty()) {
    law = doc.find_law(args.law);
    if (law == nullptr) throw UsageError("no law named \"" + args.law + "\" in " + args.file);
  } else if (doc.laws.size() == 1) {
    law = &doc.laws.front();
  } else {
    throw UsageError("--law is required when the file defines " + std::to_string(doc.laws.size()) + " laws");
  }

  // Range defaults come from a matching curve directive, then 2..1024.
  std::uint64_t start = 2;
  std::uint64_t end = 1024;
  for (const auto& d : doc.directives) {
    if (const auto* c = std::get_if<dsl::CurveDirective>(&d); c && c->law == law->name) {
      start = c->n_start;
      end = c->n_end;
      break;
    }
  }
  start = args.n_start.value_or(start);
  end = args.n_end.value_or(end);
  if (start < 2) throw DomainError("--n-start must be >= 2");
  if (end < start) throw DomainError("--n-end must be >= --n-start");

  const auto result = curve(law->law, geometric_grid(start, end, args.points));
  switch (parse_format(args.format)) {
    case ReportFormat::Json: emit_json(out, curve_json(law->name, result)); break;
    case ReportFormat::Csv:
      csv_row(out, {"n", "t", "action_per_dof_log2", "total_action_log2"});
      for (const auto& p : result.points) {
        csv_row(out, {std::to_string(p.n), std::to_string(p.t), format_real(p.action_per_dof_log2),
                      format_real(p.total_action_log2)});
      }
      break;
    case ReportFormat::Table: print_curve_table(out, result, options.color); break;
  }
  return exit_ok;
}

// --- hydrogen / tile / compare ---------------------------------------------

int hydrogen_command(std::uint64_t n_qubits, const std::string& format, std::ostream& out,
                     const RunOptions& options) {
  const auto report = hydrogen::radius_report(n_qubits);
  switch (parse_format(format)) {
    case ReportFormat::Json: emit_json(out, hydrogen_json(report)); break;
    case ReportFormat::Csv:
      csv_row(out, {"target_qubits", "n_min", "state_count", "radius_a0", "radius_km", "sun_diameter_ratio"});
      csv_row(out, {std::to_string(report.target_qubits), to_decimal(report.n_min), to_decimal(report.state_count),
                    to_decimal(report.radius_a0), format_real(report.radius_km),
                    format_real(report.sun_diameter_ratio)});
      break;
    case ReportFormat::Table: print_hydrogen_table(out, report, options.color); break;
  }
  return exit_ok;
}

int tile_command(const std::vector<std::uint64_t>& dims, const std::string& format, std::ostream& out,
                 const RunOptions& options) {
  const auto cells = tiling::enumerate_cells(dims);
  switch (parse_format(format)) {
    case ReportFormat::Json: emit_json(out, cells_json(cells)); break;
    case ReportFormat::Csv: {
      std::vector<std::string> header{"flat_index", "binary_label", "unary_label"};
      for (std::size_t j = 0; j < dims.size(); ++j) header.push_back("dof_" + std::to_string(j));
      csv_row(out, header);
      for (const auto& cell : cells) {
        std::vector<std::string> row{std::to_string(cell.flat_index), cell.binary_label, cell.unary_label};
        for (const auto index : cell.multi_index) row.push_back(std::to_string(index));
        csv_row(out, row);
      }
      break;
    }
    case ReportFormat::Table: print_cells_table(out, cells, options.color); break;
  }
  return exit_ok;
}

Json realization_json(const tiling::Realization& r, bool exact) {
  return {{"dof_count", r.dof_count},
          {"per_dof_action_h", json_dimension(r.per_dof_action_h, exact)},
          {"per_dof_action_log2", r.per_dof_action_log2},
          {"total_action_h", json_dimension(r.total_action_h, exact)},
          {"total_action_log2", r.total_action_log2}};
}

int compare_command(std::uint64_t n_qubits, const std::string& format, bool exact, std::ostream& out,
                    const RunOptions& options) {
  const auto cmp = tiling::compare_realizations(n_qubits);
  const double n = static_cast<double>(n_qubits);
  switch (parse_format(format)) {
    case ReportFormat::Json:
      emit_json(out, {{"n_qubits", cmp.n_qubits},
                      {"dimension", json_dimension(cmp.dimension, exact)},
                      {"dimension_log2", n},
                      {"multi", realization_json(cmp.multi, exact)},
                      {"unary", realization_json(cmp.unary, exact)},
                      {"action_ratio_log2", cmp.action_ratio_log2}});
      break;
    case ReportFormat::Csv:
      csv_row(out, {"realization", "dof_count", "per_dof_action_h", "per_dof_action_log2", "total_action_h",
                    "total_action_log2"});
      for (const auto& [label, r] : {std::pair{"multi", &cmp.multi}, std::pair{"unary", &cmp.unary}}) {
        const bool fits = exact || bit_length(r->total_action_h) <= 64;
        csv_row(out, {label, std::to_string(r->dof_count), fits ? to_decimal(r->per_dof_action_h) : "",
                      format_real(r->per_dof_action_log2), fits ? to_decimal(r->total_action_h) : "",
                      format_real(r->total_action_log2)});
      }
      break;
    case ReportFormat::Table: {
      Table table({"realization", "dofs", "action/dof (h)", "total action (h)"});
      for (const auto& [label, r] : {std::pair{"multi", &cmp.multi}, std::pair{"unary", &cmp.unary}}) {
        table.add({label, std::to_string(r->dof_count),
                   text_dimension(r->per_dof_action_h, r->per_dof_action_log2, exact),
                   text_dimension(r->total_action_h, r->total_action_log2, exact)});
      }
      out << "dimension " << text_dimension(cmp.dimension, n, exact) << '\n';
      table.print(out, options.color);
      out << "unary/multi per-DOF action ratio 2^" << format_real(cmp.action_ratio_log2) << '\n';
      break;
    }
  }
  return exit_ok;
}

}  // namespace

std::vector<std::uint64_t> geometric_grid(std::uint64_t start, std::uint64_t end, std::size_t points) {
  if (end < start) throw DomainError("grid end must be >= start");
  if (points == 0) throw DomainError("grid needs at least one point");
  std::vector<std::uint64_t> grid{start};
  if (points == 1 || start == end) return grid;
  const double ratio = std::log(static_cast<double>(end) / static_cast<double>(start));
  for (std::size_t i = 1; i + 1 < points; ++i) {
    const double x = static_cast<double>(start) * std::exp(ratio * static_cast<double>(i) / (points - 1.0));
    const auto n = std::clamp(static_cast<std::uint64_t>(std::llround(x)), start, end);
    if (n > grid.back()) grid.push_back(n);
  }
  if (end > grid.back()) grid.push_back(end);
  return grid;
}

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err, const RunOptions& options) {
  CLI::App app{"Hilbert-space dimension and physical-resource scaling for quantum computer architectures", "qscale"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json", "csv"};

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Dimension of each system and verdict for each growth law");
  analyze_cmd->add_option("file", analyze_args.file, ".qrm model file")->required();
  analyze_cmd->add_option("--format", analyze_args.format)->check(CLI::IsMember(formats));
  analyze_cmd->add_flag("--exact", analyze_args.exact, "Print exact dimensions beyond 64 bits");
  analyze_cmd->add_option("--drift-rel", analyze_args.thresholds.drift_rel, "Numeric probe: relative drift");
  analyze_cmd->add_option("--drift-abs", analyze_args.thresholds.drift_abs, "Numeric probe: absolute drift");
  analyze_cmd->add_option("--growth-trigger", analyze_args.thresholds.growth_trigger,
                          "Numeric probe: growth that counts as superpolynomial");
  analyze_cmd->add_option("--field-cutoff", analyze_args.thresholds.field_cutoff,
                          "Numeric probe: N/T below this needs field mode counting");

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "Resource curve of a growth law");
  curve_cmd->add_option("file", curve_args.file, ".qrm model file")->required();
  curve_cmd->add_option("--law", curve_args.law, "Law name (optional when the file defines one law)");
  curve_cmd->add_option("--n-start", curve_args.n_start);
  curve_cmd->add_option("--n-end", curve_args.n_end);
  curve_cmd->add_option("--points", curve_args.points, "Number of log-spaced N values")
      ->check(CLI::PositiveNumber);
  curve_cmd->add_option("--format", curve_args.format)->check(CLI::IsMember(formats));

  std::uint64_t hydrogen_qubits = 0;
  std::string hydrogen_format = "table";
  auto* hydrogen_cmd = app.add_subcommand("hydrogen", "Single-atom register: radius needed for N qubits");
  hydrogen_cmd->add_option("--n-qubits", hydrogen_qubits)->required();
  hydrogen_cmd->add_option("--format", hydrogen_format)->check(CLI::IsMember(formats));

  std::vector<std::uint64_t> dims;
  std::string tile_format = "table";
  auto* tile_cmd = app.add_subcommand("tile", "Enumerate phase-space cells");
  tile_cmd->add_option("--dims", dims, "Per-DOF cell counts, comma separated")->required()->delimiter(',');
  tile_cmd->add_option("--format", tile_format)->check(CLI::IsMember(formats));

  std::uint64_t compare_qubits = 0;
  std::string compare_format = "table";
  bool compare_exact = false;
  auto* compare_cmd = app.add_subcommand("compare", "Unary vs multi-DOF realization of N qubits");
  compare_cmd->add_option("--n-qubits", compare_qubits)->required();
  compare_cmd->add_option("--format", compare_format)->check(CLI::IsMember(formats));
  compare_cmd->add_flag("--exact", compare_exact);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& arg : argv) raw.push_back(arg.c_str());
  if (raw.empty()) raw.push_back("qscale");

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_args, out, options);
    if (*curve_cmd) return curve_command(curve_args, out, options);
    if (*hydrogen_cmd) return hydrogen_command(hydrogen_qubits, hydrogen_format, out, options);
    if (*tile_cmd) return tile_command(dims, tile_format, out, options);
    if (*compare_cmd) return compare_command(compare_qubits, compare_format, compare_exact, out, options);
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.what() << '\n' << "  " << e.snippet() << '\n';
    err << "  " << std::string(e.column() > 0 ? e.column() - 1 : 0, ' ') << "^\n";
    return exit_parse_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
  return exit_usage;
}

}  // namespace qscale::cli
