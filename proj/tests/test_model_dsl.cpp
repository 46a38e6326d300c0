#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "qscale/format.hpp"
#include "qscale/model_dsl.hpp"

using namespace qscale;
using namespace qscale::dsl;

namespace {

ParseError parse_error(std::string_view source) {
  try {
    parse(source);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << source);
  return ParseError(0, 0, "", "");
}

}  // namespace

TEST_CASE("three-bit system") {
  const auto doc = parse(R"(system "threebit" { continuous action_h = 2 count = 3; })");
  REQUIRE(doc.systems.size() == 1);
  const auto& system = doc.systems[0];
  CHECK(system.name() == "threebit");
  REQUIRE(system.entries().size() == 1);
  CHECK(system.entries()[0].multiplicity == 3);
  CHECK(system.entries()[0].dof == DegreeOfFreedom::continuous_h(2.0));
  CHECK(system_dimension(system).exact == 8);
}

TEST_CASE("empty and comment-only sources") {
  CHECK(parse("") == ModelDocument{});
  CHECK(parse("  # nothing here\n\n\t# still nothing\r\n") == ModelDocument{});
  CHECK(render(ModelDocument{}).empty());
}

TEST_CASE("every statement form") {
  const auto doc = parse(R"(
    # registers
    system "mixed" {
      qudit levels = 3 count = 4;
      continuous dq = 3 dp = 2 h = 1.5;
      angular dj_hbar = 2.5e0;
      continuous action_h = 1.25E+1;
    }
    law "quasi" { c = 1; alpha = 1; beta = 1; }
    analyze "mixed";
    analyze "quasi";
    curve "quasi" n = 4..1024;
    hydrogen n_qubits = 100;
    tile [2, 2,2];
  )");
  REQUIRE(doc.systems.size() == 1);
  const auto& entries = doc.systems[0].entries();
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].dof == DegreeOfFreedom::qudit(3));
  CHECK(entries[0].multiplicity == 4);
  const double action = std::get<Continuous>(entries[1].dof.variant()).action.in_units_of_h();
  CHECK(std::abs(action - 4.0) <= 1e-12 * 4.0);
  CHECK(entries[2].dof == DegreeOfFreedom::angular(2.5));
  CHECK(entries[3].dof == DegreeOfFreedom::continuous_h(12.5));

  REQUIRE(doc.laws.size() == 1);
  CHECK(doc.laws[0].law == GrowthLaw::make(1, 1, 1));

  REQUIRE(doc.directives.size() == 5);
  CHECK(std::get<AnalyzeDirective>(doc.directives[0]).target == "mixed");
  CHECK(std::get<CurveDirective>(doc.directives[2]) == CurveDirective{"quasi", 4, 1024});
  CHECK(std::get<HydrogenDirective>(doc.directives[3]).n_qubits == 100);
  CHECK(std::get<TileDirective>(doc.directives[4]).dims == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(doc.find_system("mixed") != nullptr);
  CHECK(doc.find_law("mixed") == nullptr);
}

TEST_CASE("property: dq/dp form equals dq*dp/h") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(0.001, 1000.0);
  for (int i = 0; i < 200; ++i) {
    const double dq = value(rng), dp = value(rng), h = value(rng);
    const std::string source = "system \"s\" { continuous dq = " + format_real(dq) + " dp = " + format_real(dp) +
                               " h = " + format_real(h) + "; }";
    const auto doc = parse(source);
    const double parsed = std::get<Continuous>(doc.systems[0].entries()[0].dof.variant()).action.in_units_of_h();
    const double expected = dq * dp / h;
    CHECK(std::abs(parsed - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("CRLF line endings") {
  const auto doc = parse("system \"a\" {\r\n  qudit levels = 2;\r\n}\r\n");
  CHECK(doc.systems.size() == 1);
  const auto e = parse_error("system \"a\" {\r\n  qudit levels = 0;\r\n}\r\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 18);
  CHECK(e.snippet() == "  qudit levels = 0;");
}

TEST_CASE("invariant violations report their position") {
  const auto levels = parse_error(R"(system "x" { qudit levels = 0; })");
  CHECK(levels.message() == "levels must be ≥ 1");
  CHECK(levels.line() == 1);
  CHECK(levels.column() == 29);
  CHECK(std::string(levels.what()).find("line 1, column 29") != std::string::npos);

  const auto count = parse_error("system \"x\" {\n qudit levels = 2 count = 0;\n}");
  CHECK(count.line() == 2);
  CHECK(count.message() == "count must be ≥ 1");

  CHECK(parse_error(R"(system "x" { continuous action_h = -1; })").message() == "action_h must be ≥ 0");
  CHECK(parse_error(R"(system "x" { angular dj_hbar = -0.5; })").message() == "dj_hbar must be ≥ 0");
  CHECK(parse_error(R"(system "x" { continuous dq = 1 dp = 1 h = 0; })").message() == "h must be > 0");
  CHECK(parse_error(R"(law "l" { c = 0; alpha = 1; beta = 0; })").message() == "c must be > 0");
  CHECK(parse_error(R"(law "l" { c = 1; alpha = -1; beta = 0; })").message() == "alpha must be ≥ 0");
  CHECK(parse_error("hydrogen n_qubits = 0;").message() == "n_qubits must be ≥ 1");
  CHECK(parse_error("tile [2, 0];").message() == "dimension must be ≥ 1");
  CHECK(parse_error(R"(system "x" { qudit levels = 2.5; })").message() == "levels must be an integer");
  CHECK(parse_error(R"(system "x" { qudit levels = 99999999999999999999; })").message() == "levels is out of range");
  CHECK(parse_error(R"(system "x" { continuous action_h = 1e999; })").message() == "action_h is out of range");
}

TEST_CASE("name and reference errors") {
  const auto dup = parse_error("system \"a\" { }\nlaw \"a\" { c = 1; alpha = 1; beta = 0; }");
  CHECK(dup.line() == 2);
  CHECK(dup.column() == 5);
  CHECK(dup.message() == "duplicate name \"a\"");

  const auto unknown = parse_error("system \"a\" { }\nanalyze \"b\";");
  CHECK(unknown.line() == 2);
  CHECK(unknown.column() == 9);
  CHECK(parse_error("system \"a\" { }\ncurve \"a\" n = 2..8;").message() == "unknown law \"a\"");
  CHECK(parse_error("law \"l\" { c = 1; alpha = 1; beta = 0; }\ncurve \"l\" n = 8..2;").message() ==
        "n end must be ≥ n start");
  CHECK(parse_error("law \"l\" { c = 1; alpha = 1; beta = 0; }\ncurve \"l\" n = 1..2;").message() ==
        "n start must be ≥ 2");
}

TEST_CASE("syntax errors") {
  const auto keyword = parse_error("\n  widget \"x\";");
  CHECK(keyword.line() == 2);
  CHECK(keyword.column() == 3);
  CHECK(keyword.message() == "unknown keyword 'widget'");

  const auto string = parse_error("system \"abc { }");
  CHECK(string.message() == "unterminated string");
  CHECK(string.column() == 8);

  const auto eof = parse_error("system \"x\" {\n  qudit levels = 2;\n");
  CHECK(eof.line() == 2);
  CHECK(eof.message() == "expected '}', found end of input");

  CHECK(parse_error("system \"x\" { qudit levels = 2 }").message() == "expected ';', found '}'");
  CHECK(parse_error("system x { }").message() == "expected string, found keyword 'x'");
  CHECK(parse_error("law \"l\" { alpha = 1; c = 1; beta = 0; }").message() == "expected 'c', found keyword 'alpha'");
  CHECK(parse_error("tile [2,];").message() == "expected integer, found ']'");
  CHECK(parse_error("system \"x\" { qudit levels = 2; } @").message() == "unexpected character");
  CHECK(parse_error("hydrogen n_qubits = 5x;").message() == "malformed number");
  CHECK(parse_error("system \"x\\q\" { }").message() == "unknown escape sequence");

  // Columns count code points, not bytes.
  const auto utf8 = parse_error("system \"é\" { bogus; }");
  CHECK(utf8.column() == 14);
}

TEST_CASE("render produces canonical text") {
  ModelDocument doc;
  SystemModel system("threebit");
  system.add(DegreeOfFreedom::continuous_h(2.0), 3);
  doc.systems.push_back(system);
  doc.laws.push_back({"qubits", GrowthLaw::strictly_linear(2)});
  doc.directives.emplace_back(TileDirective{{2, 2, 2}});
  CHECK(render(doc) ==
        "system \"threebit\" {\n  continuous action_h = 2 count = 3;\n}\n"
        "law \"qubits\" { c = 1; alpha = 1; beta = 0; }\n"
        "tile [2, 2, 2];\n");
  CHECK(parse(render(doc)) == doc);
}

TEST_CASE("property: parse(render(doc)) == doc") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 500; ++i) {
    const auto doc = testing::random_document(rng);
    const auto text = render(doc);
    CAPTURE(text);
    REQUIRE(parse(text) == doc);
  }
}

TEST_CASE("property: errors never point before the corrupted line") {
  std::mt19937_64 rng(1337);
  int invalid = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto text = render(testing::random_document(rng));
    if (text.empty()) continue;
    const auto corruption = testing::corrupt(text, rng);
    try {
      parse(corruption.text);
    } catch (const ParseError& e) {
      ++invalid;
      CAPTURE(corruption.text);
      CHECK(e.line() >= corruption.line);
      CHECK(testing::position_in_range(corruption.text, e.line(), e.column()));
    }
  }
  CHECK(invalid > 500);
}
