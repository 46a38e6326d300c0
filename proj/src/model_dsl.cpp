#include "qscale/model_dsl.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "qscale/errors.hpp"
#include "qscale/format.hpp"

namespace qscale::dsl {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string snippet)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

const SystemModel* ModelDocument::find_system(std::string_view name) const {
  for (const auto& system : systems) {
    if (system.name() == name) return &system;
  }
  return nullptr;
}

const NamedLaw* ModelDocument::find_law(std::string_view name) const {
  for (const auto& law : laws) {
    if (law.name == name) return &law;
  }
  return nullptr;
}

namespace {

enum class Kind { Identifier, String, Number, LBrace, RBrace, LBracket, RBracket, Semicolon, Equals, Comma, DotDot, End };

std::string_view describe(Kind kind) {
  switch (kind) {
    case Kind::Identifier: return "keyword";
    case Kind::String: return "string";
    case Kind::Number: return "number";
    case Kind::LBrace: return "'{'";
    case Kind::RBrace: return "'}'";
    case Kind::LBracket: return "'['";
    case Kind::RBracket: return "']'";
    case Kind::Semicolon: return "';'";
    case Kind::Equals: return "'='";
    case Kind::Comma: return "','";
    case Kind::DotDot: return "'..'";
    case Kind::End: return "end of input";
  }
  return "token";
}

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Token {
  Kind kind;
  std::string text;
  Position where;
  bool integral = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  Token next() {
    skip_blank();
    const Position start = here_;
    if (offset_ >= source_.size()) return {Kind::End, {}, end_position(), false};

    const char ch = source_[offset_];
    switch (ch) {
      case '{': advance(); return {Kind::LBrace, "{", start};
      case '}': advance(); return {Kind::RBrace, "}", start};
      case '[': advance(); return {Kind::LBracket, "[", start};
      case ']': advance(); return {Kind::RBracket, "]", start};
      case ';': advance(); return {Kind::Semicolon, ";", start};
      case '=': advance(); return {Kind::Equals, "=", start};
      case ',': advance(); return {Kind::Comma, ",", start};
      case '"': return string_literal();
      case '.':
        if (peek(1) == '.') {
          advance();
          advance();
          return {Kind::DotDot, "..", start};
        }
        break;
      default: break;
    }
    if (is_digit(ch) || ((ch == '-' || ch == '+') && is_digit(peek(1)))) return number();
    if (is_ident_start(ch)) {
      std::string text;
      while (offset_ < source_.size() && is_ident_char(source_[offset_])) text += advance();
      return {Kind::Identifier, std::move(text), start};
    }
    fail(start, "unexpected character");
  }

  [[noreturn]] void fail(Position where, const std::string& message) const {
    throw ParseError(where.line, where.column, message, line_text(where.line));
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  char peek(std::size_t ahead) const {
    return offset_ + ahead < source_.size() ? source_[offset_ + ahead] : '\0';
  }

  char advance() {
    const char c = source_[offset_++];
    last_ = here_;
    if (c == '\n') {
      ++here_.line;
      here_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++here_.column;
    }
    return c;
  }

  // Errors at end of input point at the last character rather than past it.
  Position end_position() const { return offset_ == 0 ? Position{} : last_; }

  void skip_blank() {
    while (offset_ < source_.size()) {
      const char c = source_[offset_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (offset_ < source_.size() && source_[offset_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token string_literal() {
    const Position start = here_;
    advance();
    std::string text;
    while (true) {
      if (offset_ >= source_.size() || source_[offset_] == '\n') fail(start, "unterminated string");
      const char c = advance();
      if (c == '"') break;
      if (c != '\\') {
        text += c;
        continue;
      }
      const Position escape = last_;
      if (offset_ >= source_.size()) fail(start, "unterminated string");
      switch (advance()) {
        case '"': text += '"'; break;
        case '\\': text += '\\'; break;
        case 'n': text += '\n'; break;
        case 't': text += '\t'; break;
        case 'r': text += '\r'; break;
        default: fail(escape, "unknown escape sequence");
      }
    }
    return {Kind::String, std::move(text), start};
  }

  Token number() {
    const Position start = here_;
    std::string text;
    bool integral = true;
    if (source_[offset_] == '-' || source_[offset_] == '+') text += advance();
    while (is_digit(peek(0))) text += advance();
    if (peek(0) == '.' && is_digit(peek(1))) {
      integral = false;
      text += advance();
      while (is_digit(peek(0))) text += advance();
    }
    if (peek(0) == 'e' || peek(0) == 'E') {
      const std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
      if (!is_digit(peek(1 + sign))) fail(here_, "malformed exponent");
      integral = false;
      text += advance();
      if (sign) text += advance();
      while (is_digit(peek(0))) text += advance();
    }
    if (is_ident_char(peek(0)) || (peek(0) == '.' && peek(1) != '.')) fail(here_, "malformed number");
    return {Kind::Number, std::move(text), start, integral};
  }

  std::string line_text(std::size_t line) const {
    std::size_t begin = 0;
    for (std::size_t current = 1; current < line; ++current) {
      begin = source_.find('\n', begin);
      if (begin == std::string_view::npos) return {};
      ++begin;
    }
    std::size_t end = source_.find('\n', begin);
    if (end == std::string_view::npos) end = source_.size();
    if (end > begin && source_[end - 1] == '\r') --end;
    return std::string(source_.substr(begin, end - begin));
  }

  std::string_view source_;
  std::size_t offset_ = 0;
  Position here_;
  Position last_;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : lexer_(source) { current_ = lexer_.next(); }

  ModelDocument document() {
    while (current_.kind != Kind::End) statement();
    for (const auto& ref : references_) {
      const bool found = ref.law_only ? doc_.find_law(ref.name) != nullptr
                                      : doc_.find_law(ref.name) != nullptr || doc_.find_system(ref.name) != nullptr;
      if (!found) {
        lexer_.fail(ref.where, std::string("unknown ") + (ref.law_only ? "law" : "system or law") + " \"" +
                                   ref.name + "\"");
      }
    }
    return std::move(doc_);
  }

 private:
  struct Reference {
    std::string name;
    Position where;
    bool law_only;
  };

  Token take() {
    Token token = std::move(current_);
    current_ = lexer_.next();
    return token;
  }

  [[noreturn]] void fail_here(const std::string& message) const { lexer_.fail(current_.where, message); }

  [[noreturn]] void unexpected(std::string_view wanted) const {
    std::string found = std::string(describe(current_.kind));
    if (current_.kind == Kind::Identifier || current_.kind == Kind::Number) found += " '" + current_.text + "'";
    fail_here("expected " + std::string(wanted) + ", found " + found);
  }

  Token expect(Kind kind) {
    if (current_.kind != kind) unexpected(describe(kind));
    return take();
  }

  void keyword(std::string_view word) {
    if (current_.kind != Kind::Identifier || current_.text != word) unexpected("'" + std::string(word) + "'");
    take();
  }

  void assignment(std::string_view word) {
    keyword(word);
    expect(Kind::Equals);
  }

  std::uint64_t integer(std::string_view field, std::uint64_t minimum) {
    if (current_.kind != Kind::Number) unexpected("integer");
    const Token token = take();
    if (!token.integral) lexer_.fail(token.where, std::string(field) + " must be an integer");
    const bool negative = token.text.front() == '-';
    std::string_view digits = token.text;
    if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      lexer_.fail(token.where, std::string(field) + " is out of range");
    }
    if ((negative && value != 0) || value < minimum) {
      lexer_.fail(token.where, std::string(field) + " must be ≥ " + std::to_string(minimum));
    }
    return value;
  }

  double real(std::string_view field) {
    if (current_.kind != Kind::Number) unexpected("number");
    const Token token = take();
    std::string_view text = token.text;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      lexer_.fail(token.where, std::string(field) + " is out of range");
    }
    last_number_ = token.where;
    return value;
  }

  double nonnegative(std::string_view field) {
    const double value = real(field);
    if (value < 0.0) lexer_.fail(last_number_, std::string(field) + " must be ≥ 0");
    return value;
  }

  std::string fresh_name() {
    if (current_.kind != Kind::String) unexpected("string");
    const Token token = take();
    if (!names_.insert(token.text).second) lexer_.fail(token.where, "duplicate name \"" + token.text + "\"");
    return token.text;
  }

  void statement() {
    if (current_.kind != Kind::Identifier) unexpected("'system', 'law' or a directive");
    const std::string& word = current_.text;
    if (word == "system") return system();
    if (word == "law") return law();
    if (word == "analyze" || word == "curve" || word == "hydrogen" || word == "tile") return directive();
    fail_here("unknown keyword '" + word + "'");
  }

  void system() {
    take();
    SystemModel model(fresh_name());
    expect(Kind::LBrace);
    while (current_.kind != Kind::RBrace) {
      if (current_.kind == Kind::End) unexpected("'}'");
      dofline(model);
    }
    take();
    doc_.systems.push_back(std::move(model));
  }

  void dofline(SystemModel& model) {
    if (current_.kind != Kind::Identifier) unexpected("'qudit', 'continuous', 'angular' or '}'");
    const Token head = take();
    std::optional<DegreeOfFreedom> dof;
    if (head.text == "qudit") {
      assignment("levels");
      dof = DegreeOfFreedom::qudit(integer("levels", 1));
    } else if (head.text == "continuous") {
      if (current_.kind == Kind::Identifier && current_.text == "dq") {
        assignment("dq");
        const double dq = nonnegative("dq");
        assignment("dp");
        const double dp = nonnegative("dp");
        assignment("h");
        const double h = real("h");
        if (h <= 0.0) lexer_.fail(last_number_, "h must be > 0");
        const double action = dq * dp / h;
        if (!std::isfinite(action)) lexer_.fail(last_number_, "dq*dp/h is out of range");
        dof = DegreeOfFreedom::continuous(ActionBudget::from_ranges(dq, dp, h));
      } else if (current_.kind == Kind::Identifier && current_.text == "action_h") {
        assignment("action_h");
        dof = DegreeOfFreedom::continuous_h(nonnegative("action_h"));
      } else {
        unexpected("'action_h' or 'dq'");
      }
    } else if (head.text == "angular") {
      assignment("dj_hbar");
      dof = DegreeOfFreedom::angular(nonnegative("dj_hbar"));
    } else {
      lexer_.fail(head.where, "unknown degree of freedom '" + head.text + "'");
    }
    std::uint64_t count = 1;
    if (current_.kind == Kind::Identifier && current_.text == "count") {
      assignment("count");
      count = integer("count", 1);
    }
    expect(Kind::Semicolon);
    model.add(*dof, count);
  }

  void law() {
    take();
    std::string name = fresh_name();
    expect(Kind::LBrace);
    assignment("c");
    const double c = real("c");
    if (c <= 0.0) lexer_.fail(last_number_, "c must be > 0");
    expect(Kind::Semicolon);
    assignment("alpha");
    const double alpha = nonnegative("alpha");
    expect(Kind::Semicolon);
    assignment("beta");
    const double beta = nonnegative("beta");
    expect(Kind::Semicolon);
    expect(Kind::RBrace);
    doc_.laws.push_back({std::move(name), GrowthLaw::make(c, alpha, beta)});
  }

  std::string reference(bool law_only) {
    if (current_.kind != Kind::String) unexpected("string");
    Token token = take();
    references_.push_back({token.text, token.where, law_only});
    return std::move(token.text);
  }

  void directive() {
    const Token head = take();
    if (head.text == "analyze") {
      doc_.directives.emplace_back(AnalyzeDirective{reference(false)});
    } else if (head.text == "curve") {
      std::string law_name = reference(true);
      assignment("n");
      const std::uint64_t start = integer("n start", 2);
      expect(Kind::DotDot);
      const Position end_at = current_.where;
      const std::uint64_t end = integer("n end", 2);
      if (end < start) lexer_.fail(end_at, "n end must be ≥ n start");
      doc_.directives.emplace_back(CurveDirective{std::move(law_name), start, end});
    } else if (head.text == "hydrogen") {
      assignment("n_qubits");
      doc_.directives.emplace_back(HydrogenDirective{integer("n_qubits", 1)});
    } else {
      expect(Kind::LBracket);
      TileDirective tile;
      tile.dims.push_back(integer("dimension", 1));
      while (current_.kind == Kind::Comma) {
        take();
        tile.dims.push_back(integer("dimension", 1));
      }
      expect(Kind::RBracket);
      doc_.directives.emplace_back(std::move(tile));
    }
    expect(Kind::Semicolon);
  }

  Lexer lexer_;
  Token current_;
  Position last_number_;
  ModelDocument doc_;
  std::set<std::string, std::less<>> names_;
  std::vector<Reference> references_;
};

std::string escaped_string(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string dof_text(const DegreeOfFreedom& dof) {
  struct Visitor {
    std::string operator()(const Continuous& c) const {
      return "continuous action_h = " + format_real(c.action.in_units_of_h());
    }
    std::string operator()(const AngularMomentum& a) const {
      return "angular dj_hbar = " + format_real(a.delta_j_over_hbar);
    }
    std::string operator()(const Qudit& q) const { return "qudit levels = " + std::to_string(q.levels); }
  };
  return std::visit(Visitor{}, dof.variant());
}

}  // namespace

ModelDocument parse(std::string_view source) {
  try {
    return Parser(source).document();
  } catch (const DomainError& e) {
    // Every invariant is checked by the parser first; reaching here is a bug.
    throw ParseError(1, 1, e.what(), {});
  }
}

std::string render(const ModelDocument& doc) {
  std::ostringstream out;
  for (const auto& system : doc.systems) {
    out << "system " << escaped_string(system.name()) << " {\n";
    for (const auto& entry : system.entries()) {
      out << "  " << dof_text(entry.dof);
      if (entry.multiplicity != 1) out << " count = " << entry.multiplicity;
      out << ";\n";
    }
    out << "}\n";
  }
  for (const auto& named : doc.laws) {
    out << "law " << escaped_string(named.name) << " { c = " << format_real(named.law.c())
        << "; alpha = " << format_real(named.law.alpha()) << "; beta = " << format_real(named.law.beta())
        << "; }\n";
  }
  for (const auto& directive : doc.directives) {
    struct Visitor {
      std::ostream& out;
      void operator()(const AnalyzeDirective& d) const { out << "analyze " << escaped_string(d.target); }
      void operator()(const CurveDirective& d) const {
        out << "curve " << escaped_string(d.law) << " n = " << d.n_start << ".." << d.n_end;
      }
      void operator()(const HydrogenDirective& d) const { out << "hydrogen n_qubits = " << d.n_qubits; }
      void operator()(const TileDirective& d) const {
        out << "tile [";
        for (std::size_t i = 0; i < d.dims.size(); ++i) out << (i ? ", " : "") << d.dims[i];
        out << "]";
      }
    };
    std::visit(Visitor{out}, directive);
    out << ";\n";
  }
  return out.str();
}

}  // namespace qscale::dsl
