#include "disponte/parser.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

namespace disponte {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { kIdent, kNumber, kColon, kDoubleColon, kSubClass, kLParen, kRParen, kComma, kDot, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool IsKeyword(std::string_view s) {
  return s == "Top" || s == "Bottom" || s == "not" || s == "and" || s == "or" ||
         s == "exists" || s == "forall";
}

std::vector<Token> Tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (IsIdentStart(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && IsIdentChar(line[j])) ++j;
      out.push_back({Tok::kIdent, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < line.size() &&
                std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '.') {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      out.push_back({Tok::kNumber, line.substr(i, j - i), col});
      i = j;
    } else if (c == ':') {
      if (i + 1 < line.size() && line[i + 1] == ':') {
        out.push_back({Tok::kDoubleColon, line.substr(i, 2), col});
        i += 2;
      } else {
        out.push_back({Tok::kColon, line.substr(i, 1), col});
        ++i;
      }
    } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::kSubClass, line.substr(i, 2), col});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::kLParen, line.substr(i, 1), col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kRParen, line.substr(i, 1), col});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::kComma, line.substr(i, 1), col});
      ++i;
    } else if (c == '.') {
      out.push_back({Tok::kDot, line.substr(i, 1), col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, {}, line.empty() ? 1 : line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : tokens_(Tokenize(line, line_no)), line_no_(line_no), width_(line.size()) {}

  AnnotatedAxiom ParseAnnotatedAxiom() {
    std::optional<double> probability;
    if (Peek(1).kind == Tok::kDoubleColon) {
      const Token t = Next();
      if (t.kind != Tok::kNumber) Fail(t, "probability must be a decimal number");
      double p = 0.0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), p,
                                       std::chars_format::fixed);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        Fail(t, "malformed probability '" + std::string(t.text) + "'");
      }
      if (!(p >= 0.0 && p <= 1.0)) {
        Fail(t, "probability " + std::string(t.text) + " outside [0, 1]");
      }
      probability = p;
      Next();
    }
    Axiom axiom = ParseAxiom();
    ExpectEnd();
    return {std::move(axiom), probability};
  }

  Query ParseQueryLine() {
    if (Peek().kind == Tok::kIdent && !IsKeyword(Peek().text) && Peek(1).kind == Tok::kColon) {
      std::string ind(Next().text);
      Next();
      Concept c = ParseOr();
      ExpectEnd();
      return InstanceQuery{std::move(ind), std::move(c)};
    }
    Concept sub = ParseOr();
    Expect(Tok::kSubClass, "'<=' or ':'");
    Concept sup = ParseOr();
    ExpectEnd();
    return SubsumptionQuery{std::move(sub), std::move(sup)};
  }

  Concept ParseConceptLine() {
    Concept c = ParseOr();
    ExpectEnd();
    return c;
  }

 private:
  Axiom ParseAxiom() {
    if (Peek().kind == Tok::kLParen && Peek(1).kind == Tok::kIdent &&
        Peek(2).kind == Tok::kComma) {
      Next();
      std::string subject = Name("individual");
      Expect(Tok::kComma, "','");
      std::string object = Name("individual");
      Expect(Tok::kRParen, "')'");
      Expect(Tok::kColon, "':'");
      std::string role = Name("role name");
      return RoleAssertion{std::move(subject), std::move(object), std::move(role)};
    }
    if (Peek().kind == Tok::kIdent && !IsKeyword(Peek().text) && Peek(1).kind == Tok::kColon) {
      std::string ind(Next().text);
      Next();
      return ConceptAssertion{std::move(ind), ParseOr()};
    }
    Concept sub = ParseOr();
    Expect(Tok::kSubClass, "'<=' or ':'");
    return SubClassOf{std::move(sub), ParseOr()};
  }

  Concept ParseOr() {
    Concept left = ParseAnd();
    if (IsWord("or")) {
      Next();
      return Concept::Or(std::move(left), ParseOr());
    }
    return left;
  }

  Concept ParseAnd() {
    Concept left = ParseUnary();
    if (IsWord("and")) {
      Next();
      return Concept::And(std::move(left), ParseAnd());
    }
    return left;
  }

  Concept ParseUnary() {
    const Token t = Peek();
    if (t.kind == Tok::kLParen) {
      Next();
      Concept c = ParseOr();
      Expect(Tok::kRParen, "')'");
      return c;
    }
    if (t.kind != Tok::kIdent) Fail(t, "expected a concept");
    if (t.text == "Top") {
      Next();
      return Concept::Top();
    }
    if (t.text == "Bottom") {
      Next();
      return Concept::Bottom();
    }
    if (t.text == "not") {
      Next();
      return Concept::Not(ParseUnary());
    }
    if (t.text == "exists" || t.text == "forall") {
      Next();
      std::string role = Name("role name");
      Expect(Tok::kDot, "'.'");
      Concept filler = ParseUnary();
      return t.text == "exists" ? Concept::Exists(std::move(role), std::move(filler))
                                : Concept::Forall(std::move(role), std::move(filler));
    }
    if (IsKeyword(t.text)) Fail(t, "unexpected keyword '" + std::string(t.text) + "'");
    Next();
    return Concept::Atomic(std::string(t.text));
  }

  std::string Name(const char* what) {
    const Token t = Peek();
    if (t.kind != Tok::kIdent || IsKeyword(t.text)) Fail(t, std::string("expected ") + what);
    Next();
    return std::string(t.text);
  }

  bool IsWord(std::string_view w) const {
    return Peek().kind == Tok::kIdent && Peek().text == w;
  }

  void Expect(Tok kind, const char* what) {
    const Token t = Peek();
    if (t.kind != kind) Fail(t, std::string("expected ") + what);
    Next();
  }

  void ExpectEnd() {
    if (Peek().kind != Tok::kEnd) Fail(Peek(), "unexpected '" + std::string(Peek().text) + "'");
  }

  const Token& Peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token Next() {
    Token t = Peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    std::size_t col = at.column;
    if (at.kind == Tok::kEnd) {
      col = width_ == 0 ? 1 : width_;
      throw ParseError(line_no_, col, message + " at end of line");
    }
    throw ParseError(line_no_, col, message);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
  std::size_t width_;
};

std::string_view StripLine(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

}  // namespace

KbSource ParseKbSource(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<AnnotatedAxiom> axioms;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view line = StripLine(raw);
    if (IsBlank(line)) continue;
    axioms.push_back(LineParser(line, line_no).ParseAnnotatedAxiom());
    lines.push_back(line_no);
  }
  return {KnowledgeBase(std::move(axioms)), std::move(lines)};
}

KnowledgeBase ParseKb(std::string_view text) { return ParseKbSource(text).kb; }

Query ParseQuery(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) {
    std::string_view rest = text.substr(text.find('\n') + 1);
    if (!IsBlank(StripLine(rest))) throw ParseError(2, 1, "query must be a single line");
    text = text.substr(0, text.find('\n'));
  }
  std::string_view line = StripLine(text);
  if (IsBlank(line)) throw ParseError(1, 1, "empty query");
  return LineParser(line, 1).ParseQueryLine();
}

Concept ParseConcept(std::string_view text) {
  std::string_view line = StripLine(text);
  if (IsBlank(line)) throw ParseError(1, 1, "empty concept");
  return LineParser(line, 1).ParseConceptLine();
}

std::string SerializeKb(const KnowledgeBase& kb) {
  std::string out;
  for (const AnnotatedAxiom& a : kb.axioms()) {
    out += ToText(a);
    out += '\n';
  }
  return out;
}

}  // namespace disponte
