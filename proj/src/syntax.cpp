#include "cshapes/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cshapes {

namespace {

std::string formatError(int line, int column, const std::string& message, const std::string& snippet) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!snippet.empty()) {
    os << "\n  " << snippet << "\n  " << std::string(static_cast<std::size_t>(std::max(column - 1, 0)), ' ') << "^";
  }
  return os.str();
}

}  // namespace

SourceError::SourceError(int line, int column, std::string message, std::string snippet)
    : std::runtime_error(formatError(line, column, message, snippet)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

namespace {

enum class Tok { Word, Var, Iri, Punct, Incl, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

bool wordChar(unsigned char c) { return std::isalnum(c) || c == '_' || c == ':'; }

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

// Splits text into lines (LF or CRLF) so errors can quote the offending one.
std::vector<std::string> splitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  lines.push_back(cur);
  return lines;
}

class Lexer {
 public:
  // shapeMode: '-' may end a word (inverse roles) and '<:' / '⊑' are tokens.
  Lexer(const std::string& text, bool shapeMode) : lines_(splitLines(text)), shapeMode_(shapeMode) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const std::string& s = lines_[li];
      std::size_t i = 0;
      int line = static_cast<int>(li) + 1;
      while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        int col = static_cast<int>(i) + 1;
        if (std::isspace(c)) {
          ++i;
        } else if (c == '#') {
          break;
        } else if (wordChar(c)) {
          std::size_t j = i;
          while (j < s.size() && wordChar(static_cast<unsigned char>(s[j]))) ++j;
          if (shapeMode_ && j < s.size() && s[j] == '-') ++j;
          out.push_back({Tok::Word, s.substr(i, j - i), line, col});
          i = j;
        } else if (!shapeMode_ && (c == '?' || c == '$') && i + 1 < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_')) {
          std::size_t j = i + 1;
          while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
          out.push_back({Tok::Var, s.substr(i + 1, j - i - 1), line, col});
          i = j;
        } else if (!shapeMode_ && c == '<') {
          std::size_t j = s.find('>', i);
          if (j == std::string::npos) throw SourceError(line, col, "unterminated IRI", s);
          out.push_back({Tok::Iri, s.substr(i + 1, j - i - 1), line, col});
          i = j + 1;
        } else if (shapeMode_ && s.compare(i, 2, "<:") == 0) {
          out.push_back({Tok::Incl, "<:", line, col});
          i += 2;
        } else if (shapeMode_ && s.compare(i, 3, "\xE2\x8A\x91") == 0) {
          out.push_back({Tok::Incl, "<:", line, col});
          i += 3;
        } else if (c >= 0x80) {
          throw SourceError(line, col, "unexpected character", s);
        } else {
          out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), line, col});
          ++i;
        }
      }
      if (shapeMode_) out.push_back({Tok::End, "", line, static_cast<int>(s.size()) + 1});
    }
    if (!shapeMode_) {
      int line = static_cast<int>(lines_.size());
      out.push_back({Tok::End, "", line, static_cast<int>(lines_.back().size()) + 1});
    }
    return out;
  }

  const std::string& line(int n) const { return lines_[static_cast<std::size_t>(n - 1)]; }

 private:
  std::vector<std::string> lines_;
  bool shapeMode_;
};

// ---------------------------------------------------------------- queries

class QueryParser {
 public:
  explicit QueryParser(const std::string& text) : lex_(text, false), toks_(lex_.run()) {}

  Query parse() {
    while (isWord("PREFIX")) prefix();
    if (isWord("BASE")) unsupported(peek(), "BASE declarations are not supported");
    if (isWord("SELECT") || isWord("ASK") || isWord("DESCRIBE"))
      unsupported(peek(), "only CONSTRUCT queries are supported");
    expectWord("CONSTRUCT");
    if (isWord("WHERE")) unsupported(peek(), "the CONSTRUCT WHERE short form is not supported");
    Query q;
    std::vector<std::pair<Atom, Token>> head = block();
    expectWord("WHERE");
    std::vector<std::pair<Atom, Token>> body = block();
    if (peek().type != Tok::End) {
      const Token& t = peek();
      if (t.type == Tok::Word && modifier(upper(t.text)))
        unsupported(t, "solution modifier '" + t.text + "' is not supported");
      fail(t, "unexpected input after the WHERE block");
    }
    for (auto& [a, _] : body) q.pattern.insert(a);
    auto bound = variables(q.pattern);
    for (auto& [a, tok] : head) {
      for (const auto& t : a.terms())
        if (t.isVariable() && !bound.count(t))
          throw UnboundVariableError(tok.line, tok.col,
                                     "template variable ?" + t.id + " is not bound in the WHERE pattern",
                                     lex_.line(tok.line));
      q.templ.insert(a);
    }
    return q;
  }

 private:
  static bool modifier(const std::string& w) {
    return w == "ORDER" || w == "LIMIT" || w == "OFFSET" || w == "GROUP" || w == "HAVING" || w == "VALUES";
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool isWord(const char* w) const { return peek().type == Tok::Word && upper(peek().text) == w; }
  bool isPunct(char c) const { return peek().type == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SourceError(t.line, t.col, msg, lex_.line(t.line));
  }
  [[noreturn]] void unsupported(const Token& t, const std::string& msg) const {
    throw UnsupportedFeatureError(t.line, t.col, msg, lex_.line(t.line));
  }

  void expectWord(const char* w) {
    if (!isWord(w)) fail(peek(), std::string("expected ") + w);
    next();
  }

  void expectPunct(char c) {
    if (!isPunct(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }

  void prefix() {
    next();
    const Token& p = next();
    if (p.type != Tok::Word || p.text.back() != ':') fail(p, "expected a prefix name such as ':'");
    if (p.text != ":") unsupported(p, "only the default prefix ':' is supported");
    const Token& iri = next();
    if (iri.type != Tok::Iri) fail(iri, "expected an IRI in angle brackets");
  }

  std::vector<std::pair<Atom, Token>> block() {
    expectPunct('{');
    std::vector<std::pair<Atom, Token>> atoms;
    while (!isPunct('}')) {
      if (peek().type == Tok::End) fail(peek(), "unterminated block, expected '}'");
      atoms.push_back(triple());
      if (isPunct('.')) {
        next();
      } else if (!isPunct('}')) {
        const Token& t = peek();
        if (t.type == Tok::Punct && (t.text == ";" || t.text == ","))
          unsupported(t, "predicate and object lists (';' and ',') are not supported");
        checkKeyword(t);
        fail(t, "expected '.' or '}' after a triple");
      }
    }
    next();
    return atoms;
  }

  void checkKeyword(const Token& t) const {
    if (t.type != Tok::Word) return;
    std::string w = upper(t.text);
    if (w == "OPTIONAL" || w == "FILTER" || w == "UNION" || w == "MINUS" || w == "BIND" || w == "VALUES" ||
        w == "GRAPH" || w == "SERVICE" || w == "SELECT")
      unsupported(t, w + " is not supported");
  }

  void checkPath(const Token& t) const {
    if (t.type == Tok::Punct && std::string("/|^*+!?()").find(t.text[0]) != std::string::npos)
      unsupported(t, "property paths are not supported");
  }

  Name term(const Token& t, const char* where) const {
    checkKeyword(t);
    if (t.type == Tok::Var) return Name::variable(t.text);
    if (t.type == Tok::Iri) unsupported(t, "full IRIs are not supported, use ':name'");
    if (t.type == Tok::Word) return prefixed(t, Kind::Individual);
    if (t.type == Tok::Punct && t.text == "{") unsupported(t, "nested group patterns are not supported");
    checkPath(t);
    fail(t, std::string("expected a variable or ':name' as ") + where);
  }

  Name prefixed(const Token& t, Kind kind) const {
    auto colon = t.text.find(':');
    if (colon == std::string::npos) fail(t, "expected a ':name' term");
    if (colon != 0) unsupported(t, "only the default prefix ':' is supported");
    std::string id = t.text.substr(1);
    if (!validIdentifier(id)) fail(t, "invalid name '" + t.text + "'");
    return {kind, Marking::Plain, false, id};
  }

  std::pair<Atom, Token> triple() {
    Token st = next();
    Name s = term(st, "subject");
    Token pt = next();
    checkKeyword(pt);
    checkPath(pt);
    if (pt.type == Tok::Var) unsupported(pt, "variables in predicate position are not supported");
    if (pt.type == Tok::Iri) unsupported(pt, "full IRIs are not supported, use ':name'");
    if (pt.type != Tok::Word) fail(pt, "expected a predicate");
    checkPath(peek());
    Token ot = next();
    if (pt.text == "a") {
      if (ot.type == Tok::Var) unsupported(ot, "variables in class position are not supported");
      if (ot.type != Tok::Word) {
        checkPath(ot);
        fail(ot, "expected a ':Class' after 'a'");
      }
      return {Atom::conceptAtom(s, prefixed(ot, Kind::Concept)), st};
    }
    Name p = prefixed(pt, Kind::Role);
    Name o = term(ot, "object");
    return {Atom::role(s, p, o), st};
  }

  Lexer lex_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ----------------------------------------------------------------- shapes

class ShapeParser {
 public:
  explicit ShapeParser(const std::string& text) : lex_(text, true), toks_(lex_.run()) {}

  std::vector<Axiom> parse() {
    std::vector<Axiom> out;
    while (pos_ < toks_.size()) {
      if (peek().type == Tok::End) {
        ++pos_;
        continue;
      }
      const Token start = peek();
      Concept lhs = parseConcept();
      if (peek().type != Tok::Incl) fail(peek(), "expected '<:'");
      ++pos_;
      Concept rhs = parseConcept();
      if (peek().type != Tok::End) fail(peek(), "unexpected input after axiom");
      ++pos_;
      if (!isShapeTarget(lhs))
        fail(start, "left-hand side must be a shape target (:A, exists :p . Top or exists :p- . Top)");
      out.push_back(Axiom::incl(lhs, rhs));
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool isKw(const char* w) const { return peek().type == Tok::Word && peek().text == w; }
  bool isPunct(char c) const { return peek().type == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SourceError(t.line, t.col, msg, lex_.line(t.line));
  }

  Concept parseConcept() {
    Concept c = conjunction();
    while (isKw("or")) {
      ++pos_;
      c = Concept::disj(c, conjunction());
    }
    return c;
  }

  Concept conjunction() {
    Concept c = unary();
    while (isKw("and")) {
      ++pos_;
      c = Concept::conj(c, unary());
    }
    return c;
  }

  Name name(const Token& t, Kind kind) const {
    if (t.type != Tok::Word) fail(t, "expected a name");
    std::string id = t.text;
    if (!id.empty() && id[0] == ':') id = id.substr(1);
    if (!validIdentifier(id)) fail(t, "invalid name '" + t.text + "'");
    return {kind, Marking::Plain, false, id};
  }

  static bool keyword(const std::string& w) {
    return w == "and" || w == "or" || w == "not" || w == "exists" || w == "forall" || w == "Top" || w == "Bottom";
  }

  Concept unary() {
    const Token t = peek();
    if (t.type == Tok::Word) {
      if (t.text == "not") {
        ++pos_;
        return Concept::negate(unary());
      }
      if (t.text == "exists" || t.text == "forall") {
        ++pos_;
        Role r = role();
        if (!isPunct('.')) fail(peek(), "expected '.' after the role");
        ++pos_;
        Concept body = unary();
        return t.text == "exists" ? Concept::exists(r, body) : Concept::forall(r, body);
      }
      if (t.text == "Top") {
        ++pos_;
        return Concept::top();
      }
      if (t.text == "Bottom") {
        ++pos_;
        return Concept::bottom();
      }
      if (keyword(t.text)) fail(t, "unexpected keyword '" + t.text + "'");
      if (t.text.back() == '-') fail(t, "inverse marker '-' is only allowed on roles");
      ++pos_;
      return Concept::atom(name(t, Kind::Concept));
    }
    if (t.type == Tok::Punct && t.text == "(") {
      ++pos_;
      Concept c = parseConcept();
      if (!isPunct(')')) fail(peek(), "expected ')'");
      ++pos_;
      return c;
    }
    if (t.type == Tok::Punct && t.text == "{") {
      ++pos_;
      const Token n = peek();
      if (n.type != Tok::Word || keyword(n.text) || n.text.back() == '-') fail(n, "expected an individual name");
      ++pos_;
      if (!isPunct('}')) fail(peek(), "expected '}'");
      ++pos_;
      return Concept::nominal(name(n, Kind::Individual));
    }
    fail(t, t.type == Tok::End ? "unexpected end of line" : "expected a concept");
  }

  Role role() {
    const Token t = peek();
    if (t.type != Tok::Word || keyword(t.text)) fail(t, "expected a role name");
    ++pos_;
    std::string text = t.text;
    bool inv = false;
    if (text.back() == '-') {
      inv = true;
      text.pop_back();
    }
    Token stripped = t;
    stripped.text = text;
    return {name(stripped, Kind::Role), inv};
  }

  Lexer lex_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------------ graphs

class GraphParser {
 public:
  explicit GraphParser(const std::string& text) : text_(text) {}

  Graph parse() {
    // Reuse the query grammar: a graph is a WHERE block without variables.
    Query q = parseQuery("CONSTRUCT { } WHERE {\n" + text_ + "\n}");
    Graph g;
    for (const auto& a : q.pattern) {
      if (a.hasVariable()) throw SourceError(1, 1, "graphs must not contain variables", "");
      if (a.isRole)
        g.add(a.subject, a.pred, a.object);
      else
        g.add(a.subject, a.pred);
    }
    return g;
  }

 private:
  std::string text_;
};

// --------------------------------------------------------------- rendering

int precedence(const Concept& c) {
  switch (c.op()) {
    case Concept::Op::Or:
      return 0;
    case Concept::Op::And:
      return 1;
    default:
      return 2;
  }
}

std::string renderAt(const Concept& c, int minPrec) {
  std::string s = render(c);
  return precedence(c) < minPrec ? "(" + s + ")" : s;
}

std::string termText(const Name& n) {
  if (n.isVariable()) return "?" + n.id;
  return render(n);
}

}  // namespace

Query parseQuery(const std::string& text) { return QueryParser(text).parse(); }

std::vector<Axiom> parseShapes(const std::string& text) { return ShapeParser(text).parse(); }

Graph parseGraph(const std::string& text) {
  try {
    return GraphParser(text).parse();
  } catch (const UnboundVariableError&) {
    throw;
  } catch (const SourceError& e) {
    // Undo the one-line offset of the wrapper.
    int line = std::max(1, e.line() - 1);
    auto lines = splitLines(text);
    std::string snippet = line <= static_cast<int>(lines.size()) ? lines[static_cast<std::size_t>(line - 1)] : "";
    throw SourceError(line, e.column(), e.message(), snippet);
  }
}

std::string render(const Name& n) {
  if (n.varConcept) return "V_" + n.id;
  if (n.isVariable()) return "?" + n.id;
  std::string s = ":" + n.id;
  if (n.marking == Marking::Med) s += "'";
  if (n.marking == Marking::Out) s += "''";
  return s;
}

std::string render(const Role& r) { return render(r.name) + (r.inverted ? "-" : ""); }

std::string render(const Concept& c) {
  using Op = Concept::Op;
  switch (c.op()) {
    case Op::Top:
      return "Top";
    case Op::Bottom:
      return "Bottom";
    case Op::Atom:
      return render(c.name());
    case Op::Nominal:
      return "{" + render(c.name()) + "}";
    case Op::Not:
      return "not " + renderAt(c.left(), 2);
    case Op::And:
      return renderAt(c.left(), 1) + " and " + renderAt(c.right(), 2);
    case Op::Or:
      return renderAt(c.left(), 0) + " or " + renderAt(c.right(), 1);
    case Op::Exists:
      return "exists " + render(c.role()) + " . " + renderAt(c.left(), 2);
    case Op::Forall:
      return "forall " + render(c.role()) + " . " + renderAt(c.left(), 2);
  }
  return "";
}

std::string render(const Axiom& a) {
  if (a.isRole()) return render(a.rlhs) + " <: " + render(a.rrhs);
  return render(a.lhs) + " <: " + render(a.rhs);
}

std::string render(const Shape& s) { return render(s.axiom()); }

std::string render(const Atom& a) {
  if (a.isRole) return termText(a.subject) + " " + render(a.pred) + " " + termText(a.object);
  return termText(a.subject) + " a " + render(a.pred);
}

namespace {
std::string renderBlock(const Pattern& p) {
  if (p.empty()) return "{ }";
  std::string s = "{ ";
  bool first = true;
  for (const auto& a : p) {
    if (!first) s += " . ";
    s += render(a);
    first = false;
  }
  return s + " }";
}
}  // namespace

std::string render(const Query& q) {
  return "CONSTRUCT " + renderBlock(q.templ) + " WHERE " + renderBlock(q.pattern);
}

std::string render(const Graph& g) {
  std::string s;
  for (const auto& c : g.concepts) s += render(c.individual) + " a " + render(c.cls) + " .\n";
  for (const auto& r : g.roles) s += render(r.subject) + " " + render(r.role) + " " + render(r.object) + " .\n";
  return s;
}

}  // namespace cshapes
