#include "bayesext/dbl/parser.hpp"

#include <cctype>
#include <vector>

#include "bayesext/error.hpp"

namespace bayesext::dbl {

namespace {

enum class Tok { lparen, rparen, lbrack, rbrack, tilde, amp, bar, meta, arrow, iff, ident, element, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto simple = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(i, len)), start});
      i += len;
    };
    if (c == '(') {
      simple(Tok::lparen, 1);
    } else if (c == ')') {
      simple(Tok::rparen, 1);
    } else if (c == '[') {
      simple(Tok::lbrack, 1);
    } else if (c == ']') {
      simple(Tok::rbrack, 1);
    } else if (c == '~') {
      simple(Tok::tilde, 1);
    } else if (c == '&') {
      simple(Tok::amp, 1);
    } else if (c == '|') {
      if (i + 1 < s.size() && s[i + 1] == '|') {
        simple(Tok::meta, 2);
      } else {
        simple(Tok::bar, 1);
      }
    } else if (s.substr(i, 2) == "->") {
      simple(Tok::arrow, 2);
    } else if (s.substr(i, 3) == "<->") {
      simple(Tok::iff, 3);
    } else if (is_ident_start(c)) {
      while (i < s.size() && is_ident(s[i])) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
    } else if (c == '{' || c == '@') {
      std::string text;
      if (c == '@') {
        text += '@';
        ++i;
        const std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) text += s[i++];
        if (i == digits || i >= s.size() || s[i] != '{') {
          throw ParseError("expected '@<stage>{...}'", start);
        }
      }
      int depth = 0;
      for (;;) {
        if (i >= s.size()) throw ParseError("unterminated element literal", start);
        const char d = s[i++];
        if (std::isspace(static_cast<unsigned char>(d))) continue;
        text += d;
        if (d == '{') ++depth;
        if (d == '}' && --depth == 0) break;
      }
      out.push_back({Tok::element, text, start});
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Proposition prop() {
    Proposition p = iff();
    if (peek().kind == Tok::meta) fail("'||' separates sequent members and cannot appear here");
    expect_end();
    return p;
  }

  Sequent sequent() {
    Sequent s{iff()};
    while (accept(Tok::meta)) s.push_back(iff());
    expect_end();
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what + ", found " + describe(peek()));
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail("unexpected " + describe(peek()));
  }

  Proposition iff() {
    Proposition p = impl();
    while (accept(Tok::iff)) p = Proposition::iff(p, impl());
    return p;
  }

  Proposition impl() {
    Proposition p = disj();
    if (accept(Tok::arrow)) return Proposition::impl(p, impl());
    return p;
  }

  Proposition disj() {
    Proposition p = conj();
    while (accept(Tok::bar)) p = Proposition::disj(p, conj());
    return p;
  }

  Proposition conj() {
    Proposition p = unary();
    while (accept(Tok::amp)) p = Proposition::conj(p, unary());
    return p;
  }

  Proposition unary() {
    if (accept(Tok::tilde)) return Proposition::neg(unary());
    if (accept(Tok::lbrack)) {
      Proposition cond = iff();
      expect(Tok::rbrack, "']'");
      return Proposition::cond(cond, unary());
    }
    return primary();
  }

  Proposition primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        ++pos_;
        Proposition p = iff();
        expect(Tok::rparen, "')'");
        return p;
      }
      case Tok::ident:
        ++pos_;
        if (t.text == "F") return Proposition::bot();
        if (t.text == "T") return Proposition::top();
        return Proposition::atom(t.text);
      case Tok::element:
        ++pos_;
        return Proposition::atom(t.text);
      default:
        fail("expected a proposition, found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum Prec { kIff = 1, kImpl = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

std::pair<std::string, int> render(const Proposition& p);

std::string text(const Proposition& p, int min_prec) {
  auto [s, prec] = render(p);
  return prec < min_prec ? "(" + s + ")" : s;
}

std::pair<std::string, int> render(const Proposition& p) {
  switch (p.kind()) {
    case Kind::bot:
      return {"F", kAtom};
    case Kind::atom:
      return {p.name(), kAtom};
    case Kind::cond:
      return {"[" + text(p.left(), 0) + "]" + text(p.right(), kUnary), kUnary};
    case Kind::impl:
      break;
  }
  if (p.is_top()) return {"T", kAtom};
  if (auto e = p.as_iff()) return {text(e->first, kIff + 1) + " <-> " + text(e->second, kIff + 1), kIff};
  if (auto c = p.as_conj()) return {text(c->first, kAnd) + " & " + text(c->second, kAnd + 1), kAnd};
  if (auto n = p.as_neg()) return {"~" + text(*n, kUnary), kUnary};
  if (auto d = p.as_disj()) return {text(d->first, kOr) + " | " + text(d->second, kOr + 1), kOr};
  return {text(p.left(), kImpl + 1) + " -> " + text(p.right(), kImpl), kImpl};
}

}  // namespace

Proposition parse_prop(std::string_view text) { return Parser(text).prop(); }

Sequent parse_sequent(std::string_view text) { return Parser(text).sequent(); }

std::string print_prop(const Proposition& p) { return render(p).first; }

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " || ";
    out += print_prop(s[i]);
  }
  return out;
}

}  // namespace bayesext::dbl
