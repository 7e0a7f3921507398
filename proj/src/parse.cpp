#include <cctype>
#include <set>

#include "parse_detail.hpp"
#include "toricdist/errors.hpp"

namespace toricdist::detail {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        if (s[i] == '_' && i + 1 < s.size() && s[i + 1] == '{') {
          auto close = s.find('}', i);
          if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "unterminated subscript at position " + std::to_string(i));
          i = close + 1;
          break;
        }
        ++i;
      }
      std::string text(s.substr(start, i - start));
      std::string compact;
      for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
      out.push_back({Tok::Ident, compact, start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw Error(ErrorKind::ParseError, std::string("unexpected character '") + c + "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const VariableNames& names, std::size_t nvars, bool forms)
      : toks_(std::move(tokens)), names_(names), nvars_(nvars), forms_(forms) {}

  std::vector<ParsedTerm> parse_all() {
    auto terms = parse_sum(forms_);
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return terms;
  }

  // Classifies an identifier: variable index, or differential of a variable.
  static std::optional<std::size_t> differential_of(const std::string& ident, const VariableNames& names) {
    if (ident.size() < 2 || ident[0] != 'd') return std::nullopt;
    if (names.lookup(ident)) return std::nullopt;
    return names.lookup(ident.substr(1));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(peek().pos));
  }

  std::vector<ParsedTerm> parse_sum(bool allow_diff) {
    std::vector<ParsedTerm> terms;
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = take().kind == Tok::Minus;
    while (true) {
      ParsedTerm t = parse_term(allow_diff);
      if (negate) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negate = take().kind == Tok::Minus;
        continue;
      }
      break;
    }
    return terms;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  ParsedTerm parse_term(bool allow_diff) {
    ParsedTerm t{Polynomial::constant(nvars_, 1), std::nullopt};
    bool first = true;
    while (true) {
      if (!first) {
        if (peek().kind == Tok::Star) {
          take();
        } else if (!starts_factor()) {
          break;
        }
      }
      first = false;
      if (peek().kind == Tok::Ident && allow_diff) {
        if (auto d = differential_of(peek().text, names_)) {
          if (t.differential) fail("two differentials in one term");
          if (*d >= nvars_) fail("unknown differential '" + peek().text + "'");
          take();
          t.differential = d;
          continue;
        }
      }
      t.coefficient = t.coefficient * parse_power();
    }
    return t;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (peek().kind != Tok::Caret) return base;
    take();
    if (peek().kind != Tok::Number) fail("expected exponent");
    std::string e = take().text;
    if (e.size() > 6) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }

  Polynomial parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      std::string num = take().text;
      if (peek().kind == Tok::Slash) {
        take();
        if (peek().kind != Tok::Number) fail("expected denominator");
        num += "/" + take().text;
      }
      return Polynomial::constant(nvars_, parse_rational(num));
    }
    if (t.kind == Tok::Ident) {
      auto idx = names_.lookup(t.text);
      if (!idx || *idx >= nvars_) fail("unknown variable '" + t.text + "'");
      take();
      return Polynomial::variable(nvars_, *idx);
    }
    if (t.kind == Tok::LParen) {
      take();
      auto inner = parse_sum(false);
      if (peek().kind != Tok::RParen) fail("expected ')'");
      take();
      Polynomial p(nvars_);
      for (auto& x : inner) p += x.coefficient;
      return p;
    }
    fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const VariableNames& names_;
  std::size_t nvars_;
  bool forms_;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text, const VariableNames& names, bool allow_differentials) {
  std::vector<Token> toks = tokenize(text);
  ParsedExpression out;
  if (names.is_open()) {
    std::size_t k = 0;
    for (const auto& t : toks) {
      if (t.kind != Tok::Ident) continue;
      std::optional<std::size_t> idx = names.lookup(t.text);
      if (!idx && allow_differentials) idx = Parser::differential_of(t.text, names);
      if (!idx) throw Error(ErrorKind::ParseError, "unknown variable '" + t.text + "'");
      k = std::max(k, *idx + 1);
    }
    out.nvars = k;
  } else {
    out.nvars = names.size();
  }
  Parser p(std::move(toks), names, out.nvars, allow_differentials);
  out.terms = p.parse_all();
  return out;
}

}  // namespace toricdist::detail
