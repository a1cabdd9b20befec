#include "torbar/parser.hpp"

#include <cctype>
#include <sstream>

namespace torbar {

namespace {

struct Token {
  enum Kind { Name, Number, Plus, Minus, Star, Caret, LParen, RParen, Arrow, End };
  Kind kind = End;
  std::string text;
  int col = 0;
};

std::vector<Token> lex_line(const std::string& s, int line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Name, s.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
        ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", col});
      i += 2;
    } else {
      Token::Kind k;
      switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Token::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, const AlgebraPresentation& pres, int line)
      : toks_(std::move(toks)), pres_(pres), line_(line) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    expect(Token::End, "end of expression");
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + ", found '" + peek().text + "'", line_,
                       peek().col);
    ++pos_;
  }

  Polynomial expr() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      take();
      neg = true;
    } else if (peek().kind == Token::Plus) {
      take();
    }
    Polynomial acc = term();
    if (neg) acc = poly_scale(acc, Rational(-1));
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      Polynomial t = term();
      if (minus) t = poly_scale(t, Rational(-1));
      acc = poly_add(acc, t);
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == Token::Star) {
      take();
      acc = poly_mul(acc, factor(), pres_.generators);
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek().kind == Token::Caret) {
      Token caret = take();
      if (peek().kind != Token::Number || peek().text.find('/') != std::string::npos)
        throw ParseError("exponent must be a non-negative integer", line_, peek().col);
      int e = std::stoi(take().text);
      Polynomial acc{{Monomial(pres_.generators.size(), 0), Rational(1)}};
      for (int i = 0; i < e; ++i) acc = poly_mul(acc, base, pres_.generators);
      (void)caret;
      return acc;
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      Token tok = take();
      Rational v;
      try {
        v = parse_rational(tok.text);
      } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + tok.text + "'", line_, tok.col);
      }
      return Polynomial{{Monomial(pres_.generators.size(), 0), v}};
    }
    if (t.kind == Token::Name) {
      Token tok = take();
      auto idx = pres_.generator_index(tok.text);
      if (!idx)
        throw ParseError("unknown generator '" + tok.text + "'", line_, tok.col);
      Monomial m(pres_.generators.size(), 0);
      m[*idx] = 1;
      return Polynomial{{m, Rational(1)}};
    }
    if (t.kind == Token::LParen) {
      take();
      Polynomial p = expr();
      expect(Token::RParen, "')'");
      return p;
    }
    throw ParseError("expected a value, found '" + t.text + "'", line_, t.col);
  }

  std::vector<Token> toks_;
  const AlgebraPresentation& pres_;
  int line_;
  size_t pos_ = 0;
};

int require_generator(const AlgebraPresentation& pres, const Token& t, int line) {
  auto idx = pres.generator_index(t.text);
  if (!idx) throw ParseError("unknown generator '" + t.text + "'", line, t.col);
  return *idx;
}

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text) {
  AlgebraPresentation pres;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool saw_algebra = false;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<Token> toks = lex_line(raw, line);
    if (toks.front().kind == Token::End) continue;
    if (toks.front().kind != Token::Name)
      throw ParseError("expected a directive", line, toks.front().col);
    const std::string& dir = toks.front().text;
    size_t p = 1;

    auto name_at = [&](size_t i) -> const Token& {
      if (toks[i].kind != Token::Name)
        throw ParseError("expected a name", line, toks[i].col);
      return toks[i];
    };

    if (dir == "algebra") {
      if (saw_algebra) throw ParseError("duplicate algebra directive", line, toks[0].col);
      pres.name = name_at(p).text;
      if (toks[p + 1].kind != Token::End)
        throw ParseError("trailing tokens after algebra name", line, toks[p + 1].col);
      saw_algebra = true;
    } else if (dir == "generator") {
      const Token& nm = name_at(p);
      if (pres.generator_index(nm.text))
        throw ParseError("generator '" + nm.text + "' already declared", line, nm.col);
      if (toks[p + 1].kind != Token::Name || toks[p + 1].text != "degree")
        throw ParseError("expected 'degree'", line, toks[p + 1].col);
      if (toks[p + 2].kind != Token::Number ||
          toks[p + 2].text.find('/') != std::string::npos)
        throw ParseError("degree must be a positive integer", line, toks[p + 2].col);
      int deg = std::stoi(toks[p + 2].text);
      if (toks[p + 3].kind != Token::End)
        throw ParseError("trailing tokens after generator", line, toks[p + 3].col);
      pres.generators.push_back({nm.text, deg});
    } else if (dir == "rbase") {
      while (toks[p].kind != Token::End) {
        int idx = require_generator(pres, name_at(p), line);
        if (!pres.is_r_generator(idx)) pres.r_generators.push_back(idx);
        ++p;
      }
    } else if (dir == "relation") {
      ExprParser ep(std::vector<Token>(toks.begin() + 1, toks.end()), pres, line);
      pres.relations.push_back(ep.parse_all());
    } else if (dir == "augment" || dir == "differential") {
      int idx = require_generator(pres, name_at(p), line);
      if (toks[p + 1].kind != Token::Arrow)
        throw ParseError("expected '->'", line, toks[p + 1].col);
      ExprParser ep(std::vector<Token>(toks.begin() + p + 2, toks.end()), pres, line);
      Polynomial rhs = ep.parse_all();
      auto& table = dir == "augment" ? pres.augmentation : pres.differential;
      if (table.count(idx))
        throw ParseError("duplicate " + dir + " for '" + toks[p].text + "'", line,
                         toks[p].col);
      table[idx] = std::move(rhs);
    } else {
      throw ParseError("unknown directive '" + dir + "'", line, toks[0].col);
    }
  }
  if (!saw_algebra) throw ParseError("missing algebra directive", line + 1, 1);
  // run the full semantic validation (homogeneity, degree rules, chain-map
  // augmentation) so a returned presentation is always usable
  AlgebraContext{pres};
  return pres;
}

Polynomial parse_polynomial(const std::string& expr, const AlgebraPresentation& pres) {
  ExprParser ep(lex_line(expr, 1), pres, 1);
  return ep.parse_all();
}

std::string render_polynomial(const Polynomial& p, const AlgebraPresentation& pres) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p) {
    std::string cs = rational_str(c < 0 ? -c : c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string ms;
    for (size_t g = 0; g < m.size(); ++g) {
      if (m[g] == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += pres.generators[g].name;
      if (m[g] > 1) ms += "^" + std::to_string(m[g]);
    }
    if (ms.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += ms;
    } else {
      out += cs + "*" + ms;
    }
  }
  return out;
}

std::string render_presentation(const AlgebraPresentation& pres) {
  std::string out = "algebra " + pres.name + "\n";
  for (const auto& g : pres.generators)
    out += "generator " + g.name + " degree " + std::to_string(g.degree) + "\n";
  if (!pres.r_generators.empty()) {
    out += "rbase";
    for (int idx : pres.r_generators) out += " " + pres.generators[idx].name;
    out += "\n";
  }
  for (const auto& rel : pres.relations)
    out += "relation " + render_polynomial(rel, pres) + "\n";
  for (const auto& [g, p] : pres.augmentation)
    out += "augment " + pres.generators[g].name + " -> " + render_polynomial(p, pres) +
           "\n";
  for (const auto& [g, p] : pres.differential)
    out += "differential " + pres.generators[g].name + " -> " +
           render_polynomial(p, pres) + "\n";
  return out;
}

}  // namespace torbar
