#include "tribo/identity.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tribo {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::K: return 'K';
    case Symbol::T: return 'T';
    case Symbol::W: return 'W';
  }
  return '?';
}

char var_char(Var v) { return v == Var::R ? 'r' : 's'; }

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at byte " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Int, Ident, LParen, RParen, Plus, Minus, Star, Caret, Equals, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Int:
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c >= 0x80) throw ParseError(i, "non-ASCII byte in input");
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, i, std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, i, std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '=': k = Tok::Equals; break;
      default: throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({k, i, std::string(1, static_cast<char>(c))});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

// ---------------------------------------------------------------------------
// Sum algebra used while parsing

Sum multiply(const Sum& a, const Sum& b) {
  Sum out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Term t{x.coeff * y.coeff, x.factors};
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.push_back(std::move(t));
    }
  return out;
}

void negate(Sum& s) {
  for (auto& t : s) t.coeff = -t.coeff;
}

// ---------------------------------------------------------------------------
// Recursive descent parser

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Identity identity() {
    if (peek().kind == Tok::End) throw ParseError(peek().pos, "empty input, expected an identity");
    Identity id;
    id.lhs = expr();
    expect(Tok::Equals, "'='");
    id.rhs = expr();
    if (peek().kind != Tok::End)
      throw ParseError(peek().pos, "expected end of input, found " + describe(peek()));
    return id;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError(peek().pos, "expected " + what + ", found " + describe(peek()));
    return next();
  }

  bool starts_factor() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  // expr := ["+"|"-"] term { ("+"|"-") term }
  Sum expr() {
    Sum out;
    bool neg = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
    for (;;) {
      Sum t = term();
      if (neg) negate(t);
      out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
      if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) break;
      neg = next().kind == Tok::Minus;
    }
    return out;
  }

  // term := (integer | factor) { ["*"] factor }
  Sum term() {
    Sum acc;
    if (peek().kind == Tok::Int) {
      acc.push_back(Term{BigInt(next().text), {}});
    } else if (starts_factor()) {
      acc = factor();
    } else {
      throw ParseError(peek().pos, "expected a term, found " + describe(peek()));
    }
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        if (!starts_factor())
          throw ParseError(peek().pos, "expected a factor after '*', found " + describe(peek()));
      } else if (!starts_factor()) {
        break;
      }
      acc = multiply(acc, factor());
    }
    return acc;
  }

  // factor := seq "(" index ")" ["^" posint] | "(" expr ")"
  Sum factor() {
    if (peek().kind == Tok::LParen) {
      next();
      Sum inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token id = next();
    Factor f;
    if (id.text == "W") f.symbol = Symbol::W;
    else if (id.text == "T") f.symbol = Symbol::T;
    else if (id.text == "K") f.symbol = Symbol::K;
    else throw ParseError(id.pos, "unknown sequence symbol '" + id.text + "' (expected W, T or K)");
    expect(Tok::LParen, "'(' after " + id.text);
    f.index = index();
    expect(Tok::RParen, "')'");
    if (peek().kind == Tok::Caret) {
      next();
      const Token e = expect(Tok::Int, "exponent");
      const BigInt v(e.text);
      if (v < 1 || v > 64) throw ParseError(e.pos, "exponent must be a positive integer no larger than 64");
      f.exponent = static_cast<unsigned>(v.get_ui());
    }
    return Sum{Term{1, {f}}};
  }

  // index := ["+"|"-"] atom { ("+"|"-") atom },  atom := integer | "r" | "s"
  IndexExpr index() {
    IndexExpr out;
    bool neg = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
    for (;;) {
      const Token a = next();
      const int sign = neg ? -1 : 1;
      if (a.kind == Tok::Int) {
        const BigInt v(a.text);
        if (!v.fits_slong_p() || abs(v) > BigInt(1) << 40) throw ParseError(a.pos, "index offset out of range");
        out.offset += sign * static_cast<Index>(v.get_si());
      } else if (a.kind == Tok::Ident && a.text == "r") {
        out.r_coeff += sign;
      } else if (a.kind == Tok::Ident && a.text == "s") {
        out.s_coeff += sign;
      } else {
        throw ParseError(a.pos, "expected index variable r, s or an integer, found " + describe(a));
      }
      if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) break;
      neg = next().kind == Tok::Minus;
    }
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Canonical form

std::vector<Factor> normalize_factors(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    return std::tie(a.symbol, a.index) < std::tie(b.symbol, b.index);
  });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().symbol == f.symbol && out.back().index == f.index) {
      out.back().exponent += f.exponent;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

struct Accum {
  std::vector<std::vector<Factor>> order;  // first-appearance order
  std::map<std::vector<Factor>, std::pair<BigInt, BigInt>> coeffs;  // (lhs, rhs)
};

void accumulate(Accum& acc, const Sum& side, bool is_lhs) {
  for (const auto& t : side) {
    auto key = normalize_factors(t.factors);
    auto [it, inserted] = acc.coeffs.try_emplace(key, BigInt(0), BigInt(0));
    if (inserted) acc.order.push_back(key);
    (is_lhs ? it->second.first : it->second.second) += t.coeff;
  }
}

std::map<std::vector<Factor>, BigInt> residual_map(const Identity& id) {
  std::map<std::vector<Factor>, BigInt> m;
  for (const auto& t : id.lhs) m[normalize_factors(t.factors)] += t.coeff;
  for (const auto& t : id.rhs) m[normalize_factors(t.factors)] -= t.coeff;
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

void render_factor(std::string& out, const Factor& f) {
  out += symbol_char(f.symbol);
  out += '(';
  out += render_index(f.index);
  out += ')';
  if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
}

void render_var(std::string& out, int coeff, char v) {
  for (int k = 0; k < std::abs(coeff); ++k) {
    if (coeff < 0) out += '-';
    else if (!out.empty()) out += '+';
    out += v;
  }
}

}  // namespace

Identity parse(std::string_view text) { return Parser(text).identity(); }

Identity canonicalize(const Identity& id) {
  Accum acc;
  accumulate(acc, id.lhs, true);
  accumulate(acc, id.rhs, false);
  Identity out;
  for (const auto& key : acc.order) {
    const auto& [l, r] = acc.coeffs.at(key);
    if (l == r) continue;
    if (r == 0) out.lhs.push_back(Term{l, key});
    else if (l == 0) out.rhs.push_back(Term{r, key});
    else out.lhs.push_back(Term{l - r, key});
  }
  return out;
}

bool canonically_equal(const Identity& a, const Identity& b) {
  auto side_map = [](const Sum& s) {
    std::map<std::vector<Factor>, BigInt> m;
    for (const auto& t : s) m[t.factors] += t.coeff;
    return m;
  };
  const Identity ca = canonicalize(a);
  const Identity cb = canonicalize(b);
  return side_map(ca.lhs) == side_map(cb.lhs) && side_map(ca.rhs) == side_map(cb.rhs);
}

Sum residual(const Identity& id) {
  const Identity c = canonicalize(id);
  Sum out = c.lhs;
  for (const auto& t : c.rhs) out.push_back(Term{-t.coeff, t.factors});
  return out;
}

std::string render_index(const IndexExpr& idx) {
  std::string out;
  render_var(out, idx.r_coeff, 'r');
  render_var(out, idx.s_coeff, 's');
  if (out.empty()) return std::to_string(idx.offset);
  if (idx.offset > 0) out += "+" + std::to_string(idx.offset);
  else if (idx.offset < 0) out += std::to_string(idx.offset);
  return out;
}

std::string render_sum(const Sum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sum) {
    const bool neg = t.coeff < 0;
    const BigInt mag = abs(t.coeff);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.factors.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      if (i) out += '*';
      render_factor(out, t.factors[i]);
    }
  }
  return out;
}

std::string render(const Identity& id) {
  const Identity c = canonicalize(id);
  return render_sum(c.lhs) + " = " + render_sum(c.rhs);
}

DegreeProfile degree_profile(const Identity& id) {
  DegreeProfile p;
  const auto m = residual_map(id);
  for (const Var v : {Var::R, Var::S}) {
    bool occurs = false;
    for (const auto& [factors, c] : m)
      for (const auto& f : factors) occurs = occurs || f.index.coeff(v) != 0;
    if (!occurs) continue;
    VarProfile vp;
    for (const auto& [factors, c] : m) {
      unsigned deg = 0;
      for (const auto& f : factors) {
        if (f.index.coeff(v) == 0) continue;
        deg += f.exponent;
        vp.min_offset = std::min(vp.min_offset.value_or(f.index.offset), f.index.offset);
        vp.max_offset = std::max(vp.max_offset.value_or(f.index.offset), f.index.offset);
      }
      vp.degrees.insert(deg);
    }
    p.vars.emplace(v, std::move(vp));
  }
  for (const auto& [factors, c] : m) {
    unsigned wdeg = 0;
    for (const auto& f : factors)
      if (f.symbol == Symbol::W) wdeg += f.exponent;
    p.w_degree = std::max(p.w_degree, wdeg);
  }
  return p;
}

}  // namespace tribo
