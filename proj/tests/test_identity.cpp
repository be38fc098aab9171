#include <doctest.h>

#include "tribo/corpus.hpp"
#include "tribo/identity.hpp"

using namespace tribo;

namespace {

Factor w(Index off, unsigned e = 1) { return Factor{Symbol::W, IndexExpr{1, 0, off}, e}; }

std::size_t error_position(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse a three-term recurrence") {
  const Identity id = parse("W(r-16) = -103*W(r) + 56*W(r+1)");
  REQUIRE(id.lhs.size() == 1);
  REQUIRE(id.rhs.size() == 2);
  CHECK(id.lhs[0].coeff == 1);
  CHECK(id.lhs[0].factors == std::vector<Factor>{w(-16)});
  CHECK(id.rhs[0].coeff == -103);
  CHECK(id.rhs[0].factors == std::vector<Factor>{w(0)});
  CHECK(id.rhs[1].coeff == 56);
  CHECK(id.rhs[1].factors == std::vector<Factor>{w(1)});
}

TEST_CASE("parse mixed symbols, juxtaposition and grouping") {
  const Identity bridge = parse("K(r-2) = 5*T(r-1) - T(r+1)");
  CHECK(bridge.lhs[0].factors[0].symbol == Symbol::K);
  CHECK(bridge.rhs[0].factors[0].symbol == Symbol::T);
  CHECK(bridge.rhs[1].coeff == -1);

  CHECK(canonically_equal(parse("W(r) = 2W(r-1) - W(r-4)"), parse("W(r) = 2*W(r-1) - W(r-4)")));

  // Grouped coefficients distribute.
  const Identity grouped = parse("4*W(r+s) = (T(s+4) - 7*T(s))*W(r)");
  const Identity flat = parse("4*W(r+s) = T(s+4)*W(r) - 7*T(s)*W(r)");
  CHECK(canonically_equal(grouped, flat));
  CHECK(grouped.lhs[0].factors[0].index == IndexExpr{1, 1, 0});

  // "... = 0" form and comments
  const Identity zero_form = parse("W(r)^2 - W(r)^2 = 0  # trivially true");
  CHECK(zero_form.rhs.size() == 1);
  CHECK(render(zero_form) == "0 = 0");
}

TEST_CASE("canonical form") {
  CHECK(render(parse("W(r) = W(r)")) == "0 = 0");
  CHECK(render(Identity{}) == "0 = 0");
  CHECK(canonically_equal(parse("W(r)*T(s) = 0"), parse("T(s)*W(r) = 0")));
  CHECK(render(parse("W(r)*W(r) = W(r)^2")) == "0 = 0");
  CHECK(render(parse("W(r) + 2*W(r) = W(r+1)")) == "3*W(r) = W(r+1)");
  // a monomial on both sides is merged onto the left
  CHECK(render(parse("3*W(r) + W(r+1) = W(r)")) == "2*W(r) + W(r+1) = 0");
}

TEST_CASE("render") {
  CHECK(render(parse("W(r-16) = -103*W(r) + 56*W(r+1)")) == "W(r-16) = -103*W(r) + 56*W(r+1)");
  CHECK(render(parse("252W(r)^2 - 927 W(r - 1)^2 + 2884*W(r-4)^2 - W(r-17)^2 = 0")) ==
        "252*W(r)^2 - 927*W(r-1)^2 + 2884*W(r-4)^2 - W(r-17)^2 = 0");
  CHECK(render(parse("T(0) + 3 = -K(-2)*W(s+r-1)")) == "T(0) + 3 = -K(-2)*W(r+s-1)");
}

TEST_CASE("round trip over the bundled corpus") {
  const auto entries = load_corpus(default_corpus_path());
  REQUIRE(entries.size() >= 40);
  for (const auto& e : entries) {
    const Identity once = parse(render(e.identity));
    CHECK_MESSAGE(canonically_equal(once, e.identity), e.id);
    CHECK(render(once) == render(e.identity));
  }
}

TEST_CASE("malformed input is rejected with a position") {
  struct Case {
    std::string text;
    std::size_t pos;
  };
  const std::vector<Case> cases{
      {"W(r-3) = 2W(r) -", 16},       // trailing operator
      {"", 0},                        // empty input
      {"   # only a comment", 19},    // empty after comments
      {"W(r) + W(r-1)", 13},          // missing '='
      {"W(r) = W(r) = W(r)", 12},     // second '='
      {"X(r) = W(r)", 0},             // unknown symbol
      {"W(r)^0 = W(r)", 5},           // zero exponent
      {"W(r = W(r)", 4},              // unclosed subscript
      {"(W(r) + W(r-1) = 0", 15},     // unclosed group
      {"W(q) = W(r)", 2},             // bad index variable
      {"W() = W(r)", 2},              // empty index
      {"W(r) = 3*", 9},               // dangling '*'
      {"W(r)^ = W(r)", 6},            // missing exponent
      {"W(r) = W(r) $", 12},          // stray character
      {"W(r) = W(r))", 11},           // extra closing paren
      {"W r = W(r)", 2},              // missing '('
      {"= W(r)", 0},                  // missing lhs
  };
  CHECK(cases.size() >= 10);
  for (const auto& c : cases) {
    INFO(c.text);
    CHECK(error_position(c.text) == c.pos);
  }
  try {
    parse("W(r-3) = 2W(r) -");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected a term") != std::string::npos);
  }
}

TEST_CASE("degree profile") {
  const auto eq12 = degree_profile(parse("W(r-16) = -103*W(r) + 56*W(r+1)"));
  REQUIRE(eq12.vars.count(Var::R) == 1);
  CHECK(eq12.vars.count(Var::S) == 0);
  CHECK(eq12.vars.at(Var::R).degrees == std::set<unsigned>{1});
  CHECK(eq12.vars.at(Var::R).min_offset == -16);
  CHECK(eq12.vars.at(Var::R).max_offset == 1);
  CHECK(eq12.w_degree == 1);

  const auto add = degree_profile(parse("W(r+s) = T(s-1)*W(r-1) + (T(s-1) + T(s-2))*W(r) + T(s)*W(r+1)"));
  CHECK(add.vars.at(Var::R).degrees == std::set<unsigned>{1});
  CHECK(add.vars.at(Var::S).degrees == std::set<unsigned>{1});
  CHECK(add.w_degree == 1);

  const auto cube = degree_profile(parse(
      "W(r)^3 - 4*W(r-1)^3 - 9*W(r-2)^3 - 34*W(r-3)^3 + 24*W(r-4)^3 - 2*W(r-5)^3 + 40*W(r-6)^3 "
      "- 14*W(r-7)^3 - W(r-8)^3 - 2*W(r-9)^3 + W(r-10)^3 = 0"));
  CHECK(cube.vars.at(Var::R).degrees == std::set<unsigned>{3});
  CHECK(cube.vars.at(Var::R).min_offset == -10);
  CHECK(cube.vars.at(Var::R).max_offset == 0);
  CHECK(cube.w_degree == 3);

  // mixed: a monomial free of s contributes degree 0 in s
  const auto mixed = degree_profile(parse("W(r)*T(s) = W(r+1)"));
  CHECK(mixed.vars.at(Var::S).degrees == std::set<unsigned>{0, 1});
}
