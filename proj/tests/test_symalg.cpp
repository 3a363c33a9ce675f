// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "g2h/exprtree.hpp"
#include "g2h/multipoly.hpp"
#include "g2h/pack.hpp"

using namespace g2h;

namespace {

const FormulaPack& shipped() {
  static const FormulaPack pack = load_pack(default_pack_path());
  return pack;
}

const std::string& shipped_text() {
  static const std::string text = [] {
    std::ifstream in(default_pack_path());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  return text;
}

Exponents ex(std::initializer_list<int> e) {
  Exponents out{};
  int i = 0;
  for (int x : e) out[i++] = x;
  return out;
}

// Drops a "[...name...]" header and its body from pack text.
std::string drop_section(const std::string& text, const std::string& header) {
  auto b = text.find(header);
  REQUIRE(b != std::string::npos);
  auto e = text.find("\n[", b + 1);
  return text.substr(0, b) + text.substr(e + 1);
}

}  // namespace

TEST_CASE("polynomial evaluation") {
  MultiPoly p;
  p.add_term(ex({2, 0, 0, 0, 1}), 3);  // 3 P12^2 MU0
  CHECK(poly_eval(p, {{"P12", -1}, {"MU0", 1}}) == 3);
  CHECK_THROWS(poly_eval(p, {{"P12", -1}}));
  MultiPoly q = MultiPoly::variable(4) + Rational(2) * MultiPoly::variable(5);
  CHECK(poly_eval(q, {{"MU0", 1}, {"MU1", 2}}) == 5);
  CHECK(poly_eval(shipped().phi[1], std::array<Rational, kVars>{7, 1, 2, 3, 4, 5, 6, 7, 8}) == 1);
  CHECK(to_string(p) == "3*P12^2*MU0");
}

TEST_CASE("arithmetic and partials") {
  MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1);
  MultiPoly s = (x + y) * (x - y);
  CHECK(s == x * x - y * y);
  CHECK((s - s).is_zero());
  CHECK(s.partial(0) == Rational(2) * x);
  CHECK(s.degree() == 2);
  CHECK(s.max_exponent(1) == 2);
}

TEST_CASE("derivations") {
  const Derivations& d = shipped().deriv;
  MultiPoly p12 = MultiPoly::variable(0), p122 = MultiPoly::variable(2);
  CHECK(poly_derive(p12, 2, d) == p122);
  CHECK(poly_derive(p12 * p12, 2, d) == Rational(2) * p12 * p122);
  CHECK(poly_derive(MultiPoly::constant(5), 1, d).is_zero());
  CHECK(poly_derive(MultiPoly::variable(6), 1, d).is_zero());  // curve constants
  // Leibniz rule on a pack polynomial.
  const MultiPoly& f = shipped().phi[2];
  CHECK(poly_derive(f * p12, 1, d) == poly_derive(f, 1, d) * p12 + f * poly_derive(p12, 1, d));
  Derivations empty;
  CHECK_THROWS(poly_derive(p12, 1, empty));
}

TEST_CASE("shipped pack loads") {
  const FormulaPack& p = shipped();
  CHECK(p.version == "1");
  CHECK(p.phi[1].is_constant(1));
  for (int j = 2; j <= 5; ++j) CHECK_FALSE(p.phi[j].is_zero());
  CHECK(p.kanayama_odd.a == 2);
  CHECK(p.uchida_odd.offsets.front() >= -3);
  CHECK(p.uchida_even.offsets.back() <= 4);
  CHECK(p.kanayama_odd.expr.touches_window());
}

TEST_CASE("serialisation round trip") {
  std::stringstream ss(shipped().serialize());
  FormulaPack again = parse_pack(ss);
  for (int j = 1; j <= 5; ++j) CHECK(again.phi[j] == shipped().phi[j]);
  for (int j = 1; j <= 4; ++j) CHECK(again.delta[j] == shipped().delta[j]);
  CHECK(again.serialize() == shipped().serialize());
}

TEST_CASE("malformed packs") {
  {
    std::stringstream ss(drop_section(shipped_text(), "[POLY phi2]"));
    CHECK_THROWS_WITH(parse_pack(ss), doctest::Contains("missing section phi2"));
  }
  {
    std::string t = shipped_text();
    auto at = t.find("-1 3 0 1 0 0 0 0 0 0");
    REQUIRE(at != std::string::npos);
    t.replace(at, 20, "-1 3 0 x 0 0 0 0 0 0");
    std::stringstream ss(t);
    try {
      parse_pack(ss);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line == 9);
      CHECK(e.column > 1);
    }
  }
  {
    std::string t = shipped_text();
    t.replace(t.find("-1 3 0 1 0 0 0 0 0 0"), 20, "-1 3 0 1 0 0 0 0 0");  // eight exponents
    std::stringstream ss(t);
    CHECK_THROWS_AS(parse_pack(ss), ParseError);
  }
  {
    std::stringstream ss("PACKVERSION 1\n[POLY phi1]\n2 0 0 0 0 0 0 0 0 0\n");
    CHECK_THROWS(parse_pack(ss));
  }
  {
    std::stringstream ss("not a pack\n");
    CHECK_THROWS_AS(parse_pack(ss), ParseError);
  }
  CHECK_THROWS(load_pack("/nonexistent/pack"));
}

TEST_CASE("expressions") {
  ExprNode e = parse_expr("(ADD (MUL 2 (PHI 1)) (POW (PHI -1) 2) (NEG 1/2))");
  CHECK(e.touches_window());
  std::vector<int> offs;
  e.collect_offsets(offs);
  std::sort(offs.begin(), offs.end());
  offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
  CHECK(offs == std::vector<int>{-1, 1});
  CHECK(parse_expr(to_string(e)).kids.size() == 3);

  struct Env {
    Rational num(const Rational& x) { return x; }
    Rational phi(int k) { return k == 1 ? 5 : 3; }
    Rational dmix(int, int, int) { return 0; }
    Rational seed(int) { return 0; }
    Rational dseed(int, int, int) { return 0; }
    Rational var(const std::string&) { return 0; }
    Rational ref(const std::string&) { return 0; }
    Rational pivot() { return 0; }
  } env;
  CHECK(eval_expr<Rational>(e, env) == Rational(37, 2));
  CHECK(parse_expr("(DPHI 0 1 2)").max_derivative_order() == 2);
  CHECK_THROWS_AS(parse_expr("(ADD 1", 4), ParseError);
  CHECK_THROWS_AS(parse_expr("(FROB 1)"), ParseError);
}
