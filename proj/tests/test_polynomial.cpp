#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toricdist/errors.hpp"
#include "toricdist/polynomial.hpp"

using namespace toricdist;

namespace {

Polynomial P(const std::string& text, std::size_t nvars) {
  Polynomial p = parse_polynomial(text, VariableNames({"z0", "z1", "z2", "z3"}));
  Polynomial out(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponents ee(e.begin(), e.begin() + static_cast<long>(nvars));
    out.add_term(ee, c);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and print") {
  Polynomial p = parse_polynomial("3/2 * z1^2 z3 - z2", VariableNames::open());
  CHECK(p.nvars() == 3);
  CHECK(p.coefficient({2, 0, 1}) == Rational(3, 2));
  CHECK(p.coefficient({0, 1, 0}) == -1);
  CHECK(to_string(p, VariableNames({"z1", "z2", "z3"})) == "3/2 * z1^2 z3 - z2");
  CHECK(to_string(Polynomial(2), VariableNames::open()) == "0");

  VariableNames h({"z11", "z12", "z21", "z22"});
  Polynomial q = parse_polynomial("z_{1,2}^2 - 2*z_{2,2} z11", h);
  CHECK(q.coefficient({0, 2, 0, 0}) == 1);
  CHECK(q.coefficient({1, 0, 0, 1}) == -2);
  CHECK(parse_polynomial("(z1 + z2)^2", VariableNames({"z1", "z2"})) ==
        parse_polynomial("z1^2 + 2 z1 z2 + z2^2", VariableNames({"z1", "z2"})));
  CHECK_THROWS_AS(parse_polynomial("z1 +", VariableNames({"z1"})), Error);
  CHECK_THROWS_AS(parse_polynomial("w7", VariableNames({"z1"})), Error);
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937_64 rng(5);
  VariableNames names({"z11", "z12", "z21", "z22"});
  for (int i = 0; i < 200; ++i) {
    Polynomial p = oracle::random_polynomial(rng, 4, 1 + i % 6, 3);
    CHECK(parse_polynomial(to_string(p, names), names) == p);
  }
}

TEST_CASE("exact division") {
  auto q = exact_divide(P("z0^2 z1 - z0 z1^2", 2), P("z0 z1", 2));
  REQUIRE(q);
  CHECK(*q == P("z0 - z1", 2));
  CHECK_FALSE(exact_divide(P("z0^2 + z1", 2), P("z0", 2)));
  CHECK_THROWS_AS(exact_divide(P("z0", 2), Polynomial(2)), Error);

  std::mt19937_64 rng(7);
  Polynomial z12 = Polynomial::variable(4, 1);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = oracle::random_polynomial(rng, 4, 4, 3);
    Polynomial f = z12 * z12 * a;
    auto r = exact_divide(f, z12);
    REQUIRE(r);
    CHECK(*r == z12 * a);
    Polynomial g = oracle::random_polynomial(rng, 4, 3, 2);
    if (g.is_zero()) continue;
    auto back = exact_divide(a * g, g);
    REQUIRE(back);
    CHECK(*back == a);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("z0^2 - z1^2", 2), P("z0^2 + 2 z0 z1 + z1^2", 2)) == P("z0 + z1", 2));
  CHECK(gcd(P("z0", 2), P("z1", 2)) == P("1", 2));
  CHECK(gcd(Polynomial(2), Polynomial(2)).is_zero());
  CHECK(gcd(Polynomial(2), P("2 z0", 2)) == P("z0", 2));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    Polynomial common = oracle::random_polynomial(rng, 3, 2, 2);
    Polynomial a = oracle::random_polynomial(rng, 3, 3, 2);
    Polynomial b = oracle::random_polynomial(rng, 3, 3, 2);
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial g = gcd(common * a, common * b);
    CHECK(g.leading_coefficient() == 1);
    CHECK(exact_divide(common * a, g));
    CHECK(exact_divide(common * b, g));
    CHECK(exact_divide(g, common));
  }
}

TEST_CASE("calculus") {
  Polynomial p = P("z0^3 z1 - 4 z1^2", 2);
  CHECK(p.derivative(0) == P("3 z0^2 z1", 2));
  CHECK(p.derivative(1) == P("z0^3 - 8 z1", 2));
  CHECK(p.evaluate({2, Rational(1, 2)}) == Rational(3));
  CHECK(p.substitute({std::nullopt, Rational(1)}) == P("z0^3 - 4", 2));
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in(1) == 2);
  CHECK(P("z0 + z1", 2).pow(3) == P("z0^3 + 3 z0^2 z1 + 3 z0 z1^2 + z1^3", 2));
}
