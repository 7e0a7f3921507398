#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toricdist/chowring.hpp"
#include "toricdist/errors.hpp"

using namespace toricdist;

namespace {

ChowClass point(const ChowPresentation& p, const Rational& c) {
  for (std::size_t i = 0; i < p.basis().size(); ++i)
    if (p.basis()[i].codim == p.dimension()) return p.basis_class(i) * c;
  FAIL("no top-degree basis element");
  return {};
}

ErrorKind load_error(const std::string& text) {
  try {
    presentation_from_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("Hirzebruch products") {
  for (std::int64_t r = 0; r <= 4; ++r) {
    VarietySpec v = hirzebruch(r);
    auto p = family_presentation(v);
    ChowClass h1 = p->divisor({1, 0}), h2 = p->divisor({0, 1});
    CHECK(p->product(h1, h1).is_zero());
    CHECK(p->integrate(p->product(h1, h2)) == 1);
    CHECK(p->product(h2, h2) == point(*p, Rational(static_cast<long>(-r))));
    CHECK(p->product(p->one(), h2) == h2);
    // sum over pairs of the four variable classes
    CHECK(elementary_symmetric_class(*p, v, 2) == point(*p, 4));
    CHECK(p->integrate(oracle::chern_by_subsets(*p, v, 2)) == 4);
  }
}

TEST_CASE("integrals on the standard families") {
  VarietySpec mp = multiprojective({2, 2});
  auto p = family_presentation(mp);
  ChowClass h1 = p->divisor({1, 0}), h2 = p->divisor({0, 1});
  CHECK(p->integrate(p->product(power(*p, h1, 2), power(*p, h2, 2))) == 1);
  CHECK(power(*p, h1, 3).is_zero());

  VarietySpec dp = delpezzo6();
  auto q = family_presentation(dp);
  ChowClass H = q->basis_class(q->find("H"));
  ChowClass E1 = q->basis_class(q->find("E1"));
  ChowClass E2 = q->basis_class(q->find("E2"));
  CHECK(q->integrate(q->product(H, H)) == 1);
  CHECK(q->integrate(q->product(E1, E1)) == -1);
  CHECK(q->integrate(q->product(E1, E2)) == 0);
  CHECK(q->integrate(q->product(H, E1)) == 0);
  CHECK(elementary_symmetric_class(*q, dp, 1) == q->divisor({3, -1, -1, -1}));

  VarietySpec w = weighted({1, 1, 2});
  auto r = family_presentation(w);
  CHECK(r->integrate(power(*r, r->divisor({1}), 2)) == Rational(1, 2));
}

TEST_CASE("scroll relations and the top Chern number") {
  VarietySpec s = scroll({1, 2});
  auto p = family_presentation(s);
  ChowClass M = p->divisor({0, 1});
  CHECK(p->integrate(p->product(M, M)) == 3);

  for (int n = 2; n <= 5; ++n)
    for (std::int64_t base = 0; base <= 2; ++base) {
      std::vector<std::int64_t> a;
      for (int i = 0; i < n; ++i) a.push_back(base + i % 2);
      VarietySpec v = scroll(a);
      auto q = family_presentation(v);
      CHECK(q->integrate(elementary_symmetric_class(*q, v, n)) == 2 * n);
      CHECK(elementary_symmetric_class(*q, v, n) == oracle::chern_by_subsets(*q, v, n));
    }
}

TEST_CASE("random triples commute and associate") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<VarietySpec> vs = {hirzebruch(3), scroll({1, 2, 3}), delpezzo6(), multiprojective({1, 2}), weighted({1, 2, 3})};
  for (const auto& v : vs) {
    auto p = family_presentation(v);
    for (int t = 0; t < 30; ++t) {
      auto rand_divisor = [&] {
        Multidegree d(static_cast<std::size_t>(v.r));
        for (auto& x : d) x = c(rng);
        return p->divisor(d);
      };
      ChowClass a = rand_divisor(), b = rand_divisor();
      CHECK(p->product(a, b) == p->product(b, a));
      if (p->dimension() >= 3) {
        ChowClass e = rand_divisor();
        CHECK(p->product(p->product(a, b), e) == p->product(a, p->product(b, e)));
      }
    }
  }
}

TEST_CASE("products past the top codimension and bad indices") {
  auto p = family_presentation(hirzebruch(1));
  ChowClass pt = point(*p, 1);
  CHECK_THROWS_AS(p->product(pt, p->divisor({1, 0})), Error);
  CHECK_THROWS_AS(p->integrate(p->divisor({1, 0})), Error);
  CHECK_THROWS_AS(elementary_symmetric_class(*p, hirzebruch(1), 5), Error);
  CHECK_THROWS_AS(presentation_for(VarietySpec{}), Error);
}

TEST_CASE("table-driven presentations") {
  // H_1 spelled out by hand
  const std::string h1 = R"js({"id": "h1-table",
    "basis": [{"name": "1", "codim": 0}, {"name": "a", "codim": 1}, {"name": "b", "codim": 1}, {"name": "pt", "codim": 2}],
    "products": {"a*b": {"pt": 1}, "b*b": {"pt": -1}},
    "integrals": {"pt": "1"},
    "divisors": ["a", "b"]})js";
  auto p = presentation_from_json(h1);
  VarietySpec builtin = hirzebruch(1);
  auto q = family_presentation(builtin);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < 40; ++t) {
    Multidegree d{c(rng), c(rng)}, e{c(rng), c(rng)};
    CHECK(p->integrate(p->product(p->divisor(d), p->divisor(e))) == q->integrate(q->product(q->divisor(d), q->divisor(e))));
  }
  register_presentation(p);
  VarietySpec v = builtin;
  v.chow = "h1-table";
  CHECK(presentation_for(v)->id() == "h1-table");

  CHECK(load_error("{") == ErrorKind::InvalidPresentation);
  // no unit
  CHECK(load_error(R"js({"basis": [{"name": "a", "codim": 1}], "integrals": {"a": 1}})js") == ErrorKind::InvalidPresentation);
  // top element without an integral
  CHECK(load_error(R"js({"basis": [{"name": "1", "codim": 0}, {"name": "a", "codim": 1}], "integrals": {}})js") ==
        ErrorKind::InvalidPresentation);
  // a*b and b*a disagree
  CHECK(load_error(R"js({"basis": [{"name": "1", "codim": 0}, {"name": "a", "codim": 1}, {"name": "b", "codim": 1},
      {"name": "pt", "codim": 2}], "products": {"a*b": {"pt": 1}, "b*a": {"pt": 2}}, "integrals": {"pt": 1}})js") ==
        ErrorKind::InvalidPresentation);
  // (a*a)*b != a*(a*b) in dimension 3
  CHECK(load_error(R"js({"basis": [{"name": "1", "codim": 0}, {"name": "a", "codim": 1}, {"name": "b", "codim": 1},
      {"name": "aa", "codim": 2}, {"name": "pt", "codim": 3}],
      "products": {"a*a": {"aa": 1}, "aa*b": {"pt": 1}, "a*b": {}, "aa*a": {"pt": 1}},
      "integrals": {"pt": 1}})js") == ErrorKind::InvalidPresentation);
}
