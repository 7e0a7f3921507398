#include <functional>
#include <random>

#include "doctest.h"
#include "toricdist/classgroup.hpp"
#include "toricdist/errors.hpp"

using namespace toricdist;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

bool rows_are_relations(const VarietySpec& v, const RaySpec& rays) {
  for (const auto& row : degree_matrix(v))
    for (int j = 0; j < rays.n; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < rays.rays.size(); ++i) s += row[i] * rays.rays[i][static_cast<std::size_t>(j)];
      if (s != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("projective plane from its fan") {
  RaySpec rays{2, {{1, 0}, {0, 1}, {-1, -1}}};
  VarietySpec v = class_group_from_rays(rays);
  CHECK(v.r == 1);
  CHECK(v.degrees == std::vector<Multidegree>{{1}, {1}, {1}});
}

TEST_CASE("weighted plane from its fan") {
  // a1 (1,0) + a2 (0,1) + a3 (-1,-2) = 0 forces a = t (1,2,1)
  RaySpec rays{2, {{1, 0}, {0, 1}, {-1, -2}}};
  VarietySpec v = class_group_from_rays(rays);
  CHECK(v.degrees == std::vector<Multidegree>{{1}, {2}, {1}});
  CHECK(rows_are_relations(v, rays));
}

TEST_CASE("Hirzebruch fan agrees with the family grading") {
  for (std::int64_t r = 0; r <= 5; ++r) {
    RaySpec rays{2, {{-1, r}, {0, 1}, {1, 0}, {0, -1}}};
    VarietySpec from_rays = class_group_from_rays(rays);
    CHECK(rows_are_relations(from_rays, rays));
    CHECK(canonical_degree_matrix(from_rays) == canonical_degree_matrix(hirzebruch(r)));
  }
  // r = 2: relations (1,0,1,2) and (0,1,0,1), already reduced
  VarietySpec v = class_group_from_rays({2, {{-1, 2}, {0, 1}, {1, 0}, {0, -1}}});
  CHECK(v.degrees == std::vector<Multidegree>{{1, 0}, {0, 1}, {1, 0}, {2, 1}});
}

TEST_CASE("torsion and degenerate fans are refused") {
  // 2x2 minors of the ray matrix have gcd 3
  CHECK(kind_of([] { class_group_from_rays({2, {{1, 0}, {1, 3}, {-2, -3}}}); }) == ErrorKind::TorsionClassGroup);
  CHECK(kind_of([] { class_group_from_rays({2, {{1, 0}, {2, 0}, {-1, 0}}}); }) == ErrorKind::RaysDoNotSpan);
  CHECK(kind_of([] { class_group_from_rays({2, {{1, 0}, {0, 1}}}); }) == ErrorKind::RaysDoNotSpan);
  CHECK(kind_of([] { class_group_from_rays({2, {{1, 0}, {0, 0}, {-1, -1}}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("random fans: rows are relations and canonical form is idempotent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), extra(1, 3);
  int accepted = 0;
  for (int trial = 0; trial < 400 && accepted < 60; ++trial) {
    int n = 2 + trial % 2;
    RaySpec rays{n, {}};
    int k = n + extra(rng);
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> ray(static_cast<std::size_t>(n));
      for (auto& x : ray) x = entry(rng);
      rays.rays.push_back(ray);
    }
    VarietySpec v;
    try {
      v = class_group_from_rays(rays);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    CHECK(v.r == k - n);
    CHECK(rows_are_relations(v, rays));
    auto canon = canonical_degree_matrix(v);
    VarietySpec again = v;
    for (std::size_t j = 0; j < v.k(); ++j)
      for (std::size_t i = 0; i < canon.size(); ++i) again.degrees[j][i] = canon[i][j];
    CHECK(canonical_degree_matrix(again) == canon);
    CHECK(canon == degree_matrix(v));
  }
  CHECK(accepted >= 30);
}

TEST_CASE("family gradings") {
  CHECK(projective(2).degrees == std::vector<Multidegree>{{1}, {1}, {1}});
  CHECK(weighted({1, 1, 2}).orbifold->cover_total == 2);
  CHECK(multiprojective({2, 1}).degrees == std::vector<Multidegree>{{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}});
  CHECK(hirzebruch(3).degrees == std::vector<Multidegree>{{1, 0}, {0, 1}, {1, 0}, {3, 1}});
  CHECK(scroll({1, 2}).degrees == std::vector<Multidegree>{{1, 0}, {1, 0}, {-1, 1}, {-2, 1}});
  VarietySpec dp = delpezzo6();
  CHECK(dp.r == 4);
  // x = L1 = H - E2 - E3 and t = E1
  CHECK(dp.degrees[0] == Multidegree{1, 0, -1, -1});
  CHECK(dp.degrees[4] == Multidegree{0, 1, 0, 0});
  CHECK(dp.variable_names == std::vector<std::string>{"x", "y", "z", "s", "t", "u"});

  CHECK(kind_of([] { weighted({2, 4, 6}); }) == ErrorKind::InvalidWeights);
  CHECK(kind_of([] { weighted({1, 2, 4}, true); }) == ErrorKind::InvalidWeights);
  CHECK(kind_of([] { weighted({0, 1}); }) == ErrorKind::InvalidWeights);
  CHECK(kind_of([] { hirzebruch(-1); }) == ErrorKind::NegativeHirzebruchParameter);
}

TEST_CASE("radial fields are the rows of the grading") {
  CHECK(radial_fields(weighted({1, 1, 3}))[0].weights == std::vector<std::int64_t>{1, 1, 3});
  auto s = radial_fields(scroll({1, 2, 3}));
  CHECK(s[0].weights == std::vector<std::int64_t>{1, 1, -1, -2, -3});
  CHECK(s[1].weights == std::vector<std::int64_t>{0, 0, 1, 1, 1});
  auto h = radial_fields(hirzebruch(4));
  CHECK(h[0].weights == std::vector<std::int64_t>{1, 0, 1, 4});
  CHECK(h[1].weights == std::vector<std::int64_t>{0, 1, 0, 1});
}

TEST_CASE("family ids round-trip") {
  for (std::string id : {"projective(3)", "weighted(1,2,3)", "multiprojective(2,1,1)", "hirzebruch(0)", "scroll(1,1,1)", "delpezzo6"}) {
    CHECK(parse_family(id).id() == id);
    CHECK(make_family(parse_family(id)).name == id);
  }
  CHECK(parse_family("scroll", "[1,2,3]").id() == "scroll(1,2,3)");
}

TEST_CASE("del Pezzo degree tuples") {
  VarietySpec dp = delpezzo6();
  // 3H - E1 - E2 - E3 in both conventions
  CHECK(tuple_to_class(dp, {3, 1, 1, 1}) == Multidegree{3, -1, -1, -1});
  CHECK(tuple_to_class(dp, {2, 1, 0, 0}) == Multidegree{2, 0, -1, 0});
  CHECK(class_to_tuple(dp, tuple_to_class(dp, {5, -2, 3, 7})) == std::vector<std::int64_t>{5, -2, 3, 7});
}

TEST_CASE("irrelevant sets") {
  VarietySpec h = hirzebruch(1);
  CHECK(in_irrelevant_set(h, {0, 1, 0, 1}));
  CHECK_FALSE(in_irrelevant_set(h, {1, 1, 0, 0}));
  VarietySpec dp = delpezzo6();
  CHECK(in_irrelevant_set(dp, {0, 1, 1, 1, 0, 1}));
  CHECK_FALSE(in_irrelevant_set(dp, {0, 1, 1, 1, 1, 1}));
}
