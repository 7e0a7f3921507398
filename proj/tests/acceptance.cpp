// Acceptance suite: one line per criterion. All comparisons are exact
// rational equalities; the only numeric thresholds are the sample sizes and
// boxes listed with each criterion.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "toricdist/chowring.hpp"
#include "toricdist/classify.hpp"
#include "toricdist/counting.hpp"
#include "toricdist/errors.hpp"
#include "toricdist/forms.hpp"
#include "toricdist/gradedring.hpp"

using namespace toricdist;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kRandomDegrees = 100;
constexpr int kRandomWeightTuples = 20;
constexpr int kRandomAlphas = 50;
constexpr int kRandomPolynomials = 100;
constexpr int kRandomForms = 100;
constexpr std::int64_t kMultiprojectiveBox = 50;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (note.find(what) != std::string::npos || ++notes > 3) return;
    note += (note.empty() ? "" : "; ") + what;
  }
  int notes = 0;
};

std::string degrees_text(const std::vector<Multidegree>& ds) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << (i ? ", " : "") << "(";
    for (std::size_t j = 0; j < ds[i].size(); ++j) out << (j ? "," : "") << ds[i][j];
    out << ")";
  }
  out << "}";
  return out.str();
}

OneForm parse_form(const VarietySpec& v, const std::string& text) { return parse_one_form(text, variable_names(v)); }

std::string example_one_text(std::int64_t m) {
  std::string ms = std::to_string(m), m1 = std::to_string(m - 1);
  return ms + " z2 z0^" + m1 + " dz0 + " + ms + " z2 z1^" + m1 + " dz1 - (z0^" + ms + " + z1^" + ms + ") dz2";
}

Outcome weighted_example_one() {
  Outcome o;
  for (std::int64_t m = 2; m <= 10; ++m) {
    VarietySpec v = weighted({1, 1, m});
    OneForm w = parse_form(v, example_one_text(m));
    std::string tag = "m=" + std::to_string(m) + ": ";
    o.require(validate_distribution(v, w, {2 * m}).valid, tag + "form is not a distribution of degree 2m");
    o.require(is_singular_at(v, w, {0, 0, 1}).singular, tag + "[0:0:1] is not singular");
    // chart {z2 = 1} with isotropy of order m
    Rational at_vertex = monomial_local_index(as_monomial_chart(affine_chart(w, 2), Integer(static_cast<long>(m))));
    o.require(at_vertex == Rational((m - 1) * (m - 1)) / Rational(m), tag + "vertex index");
    // chart {z0 = 1}: the m zeros z1^m = -1, z2 = 0
    Polynomial g = parse_polynomial("z1^" + std::to_string(m) + " + 1", VariableNames({"z1", "z2"}));
    Rational orbit = nondegenerate_orbit_index_sum(affine_chart(w, 0), 0, {std::nullopt, Rational(0)}, g, 1);
    o.require(orbit == Rational(m), tag + "orbit index sum");
    Rational total = at_vertex + orbit;
    o.require(total == count_closed_form(v, {2 * m}).count, tag + "index sum differs from the closed form");
    o.require(total == Rational(2 * m * m - 2 * m + 1) / Rational(m), tag + "index sum differs from m + (m-1)^2/m");
  }
  return o;
}

bool pairwise_coprime(const std::vector<std::int64_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (std::gcd(w[i], w[j]) != 1) return false;
  return true;
}

Outcome weighted_example_two() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::int64_t> small(1, 9), exponent(2, 6), last(1, 4);
  int done = 0;
  while (done < kRandomWeightTuples) {
    std::int64_t w0 = small(rng), w1 = small(rng), w3 = last(rng), m = exponent(rng);
    std::int64_t d = w0 + w1, w2 = d - m * w3;
    if (w2 < 1) continue;
    std::vector<std::int64_t> w{w0, w1, w2, w3};
    if (!pairwise_coprime(w)) continue;
    ++done;
    VarietySpec v = weighted(w);
    std::ostringstream text;
    text << "-" << w1 << " z1 dz0 + " << w0 << " z0 dz1 - " << w3 << " z3^" << m << " dz2 + " << w2 << " z2 z3^" << m - 1 << " dz3";
    OneForm form = parse_form(v, text.str());
    std::string tag = "w=(" + std::to_string(w0) + "," + std::to_string(w1) + "," + std::to_string(w2) + "," + std::to_string(w3) +
                      ") m=" + std::to_string(m) + ": ";
    o.require(validate_distribution(v, form, {d}).valid, tag + "form is not a distribution");
    o.require(is_singular_at(v, form, {0, 0, 1, 0}).singular, tag + "[0:0:1:0] is not singular");
    Rational index = monomial_local_index(as_monomial_chart(affine_chart(form, 2), Integer(static_cast<long>(w2))));
    std::int64_t k = w2 + w3;
    Rational global = Rational(w0 * w1 * (d - k)) / Rational(w0 * w1 * w2 * w3);
    o.require(index == Rational(m - 1) / Rational(w2), tag + "index is not (m-1)/w2");
    o.require(index == global, tag + "index differs from the global formula");
    o.require(index == count_general(v, {d}).count, tag + "index differs from the Chow count");
  }
  return o;
}

Outcome hirzebruch_classification() {
  Outcome o;
  for (std::int64_t r = 0; r <= 5; ++r) {
    VarietySpec h = hirzebruch(r);
    VariableNames names = variable_names(h);
    ClassificationResult res = classify_regular(h);
    std::vector<Multidegree> expected = r == 0 ? std::vector<Multidegree>{{0, 2}, {2, 0}} : std::vector<Multidegree>{{2, 0}};
    o.require(res.regular_degrees() == expected, "r=" + std::to_string(r) + ": regular degrees " + degrees_text(res.regular_degrees()));
    for (const auto& c : res.candidates) {
      if (c.status != CandidateStatus::Regular) continue;
      std::string printed = c.normal_form ? to_string(*c.normal_form, names) : "";
      if (c.degree == Multidegree{2, 0}) o.require(printed == "z21 dz11 - z11 dz21", "r=" + std::to_string(r) + ": normal form " + printed);
      if (c.degree == Multidegree{0, 2}) o.require(printed == "z22 dz12 - z12 dz22", "r=0: normal form " + printed);
    }
  }
  for (std::int64_t r = 0; r <= 10; ++r)
    o.require(!unique_singularity_check(r), "unique singularity possible for r=" + std::to_string(r));
  return o;
}

Outcome scroll_classification() {
  Outcome o;
  for (auto a : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {1, 2, 3}, {2, 2, 2, 2}}) {
    VarietySpec s = scroll(a);
    ClassificationResult res = classify_regular(s);
    o.require(res.regular_degrees() == std::vector<Multidegree>{{2, 0}}, s.name + ": regular degrees " + degrees_text(res.regular_degrees()));
    for (const auto& c : res.candidates)
      if (c.degree == Multidegree{2, 0})
        o.require(c.normal_form && to_string(*c.normal_form, variable_names(s)) == "z12 dz11 - z11 dz12", s.name + ": normal form");
  }
  for (int n = 2; n <= 5; ++n)
    for (std::int64_t base = 0; base <= 3; ++base) {
      std::vector<std::int64_t> a;
      for (int i = 0; i < n; ++i) a.push_back(base + i);
      VarietySpec v = scroll(a);
      auto p = family_presentation(v);
      o.require(p->integrate(elementary_symmetric_class(*p, v, n)) == 2 * n, v.name + ": C_n != 2n");
    }
  return o;
}

Outcome multiprojective_checks() {
  Outcome o;
  VarietySpec v = multiprojective({2, 2});
  auto poly = [](std::int64_t a, std::int64_t b) {
    return 2 * a * a * b * b - 3 * a * b * b - 3 * a * a * b + b * b + 6 * a * b + a * a - 3 * b - 3 * a + 3;
  };
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<std::int64_t> deg(-1000, 1000);
  for (int t = 0; t < kRandomDegrees; ++t) {
    std::int64_t a = deg(rng), b = deg(rng);
    Rational c = count_general(v, {a, b}).count;
    o.require(c == poly(a, b), "P2xP2 count differs from the expanded polynomial (ratio " + to_string(c / Rational(poly(a, b))) + ")");
  }
  for (std::int64_t a = -kMultiprojectiveBox; a <= kMultiprojectiveBox; ++a)
    for (std::int64_t b = -kMultiprojectiveBox; b <= kMultiprojectiveBox; ++b)
      if (poly(a, b) == 0) o.require(false, "P2xP2 count vanishes in the box");
  ClassificationResult p2p2 = classify_regular(v, {kMultiprojectiveBox, kDefaultEnumerationCap});
  o.require(p2p2.box_verified && p2p2.candidates.empty(), "P2xP2 classification is not box-verified empty");
  ClassificationResult p2p1 = classify_regular(multiprojective({2, 1}), {kMultiprojectiveBox, kDefaultEnumerationCap});
  o.require(p2p1.regular_degrees() == std::vector<Multidegree>{{0, 2}}, "P2xP1 regular degrees " + degrees_text(p2p1.regular_degrees()));
  return o;
}

Outcome del_pezzo_count() {
  Outcome o;
  VarietySpec dp = delpezzo6();
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<std::int64_t> deg(-1000, 1000);
  for (int t = 0; t < kRandomDegrees; ++t) {
    std::int64_t d0 = deg(rng), d1 = deg(rng), d2 = deg(rng), d3 = deg(rng);
    std::int64_t expected = d0 * (d0 - 3) + d1 * (1 - d1) + d2 * (1 - d2) + d3 * (1 - d3) + 6;
    o.require(count_general(dp, tuple_to_class(dp, {d0, d1, d2, d3})).count == expected, "del Pezzo count mismatch");
  }
  return o;
}

std::vector<VarietySpec> count_families() {
  return {projective(2),     projective(3),          weighted({1, 1, 2}), weighted({1, 2, 3}), weighted({2, 3, 5, 7}),
          multiprojective({1, 1}), multiprojective({2, 1}), multiprojective({2, 2}), multiprojective({1, 1, 1}), hirzebruch(0),
          hirzebruch(1),     hirzebruch(4),          scroll({1, 2}),      scroll({1, 1, 1}),   scroll({1, 2, 3}),
          scroll({0, 1, 1, 2}), delpezzo6()};
}

Outcome cross_method() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<std::int64_t> deg(-60, 60);
  for (const auto& v : count_families()) {
    for (int t = 0; t < kRandomDegrees; ++t) {
      Multidegree d(static_cast<std::size_t>(v.r));
      for (auto& x : d) x = deg(rng);
      Rational general = count_general(v, d).count;
      o.require(general == count_closed_form(v, d).count, v.name + ": general and closed form differ");
      if (v.orbifold) o.require(general == count_cover(v, d).count, v.name + ": general and cover differ");
    }
  }
  return o;
}

Outcome darboux() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (std::int64_t d = 0; d <= 5; ++d)
      o.require(darboux_bound(projective(n), {d + 2}) == binomial(n + d, n) * binomial(n + 1, 2) + 2,
                "P" + std::to_string(n) + " d=" + std::to_string(d));
  return o;
}

Outcome graded_ring_suite() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 9);
  std::vector<VarietySpec> closed = {projective(3), weighted({1, 2, 3}), weighted({1, 1, 2, 5}), multiprojective({2, 1}),
                                     multiprojective({1, 1, 1}), scroll({1, 2}), scroll({1, 1, 1}), scroll({0, 1, 3})};
  std::uniform_int_distribution<std::int64_t> deg(-3, 9);
  for (const auto& v : closed)
    for (int t = 0; t < kRandomAlphas; ++t) {
      Multidegree a(static_cast<std::size_t>(v.r));
      for (auto& x : a) x = deg(rng);
      o.require(Integer(static_cast<long>(graded_piece_basis(v, a).size())) == closed_form_dim(v, a), v.name + ": enumeration and closed form differ");
    }

  std::vector<std::pair<VarietySpec, Multidegree>> pieces = {{hirzebruch(2), {3, 2}}, {scroll({1, 2, 3}), {1, 2}}, {delpezzo6(), {3, -1, -1, -1}},
                                                             {weighted({1, 2, 3}), {7}}, {multiprojective({1, 2}), {2, 3}}};
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int t = 0; t < kRandomPolynomials; ++t) {
    const auto& [v, alpha] = pieces[static_cast<std::size_t>(t) % pieces.size()];
    auto basis = graded_piece_basis(v, alpha);
    Polynomial f(v.k());
    for (const auto& m : basis) f.add_term(m, Rational(coeff(rng)));
    if (f.is_zero()) f.add_term(basis.front(), 1);
    std::vector<Rational> expected(alpha.begin(), alpha.end());
    o.require(euler_formula_check(v, f) == expected, v.name + ": Euler formula");
  }

  std::vector<std::pair<VarietySpec, Multidegree>> forms = {{hirzebruch(1), {2, 2}}, {scroll({1, 2}), {1, 2}}, {projective(3), {3}},
                                                            {weighted({1, 1, 2}), {4}}, {delpezzo6(), {4, -1, -1, -1}}};
  for (int t = 0; t < kRandomForms; ++t) {
    const auto& [v, d] = forms[static_cast<std::size_t>(t) % forms.size()];
    auto basis = form_space_basis(v, d);
    if (basis.empty()) {
      o.require(false, v.name + ": empty form space");
      continue;
    }
    OneForm w = OneForm::zero(v.k());
    for (const auto& b : basis) w += Rational(coeff(rng)) * b;
    if (w.is_zero()) w = basis.front();
    LieIdentityResult res = lie_identity_check(v, w, d);
    o.require(res.holds, v.name + ": Lie identity");
    for (std::size_t k = 0; k < d.size(); ++k) o.require(res.theta[k] && *res.theta[k] == Rational(d[k]), v.name + ": theta");
  }
  return o;
}

Outcome form_space_reproductions() {
  Outcome o;
  for (std::int64_t r = 1; r <= 5; ++r) {
    VarietySpec h = hirzebruch(r);
    auto basis = form_space_basis(h, {r, 2});
    o.require(basis.size() == static_cast<std::size_t>(r - 1), "H_" + std::to_string(r) + ": dimension");
    Polynomial square = parse_polynomial("z12^2", variable_names(h));
    for (const auto& w : basis) {
      o.require(w.coefficients[1].is_zero() && w.coefficients[3].is_zero(), "H_" + std::to_string(r) + ": dz12 or dz22 term");
      o.require(exact_divide(w.coefficients[0], square).has_value() && exact_divide(w.coefficients[2], square).has_value(),
                "H_" + std::to_string(r) + ": not divisible by z12^2");
    }
  }
  for (int n = 2; n <= 5; ++n)
    for (std::int64_t base = 0; base <= 2; ++base) {
      std::vector<std::int64_t> a;
      for (int i = 0; i < n; ++i) a.push_back(base + i % 2);
      VarietySpec s = scroll(a);
      auto basis = form_space_basis(s, {2, 0});
      o.require(basis.size() == 1, s.name + ": dimension in degree (2,0)");
      if (basis.size() == 1) o.require(basis[0] == parse_form(s, "z12 dz11 - z11 dz12"), s.name + ": spanning form");
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"1 weighted P(1,1,m): index sum equals the closed form, m=2..10", weighted_example_one},
      {"2 weighted example (ii): local index equals the global count, 20 weight tuples", weighted_example_two},
      {"3 Hirzebruch classification r=0..5, no unique singularity r=0..10", hirzebruch_classification},
      {"4 scroll classification and C_n = 2n", scroll_classification},
      {"5 P2xP2 count polynomial, box |d|<=50, P2xP1 classification", multiprojective_checks},
      {"6 del Pezzo count formula", del_pezzo_count},
      {"7 general, closed-form and cover counts agree", cross_method},
      {"8 Darboux bound on P^n", darboux},
      {"9 graded-ring, Euler and Lie identity properties", graded_ring_suite},
      {"10 form-space dimensions and divisibility", form_space_reproductions},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.pass = false;
      o.note = std::string(kind_name(e.kind())) + ": " + e.detail();
    }
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.pass ? "" : " -- ", o.note.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
