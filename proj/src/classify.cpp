#include "toricdist/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "toricdist/chowring.hpp"
#include "toricdist/counting.hpp"
#include "toricdist/errors.hpp"
#include "toricdist/linalg.hpp"

namespace toricdist {

namespace {

Integer Z(std::int64_t x) { return Integer(static_cast<long>(x)); }

Integer ipow(const Integer& b, std::int64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::vector<std::int64_t> positive_divisors(std::int64_t n) {
  n = n < 0 ? -n : n;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> signed_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto d : positive_divisors(n)) {
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Nonzero integer roots of a monic integer polynomial (ascending coefficients).
std::vector<std::int64_t> nonzero_integer_roots(UnivariatePolynomial p) {
  while (!p.empty() && p.front() == 0) p.erase(p.begin());
  std::vector<std::int64_t> out;
  if (p.size() <= 1) return out;
  for (auto c : signed_divisors(to_int64(p.front())))
    if (evaluate(p, Z(c)) == 0) out.push_back(c);
  return out;
}


}  // namespace

const char* status_name(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::Regular: return "regular";
    case CandidateStatus::Eliminated: return "eliminated";
    case CandidateStatus::Unresolved: return "unresolved";
  }
  return "unknown";
}

std::vector<Multidegree> ClassificationResult::regular_degrees() const {
  std::vector<Multidegree> out;
  for (const auto& c : candidates)
    if (c.status == CandidateStatus::Regular) out.push_back(c.degree);
  std::sort(out.begin(), out.end());
  return out;
}

bool gcd_obstruction(const VarietySpec& v, const Multidegree& d) {
  auto p = presentation_for(v);
  if (d.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree has wrong length");
  ChowClass top = elementary_symmetric_class(*p, v, p->dimension());
  std::size_t point = p->basis().size();
  for (std::size_t i = 0; i < p->basis().size(); ++i)
    if (p->basis()[i].codim == p->dimension()) {
      if (point != p->basis().size()) throw Error(ErrorKind::UnsupportedFamily, "top degree is not spanned by a single class");
      point = i;
    }
  auto it = top.coefficients.find(point);
  Rational c = it == top.coefficients.end() ? Rational(0) : it->second;
  if (!is_integer(c)) throw Error(ErrorKind::UnsupportedFamily, "C_n is not an integer multiple of the point class");
  Integer g = 0;
  for (auto x : d) g = gcd(g, Z(x));
  Integer cn = c.get_num();
  if (g == 0) return cn != 0;
  return cn % g != 0;
}

std::vector<Multidegree> hirzebruch_product_solutions(std::int64_t r, std::int64_t target) {
  std::vector<Multidegree> out;
  if (target == 0) throw Error(ErrorKind::InvalidInput, "target must be nonzero for a finite solution set");
  for (auto e : signed_divisors(target)) {
    std::int64_t d2 = 1 + e;
    std::int64_t twice = r * d2 - target / e;  // 2(d1 - 1)
    if (twice % 2 != 0) continue;
    out.push_back({twice / 2 + 1, d2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RegularityEquation hirzebruch_equation(const VarietySpec& v) {
  RegularityEquation eq;
  eq.variety = v.name;
  eq.equation = "(d2-1)(r d2 - 2(d1-1)) = 2";
  eq.solutions = hirzebruch_product_solutions(v.family.params[0], 2);
  return eq;
}

RegularityEquation scroll_equation(const VarietySpec& v) {
  RegularityEquation eq;
  eq.variety = v.name;
  eq.equation = "(d2-1)((n d1 + |a| d2)(d2-1)^(n-2) - 2 Q(d2)) = 2(-1)^(n+1)";
  int n = v.n;
  Integer twist = 0;
  for (auto a : v.family.params) twist += Z(a);
  UnivariatePolynomial q = scroll_q_polynomial(n);
  std::int64_t rhs = n % 2 == 1 ? 2 : -2;
  for (auto e : signed_divisors(rhs)) {
    Integer d2 = Z(1 + e);
    Integer target = Z(rhs / e);
    Integer slope = Z(n) * ipow(d2 - 1, n - 2);
    Integer offset = twist * d2 * ipow(d2 - 1, n - 2) - 2 * evaluate(q, d2);
    Integer numer = target - offset;
    if (slope == 0) {
      if (numer == 0) throw Error(ErrorKind::InvalidInput, "degenerate scroll equation");
      continue;
    }
    if (numer % slope != 0) continue;
    eq.solutions.push_back({to_int64(Integer(numer / slope)), to_int64(d2)});
  }
  std::sort(eq.solutions.begin(), eq.solutions.end());
  return eq;
}

RegularityEquation weighted_equation(const VarietySpec& v) {
  std::vector<std::int64_t> w;
  for (const auto& d : v.degrees) w.push_back(d[0]);
  RegularityEquation eq = cover_regularity_equation(w, v.n);
  eq.variety = v.name;
  eq.equation = "sum_j (-1)^j C_j(w) d^(n-j) = 0";
  return eq;
}

// Coefficient table of the multiprojective count as a polynomial in d.
struct CountPolynomial {
  std::vector<std::vector<int>> exponents;
  std::vector<__int128> coefficients;

  __int128 operator()(const Multidegree& d) const {
    __int128 total = 0;
    for (std::size_t t = 0; t < exponents.size(); ++t) {
      __int128 term = coefficients[t];
      for (std::size_t i = 0; i < d.size(); ++i)
        for (int e = 0; e < exponents[t][i]; ++e) term *= d[i];
      total += term;
    }
    return total;
  }
};

CountPolynomial multiprojective_count_polynomial(const std::vector<std::int64_t>& dims) {
  CountPolynomial poly;
  std::int64_t total_dim = 0;
  for (auto x : dims) total_dim += x;
  std::vector<int> k(dims.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == dims.size()) {
      int sum = 0;
      Integer c = multinomial(k);
      for (std::size_t t = 0; t < dims.size(); ++t) {
        sum += k[t];
        c *= binomial(dims[t] + 1, dims[t] - k[t]);
      }
      if ((total_dim + sum) % 2) c = -c;
      poly.exponents.push_back(k);
      poly.coefficients.push_back(to_int64(c));
      return;
    }
    for (int x = 0; x <= dims[i]; ++x) {
      k[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return poly;
}

RegularityEquation multiprojective_equation(const VarietySpec& v, std::int64_t box) {
  RegularityEquation eq;
  eq.variety = v.name;
  eq.equation = "count(d) = 0";
  eq.exact = false;
  eq.box = box;
  CountPolynomial poly = multiprojective_count_polynomial(v.family.params);
  std::size_t r = v.family.params.size();
  Multidegree d(r, -box);
  while (true) {
    if (poly(d) == 0) eq.solutions.push_back(d);
    std::size_t i = 0;
    while (i < r && d[i] == box) d[i++] = -box;
    if (i == r) break;
    ++d[i];
  }
  std::sort(eq.solutions.begin(), eq.solutions.end());
  return eq;
}

}  // namespace

RegularityEquation cover_regularity_equation(const std::vector<std::int64_t>& m, int n) {
  if (n < 1 || n > static_cast<int>(m.size())) throw Error(ErrorKind::InvalidInput, "dimension out of range for the cover");
  UnivariatePolynomial p(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) p[static_cast<std::size_t>(n - j)] = (j % 2 ? -1 : 1) * elementary_symmetric(m, j);
  RegularityEquation eq;
  eq.variety = "cover";
  eq.equation = "sum_j (-1)^j C_j(m) k^(n-j) = 0";
  for (auto k : nonzero_integer_roots(p)) eq.solutions.push_back({k});
  return eq;
}

RegularityEquation regularity_equation(const VarietySpec& v, std::int64_t box) {
  switch (v.family.kind) {
    case FamilyKind::Hirzebruch: return hirzebruch_equation(v);
    case FamilyKind::Scroll: return scroll_equation(v);
    case FamilyKind::Projective:
    case FamilyKind::Weighted: return weighted_equation(v);
    case FamilyKind::Multiprojective: return multiprojective_equation(v, box);
    default: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no regularity equation for " + v.name);
}

namespace {

// Zero set of a form with linear coefficients is a linear subspace; checks
// that it lies inside one coordinate subspace of the irrelevant set.
bool linear_zero_set_irrelevant(const VarietySpec& v, const OneForm& w) {
  if (!v.irrelevant_set) return false;
  std::size_t k = v.k();
  RationalMatrix m(k, std::vector<Rational>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& [e, c] : w.coefficients[i].terms()) {
      if (total_degree(e) != 1) return false;
      for (std::size_t j = 0; j < k; ++j)
        if (e[j] == 1) m[i][j] = c;
    }
  auto kernel = nullspace(m, k);
  for (const auto& sub : *v.irrelevant_set) {
    bool inside = true;
    for (const auto& vec : kernel)
      for (auto i : sub) inside = inside && vec[i] == 0;
    if (inside) return true;
  }
  return false;
}

// Members tried when certifying regularity: small fixed combinations first,
// then seeded random ones.
OneForm trial_member(const std::vector<OneForm>& basis, int attempt, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  OneForm w = OneForm::zero(basis.front().nvars());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int c = 0;
    if (attempt == 0) c = 1;
    else if (attempt == 1) c = static_cast<int>(i) + 1;
    else
      while (c == 0) c = coeff(rng);
    w += Rational(c) * basis[i];
  }
  return normalize_form(w);
}

Polynomial content(const OneForm& w) {
  Polynomial g(w.nvars());
  for (const auto& p : w.coefficients) g = gcd(g, p);
  return g;
}

// w / content(w), normalized; nothing for the zero form.
std::optional<OneForm> primitive_part(const OneForm& w) {
  Polynomial g = content(w);
  if (g.is_zero()) return std::nullopt;
  OneForm out = OneForm::zero(w.nvars());
  for (std::size_t i = 0; i < w.nvars(); ++i) out.coefficients[i] = *exact_divide(w.coefficients[i], g);
  return normalize_form(out);
}

std::optional<OneForm> common_primitive_form(const std::vector<OneForm>& basis) {
  auto first = primitive_part(basis.front());
  if (!first) return std::nullopt;
  for (const auto& b : basis) {
    if (content(b).is_constant()) return std::nullopt;
    auto p = primitive_part(b);
    if (!p || !(*p == *first)) return std::nullopt;
  }
  return first;
}

}  // namespace

Candidate analyze_candidate(const VarietySpec& v, const Multidegree& d, std::size_t cap) {
  Candidate cand;
  cand.degree = d;
  VariableNames names = variable_names(v);
  std::vector<OneForm> basis = form_space_basis(v, d, cap);
  cand.form_space_dimension = basis.size();
  if (basis.empty()) {
    cand.status = CandidateStatus::Eliminated;
    cand.reason = "form space is empty";
    return cand;
  }

  Polynomial common(v.k());
  for (const auto& b : basis)
    for (const auto& p : b.coefficients) common = gcd(common, p);
  if (!common.is_constant()) {
    cand.status = CandidateStatus::Eliminated;
    cand.reason = "every form is divisible by " + to_string(common, names);
    return cand;
  }

  // Every form g * w0 for one primitive w0 and g in a space of nonconstant
  // polynomials: each member vanishes on {g = 0}.
  if (auto shared = common_primitive_form(basis)) {
    cand.status = CandidateStatus::Eliminated;
    cand.reason = "every form is a polynomial multiple of " + to_string(*shared, names);
    return cand;
  }

  if (v.k() <= 12) {
    std::size_t k = v.k();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Rational> p(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) p[i] = 1;
      if (in_irrelevant_set(v, p)) continue;
      bool all_vanish = std::all_of(basis.begin(), basis.end(), [&](const OneForm& w) {
        return std::all_of(w.coefficients.begin(), w.coefficients.end(), [&](const Polynomial& c) { return c.evaluate(p) == 0; });
      });
      if (all_vanish) {
        cand.status = CandidateStatus::Eliminated;
        std::string pt;
        for (std::size_t i = 0; i < k; ++i) pt += (i ? ":" : "") + to_string(p[i]);
        cand.reason = "every form vanishes at [" + pt + "]";
        return cand;
      }
    }
  }

  auto certify = [&](const OneForm& w) {
    if (!linear_zero_set_irrelevant(v, w)) return false;
    cand.status = CandidateStatus::Regular;
    cand.normal_form = w;
    cand.reason = "zero set of the normal form lies in the irrelevant set";
    return true;
  };
  if (basis.size() == 1 && certify(basis.front())) return cand;
  auto linear = form_space_basis(v, d, cap, [](const Exponents& e) { return total_degree(e) == 1; });
  if (!linear.empty()) {
    if (linear.size() == 1 && certify(linear.front())) return cand;
    std::mt19937_64 rng(0x5eedULL);
    for (int attempt = 0; attempt < 6; ++attempt)
      if (certify(trial_member(linear, attempt, rng))) return cand;
  }
  cand.status = CandidateStatus::Unresolved;
  cand.reason = "no certificate found; form space has dimension " + std::to_string(basis.size());
  return cand;
}

ClassificationResult classify_regular(const VarietySpec& v, const ClassifyOptions& options) {
  RegularityEquation eq = regularity_equation(v, options.box);
  ClassificationResult res;
  res.variety = v.name;
  res.equation = eq.equation;
  res.box_verified = !eq.exact;
  res.box = eq.box;
  for (const auto& d : eq.solutions) res.candidates.push_back(analyze_candidate(v, d, options.cap));
  return res;
}

bool unique_singularity_check(std::int64_t r) {
  if (r < 0) throw Error(ErrorKind::NegativeHirzebruchParameter, "r = " + std::to_string(r));
  // count = 2 - (d2-1)(r d2 - 2(d1-1)), so count = 1 needs the product to be 1
  return !hirzebruch_product_solutions(r, 1).empty();
}

Integer darboux_bound(const VarietySpec& v, const Multidegree& d, std::size_t cap) {
  if (d.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree has wrong length");
  Integer total = 2;
  for (std::size_t i = 0; i < v.k(); ++i)
    for (std::size_t j = i + 1; j < v.k(); ++j) {
      Multidegree a = d;
      for (std::size_t t = 0; t < a.size(); ++t) a[t] -= v.degrees[i][t] + v.degrees[j][t];
      total += graded_piece_dim(v, a, cap);
    }
  return total;
}

}  // namespace toricdist
