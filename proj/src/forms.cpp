#include "toricdist/forms.hpp"

#include <algorithm>
#include <numeric>

#include "parse_detail.hpp"
#include "toricdist/errors.hpp"
#include "toricdist/linalg.hpp"

namespace toricdist {

OneForm OneForm::zero(std::size_t nvars) {
  OneForm w;
  w.coefficients.assign(nvars, Polynomial(nvars));
  return w;
}

bool OneForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Polynomial& p) { return p.is_zero(); });
}

OneForm& OneForm::operator+=(const OneForm& o) {
  if (o.nvars() != nvars()) throw Error(ErrorKind::LengthMismatch, "forms in different numbers of variables");
  for (std::size_t i = 0; i < nvars(); ++i) coefficients[i] += o.coefficients[i];
  return *this;
}

OneForm operator*(const Polynomial& f, const OneForm& w) {
  OneForm out = w;
  for (auto& c : out.coefficients) c = f * c;
  return out;
}

OneForm operator*(const Rational& c, const OneForm& w) {
  OneForm out = w;
  for (auto& p : out.coefficients) p *= c;
  return out;
}

Polynomial TwoForm::at(std::size_t i, std::size_t j) const {
  if (i == j) return Polynomial(nvars);
  bool swap = i > j;
  auto it = coefficients.find(swap ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == coefficients.end()) return Polynomial(nvars);
  return swap ? -it->second : it->second;
}

void TwoForm::add(std::size_t i, std::size_t j, const Polynomial& p) {
  if (i == j || p.is_zero()) return;
  Polynomial q = i < j ? p : -p;
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto it = coefficients.find(key);
  if (it == coefficients.end()) {
    coefficients.emplace(key, q);
    return;
  }
  it->second += q;
  if (it->second.is_zero()) coefficients.erase(it);
}

void ThreeForm::add(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p) {
  if (i == j || j == k || i == k || p.is_zero()) return;
  std::array<std::size_t, 3> idx{i, j, k};
  // sort, tracking the sign of the permutation
  int sign = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (idx[static_cast<std::size_t>(b)] > idx[static_cast<std::size_t>(b + 1)]) {
        std::swap(idx[static_cast<std::size_t>(b)], idx[static_cast<std::size_t>(b + 1)]);
        sign = -sign;
      }
  Polynomial q = sign > 0 ? p : -p;
  auto it = coefficients.find(idx);
  if (it == coefficients.end()) {
    coefficients.emplace(idx, q);
    return;
  }
  it->second += q;
  if (it->second.is_zero()) coefficients.erase(it);
}

TwoForm exterior_derivative(const OneForm& w) {
  TwoForm out{w.nvars(), {}};
  for (std::size_t i = 0; i < w.nvars(); ++i)
    for (std::size_t j = i + 1; j < w.nvars(); ++j)
      out.add(i, j, w.coefficients[j].derivative(i) - w.coefficients[i].derivative(j));
  return out;
}

ThreeForm exterior_derivative(const TwoForm& w) {
  ThreeForm out{w.nvars, {}};
  for (const auto& [key, p] : w.coefficients)
    for (std::size_t k = 0; k < w.nvars; ++k) out.add(k, key.first, key.second, p.derivative(k));
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::LengthMismatch, "forms in different numbers of variables");
  TwoForm out{a.nvars(), {}};
  for (std::size_t i = 0; i < a.nvars(); ++i)
    for (std::size_t j = i + 1; j < a.nvars(); ++j)
      out.add(i, j, a.coefficients[i] * b.coefficients[j] - a.coefficients[j] * b.coefficients[i]);
  return out;
}

ThreeForm wedge(const OneForm& a, const TwoForm& b) {
  if (a.nvars() != b.nvars) throw Error(ErrorKind::LengthMismatch, "forms in different numbers of variables");
  ThreeForm out{a.nvars(), {}};
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.coefficients[i].is_zero()) continue;
    for (const auto& [key, p] : b.coefficients) out.add(i, key.first, key.second, a.coefficients[i] * p);
  }
  return out;
}

void wedge(const TwoForm&, const TwoForm&) {
  throw Error(ErrorKind::UnsupportedDegree, "wedge products are supported up to total degree 3");
}

Polynomial contract(const RadialField& field, const OneForm& w) {
  Polynomial out(w.nvars());
  for (std::size_t i = 0; i < w.nvars(); ++i) {
    if (field.weights[i] == 0) continue;
    out += Polynomial::variable(w.nvars(), i) * w.coefficients[i] * Rational(static_cast<long>(field.weights[i]));
  }
  return out;
}

OneForm contract(const RadialField& field, const TwoForm& w) {
  // i_R(dz_i ^ dz_j) = R_i dz_j - R_j dz_i
  OneForm out = OneForm::zero(w.nvars);
  for (const auto& [key, p] : w.coefficients) {
    auto [i, j] = key;
    Polynomial ri = Polynomial::variable(w.nvars, i) * Rational(static_cast<long>(field.weights[i]));
    Polynomial rj = Polynomial::variable(w.nvars, j) * Rational(static_cast<long>(field.weights[j]));
    out.coefficients[j] += ri * p;
    out.coefficients[i] -= rj * p;
  }
  return out;
}

TwoForm contract(const RadialField& field, const ThreeForm& w) {
  TwoForm out{w.nvars, {}};
  for (const auto& [idx, p] : w.coefficients) {
    auto r = [&](std::size_t i) { return Polynomial::variable(w.nvars, i) * Rational(static_cast<long>(field.weights[i])); };
    out.add(idx[1], idx[2], r(idx[0]) * p);
    out.add(idx[0], idx[2], -(r(idx[1]) * p));
    out.add(idx[0], idx[1], r(idx[2]) * p);
  }
  return out;
}

ThreeForm integrability_obstruction(const OneForm& w) { return wedge(w, exterior_derivative(w)); }

bool is_integrable(const OneForm& w) { return integrability_obstruction(w).is_zero(); }

namespace {

Multidegree minus(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

void check_form(const VarietySpec& v, const OneForm& w) {
  if (w.nvars() != v.k())
    throw Error(ErrorKind::LengthMismatch, "form has " + std::to_string(w.nvars()) + " coefficients, variety has " + std::to_string(v.k()) + " variables");
  for (const auto& p : w.coefficients)
    if (p.nvars() != v.k()) throw Error(ErrorKind::LengthMismatch, "coefficient lives in the wrong polynomial ring");
}

}  // namespace

ValidationReport validate_distribution(const VarietySpec& v, const OneForm& w, const Multidegree& d) {
  check_form(v, w);
  if (d.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree has wrong length");
  ValidationReport rep;
  for (std::size_t i = 0; i < w.nvars(); ++i) {
    ValidationReport::CoefficientCheck c;
    c.index = i;
    c.expected = minus(d, v.degrees[i]);
    if (!w.coefficients[i].is_zero()) {
      c.actual = quasi_degree(v, w.coefficients[i]);
      c.homogeneous = c.actual.has_value();
      c.ok = c.actual && *c.actual == c.expected;
    }
    rep.valid = rep.valid && c.ok;
    rep.coefficients.push_back(c);
  }
  auto fields = radial_fields(v);
  for (std::size_t k = 0; k < fields.size(); ++k) {
    ValidationReport::ContractionCheck c;
    c.field = k;
    c.value = contract(fields[k], w);
    c.ok = c.value.is_zero();
    rep.valid = rep.valid && c.ok;
    rep.contractions.push_back(c);
  }
  return rep;
}

LieIdentityResult lie_identity_check(const VarietySpec& v, const OneForm& w, const Multidegree& d) {
  if (!validate_distribution(v, w, d).valid) throw Error(ErrorKind::InvalidDistribution, "form does not define a distribution of this degree");
  LieIdentityResult res;
  TwoForm dw = exterior_derivative(w);
  auto fields = radial_fields(v);
  std::size_t lead = 0;
  while (lead < w.nvars() && w.coefficients[lead].is_zero()) ++lead;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    OneForm lhs = contract(fields[k], dw);
    Rational expected(static_cast<long>(d[k]));
    if (lead == w.nvars()) {
      res.theta.push_back(lhs.is_zero() ? std::optional<Rational>(expected) : std::nullopt);
      res.holds = res.holds && lhs.is_zero();
      continue;
    }
    const Polynomial& p = w.coefficients[lead];
    Rational theta = lhs.coefficients[lead].coefficient(p.leading_exponents()) / p.leading_coefficient();
    bool proportional = lhs == theta * w;
    res.theta.push_back(proportional ? std::optional<Rational>(theta) : std::nullopt);
    res.holds = res.holds && proportional && theta == expected;
  }
  return res;
}

bool invariant_hypersurface_check(const OneForm& w, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "invariant hypersurface needs a nonzero polynomial");
  if (f.nvars() != w.nvars()) throw Error(ErrorKind::LengthMismatch, "polynomial and form have different variable counts");
  OneForm df = OneForm::zero(w.nvars());
  for (std::size_t i = 0; i < w.nvars(); ++i) df.coefficients[i] = f.derivative(i);
  TwoForm prod = wedge(w, df);
  for (const auto& [key, p] : prod.coefficients)
    if (!exact_divide(p, f)) return false;
  return true;
}

bool rational_first_integral_check(const VarietySpec& v, const OneForm& w, const Polynomial& p, const Polynomial& q) {
  check_form(v, w);
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "numerator and denominator must be nonzero");
  auto dp = quasi_degree(v, p), dq = quasi_degree(v, q);
  if (!dp || !dq || *dp != *dq) throw Error(ErrorKind::DegreeMismatch, "P and Q must be quasi-homogeneous of the same degree");
  Rational ratio = p.leading_coefficient() / q.leading_coefficient();
  if (p == q * ratio) throw Error(ErrorKind::ConstantFunction, "P/Q is constant");
  OneForm eta = OneForm::zero(w.nvars());
  for (std::size_t i = 0; i < w.nvars(); ++i) eta.coefficients[i] = q * p.derivative(i) - p * q.derivative(i);
  return wedge(w, eta).is_zero();
}

OneForm normalize_form(const OneForm& w) {
  Integer den = 1, num = 0;
  for (const auto& p : w.coefficients)
    for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
  for (const auto& p : w.coefficients)
    for (const auto& [e, c] : p.terms()) num = gcd(num, Integer(c * Rational(den)));
  if (num == 0) return w;
  Rational scale = Rational(den) / Rational(num);
  for (const auto& p : w.coefficients)
    if (!p.is_zero()) {
      if (p.leading_coefficient() < 0) scale = -scale;
      break;
    }
  return scale * w;
}

std::vector<OneForm> form_space_basis(const VarietySpec& v, const Multidegree& d, std::size_t cap,
                                      const std::function<bool(const Exponents&)>& keep) {
  if (d.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree has wrong length");
  std::size_t k = v.k();
  // unknowns: one per (coefficient index, monomial)
  std::vector<std::pair<std::size_t, Exponents>> unknowns;
  for (std::size_t i = 0; i < k; ++i) {
    for (auto& m : graded_piece_basis(v, minus(d, v.degrees[i]), cap))
      if (keep(m)) unknowns.emplace_back(i, m);
    if (unknowns.size() > cap) throw Error(ErrorKind::EnumerationCapExceeded, "form space has more than " + std::to_string(cap) + " unknowns");
  }
  if (unknowns.empty()) return {};
  auto fields = radial_fields(v);
  // equations: coefficient of each monomial in sum_i a_{f,i} z_i P_i
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  RationalMatrix rows;
  for (std::size_t f = 0; f < fields.size(); ++f)
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [i, m] = unknowns[u];
      std::int64_t weight = fields[f].weights[i];
      if (weight == 0) continue;
      m[i] += 1;
      auto key = std::make_pair(f, m);
      auto it = row_of.find(key);
      if (it == row_of.end()) {
        it = row_of.emplace(key, rows.size()).first;
        rows.emplace_back(unknowns.size(), Rational(0));
      }
      rows[it->second][u] += Rational(static_cast<long>(weight));
    }
  std::vector<OneForm> out;
  for (const auto& vec : nullspace(rows, unknowns.size())) {
    OneForm w = OneForm::zero(k);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (vec[u] != 0) w.coefficients[unknowns[u].first].add_term(unknowns[u].second, vec[u]);
    out.push_back(normalize_form(w));
  }
  return out;
}

std::vector<OneForm> form_space_basis(const VarietySpec& v, const Multidegree& d, std::size_t cap) {
  return form_space_basis(v, d, cap, [](const Exponents&) { return true; });
}

SingularityReport is_singular_at(const VarietySpec& v, const OneForm& w, const std::vector<Rational>& point) {
  check_form(v, w);
  if (point.size() != v.k()) throw Error(ErrorKind::LengthMismatch, "point has wrong number of coordinates");
  SingularityReport rep;
  rep.irrelevant_set_checked = v.irrelevant_set.has_value();
  if (in_irrelevant_set(v, point)) throw Error(ErrorKind::IrrelevantPoint, "point lies in the irrelevant set");
  if (std::all_of(point.begin(), point.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorKind::IrrelevantPoint, "the origin is not a point of the variety");
  rep.singular = std::all_of(w.coefficients.begin(), w.coefficients.end(), [&](const Polynomial& p) { return p.evaluate(point) == 0; });
  return rep;
}

OneForm affine_chart(const OneForm& w, std::size_t c) {
  std::size_t k = w.nvars();
  if (c >= k) throw Error(ErrorKind::IndexOutOfRange, "chart variable out of range");
  OneForm out = OneForm::zero(k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i == c) continue;
    Polynomial local(k - 1);
    for (const auto& [e, coeff] : w.coefficients[i].terms()) {
      Exponents f;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) f.push_back(e[j]);
      local.add_term(f, coeff);
    }
    out.coefficients[i < c ? i : i - 1] = local;
  }
  return out;
}

MonomialChartForm as_monomial_chart(const OneForm& local, const Integer& group_order) {
  MonomialChartForm chart;
  chart.dimension = local.nvars();
  chart.group_order = group_order;
  for (const auto& p : local.coefficients) {
    if (p.size() != 1) throw Error(ErrorKind::DegenerateExponentMatrix, "local coefficient is not a single monomial");
    chart.coefficients.push_back(p.terms().begin()->second);
    chart.exponents.push_back(p.terms().begin()->first);
  }
  return chart;
}

Rational monomial_local_index(const MonomialChartForm& chart) {
  std::size_t n = chart.dimension;
  if (chart.exponents.size() != n || chart.coefficients.size() != n) throw Error(ErrorKind::LengthMismatch, "chart form needs one monomial per coordinate");
  if (chart.group_order < 1) throw Error(ErrorKind::InvalidInput, "local group order must be positive");
  RationalMatrix e(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (chart.coefficients[i] == 0) throw Error(ErrorKind::DegenerateExponentMatrix, "zero coefficient in component " + std::to_string(i));
    if (chart.exponents[i].size() != n) throw Error(ErrorKind::LengthMismatch, "exponent vector has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (chart.exponents[i][j] < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
      e[i][j] = chart.exponents[i][j];
    }
  }
  Rational det = determinant(e);
  if (det == 0) throw Error(ErrorKind::DegenerateExponentMatrix, "exponent matrix is singular");
  // The zero at the origin is isolated only when each component is a pure
  // power of its own coordinate.
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t support = 0, var = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (chart.exponents[i][j] > 0) {
        ++support;
        var = j;
      }
    if (support != 1 || used[var]) throw Error(ErrorKind::DegenerateExponentMatrix, "the zero at the origin is not isolated");
    used[var] = true;
  }
  return abs(det) / Rational(chart.group_order);
}

namespace {

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(nvars);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = Polynomial::constant(nvars, inversions % 2 ? -1 : 1);
    for (std::size_t a = 0; a < n && !term.is_zero(); ++a) term = term * m[a][perm[a]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

Rational nondegenerate_orbit_index_sum(const OneForm& local, std::size_t parameter, const std::vector<std::optional<Rational>>& fixed,
                                       const Polynomial& defining, const Integer& group_order) {
  std::size_t n = local.nvars();
  if (fixed.size() != n || parameter >= n) throw Error(ErrorKind::LengthMismatch, "fixed coordinates do not match the chart");
  for (std::size_t i = 0; i < n; ++i)
    if ((i == parameter) == fixed[i].has_value()) throw Error(ErrorKind::InvalidInput, "exactly the parameter coordinate must be free");
  for (const auto& [e, c] : defining.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (i != parameter && e[i] > 0) throw Error(ErrorKind::InvalidInput, "defining polynomial must involve only the parameter");
  if (defining.degree_in(parameter) < 1) throw Error(ErrorKind::InvalidInput, "defining polynomial must be nonconstant");
  if (!gcd(defining, defining.derivative(parameter)).is_constant())
    throw Error(ErrorKind::InvalidInput, "defining polynomial has repeated roots");
  for (const auto& p : local.coefficients)
    if (!exact_divide(p.substitute(fixed), defining)) throw Error(ErrorKind::InvalidInput, "the form does not vanish on the given zeros");
  std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = local.coefficients[i].derivative(j);
  Polynomial det = symbolic_determinant(jac, n).substitute(fixed);
  if (det.is_zero() || !gcd(det, defining).is_constant())
    throw Error(ErrorKind::DegenerateExponentMatrix, "some zero in the family is degenerate");
  return Rational(defining.degree_in(parameter)) / Rational(group_order);
}

OneForm parse_one_form(std::string_view text, const VariableNames& names) {
  detail::ParsedExpression ex = detail::parse_expression(text, names, true);
  OneForm w = OneForm::zero(ex.nvars);
  for (auto& t : ex.terms) {
    if (!t.differential) {
      if (t.coefficient.is_zero()) continue;
      throw Error(ErrorKind::ParseError, "term without a differential in 1-form");
    }
    w.coefficients[*t.differential] += t.coefficient;
  }
  return w;
}

namespace {

std::string differential(const VariableNames& names, std::size_t i) { return "d" + names.name(i); }

std::string form_term(const Polynomial& p, const VariableNames& names, const std::string& diff, bool first) {
  std::string out;
  if (p.size() == 1) {
    const auto& [e, c] = *p.terms().begin();
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono = monomial_to_string(e, names);
    if (mag != 1) out += to_string(mag) + (mono.empty() ? " " : " * ");
    if (!mono.empty()) out += mono + " ";
    return out + diff;
  }
  out += first ? "" : " + ";
  return out + "(" + to_string(p, names) + ") " + diff;
}

}  // namespace

std::string to_string(const OneForm& w, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < w.nvars(); ++i) {
    if (w.coefficients[i].is_zero()) continue;
    out += form_term(w.coefficients[i], names, differential(names, i), out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const TwoForm& w, const VariableNames& names) {
  std::string out;
  for (const auto& [key, p] : w.coefficients)
    out += form_term(p, names, differential(names, key.first) + " ^ " + differential(names, key.second), out.empty());
  return out.empty() ? "0" : out;
}

std::string to_string(const ThreeForm& w, const VariableNames& names) {
  std::string out;
  for (const auto& [idx, p] : w.coefficients)
    out += form_term(p, names, differential(names, idx[0]) + " ^ " + differential(names, idx[1]) + " ^ " + differential(names, idx[2]), out.empty());
  return out.empty() ? "0" : out;
}

}  // namespace toricdist
