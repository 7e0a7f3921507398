#include "toricdist/gradedring.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "toricdist/errors.hpp"
#include "toricdist/linalg.hpp"

namespace toricdist {

std::size_t enumeration_cap_from_env() {
  const char* env = std::getenv("TORIC_DIST_CAP");
  if (!env || !*env) return kDefaultEnumerationCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultEnumerationCap;
  return static_cast<std::size_t>(v);
}

VariableNames variable_names(const VarietySpec& v) {
  if (v.variable_names.size() == v.k()) return VariableNames(v.variable_names);
  return VariableNames(default_variable_names(Family{}, v.k()));
}

Multidegree monomial_degree(const VarietySpec& v, const Exponents& e) {
  if (e.size() != v.k())
    throw Error(ErrorKind::LengthMismatch, "exponent vector has " + std::to_string(e.size()) + " entries, variety has " +
                                               std::to_string(v.k()) + " variables");
  Multidegree d(static_cast<std::size_t>(v.r), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += e[i] * v.degrees[i][j];
  return d;
}

std::optional<Multidegree> quasi_degree(const VarietySpec& v, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  std::optional<Multidegree> deg;
  for (const auto& [e, c] : f.terms()) {
    Multidegree d = monomial_degree(v, e);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

namespace {

// Finds c with c . column > 0 for every column (perceptron); empty if none found.
std::optional<std::vector<std::int64_t>> positive_functional(const std::vector<std::vector<std::int64_t>>& columns, std::size_t r) {
  std::vector<std::int64_t> c(r, 0);
  for (int round = 0; round < 10000; ++round) {
    bool updated = false;
    for (const auto& col : columns) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += c[i] * col[i];
      if (dot <= 0) {
        for (std::size_t i = 0; i < r; ++i) c[i] += col[i];
        updated = true;
      }
    }
    if (!updated) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Exponents> graded_piece_basis(const VarietySpec& v, const Multidegree& alpha, std::size_t cap) {
  std::size_t r = static_cast<std::size_t>(v.r);
  std::size_t k = v.k();
  if (alpha.size() != r) throw Error(ErrorKind::LengthMismatch, "degree has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(r));
  std::vector<std::vector<std::int64_t>> columns = v.degrees;
  for (const auto& c : columns)
    if (c.size() != r) throw Error(ErrorKind::LengthMismatch, "variable degree has wrong length");

  // Pivot columns, chosen from the right, carry the solved coordinates.
  std::vector<std::size_t> pivots;
  RationalMatrix selected;
  for (std::size_t j = k; j-- > 0 && pivots.size() < r;) {
    RationalMatrix trial = selected;
    std::vector<Rational> col;
    for (auto x : columns[j]) col.emplace_back(static_cast<long>(x));
    trial.push_back(col);
    if (row_reduce(trial, r).pivots.size() == trial.size()) {
      selected = trial;
      pivots.push_back(j);
    }
  }
  if (pivots.size() < r) throw Error(ErrorKind::InvalidInput, "degree matrix does not have full rank");
  std::sort(pivots.begin(), pivots.end());
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < k; ++j)
    if (!std::binary_search(pivots.begin(), pivots.end(), j)) free_vars.push_back(j);

  RationalMatrix piv(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < r; ++t) piv[i][t] = Rational(static_cast<long>(columns[pivots[t]][i]));
  RationalMatrix inv;
  invert(piv, inv);
  // inverse = numer / denom with integer numer
  Integer denom = 1;
  for (auto& row : inv)
    for (auto& x : row) denom = lcm(denom, x.get_den());
  std::vector<std::vector<__int128>> numer(r, std::vector<__int128>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < r; ++t) numer[i][t] = to_int64(Integer(inv[i][t] * denom));
  const __int128 den = to_int64(denom);

  auto functional = positive_functional(columns, r);
  std::vector<std::int64_t> weight(k, 0);
  std::int64_t budget = 0;
  if (functional) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < r; ++i) weight[j] += (*functional)[i] * columns[j][i];
    for (std::size_t i = 0; i < r; ++i) budget += (*functional)[i] * alpha[i];
    if (budget < 0) return {};
  }

  std::vector<Exponents> out;
  Exponents current(k, 0);
  std::vector<__int128> rest(alpha.begin(), alpha.end());
  std::size_t nodes = 0;

  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t idx, std::int64_t remaining) {
    if (++nodes > cap)
      throw Error(ErrorKind::EnumerationCapExceeded, "more than " + std::to_string(cap) + " candidate monomials");
    if (idx == free_vars.size()) {
      for (std::size_t t = 0; t < r; ++t) {
        __int128 s = 0;
        for (std::size_t i = 0; i < r; ++i) s += numer[t][i] * rest[i];
        if (s % den != 0) return;
        __int128 q = s / den;
        if (q < 0) return;
        current[pivots[t]] = static_cast<int>(q);
      }
      out.push_back(current);
      return;
    }
    std::size_t var = free_vars[idx];
    std::int64_t limit = functional ? remaining / weight[var] : static_cast<std::int64_t>(cap);
    for (std::int64_t q = 0; q <= limit; ++q) {
      current[var] = static_cast<int>(q);
      visit(idx + 1, functional ? remaining - q * weight[var] : 0);
      for (std::size_t i = 0; i < r; ++i) rest[i] -= columns[var][i];
    }
    for (std::size_t i = 0; i < r; ++i) rest[i] += static_cast<__int128>(limit + 1) * columns[var][i];
    current[var] = 0;
  };
  visit(0, budget);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

Integer weighted_series_coefficient(const std::vector<std::int64_t>& w, std::int64_t alpha) {
  if (alpha < 0) return 0;
  std::vector<Integer> s(static_cast<std::size_t>(alpha) + 1, 0);
  s[0] = 1;
  // multiply by 1/(1 - t^w) one weight at a time
  for (auto wi : w)
    for (std::int64_t j = wi; j <= alpha; ++j) s[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(j - wi)];
  return s[static_cast<std::size_t>(alpha)];
}

}  // namespace

Integer closed_form_dim(const VarietySpec& v, const Multidegree& alpha, std::size_t cap) {
  if (alpha.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree has wrong length");
  const auto& p = v.family.params;
  switch (v.family.kind) {
    case FamilyKind::Multiprojective: {
      Integer out = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (alpha[i] < 0) return 0;
        out *= binomial(p[i] + alpha[i], p[i]);
      }
      return out;
    }
    case FamilyKind::Projective:
    case FamilyKind::Weighted: {
      std::vector<std::int64_t> w;
      for (const auto& d : v.degrees) w.push_back(d[0]);
      return weighted_series_coefficient(w, alpha[0]);
    }
    case FamilyKind::Scroll: {
      // alpha = (coefficient of L, coefficient of M)
      std::int64_t n = static_cast<std::int64_t>(p.size());
      bool nonneg = alpha[0] >= 0 && alpha[1] >= 0 && std::all_of(p.begin(), p.end(), [](auto a) { return a >= 0; });
      if (!nonneg) return Integer(static_cast<unsigned long>(graded_piece_basis(v, alpha, cap).size()));
      Integer total_twist = 0;
      for (auto a : p) total_twist += Integer(static_cast<long>(a));
      return total_twist * binomial(alpha[1] + n - 1, n) + Integer(static_cast<long>(alpha[0] + 1)) * binomial(alpha[1] + n - 1, n - 1);
    }
    default:
      break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no closed-form dimension for " + v.name);
}

Integer graded_piece_dim(const VarietySpec& v, const Multidegree& alpha, std::size_t cap) {
  switch (v.family.kind) {
    case FamilyKind::Multiprojective:
    case FamilyKind::Projective:
    case FamilyKind::Weighted:
    case FamilyKind::Scroll:
      return closed_form_dim(v, alpha, cap);
    default:
      return Integer(static_cast<unsigned long>(graded_piece_basis(v, alpha, cap).size()));
  }
}

Polynomial apply_radial_field(const RadialField& field, const Polynomial& f) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += field.weights[i] * e[i];
    out.add_term(e, c * Rational(static_cast<long>(w)));
  }
  return out;
}

std::vector<Rational> euler_formula_check(const VarietySpec& v, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Euler identity needs a nonzero polynomial");
  auto deg = quasi_degree(v, f);
  if (!deg) throw Error(ErrorKind::NotQuasiHomogeneous, "polynomial is not quasi-homogeneous");
  std::vector<Rational> theta;
  for (const auto& field : radial_fields(v)) {
    // i_R(df) computed from the partial derivatives
    Polynomial contracted(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (field.weights[i] == 0) continue;
      contracted += Polynomial::variable(f.nvars(), i) * f.derivative(i) * Rational(static_cast<long>(field.weights[i]));
    }
    Rational t = contracted.coefficient(f.leading_exponents()) / f.leading_coefficient();
    if (!(contracted == f * t)) throw Error(ErrorKind::NotQuasiHomogeneous, "radial field does not act by a scalar");
    theta.push_back(t);
  }
  return theta;
}

}  // namespace toricdist
