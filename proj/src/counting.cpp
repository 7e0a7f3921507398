#include "toricdist/counting.hpp"

#include <functional>

#include "toricdist/errors.hpp"

namespace toricdist {

const char* method_name(CountMethod m) {
  switch (m) {
    case CountMethod::General: return "general";
    case CountMethod::ClosedForm: return "closed_form";
    case CountMethod::Cover: return "cover";
  }
  return "unknown";
}

namespace {

Integer Z(std::int64_t x) { return Integer(static_cast<long>(x)); }

Integer ipow(const Integer& b, std::int64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Integer sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void for_each_composition(int total, std::size_t parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> k(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      k[i] = left;
      fn(k);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      k[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts == 0) {
    if (total == 0) fn(k);
    return;
  }
  rec(0, total);
}

void check_length(const VarietySpec& v, const Multidegree& d) {
  if (d.size() != static_cast<std::size_t>(v.r))
    throw Error(ErrorKind::LengthMismatch, "degree has " + std::to_string(d.size()) + " entries, expected " + std::to_string(v.r));
}

}  // namespace

CountReport count_general(const VarietySpec& v, const ChowPresentation& p, const Multidegree& d) {
  check_length(v, d);
  int n = p.dimension();
  std::size_t r = p.divisor_basis().size();
  if (r != d.size()) throw Error(ErrorKind::LengthMismatch, "presentation does not match the class group rank");
  std::vector<ChowClass> chern = elementary_symmetric_classes(p, v);

  // powers[i][e] = (d_i g_i)^e
  std::vector<std::vector<ChowClass>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    ChowClass g = p.basis_class(p.divisor_basis()[i]) * Rational(static_cast<long>(d[i]));
    powers[i].push_back(p.one());
    for (int e = 1; e <= n; ++e) powers[i].push_back(p.product(powers[i].back(), g));
  }

  Rational total = 0;
  for (int j = 0; j <= n; ++j) {
    for_each_composition(n - j, r, [&](const std::vector<int>& k) {
      ChowClass term = chern[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < r; ++i)
        if (k[i] > 0) term = p.product(term, powers[i][static_cast<std::size_t>(k[i])]);
      Rational value = p.integrate(term) * Rational(multinomial(k));
      if (j % 2) total -= value;
      else total += value;
    });
  }
  CountReport out{v.name, d, total, CountMethod::General, false};
  if (!v.is_orbifold() && !is_integer(total))
    throw Error(ErrorKind::InvalidPresentation, "non-integral count " + to_string(total) + " on a smooth variety");
  return out;
}

CountReport count_general(const VarietySpec& v, const Multidegree& d) {
  auto p = presentation_for(v);
  return count_general(v, *p, d);
}

Rational count_via_cover(const std::vector<std::int64_t>& m, int n, const Integer& k, const Integer& deg_phi) {
  if (deg_phi == 0) throw Error(ErrorKind::InvalidInput, "cover degree must be nonzero");
  if (n < 0 || n > static_cast<int>(m.size())) throw Error(ErrorKind::InvalidInput, "dimension out of range for the cover");
  Integer total = 0;
  for (int j = 0; j <= n; ++j) total += sign(j) * elementary_symmetric(m, j) * ipow(k, n - j);
  return Rational(total) / Rational(deg_phi);
}

CountReport count_cover(const VarietySpec& v, const Multidegree& d) {
  check_length(v, d);
  if (!v.orbifold) throw Error(ErrorKind::UnsupportedFamily, v.name + " carries no cover data");
  if (v.r != 1) throw Error(ErrorKind::UnsupportedFamily, "cover route needs a rank-one class group");
  Rational c = count_via_cover(v.orbifold->cover_degrees, v.n, Z(d[0]), v.orbifold->cover_total);
  return {v.name, d, c, CountMethod::Cover, false};
}

bool gcd_denominator_test(const std::vector<std::int64_t>& weights, std::int64_t d) {
  Integer total = 1;
  for (auto w : weights) total *= Z(w);
  Rational c = count_via_cover(weights, static_cast<int>(weights.size()) - 1, Z(d), total);
  return !is_integer(c);
}

Integer evaluate(const UnivariatePolynomial& p, const Integer& t) {
  Integer out = 0;
  for (std::size_t i = p.size(); i-- > 0;) out = out * t + p[i];
  return out;
}

UnivariatePolynomial synthetic_divide(const UnivariatePolynomial& p, const Integer& root) {
  if (p.empty()) return {};
  std::size_t deg = p.size() - 1;
  UnivariatePolynomial q(deg, 0);
  Integer carry = 0;
  for (std::size_t i = deg + 1; i-- > 0;) {
    carry = carry * root + p[i];
    if (i > 0) q[i - 1] = carry;
  }
  if (carry != 0) throw Error(ErrorKind::NonzeroSyntheticRemainder, "remainder " + carry.get_str() + " when dividing by (t - " + root.get_str() + ")");
  return q;
}

UnivariatePolynomial scroll_p_polynomial(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "scroll polynomial needs n >= 2");
  UnivariatePolynomial p(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= n - 2; ++i) p[static_cast<std::size_t>(n - 1 - i)] += sign(i) * binomial(n, i);
  p[0] += sign(n) * Integer(1 - n);
  return p;
}

UnivariatePolynomial scroll_q_polynomial(int n) { return synthetic_divide(scroll_p_polynomial(n), 1); }

CountReport count_closed_form(const VarietySpec& v, const Multidegree& d) {
  check_length(v, d);
  const auto& p = v.family.params;
  Rational result;
  switch (v.family.kind) {
    case FamilyKind::Multiprojective: {
      // (-1)^N sum_k (-1)^{|k|} multinom(|k|; k) prod binom(n_i+1, n_i-k_i) d_i^{k_i}
      std::int64_t N = 0;
      for (auto x : p) N += x;
      Integer total = 0;
      std::vector<int> k(p.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == p.size()) {
          int sum = 0;
          Integer term = multinomial(k);
          for (std::size_t t = 0; t < p.size(); ++t) {
            sum += k[t];
            term *= binomial(p[t] + 1, p[t] - k[t]) * ipow(Z(d[t]), k[t]);
          }
          total += sign(sum) * term;
          return;
        }
        for (int x = 0; x <= p[i]; ++x) {
          k[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
      result = Rational(sign(N) * total);
      break;
    }
    case FamilyKind::Projective:
    case FamilyKind::Weighted: {
      std::vector<std::int64_t> w;
      Integer prod = 1;
      for (const auto& deg : v.degrees) {
        w.push_back(deg[0]);
        prod *= Z(deg[0]);
      }
      Integer total = 0;
      for (int j = 0; j <= v.n; ++j) total += sign(j) * elementary_symmetric(w, j) * ipow(Z(d[0]), v.n - j);
      result = Rational(total) / Rational(prod);
      break;
    }
    case FamilyKind::Hirzebruch: {
      Integer r = Z(p[0]), d1 = Z(d[0]), d2 = Z(d[1]);
      result = Rational(2 * (d1 - 1) * (d2 - 1) + 2 - d2 * (d2 - 1) * r);
      break;
    }
    case FamilyKind::Scroll: {
      int n = v.n;
      Integer twist = 0;
      for (auto a : p) twist += Z(a);
      Integer d1 = Z(d[0]), d2 = Z(d[1]);
      UnivariatePolynomial P = scroll_p_polynomial(n);
      if (evaluate(P, 1) != 0) throw Error(ErrorKind::NonzeroSyntheticRemainder, "P(1) != 0");
      result = Rational(n * d1 * ipow(d2 - 1, n - 1) - 2 * evaluate(P, d2) + 2 * sign(n) + twist * d2 * ipow(d2 - 1, n - 1));
      break;
    }
    case FamilyKind::DelPezzo6: {
      auto t = class_to_tuple(v, d);
      Integer total = Z(t[0]) * (Z(t[0]) - 3) + 6;
      for (int i = 1; i <= 3; ++i) total += Z(t[static_cast<std::size_t>(i)]) * (1 - Z(t[static_cast<std::size_t>(i)]));
      result = Rational(total);
      break;
    }
    case FamilyKind::Generic:
      throw Error(ErrorKind::UnsupportedFamily, "no closed form for " + v.name);
  }
  return {v.name, d, result, CountMethod::ClosedForm, false};
}

CountReport count(const VarietySpec& v, const Multidegree& d, CountMethod method, bool cross_check) {
  auto run = [&](CountMethod m) {
    switch (m) {
      case CountMethod::General: return count_general(v, d);
      case CountMethod::ClosedForm: return count_closed_form(v, d);
      case CountMethod::Cover: return count_cover(v, d);
    }
    throw Error(ErrorKind::InvalidInput, "unknown method");
  };
  CountReport primary = run(method);
  if (!cross_check) return primary;
  bool any = false;
  for (CountMethod m : {CountMethod::General, CountMethod::ClosedForm, CountMethod::Cover}) {
    if (m == method) continue;
    bool applicable = (m == CountMethod::General && v.chow) || (m == CountMethod::ClosedForm && v.family.kind != FamilyKind::Generic) ||
                      (m == CountMethod::Cover && v.orbifold && v.r == 1);
    if (!applicable) continue;
    CountReport other = run(m);
    if (other.count != primary.count)
      throw Error(ErrorKind::CrossCheckMismatch, std::string("methods disagree: ") + method_name(method) + " gives " + to_string(primary.count) +
                                                      ", " + method_name(m) + " gives " + to_string(other.count));
    any = true;
  }
  primary.cross_checked = any;
  return primary;
}

}  // namespace toricdist
