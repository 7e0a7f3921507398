#include "toricdist/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "parse_detail.hpp"
#include "toricdist/errors.hpp"

namespace toricdist {

int total_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && toricdist::total_degree(terms_.begin()->first) == 0); }

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::LengthMismatch, "exponent vector length does not match variable count");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, toricdist::total_degree(e));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::LengthMismatch, "point has wrong number of coordinates");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Rational>>& values) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    Exponents f = e;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!values[i]) continue;
      for (int j = 0; j < e[i]; ++j) t *= *values[i];
      f[i] = 0;
    }
    out.add_term(f, t);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::LengthMismatch, "polynomials live in rings with different variable counts");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw Error(ErrorKind::LengthMismatch, "polynomials live in rings with different variable counts");
  Polynomial rem = f;
  Polynomial quot(f.nvars());
  const Exponents& lg = g.leading_exponents();
  const Rational& cg = g.leading_coefficient();
  while (!rem.is_zero()) {
    Exponents lr = rem.leading_exponents();
    Exponents t(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      t[i] = lr[i] - lg[i];
      if (t[i] < 0) return std::nullopt;
    }
    Polynomial term = Polynomial::monomial(t, rem.leading_coefficient() / cg);
    quot += term;
    rem -= term * g;
  }
  return quot;
}

namespace {

// Highest-index variable occurring in p, or -1.
int main_variable(const Polynomial& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (int i = static_cast<int>(e.size()) - 1; i > v; --i)
      if (e[static_cast<std::size_t>(i)] > 0) {
        v = i;
        break;
      }
  return v;
}

Polynomial make_monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_coefficient();
  p *= 1 / lc;
  return p;
}

// Coefficients of p viewed as a polynomial in var; index = power.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Polynomial(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(f, c);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (auto& c : coefficients_in(p, var)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *exact_divide(p, content_in(p, var));
}

Polynomial leading_in(const Polynomial& p, std::size_t var) { return coefficients_in(p, var).back(); }

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  int db = b.degree_in(var);
  Polynomial lb = leading_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    Polynomial la = leading_in(a, var);
    a = lb * a - la * Polynomial::monomial(shift) * b;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return make_monic(g);
  if (g.is_zero()) return make_monic(f);
  if (f.nvars() != g.nvars()) throw Error(ErrorKind::LengthMismatch, "polynomials live in rings with different variable counts");
  int x = std::max(main_variable(f), main_variable(g));
  if (x < 0) return Polynomial::constant(f.nvars(), 1);
  auto var = static_cast<std::size_t>(x);
  Polynomial cf = content_in(f, var), cg = content_in(g, var);
  Polynomial c = gcd(cf, cg);
  Polynomial a = *exact_divide(f, cf), b = *exact_divide(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(var) == 0) {
      a = Polynomial::constant(f.nvars(), 1);
      break;
    }
    Polynomial r = pseudo_remainder(a, b, var);
    a = b;
    b = primitive_in(r, var);
  }
  return make_monic(c * primitive_in(a, var));
}

std::string normalize_variable_token(const std::string& token) {
  auto open = token.find("_{");
  if (open == std::string::npos || token.back() != '}') return token;
  std::string head = token.substr(0, open);
  std::string inner = token.substr(open + 2, token.size() - open - 3);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return head + inner;
  std::string a = inner.substr(0, comma), b = inner.substr(comma + 1);
  if (a.size() == 1 && b.size() == 1) return head + a + b;
  return head + a + "_" + b;
}

std::string VariableNames::name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "z" + std::to_string(i + 1);
}

std::optional<std::size_t> VariableNames::lookup(const std::string& token) const {
  std::string t = normalize_variable_token(token);
  if (!open_) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == t) return i;
    return std::nullopt;
  }
  if (t.size() < 2 || t[0] != 'z') return std::nullopt;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
  if (t[1] == '0') return std::nullopt;
  if (t.size() > 6) throw Error(ErrorKind::ParseError, "variable index too large in '" + token + "'");
  return static_cast<std::size_t>(std::stoul(t.substr(1)) - 1);
}

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  detail::ParsedExpression ex = detail::parse_expression(text, names, false);
  Polynomial out(ex.nvars);
  for (auto& t : ex.terms) out += t.coefficient;
  return out;
}

std::string monomial_to_string(const Exponents& e, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += names.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const Polynomial& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(e, names);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + " * " + mono;
    }
  }
  return out;
}

}  // namespace toricdist
