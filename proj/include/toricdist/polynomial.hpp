#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricdist/rational.hpp"

namespace toricdist {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order: total degree first, then lexicographic with
// z_1 > z_2 > ... . Leading terms are the largest under this order.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  // Largest term in graded lex order. Precondition: nonzero.
  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }
  int total_degree() const;
  int degree_in(std::size_t var) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Substitute values for some variables; others are kept.
  Polynomial substitute(const std::vector<std::optional<Rational>>& values) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;

 private:
  void check_compatible(const Polynomial& o) const;
  std::size_t nvars_;
  TermMap terms_;
};

// Exact division by a single divisor with grlex leading terms. Returns the
// quotient when g divides f, nothing otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// Greatest common divisor, normalized to leading coefficient 1. gcd(0,0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// Variable naming used by the parser and printer.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}
  // z1..zk with k discovered while parsing.
  static VariableNames open() {
    VariableNames v;
    v.open_ = true;
    return v;
  }

  bool is_open() const { return open_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t i) const;
  // Index of a variable token, accepting z_{i,j} spellings.
  std::optional<std::size_t> lookup(const std::string& token) const;

 private:
  std::vector<std::string> names_;
  bool open_ = false;
};

// Normalizes z_{1,2} to z12 (or z1_12 when an index has several digits).
std::string normalize_variable_token(const std::string& token);

Polynomial parse_polynomial(std::string_view text, const VariableNames& names);
std::string to_string(const Polynomial& p, const VariableNames& names);
std::string monomial_to_string(const Exponents& e, const VariableNames& names);

}  // namespace toricdist
