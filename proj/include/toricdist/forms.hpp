#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricdist/classgroup.hpp"
#include "toricdist/gradedring.hpp"
#include "toricdist/polynomial.hpp"

namespace toricdist {

// sum_i P_i dz_i
struct OneForm {
  std::vector<Polynomial> coefficients;

  static OneForm zero(std::size_t nvars);
  std::size_t nvars() const { return coefficients.size(); }
  bool is_zero() const;

  OneForm& operator+=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator*(const Polynomial& f, const OneForm& w);
  friend OneForm operator*(const Rational& c, const OneForm& w);
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.coefficients == b.coefficients; }
};

// sum_{i<j} P_ij dz_i ^ dz_j ; only nonzero coefficients are stored.
struct TwoForm {
  std::size_t nvars = 0;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  Polynomial at(std::size_t i, std::size_t j) const;  // antisymmetric lookup
  void add(std::size_t i, std::size_t j, const Polynomial& p);
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.nvars == b.nvars && a.coefficients == b.coefficients; }
};

struct ThreeForm {
  std::size_t nvars = 0;
  std::map<std::array<std::size_t, 3>, Polynomial> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  void add(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p);
  friend bool operator==(const ThreeForm& a, const ThreeForm& b) { return a.nvars == b.nvars && a.coefficients == b.coefficients; }
};

struct ValidationReport {
  struct CoefficientCheck {
    std::size_t index = 0;
    bool ok = true;
    Multidegree expected;
    std::optional<Multidegree> actual;  // empty for zero or non-homogeneous coefficients
    bool homogeneous = true;
  };
  struct ContractionCheck {
    std::size_t field = 0;
    bool ok = true;
    Polynomial value;
  };
  bool valid = true;
  std::vector<CoefficientCheck> coefficients;
  std::vector<ContractionCheck> contractions;
};

ValidationReport validate_distribution(const VarietySpec& v, const OneForm& w, const Multidegree& d);

TwoForm exterior_derivative(const OneForm& w);
ThreeForm exterior_derivative(const TwoForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);
ThreeForm wedge(const OneForm& a, const TwoForm& b);
// Degree 4 and above is outside the supported range.
[[noreturn]] void wedge(const TwoForm& a, const TwoForm& b);

Polynomial contract(const RadialField& field, const OneForm& w);
OneForm contract(const RadialField& field, const TwoForm& w);
TwoForm contract(const RadialField& field, const ThreeForm& w);

ThreeForm integrability_obstruction(const OneForm& w);  // w ^ dw
bool is_integrable(const OneForm& w);

struct LieIdentityResult {
  bool holds = true;
  std::vector<std::optional<Rational>> theta;  // scalar for each radial field, if i_R dw is proportional to w
};

// Checks i_{R_k}(dw) = d_k w for every radial field.
LieIdentityResult lie_identity_check(const VarietySpec& v, const OneForm& w, const Multidegree& d);

// {f = 0} is invariant when every coefficient of w ^ df is divisible by f.
bool invariant_hypersurface_check(const OneForm& w, const Polynomial& f);

// P/Q is a first integral when w ^ (Q dP - P dQ) = 0.
bool rational_first_integral_check(const VarietySpec& v, const OneForm& w, const Polynomial& p, const Polynomial& q);

// Basis of forms of degree d annihilated by every radial field, each scaled
// to integer coefficients with content 1 and a positive leading coefficient.
std::vector<OneForm> form_space_basis(const VarietySpec& v, const Multidegree& d, std::size_t cap = kDefaultEnumerationCap);
// Same, using only monomials accepted by the filter.
std::vector<OneForm> form_space_basis(const VarietySpec& v, const Multidegree& d, std::size_t cap,
                                      const std::function<bool(const Exponents&)>& keep);

OneForm normalize_form(const OneForm& w);

struct SingularityReport {
  bool singular = false;
  bool irrelevant_set_checked = false;
};

SingularityReport is_singular_at(const VarietySpec& v, const OneForm& w, const std::vector<Rational>& point);

// Restriction to the affine chart {z_c = 1}; the result lives in the
// remaining variables, in order.
OneForm affine_chart(const OneForm& w, std::size_t chart_variable);

// A 1-form in n local coordinates whose coefficients are single monomials.
struct MonomialChartForm {
  std::size_t dimension = 0;
  std::vector<Rational> coefficients;
  std::vector<Exponents> exponents;
  Integer group_order = 1;
};

// Reads the coefficients of a local form; each must be a single monomial.
MonomialChartForm as_monomial_chart(const OneForm& local, const Integer& group_order);

// |det E| / |G| for an isolated zero at the origin.
Rational monomial_local_index(const MonomialChartForm& chart);

// Sum of indices over the zeros {g(t) = 0, other coordinates fixed} of a
// local form, when all of them are nondegenerate: deg(g) / |G|. The
// coordinate `parameter` is free; every other coordinate must be fixed.
Rational nondegenerate_orbit_index_sum(const OneForm& local, std::size_t parameter, const std::vector<std::optional<Rational>>& fixed,
                                       const Polynomial& defining, const Integer& group_order);

OneForm parse_one_form(std::string_view text, const VariableNames& names);
std::string to_string(const OneForm& w, const VariableNames& names);
std::string to_string(const TwoForm& w, const VariableNames& names);
std::string to_string(const ThreeForm& w, const VariableNames& names);

}  // namespace toricdist
