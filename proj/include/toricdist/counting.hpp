#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricdist/chowring.hpp"
#include "toricdist/classgroup.hpp"
#include "toricdist/rational.hpp"

namespace toricdist {

enum class CountMethod { General, ClosedForm, Cover };

const char* method_name(CountMethod m);

// Weighted number of singular points of a generic distribution of degree d.
struct CountReport {
  std::string variety;
  Multidegree d;  // class-group coordinates
  Rational count;
  CountMethod method = CountMethod::General;
  bool cross_checked = false;
};

// sum_j (-1)^j sum_{|k|=n-j} multinom(n-j; k) int C_j(h) prod (d_i g_i)^{k_i},
// with g_i the divisor generators of the Chow presentation.
CountReport count_general(const VarietySpec& v, const Multidegree& d);
CountReport count_general(const VarietySpec& v, const ChowPresentation& p, const Multidegree& d);

// Closed formulas for multiprojective, projective, weighted, Hirzebruch,
// scroll and del Pezzo varieties.
CountReport count_closed_form(const VarietySpec& v, const Multidegree& d);

// (1/deg phi) sum_{j=0}^{n} (-1)^j C_j(m) k^{n-j}
Rational count_via_cover(const std::vector<std::int64_t>& m, int n, const Integer& k, const Integer& deg_phi);

// Cover formula for a variety carrying orbifold data with r = 1 (k = d).
CountReport count_cover(const VarietySpec& v, const Multidegree& d);

// True when the cover count for P(weights) in degree d is not an integer, so
// some singular point must sit at an orbifold point.
bool gcd_denominator_test(const std::vector<std::int64_t>& weights, std::int64_t d);

// Integer polynomials in one variable, coefficients in ascending order.
using UnivariatePolynomial = std::vector<Integer>;

Integer evaluate(const UnivariatePolynomial& p, const Integer& t);
// Divides by (t - root); throws NonzeroSyntheticRemainder unless exact.
UnivariatePolynomial synthetic_divide(const UnivariatePolynomial& p, const Integer& root);

// P(t) = t sum_{i=0}^{n-2} (-1)^i binom(n,i) t^{n-2-i} + (-1)^n (1-n), P(1) = 0.
UnivariatePolynomial scroll_p_polynomial(int n);
// Q(t) = P(t) / (t - 1)
UnivariatePolynomial scroll_q_polynomial(int n);

// Dispatch used by the command line: method plus optional cross-check
// against every other applicable method.
CountReport count(const VarietySpec& v, const Multidegree& d, CountMethod method, bool cross_check);

}  // namespace toricdist
