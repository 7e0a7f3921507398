#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricdist/classgroup.hpp"
#include "toricdist/polynomial.hpp"

namespace toricdist {

constexpr std::size_t kDefaultEnumerationCap = 1000000;

// Reads TORIC_DIST_CAP, falling back to the default.
std::size_t enumeration_cap_from_env();

Multidegree monomial_degree(const VarietySpec& v, const Exponents& e);

// Common degree of all terms, or nothing when f is not quasi-homogeneous.
std::optional<Multidegree> quasi_degree(const VarietySpec& v, const Polynomial& f);

// All monomials of degree alpha, in descending lexicographic order of their
// exponent vectors.
std::vector<Exponents> graded_piece_basis(const VarietySpec& v, const Multidegree& alpha,
                                          std::size_t cap = kDefaultEnumerationCap);

// Closed-form dimension for multiprojective, projective, weighted and scroll
// varieties; scrolls outside the nonnegative range fall back to enumeration.
Integer closed_form_dim(const VarietySpec& v, const Multidegree& alpha, std::size_t cap = kDefaultEnumerationCap);

// Dimension via the closed form when the family has one, else by enumeration.
Integer graded_piece_dim(const VarietySpec& v, const Multidegree& alpha, std::size_t cap = kDefaultEnumerationCap);

// theta_k with i_{R_k}(df) = theta_k f for every radial field.
std::vector<Rational> euler_formula_check(const VarietySpec& v, const Polynomial& f);

// R(f) = sum weights[i] z_i df/dz_i
Polynomial apply_radial_field(const RadialField& field, const Polynomial& f);

VariableNames variable_names(const VarietySpec& v);

}  // namespace toricdist
