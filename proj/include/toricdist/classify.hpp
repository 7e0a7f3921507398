#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricdist/classgroup.hpp"
#include "toricdist/forms.hpp"
#include "toricdist/gradedring.hpp"

namespace toricdist {

// True when gcd of the degree components does not divide the integer C_n,
// which rules out regular distributions of degree d.
bool gcd_obstruction(const VarietySpec& v, const Multidegree& d);

struct RegularityEquation {
  std::string variety;
  std::string equation;
  std::vector<Multidegree> solutions;  // class-group coordinates
  bool exact = true;                   // false: solutions found by a box search
  std::int64_t box = 0;
};

// Integer solutions of count = 0. Exact for Hirzebruch surfaces, scrolls
// and weighted projective spaces; box search for multiprojective spaces.
RegularityEquation regularity_equation(const VarietySpec& v, std::int64_t box = 50);
// Degrees k of the cover formula with vanishing count: integer roots of
// sum_{j=0}^{n} (-1)^j C_j(m) k^{n-j}, k != 0.
RegularityEquation cover_regularity_equation(const std::vector<std::int64_t>& m, int n);

// Integer solutions (d1, d2) of (d2 - 1)(r d2 - 2(d1 - 1)) = target.
std::vector<Multidegree> hirzebruch_product_solutions(std::int64_t r, std::int64_t target);

enum class CandidateStatus { Regular, Eliminated, Unresolved };
const char* status_name(CandidateStatus s);

struct Candidate {
  Multidegree degree;
  CandidateStatus status = CandidateStatus::Unresolved;
  std::string reason;
  std::optional<OneForm> normal_form;
  std::size_t form_space_dimension = 0;
};

struct ClassificationResult {
  std::string variety;
  std::string equation;
  bool box_verified = false;
  std::int64_t box = 0;
  std::vector<Candidate> candidates;

  std::vector<Multidegree> regular_degrees() const;
};

struct ClassifyOptions {
  std::int64_t box = 50;
  std::size_t cap = kDefaultEnumerationCap;
};

// Decides one candidate degree from its form space: empty space, a common
// factor of all forms, or a common zero outside the irrelevant set
// eliminate it; a form with linear coefficients whose zero set lies in the
// irrelevant set proves it regular.
Candidate analyze_candidate(const VarietySpec& v, const Multidegree& d, std::size_t cap = kDefaultEnumerationCap);

ClassificationResult classify_regular(const VarietySpec& v, const ClassifyOptions& options = {});

// Whether some degree on the Hirzebruch surface H_r has count exactly 1.
bool unique_singularity_check(std::int64_t r);

// 2 + sum_{i<j} dim S_{d - deg z_i - deg z_j}
Integer darboux_bound(const VarietySpec& v, const Multidegree& d, std::size_t cap = kDefaultEnumerationCap);

}  // namespace toricdist
