#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricdist/rational.hpp"

namespace toricdist {

using Multidegree = std::vector<std::int64_t>;

enum class FamilyKind { Generic, Projective, Weighted, Multiprojective, Hirzebruch, Scroll, DelPezzo6 };

struct Family {
  FamilyKind kind = FamilyKind::Generic;
  std::vector<std::int64_t> params;
  bool well_formed = false;  // weighted only: require pairwise coprime weights

  // Canonical textual id such as "hirzebruch(2)" or "scroll(1,2,3)".
  std::string id() const;
};

// Parses ids like "weighted(1,1,2)", "multiprojective(2,1)", "delpezzo6".
Family parse_family(const std::string& text);
// Parses a family name plus a parameter list such as "[1,1,1]" or "(1,2)".
Family parse_family(const std::string& name, const std::string& params);

struct RaySpec {
  int n = 0;
  std::vector<std::vector<std::int64_t>> rays;
};

struct OrbifoldData {
  std::vector<std::int64_t> cover_degrees;  // the m_i of the cover C^{n+r} -> X
  Integer cover_total;                      // deg(phi)
};

// {z_i = 0 for every listed i}
using CoordinateSubspace = std::vector<std::size_t>;

struct VarietySpec {
  std::string name;
  int n = 0;
  int r = 0;
  std::vector<Multidegree> degrees;  // one per Cox variable, each of length r
  std::optional<std::string> irrelevant_description;
  std::optional<std::vector<CoordinateSubspace>> irrelevant_set;
  std::optional<OrbifoldData> orbifold;
  std::optional<std::string> chow;
  Family family;
  std::vector<std::string> variable_names;

  std::size_t k() const { return degrees.size(); }
  bool is_orbifold() const { return orbifold && orbifold->cover_total != 1; }
};

struct RadialField {
  std::vector<std::int64_t> weights;  // R = sum weights[i] z_i d/dz_i
};

VarietySpec class_group_from_rays(const RaySpec& spec);

VarietySpec make_family(const Family& family);
VarietySpec projective(int n);
VarietySpec weighted(const std::vector<std::int64_t>& weights, bool well_formed = false);
VarietySpec multiprojective(const std::vector<std::int64_t>& dims);
VarietySpec hirzebruch(std::int64_t r);
VarietySpec scroll(const std::vector<std::int64_t>& twists);
VarietySpec delpezzo6();

std::vector<RadialField> radial_fields(const VarietySpec& v);

// r x k degree matrix (rows are the radial weight vectors).
std::vector<std::vector<std::int64_t>> degree_matrix(const VarietySpec& v);
// Hermite-reduced degree matrix; two gradings of the same variety agree here.
std::vector<std::vector<std::int64_t>> canonical_degree_matrix(const VarietySpec& v);

// Conversion between the per-family degree tuples used on the command line and
// class-group coordinates. Identity except for the del Pezzo surface, whose
// tuple (d0,d1,d2,d3) means d0 H - d1 E2 - d2 E1 - d3 E3.
Multidegree tuple_to_class(const VarietySpec& v, const std::vector<std::int64_t>& tuple);
std::vector<std::int64_t> class_to_tuple(const VarietySpec& v, const Multidegree& d);

// Default names for Cox variables; "z1".."zk" when the family has none.
std::vector<std::string> default_variable_names(const Family& family, std::size_t k);

// Restores family, names, irrelevant set and orbifold data when the name is a
// family id whose grading matches.
void attach_family_metadata(VarietySpec& v);

bool in_irrelevant_set(const VarietySpec& v, const std::vector<Rational>& point);

}  // namespace toricdist
