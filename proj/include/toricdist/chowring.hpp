#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toricdist/classgroup.hpp"
#include "toricdist/rational.hpp"

namespace toricdist {

// Element of a single codimension, as rational coefficients on basis indices.
struct ChowClass {
  int codim = 0;
  std::map<std::size_t, Rational> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  void add(std::size_t basis_index, const Rational& c);
  ChowClass& operator+=(const ChowClass& o);
  ChowClass operator*(const Rational& c) const;
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.codim == b.codim && a.coefficients == b.coefficients;
  }
};

struct ChowBasisElement {
  std::string name;
  int codim = 0;
};

// Finite-rank graded ring given by a basis, a full multiplication table and
// the degrees of the top-codimension basis elements. Immutable once built;
// construction validates commutativity and associativity.
class ChowPresentation {
 public:
  ChowPresentation(std::string id, int dimension, std::vector<ChowBasisElement> basis,
                   std::map<std::pair<std::size_t, std::size_t>, ChowClass> products,
                   std::map<std::size_t, Rational> integrals, std::vector<std::size_t> divisor_basis);

  const std::string& id() const { return id_; }
  int dimension() const { return dimension_; }
  const std::vector<ChowBasisElement>& basis() const { return basis_; }
  std::size_t unit() const { return unit_; }
  // Basis elements matching the class-group coordinates, in order.
  const std::vector<std::size_t>& divisor_basis() const { return divisor_basis_; }
  std::size_t find(const std::string& name) const;

  ChowClass basis_class(std::size_t index) const;
  ChowClass zero(int codim) const;
  ChowClass one() const { return basis_class(unit_); }
  // Divisor class of a multidegree in class-group coordinates.
  ChowClass divisor(const Multidegree& d) const;

  ChowClass product(const ChowClass& a, const ChowClass& b) const;
  Rational integrate(const ChowClass& a) const;

  std::string to_string(const ChowClass& a) const;

 private:
  void validate() const;

  std::string id_;
  int dimension_;
  std::vector<ChowBasisElement> basis_;
  std::vector<std::vector<ChowClass>> table_;
  std::vector<Rational> integral_;
  std::vector<std::size_t> divisor_basis_;
  std::size_t unit_ = 0;
};

// Built-in presentation for the variety's family.
std::shared_ptr<const ChowPresentation> family_presentation(const VarietySpec& v);

// Table-driven presentation:
//   {"id": ..., "basis": [{"name": "1", "codim": 0}, ...],
//    "products": {"h1*h2": {"pt": "1"}, ...}, "integrals": {"pt": "1"},
//    "divisors": ["h1", "h2"]}
// Unlisted products of total codimension <= n are zero; products with the
// unit are implicit.
std::shared_ptr<const ChowPresentation> presentation_from_json(const std::string& json_text);

// Registry of table-driven presentations keyed by id.
void register_presentation(std::shared_ptr<const ChowPresentation> p);
// Presentation named by v.chow: a registered table or the family's built-in one.
std::shared_ptr<const ChowPresentation> presentation_for(const VarietySpec& v);

ChowClass chow_product(const ChowPresentation& p, const ChowClass& a, const ChowClass& b);
Rational chow_integrate(const ChowPresentation& p, const ChowClass& a);
// j-th elementary symmetric polynomial in the classes of the Cox variables.
ChowClass elementary_symmetric_class(const ChowPresentation& p, const VarietySpec& v, int j);
// sum_i of the divisor classes, all C_j at once (index j).
std::vector<ChowClass> elementary_symmetric_classes(const ChowPresentation& p, const VarietySpec& v);
ChowClass power(const ChowPresentation& p, const ChowClass& a, int e);

}  // namespace toricdist
