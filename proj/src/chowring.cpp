#include "toricdist/chowring.hpp"

#include <functional>
#include <mutex>
#include "json.hpp"

#include "toricdist/errors.hpp"

namespace toricdist {

void ChowClass::add(std::size_t basis_index, const Rational& c) {
  if (c == 0) return;
  auto it = coefficients.find(basis_index);
  if (it == coefficients.end()) {
    coefficients.emplace(basis_index, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coefficients.erase(it);
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  if (o.codim != codim && !o.is_zero() && !is_zero())
    throw Error(ErrorKind::InvalidInput, "adding classes of different codimension");
  if (is_zero()) codim = o.codim;
  for (const auto& [i, c] : o.coefficients) add(i, c);
  return *this;
}

ChowClass ChowClass::operator*(const Rational& c) const {
  ChowClass out;
  out.codim = codim;
  if (c == 0) return out;
  for (const auto& [i, x] : coefficients) out.coefficients.emplace(i, x * c);
  return out;
}

ChowPresentation::ChowPresentation(std::string id, int dimension, std::vector<ChowBasisElement> basis,
                                   std::map<std::pair<std::size_t, std::size_t>, ChowClass> products,
                                   std::map<std::size_t, Rational> integrals, std::vector<std::size_t> divisor_basis)
    : id_(std::move(id)), dimension_(dimension), basis_(std::move(basis)), divisor_basis_(std::move(divisor_basis)) {
  std::size_t m = basis_.size();
  bool have_unit = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis_[i].codim < 0 || basis_[i].codim > dimension_)
      throw Error(ErrorKind::InvalidPresentation, "basis element " + basis_[i].name + " has codimension out of range");
    if (basis_[i].codim == 0) {
      if (have_unit) throw Error(ErrorKind::InvalidPresentation, "more than one codimension-0 basis element");
      have_unit = true;
      unit_ = i;
    }
  }
  if (!have_unit) throw Error(ErrorKind::InvalidPresentation, "no codimension-0 basis element");
  for (auto d : divisor_basis_)
    if (d >= m || basis_[d].codim != 1) throw Error(ErrorKind::InvalidPresentation, "divisor basis entry is not a codimension-1 element");

  table_.assign(m, std::vector<ChowClass>(m));
  std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
  for (auto& [key, cls] : products) {
    auto [i, j] = key;
    if (i >= m || j >= m) throw Error(ErrorKind::InvalidPresentation, "product refers to unknown basis element");
    int codim = basis_[i].codim + basis_[j].codim;
    if (codim > dimension_) throw Error(ErrorKind::InvalidPresentation, "product " + basis_[i].name + "*" + basis_[j].name + " exceeds the dimension");
    ChowClass c = cls;
    for (const auto& [b, x] : c.coefficients)
      if (b >= m || basis_[b].codim != codim)
        throw Error(ErrorKind::InvalidPresentation, "product " + basis_[i].name + "*" + basis_[j].name + " is not homogeneous of codimension " + std::to_string(codim));
    c.codim = codim;
    if ((given[i][j] && !(table_[i][j] == c)) || (given[j][i] && !(table_[j][i] == c)))
      throw Error(ErrorKind::InvalidPresentation, "product " + basis_[i].name + "*" + basis_[j].name + " is not commutative");
    table_[i][j] = c;
    table_[j][i] = c;
    given[i][j] = given[j][i] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      int codim = basis_[i].codim + basis_[j].codim;
      if (codim > dimension_) continue;
      if (i == unit_ || j == unit_) {
        ChowClass expected = basis_class(i == unit_ ? j : i);
        if (given[i][j] && !(table_[i][j] == expected))
          throw Error(ErrorKind::InvalidPresentation, "unit does not act as identity on " + basis_[i == unit_ ? j : i].name);
        table_[i][j] = expected;
      } else if (!given[i][j]) {
        table_[i][j] = zero(codim);
      }
    }

  integral_.assign(m, 0);
  for (auto& [i, q] : integrals) {
    if (i >= m || basis_[i].codim != dimension_)
      throw Error(ErrorKind::InvalidPresentation, "integral given for a non-top-degree element");
    integral_[i] = q;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis_[i].codim == dimension_ && !integrals.count(i))
      throw Error(ErrorKind::InvalidPresentation, "missing integral for " + basis_[i].name);
  validate();
}

void ChowPresentation::validate() const {
  std::size_t m = basis_.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (basis_[a].codim + basis_[b].codim + basis_[c].codim > dimension_) continue;
        ChowClass left = product(product(basis_class(a), basis_class(b)), basis_class(c));
        ChowClass right = product(basis_class(a), product(basis_class(b), basis_class(c)));
        if (!(left == right))
          throw Error(ErrorKind::InvalidPresentation, "multiplication is not associative on (" + basis_[a].name + ", " +
                                                          basis_[b].name + ", " + basis_[c].name + ")");
      }
}

std::size_t ChowPresentation::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw Error(ErrorKind::InvalidPresentation, "unknown basis element '" + name + "'");
}

ChowClass ChowPresentation::basis_class(std::size_t index) const {
  ChowClass c;
  c.codim = basis_.at(index).codim;
  c.coefficients.emplace(index, 1);
  return c;
}

ChowClass ChowPresentation::zero(int codim) const {
  ChowClass c;
  c.codim = codim;
  return c;
}

ChowClass ChowPresentation::divisor(const Multidegree& d) const {
  if (d.size() != divisor_basis_.size())
    throw Error(ErrorKind::LengthMismatch, "degree has " + std::to_string(d.size()) + " entries, presentation has " +
                                               std::to_string(divisor_basis_.size()) + " divisor generators");
  ChowClass c = zero(1);
  for (std::size_t i = 0; i < d.size(); ++i) c.add(divisor_basis_[i], Rational(static_cast<long>(d[i])));
  return c;
}

ChowClass ChowPresentation::product(const ChowClass& a, const ChowClass& b) const {
  int codim = a.codim + b.codim;
  if (codim > dimension_)
    throw Error(ErrorKind::CodimensionOverflow, "codimension " + std::to_string(codim) + " exceeds dimension " + std::to_string(dimension_));
  ChowClass out = zero(codim);
  for (const auto& [i, x] : a.coefficients)
    for (const auto& [j, y] : b.coefficients)
      for (const auto& [t, z] : table_[i][j].coefficients) out.add(t, x * y * z);
  return out;
}

Rational ChowPresentation::integrate(const ChowClass& a) const {
  if (a.codim != dimension_)
    throw Error(ErrorKind::NotTopDegree, "class of codimension " + std::to_string(a.codim) + " on a variety of dimension " +
                                             std::to_string(dimension_));
  Rational total = 0;
  for (const auto& [i, x] : a.coefficients) total += x * integral_[i];
  return total;
}

std::string ChowPresentation::to_string(const ChowClass& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [i, x] : a.coefficients) {
    if (!out.empty()) out += x < 0 ? " - " : " + ";
    else if (x < 0) out += "-";
    Rational mag = abs(x);
    if (mag != 1 || i == unit_) out += toricdist::to_string(mag) + (i == unit_ ? "" : "*");
    if (i != unit_) out += basis_[i].name;
  }
  return out;
}

namespace {

using Reducer = std::function<ChowClass(const std::vector<int>&)>;

std::string monomial_name(const std::vector<int>& e, const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// Presentation whose basis is a set of monomials in codimension-1 generators;
// reduce() rewrites any monomial of codimension <= n into the basis.
std::shared_ptr<const ChowPresentation> monomial_presentation(const std::string& id, int n, const std::vector<std::string>& gens,
                                                              const std::vector<std::vector<int>>& basis_exps,
                                                              const std::vector<std::string>& names, const Reducer& reduce,
                                                              const std::map<std::size_t, Rational>& integrals) {
  std::vector<ChowBasisElement> basis;
  for (std::size_t i = 0; i < basis_exps.size(); ++i) {
    int codim = 0;
    for (int x : basis_exps[i]) codim += x;
    basis.push_back({names.empty() ? monomial_name(basis_exps[i], gens) : names[i], codim});
  }
  std::map<std::pair<std::size_t, std::size_t>, ChowClass> products;
  for (std::size_t i = 0; i < basis_exps.size(); ++i)
    for (std::size_t j = i; j < basis_exps.size(); ++j) {
      if (basis[i].codim + basis[j].codim > n) continue;
      std::vector<int> e(gens.size());
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = basis_exps[i][t] + basis_exps[j][t];
      ChowClass c = reduce(e);
      c.codim = basis[i].codim + basis[j].codim;
      products.emplace(std::make_pair(i, j), c);
    }
  std::vector<std::size_t> divisors;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<int> e(gens.size(), 0);
    e[g] = 1;
    for (std::size_t i = 0; i < basis_exps.size(); ++i)
      if (basis_exps[i] == e) divisors.push_back(i);
  }
  return std::make_shared<const ChowPresentation>(id, n, std::move(basis), std::move(products), integrals, std::move(divisors));
}

std::size_t index_of(const std::vector<std::vector<int>>& basis, const std::vector<int>& e) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == e) return i;
  throw Error(ErrorKind::InvalidPresentation, "monomial missing from basis");
}

ChowClass single(std::size_t idx, const Rational& c) {
  ChowClass out;
  out.add(idx, c);
  return out;
}

std::shared_ptr<const ChowPresentation> build_multiprojective(const VarietySpec& v) {
  const auto& dims = v.family.params;
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < dims.size(); ++i) gens.push_back("h" + std::to_string(i + 1));
  std::vector<std::vector<int>> basis{{}};
  for (auto d : dims) {
    std::vector<std::vector<int>> next;
    for (auto& b : basis)
      for (int e = 0; e <= d; ++e) {
        auto c = b;
        c.push_back(e);
        next.push_back(c);
      }
    basis = next;
  }
  std::vector<int> top(dims.begin(), dims.end());
  auto reduce = [&, top](const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > top[i]) return ChowClass{};
    return single(index_of(basis, e), 1);
  };
  return monomial_presentation(v.family.id(), v.n, gens, basis, {}, reduce, {{index_of(basis, top), Rational(1)}});
}

std::shared_ptr<const ChowPresentation> build_weighted(const VarietySpec& v) {
  std::vector<std::vector<int>> basis;
  for (int j = 0; j <= v.n; ++j) basis.push_back({j});
  Integer prod = 1;
  for (const auto& d : v.degrees) prod *= Integer(static_cast<long>(d[0]));
  auto reduce = [](const std::vector<int>& e) { return single(static_cast<std::size_t>(e[0]), 1); };
  return monomial_presentation(v.family.id(), v.n, {"H"}, basis, {}, reduce, {{static_cast<std::size_t>(v.n), Rational(1) / Rational(prod)}});
}

std::shared_ptr<const ChowPresentation> build_hirzebruch(const VarietySpec& v) {
  std::int64_t r = v.family.params[0];
  std::vector<std::vector<int>> basis{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto reduce = [r](const std::vector<int>& e) {
    if (e == std::vector<int>{2, 0}) return ChowClass{};
    if (e == std::vector<int>{0, 2}) return single(3, Rational(static_cast<long>(-r)));
    std::vector<std::vector<int>> b{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return single(index_of(b, e), 1);
  };
  return monomial_presentation(v.family.id(), 2, {"h1", "h2"}, basis, {"1", "h1", "h2", "pt"}, reduce, {{3, Rational(1)}});
}

std::shared_ptr<const ChowPresentation> build_scroll(const VarietySpec& v) {
  int n = v.n;
  Integer twist = 0;
  for (auto a : v.family.params) twist += Integer(static_cast<long>(a));
  std::vector<std::vector<int>> basis{{0, 0}};
  for (int j = 1; j < n; ++j) {
    basis.push_back({1, j - 1});
    basis.push_back({0, j});
  }
  basis.push_back({1, n - 1});
  std::size_t top = basis.size() - 1;
  auto reduce = [n, twist, basis, top](const std::vector<int>& e) {
    if (e[0] >= 2) return ChowClass{};
    if (e[0] + e[1] == n) return single(top, e[0] == 1 ? Rational(1) : Rational(twist));
    return single(index_of(basis, e), 1);
  };
  return monomial_presentation(v.family.id(), n, {"L", "M"}, basis, {}, reduce, {{top, Rational(1)}});
}

std::shared_ptr<const ChowPresentation> build_delpezzo(const VarietySpec& v) {
  std::vector<std::vector<int>> basis{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {2, 0, 0, 0}};
  auto reduce = [basis](const std::vector<int>& e) {
    int codim = e[0] + e[1] + e[2] + e[3];
    if (codim < 2) return single(index_of(basis, e), 1);
    if (e[0] == 2) return single(5, 1);
    for (int i = 1; i < 4; ++i)
      if (e[static_cast<std::size_t>(i)] == 2) return single(5, -1);
    return ChowClass{};
  };
  return monomial_presentation(v.family.id(), 2, {"H", "E1", "E2", "E3"}, basis, {"1", "H", "E1", "E2", "E3", "pt"}, reduce,
                               {{5, Rational(1)}});
}

std::mutex registry_mutex;
std::map<std::string, std::shared_ptr<const ChowPresentation>>& registry() {
  static std::map<std::string, std::shared_ptr<const ChowPresentation>> r;
  return r;
}

}  // namespace

std::shared_ptr<const ChowPresentation> family_presentation(const VarietySpec& v) {
  switch (v.family.kind) {
    case FamilyKind::Multiprojective: return build_multiprojective(v);
    case FamilyKind::Projective:
    case FamilyKind::Weighted: return build_weighted(v);
    case FamilyKind::Hirzebruch: return build_hirzebruch(v);
    case FamilyKind::Scroll: return build_scroll(v);
    case FamilyKind::DelPezzo6: return build_delpezzo(v);
    case FamilyKind::Generic: break;
  }
  throw Error(ErrorKind::MissingChowPresentation, "no built-in Chow presentation for " + v.name);
}

std::shared_ptr<const ChowPresentation> presentation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidPresentation, std::string("malformed JSON: ") + e.what());
  }
  try {
    std::vector<ChowBasisElement> basis;
    std::map<std::string, std::size_t> index;
    int n = 0;
    for (const auto& b : j.at("basis")) {
      ChowBasisElement e{b.at("name").get<std::string>(), b.at("codim").get<int>()};
      if (index.count(e.name)) throw Error(ErrorKind::InvalidPresentation, "duplicate basis element " + e.name);
      index[e.name] = basis.size();
      n = std::max(n, e.codim);
      basis.push_back(e);
    }
    if (j.contains("dimension")) n = j.at("dimension").get<int>();
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorKind::InvalidPresentation, "unknown basis element '" + name + "'");
      return it->second;
    };
    auto rational_of = [](const nlohmann::json& x) {
      if (x.is_string()) return parse_rational(x.get<std::string>());
      if (x.is_number_integer()) return Rational(static_cast<long>(x.get<std::int64_t>()));
      throw Error(ErrorKind::InvalidPresentation, "coefficients must be integers or \"p/q\" strings");
    };
    std::map<std::pair<std::size_t, std::size_t>, ChowClass> products;
    if (j.contains("products"))
      for (const auto& [key, value] : j.at("products").items()) {
        auto star = key.find('*');
        if (star == std::string::npos) throw Error(ErrorKind::InvalidPresentation, "product key '" + key + "' is not of the form a*b");
        std::size_t a = lookup(key.substr(0, star)), b = lookup(key.substr(star + 1));
        ChowClass c;
        c.codim = basis[a].codim + basis[b].codim;
        for (const auto& [name, coeff] : value.items()) c.add(lookup(name), rational_of(coeff));
        auto k = std::make_pair(a, b);
        if (products.count(k) && !(products[k] == c))
          throw Error(ErrorKind::InvalidPresentation, "conflicting entries for " + key);
        products[k] = c;
      }
    std::map<std::size_t, Rational> integrals;
    for (const auto& [name, value] : j.at("integrals").items()) integrals[lookup(name)] = rational_of(value);
    std::vector<std::size_t> divisors;
    if (j.contains("divisors")) {
      for (const auto& d : j.at("divisors")) divisors.push_back(lookup(d.get<std::string>()));
    } else {
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].codim == 1) divisors.push_back(i);
    }
    std::string id = j.value("id", std::string("table"));
    return std::make_shared<const ChowPresentation>(id, n, std::move(basis), std::move(products), std::move(integrals), std::move(divisors));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidPresentation, e.what());
  }
}

void register_presentation(std::shared_ptr<const ChowPresentation> p) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  registry()[p->id()] = std::move(p);
}

std::shared_ptr<const ChowPresentation> presentation_for(const VarietySpec& v) {
  if (!v.chow) throw Error(ErrorKind::MissingChowPresentation, v.name + " has no Chow presentation");
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(*v.chow);
    if (it != registry().end()) return it->second;
  }
  if (v.family.kind != FamilyKind::Generic && v.family.id() == *v.chow) return family_presentation(v);
  throw Error(ErrorKind::MissingChowPresentation, "unknown Chow presentation '" + *v.chow + "'");
}

ChowClass chow_product(const ChowPresentation& p, const ChowClass& a, const ChowClass& b) { return p.product(a, b); }

Rational chow_integrate(const ChowPresentation& p, const ChowClass& a) { return p.integrate(a); }

ChowClass power(const ChowPresentation& p, const ChowClass& a, int e) {
  ChowClass out = p.one();
  for (int i = 0; i < e; ++i) out = p.product(out, a);
  return out;
}

std::vector<ChowClass> elementary_symmetric_classes(const ChowPresentation& p, const VarietySpec& v) {
  int n = p.dimension();
  std::vector<ChowClass> e;
  e.push_back(p.one());
  for (int j = 1; j <= n; ++j) e.push_back(p.zero(j));
  for (const auto& d : v.degrees) {
    ChowClass h = p.divisor(d);
    for (int j = n; j >= 1; --j) e[static_cast<std::size_t>(j)] += p.product(e[static_cast<std::size_t>(j - 1)], h);
  }
  return e;
}

ChowClass elementary_symmetric_class(const ChowPresentation& p, const VarietySpec& v, int j) {
  if (j < 0 || j > p.dimension())
    throw Error(ErrorKind::IndexOutOfRange, "C_" + std::to_string(j) + " requested on a variety of dimension " + std::to_string(p.dimension()));
  return elementary_symmetric_classes(p, v)[static_cast<std::size_t>(j)];
}

}  // namespace toricdist
