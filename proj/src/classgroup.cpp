#include "toricdist/classgroup.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "toricdist/errors.hpp"
#include "toricdist/intmatrix.hpp"

namespace toricdist {

namespace {

std::string join_params(const std::vector<std::int64_t>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw Error(ErrorKind::ParseError, "unbalanced parameter list '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::int64_t> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad integer '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

std::string multi_name(std::size_t block, std::size_t index) {
  if (block < 10 && index < 10) return "z" + std::to_string(block) + std::to_string(index);
  return "z" + std::to_string(block) + "_" + std::to_string(index);
}

void check_positive(const std::vector<std::int64_t>& v, const char* what) {
  for (auto x : v)
    if (x < 1) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be positive");
}

}  // namespace

std::string Family::id() const {
  switch (kind) {
    case FamilyKind::Projective: return "projective(" + join_params(params) + ")";
    case FamilyKind::Weighted: return "weighted(" + join_params(params) + ")";
    case FamilyKind::Multiprojective: return "multiprojective(" + join_params(params) + ")";
    case FamilyKind::Hirzebruch: return "hirzebruch(" + join_params(params) + ")";
    case FamilyKind::Scroll: return "scroll(" + join_params(params) + ")";
    case FamilyKind::DelPezzo6: return "delpezzo6";
    case FamilyKind::Generic: break;
  }
  return "generic";
}

Family parse_family(const std::string& name, const std::string& params) {
  Family f;
  std::string n = trim(name);
  for (auto& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "delpezzo6" || n == "delpezzo") {
    f.kind = FamilyKind::DelPezzo6;
    return f;
  }
  f.params = parse_int_list(params);
  if (n == "projective" || n == "p") {
    f.kind = FamilyKind::Projective;
    if (f.params.size() != 1) throw Error(ErrorKind::InvalidInput, "projective takes one parameter");
  } else if (n == "weighted") {
    f.kind = FamilyKind::Weighted;
  } else if (n == "multiprojective") {
    f.kind = FamilyKind::Multiprojective;
  } else if (n == "hirzebruch") {
    f.kind = FamilyKind::Hirzebruch;
    if (f.params.size() != 1) throw Error(ErrorKind::InvalidInput, "hirzebruch takes one parameter");
  } else if (n == "scroll") {
    f.kind = FamilyKind::Scroll;
  } else {
    throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + name + "'");
  }
  return f;
}

Family parse_family(const std::string& text) {
  std::string s = trim(text);
  auto open = s.find_first_of("([");
  if (open == std::string::npos) return parse_family(s, "");
  return parse_family(s.substr(0, open), s.substr(open));
}

VarietySpec class_group_from_rays(const RaySpec& spec) {
  std::size_t k = spec.rays.size();
  std::size_t n = static_cast<std::size_t>(spec.n);
  if (spec.n < 1) throw Error(ErrorKind::InvalidInput, "lattice rank must be positive");
  IntMatrix pairing(k, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.rays[i].size() != n) throw Error(ErrorKind::LengthMismatch, "ray " + std::to_string(i) + " has wrong length");
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      pairing[i][j] = Integer(static_cast<long>(spec.rays[i][j]));
      nonzero = nonzero || spec.rays[i][j] != 0;
    }
    if (!nonzero) throw Error(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " is zero");
  }
  if (k < n + 1) throw Error(ErrorKind::RaysDoNotSpan, "need at least n+1 rays");
  SmithForm snf = smith_normal_form(pairing);
  if (snf.rank < n) throw Error(ErrorKind::RaysDoNotSpan, "rays span a sublattice of rank " + std::to_string(snf.rank));
  for (const auto& f : snf.diagonal)
    if (f != 1) throw Error(ErrorKind::TorsionClassGroup, "class group has torsion factor Z/" + f.get_str());

  // The last k-n rows of U project Z^k onto the cokernel.
  IntMatrix rows(snf.left.begin() + static_cast<std::ptrdiff_t>(n), snf.left.end());
  IntMatrix hnf = hermite_normal_form(rows);

  VarietySpec v;
  v.name = "rays";
  v.n = spec.n;
  v.r = static_cast<int>(k - n);
  v.degrees.assign(k, Multidegree(static_cast<std::size_t>(v.r), 0));
  for (std::size_t i = 0; i < hnf.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) v.degrees[j][i] = to_int64(hnf[i][j]);
  v.variable_names = default_variable_names(v.family, k);
  return v;
}

std::vector<std::string> default_variable_names(const Family& family, std::size_t k) {
  std::vector<std::string> names;
  switch (family.kind) {
    case FamilyKind::Projective:
    case FamilyKind::Weighted:
      for (std::size_t i = 0; i < k; ++i) names.push_back("z" + std::to_string(i));
      return names;
    case FamilyKind::Multiprojective:
      for (std::size_t b = 0; b < family.params.size(); ++b)
        for (std::int64_t j = 0; j <= family.params[b]; ++j) names.push_back(multi_name(b + 1, static_cast<std::size_t>(j)));
      return names;
    case FamilyKind::Hirzebruch:
      return {"z11", "z12", "z21", "z22"};
    case FamilyKind::Scroll:
      names = {"z11", "z12"};
      for (std::size_t i = 0; i < family.params.size(); ++i) names.push_back(multi_name(2, i + 1));
      return names;
    case FamilyKind::DelPezzo6:
      return {"x", "y", "z", "s", "t", "u"};
    case FamilyKind::Generic:
      break;
  }
  for (std::size_t i = 0; i < k; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

VarietySpec projective(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "projective space needs n >= 1");
  VarietySpec v = weighted(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1));
  v.family.kind = FamilyKind::Projective;
  v.family.params = {n};
  v.name = v.family.id();
  v.chow = v.name;
  v.irrelevant_description = "{0}";
  return v;
}

VarietySpec weighted(const std::vector<std::int64_t>& w, bool well_formed) {
  if (w.size() < 2) throw Error(ErrorKind::InvalidWeights, "need at least two weights");
  for (auto x : w)
    if (x < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
  std::int64_t g = 0;
  for (auto x : w) g = std::gcd(g, x);
  if (g != 1) throw Error(ErrorKind::InvalidWeights, "weights have common factor " + std::to_string(g));
  if (well_formed)
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (std::gcd(w[i], w[j]) != 1) throw Error(ErrorKind::InvalidWeights, "weights are not pairwise coprime");
  VarietySpec v;
  v.family.kind = FamilyKind::Weighted;
  v.family.params = w;
  v.family.well_formed = well_formed;
  v.name = v.family.id();
  v.n = static_cast<int>(w.size()) - 1;
  v.r = 1;
  for (auto x : w) v.degrees.push_back({x});
  std::vector<std::size_t> all(w.size());
  std::iota(all.begin(), all.end(), 0);
  v.irrelevant_set = std::vector<CoordinateSubspace>{all};
  v.irrelevant_description = "{0}";
  OrbifoldData orb;
  orb.cover_degrees = w;
  orb.cover_total = 1;
  for (auto x : w) orb.cover_total *= Integer(static_cast<long>(x));
  v.orbifold = orb;
  v.chow = v.name;
  v.variable_names = default_variable_names(v.family, w.size());
  return v;
}

VarietySpec multiprojective(const std::vector<std::int64_t>& dims) {
  if (dims.empty()) throw Error(ErrorKind::InvalidInput, "multiprojective needs at least one factor");
  check_positive(dims, "factor dimensions");
  VarietySpec v;
  v.family.kind = FamilyKind::Multiprojective;
  v.family.params = dims;
  v.name = v.family.id();
  v.r = static_cast<int>(dims.size());
  std::vector<CoordinateSubspace> irr;
  std::string desc;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    v.n += static_cast<int>(dims[b]);
    CoordinateSubspace block;
    for (std::int64_t j = 0; j <= dims[b]; ++j) {
      Multidegree d(dims.size(), 0);
      d[b] = 1;
      block.push_back(v.degrees.size());
      v.degrees.push_back(d);
    }
    irr.push_back(block);
    if (b) desc += " u ";
    desc += "{z" + std::to_string(b + 1) + "=0}";
  }
  v.irrelevant_set = irr;
  v.irrelevant_description = desc;
  v.chow = v.name;
  v.variable_names = default_variable_names(v.family, v.degrees.size());
  return v;
}

VarietySpec hirzebruch(std::int64_t r) {
  if (r < 0) throw Error(ErrorKind::NegativeHirzebruchParameter, "r = " + std::to_string(r));
  VarietySpec v;
  v.family.kind = FamilyKind::Hirzebruch;
  v.family.params = {r};
  v.name = v.family.id();
  v.n = 2;
  v.r = 2;
  v.degrees = {{1, 0}, {0, 1}, {1, 0}, {r, 1}};
  v.irrelevant_set = std::vector<CoordinateSubspace>{{0, 2}, {1, 3}};
  v.irrelevant_description = "Z(z11,z21) u Z(z12,z22)";
  v.chow = v.name;
  v.variable_names = default_variable_names(v.family, 4);
  return v;
}

VarietySpec scroll(const std::vector<std::int64_t>& a) {
  if (a.size() < 2) throw Error(ErrorKind::InvalidInput, "scroll needs at least two twists");
  VarietySpec v;
  v.family.kind = FamilyKind::Scroll;
  v.family.params = a;
  v.name = v.family.id();
  v.n = static_cast<int>(a.size());
  v.r = 2;
  v.degrees = {{1, 0}, {1, 0}};
  CoordinateSubspace fibre;
  for (std::size_t i = 0; i < a.size(); ++i) {
    fibre.push_back(v.degrees.size());
    v.degrees.push_back({-a[i], 1});
  }
  v.irrelevant_set = std::vector<CoordinateSubspace>{{0, 1}, fibre};
  v.irrelevant_description = "{z11=z12=0} u {z21=...=z2n=0}";
  v.chow = v.name;
  v.variable_names = default_variable_names(v.family, v.degrees.size());
  return v;
}

VarietySpec delpezzo6() {
  VarietySpec v;
  v.family.kind = FamilyKind::DelPezzo6;
  v.name = v.family.id();
  v.n = 2;
  v.r = 4;
  // coordinates (H, E1, E2, E3); x,y,z are L1,L2,L3 and s,t,u are E2,E1,E3
  v.degrees = {{1, 0, -1, -1}, {1, -1, 0, -1}, {1, -1, -1, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  v.irrelevant_set = std::vector<CoordinateSubspace>{{0, 4}, {1, 3}, {2, 5}, {0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 4}, {3, 5}};
  v.irrelevant_description = "Z(x,t) u Z(y,s) u Z(z,u) u Z(x,y) u Z(y,z) u Z(z,x) u Z(s,t) u Z(u,t) u Z(s,u)";
  v.chow = v.name;
  v.variable_names = default_variable_names(v.family, 6);
  return v;
}

VarietySpec make_family(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Projective:
      if (f.params.size() != 1) throw Error(ErrorKind::InvalidInput, "projective takes one parameter");
      return projective(static_cast<int>(f.params[0]));
    case FamilyKind::Weighted: return weighted(f.params, f.well_formed);
    case FamilyKind::Multiprojective: return multiprojective(f.params);
    case FamilyKind::Hirzebruch:
      if (f.params.size() != 1) throw Error(ErrorKind::InvalidInput, "hirzebruch takes one parameter");
      return hirzebruch(f.params[0]);
    case FamilyKind::Scroll: return scroll(f.params);
    case FamilyKind::DelPezzo6: return delpezzo6();
    case FamilyKind::Generic: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "generic varieties have no family constructor");
}

std::vector<std::vector<std::int64_t>> degree_matrix(const VarietySpec& v) {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(v.r), std::vector<std::int64_t>(v.k(), 0));
  for (std::size_t j = 0; j < v.k(); ++j) {
    if (v.degrees[j].size() != static_cast<std::size_t>(v.r))
      throw Error(ErrorKind::LengthMismatch, "degree of variable " + std::to_string(j) + " has wrong length");
    for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = v.degrees[j][i];
  }
  return m;
}

std::vector<RadialField> radial_fields(const VarietySpec& v) {
  std::vector<RadialField> out;
  for (auto& row : degree_matrix(v)) out.push_back({row});
  return out;
}

std::vector<std::vector<std::int64_t>> canonical_degree_matrix(const VarietySpec& v) {
  auto m = degree_matrix(v);
  IntMatrix a;
  for (auto& row : m) {
    std::vector<Integer> r;
    for (auto x : row) r.emplace_back(static_cast<long>(x));
    a.push_back(r);
  }
  IntMatrix h = hermite_normal_form(a);
  std::vector<std::vector<std::int64_t>> out;
  for (auto& row : h) {
    std::vector<std::int64_t> r;
    for (auto& x : row) r.push_back(to_int64(x));
    out.push_back(r);
  }
  return out;
}

Multidegree tuple_to_class(const VarietySpec& v, const std::vector<std::int64_t>& t) {
  if (t.size() != static_cast<std::size_t>(v.r))
    throw Error(ErrorKind::LengthMismatch, "degree has " + std::to_string(t.size()) + " entries, expected " + std::to_string(v.r));
  if (v.family.kind == FamilyKind::DelPezzo6) return {t[0], -t[2], -t[1], -t[3]};
  return t;
}

std::vector<std::int64_t> class_to_tuple(const VarietySpec& v, const Multidegree& d) {
  if (d.size() != static_cast<std::size_t>(v.r))
    throw Error(ErrorKind::LengthMismatch, "degree has " + std::to_string(d.size()) + " entries, expected " + std::to_string(v.r));
  if (v.family.kind == FamilyKind::DelPezzo6) return {d[0], -d[2], -d[1], -d[3]};
  return d;
}

void attach_family_metadata(VarietySpec& v) {
  try {
    Family f = parse_family(v.name);
    VarietySpec ref = make_family(f);
    if (ref.degrees == v.degrees && ref.n == v.n) {
      v.family = ref.family;
      v.variable_names = ref.variable_names;
      if (!v.irrelevant_set) v.irrelevant_set = ref.irrelevant_set;
      if (!v.irrelevant_description) v.irrelevant_description = ref.irrelevant_description;
      if (!v.orbifold) v.orbifold = ref.orbifold;
      return;
    }
  } catch (const Error&) {
  }
  if (v.variable_names.size() != v.k()) v.variable_names = default_variable_names(Family{}, v.k());
}

bool in_irrelevant_set(const VarietySpec& v, const std::vector<Rational>& point) {
  if (!v.irrelevant_set) return false;
  for (const auto& sub : *v.irrelevant_set) {
    bool all_zero = true;
    for (auto i : sub) all_zero = all_zero && point.at(i) == 0;
    if (all_zero) return true;
  }
  return false;
}

}  // namespace toricdist
