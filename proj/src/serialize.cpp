#include "toricdist/serialize.hpp"

#include <cctype>

#include "toricdist/errors.hpp"

namespace toricdist {

namespace {

constexpr std::int64_t kSafeInteger = (std::int64_t{1} << 53);

Json tuple_json(const std::vector<std::int64_t>& t) {
  Json a = Json::array();
  for (auto x : t) a.push_back(integer_json(x));
  return a;
}

}  // namespace

Json integer_json(std::int64_t x) {
  if (x > kSafeInteger || x < -kSafeInteger) return std::to_string(x);
  return x;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return integer_json(static_cast<std::int64_t>(x.get_si()));
  return x.get_str();
}

std::int64_t int64_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.get<std::string>());
    return to_int64(q.get_num());
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

Json to_json(const VarietySpec& v) {
  Json j;
  j["name"] = v.name;
  j["n"] = v.n;
  j["r"] = v.r;
  Json degs = Json::array();
  for (const auto& d : v.degrees) degs.push_back(tuple_json(d));
  j["degrees"] = degs;
  if (v.orbifold) {
    Json o;
    o["m"] = tuple_json(v.orbifold->cover_degrees);
    o["deg_phi"] = integer_json(v.orbifold->cover_total);
    j["orbifold"] = o;
  } else {
    j["orbifold"] = nullptr;
  }
  j["chow"] = v.chow ? Json(*v.chow) : Json(nullptr);
  return j;
}

VarietySpec variety_from_json(const Json& j) {
  try {
    VarietySpec v;
    v.name = j.at("name").get<std::string>();
    v.n = static_cast<int>(int64_from_json(j.at("n")));
    v.r = static_cast<int>(int64_from_json(j.at("r")));
    for (const auto& d : j.at("degrees")) {
      Multidegree deg;
      for (const auto& x : d) deg.push_back(int64_from_json(x));
      if (deg.size() != static_cast<std::size_t>(v.r)) throw Error(ErrorKind::LengthMismatch, "degree entry has wrong length");
      v.degrees.push_back(deg);
    }
    if (v.r < 1 || v.degrees.size() != static_cast<std::size_t>(v.n + v.r))
      throw Error(ErrorKind::InvalidInput, "need n + r variable degrees");
    if (j.contains("orbifold") && !j.at("orbifold").is_null()) {
      OrbifoldData o;
      for (const auto& x : j.at("orbifold").at("m")) o.cover_degrees.push_back(int64_from_json(x));
      const Json& total = j.at("orbifold").at("deg_phi");
      o.cover_total = total.is_string() ? Integer(total.get<std::string>()) : Integer(static_cast<long>(int64_from_json(total)));
      v.orbifold = o;
    }
    if (j.contains("chow") && !j.at("chow").is_null()) v.chow = j.at("chow").get<std::string>();
    if (j.contains("irrelevant_description") && j.at("irrelevant_description").is_string())
      v.irrelevant_description = j.at("irrelevant_description").get<std::string>();
    attach_family_metadata(v);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed variety JSON: ") + e.what());
  }
}

std::vector<std::int64_t> parse_degree(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw Error(ErrorKind::ParseError, "unbalanced degree '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad degree '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json to_json(const CountReport& report, const VarietySpec& v) {
  Json j;
  j["variety"] = report.variety;
  j["d"] = tuple_json(class_to_tuple(v, report.d));
  j["count"] = to_string(report.count);
  j["method"] = method_name(report.method);
  j["cross_checked"] = report.cross_checked;
  return j;
}

Json to_json(const ClassificationResult& result, const VarietySpec& v) {
  VariableNames names = variable_names(v);
  Json j;
  j["variety"] = result.variety;
  j["equation"] = result.equation;
  j["solution_set"] = result.box_verified ? "box_verified" : "exact";
  if (result.box_verified) j["box"] = result.box;
  Json list = Json::array();
  for (const auto& c : result.candidates) {
    Json e;
    e["degree"] = tuple_json(class_to_tuple(v, c.degree));
    e["status"] = status_name(c.status);
    e["reason"] = c.reason;
    e["normal_form"] = c.normal_form ? Json(to_string(*c.normal_form, names)) : Json(nullptr);
    list.push_back(e);
  }
  if (result.candidates.empty() && result.box_verified) {
    Json e;
    e["degree"] = nullptr;
    e["status"] = "box_verified_empty";
    e["reason"] = "no integer solution with |d_i| <= " + std::to_string(result.box);
    e["normal_form"] = nullptr;
    list.push_back(e);
  }
  j["candidates"] = list;
  Json regular = Json::array();
  for (const auto& d : result.regular_degrees()) regular.push_back(tuple_json(class_to_tuple(v, d)));
  j["regular"] = regular;
  return j;
}

Json to_json(const ValidationReport& report, const VarietySpec& v) {
  VariableNames names = variable_names(v);
  Json j;
  j["valid"] = report.valid;
  Json coeffs = Json::array();
  for (const auto& c : report.coefficients) {
    Json e;
    e["variable"] = names.name(c.index);
    e["ok"] = c.ok;
    e["expected_degree"] = tuple_json(c.expected);
    if (c.actual) e["degree"] = tuple_json(*c.actual);
    else e["degree"] = c.homogeneous ? Json("zero") : Json("not quasi-homogeneous");
    coeffs.push_back(e);
  }
  j["coefficients"] = coeffs;
  Json contr = Json::array();
  for (const auto& c : report.contractions) {
    Json e;
    e["radial_field"] = c.field;
    e["ok"] = c.ok;
    e["contraction"] = to_string(c.value, names);
    contr.push_back(e);
  }
  j["contractions"] = contr;
  return j;
}

Json to_json(const OneForm& w, const VariableNames& names) {
  Json a = Json::array();
  for (const auto& p : w.coefficients) a.push_back(to_string(p, names));
  return a;
}

OneForm one_form_from_json(const Json& j, const VariableNames& names) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "1-form JSON must be an array of polynomials");
  if (!names.is_open() && j.size() != names.size()) throw Error(ErrorKind::LengthMismatch, "1-form has wrong number of coefficients");
  VariableNames use = names.is_open() ? VariableNames([&] {
    std::vector<std::string> n;
    for (std::size_t i = 0; i < j.size(); ++i) n.push_back("z" + std::to_string(i + 1));
    return n;
  }())
                                      : names;
  OneForm w;
  for (const auto& p : j) w.coefficients.push_back(parse_polynomial(p.get<std::string>(), use));
  return w;
}

MonomialChartForm chart_form_from_json(const Json& j) {
  try {
    MonomialChartForm c;
    for (const auto& comp : j.at("components")) {
      const Json& coeff = comp.at("coefficient");
      c.coefficients.push_back(coeff.is_string() ? parse_rational(coeff.get<std::string>()) : Rational(static_cast<long>(int64_from_json(coeff))));
      Exponents e;
      for (const auto& x : comp.at("exponents")) e.push_back(static_cast<int>(int64_from_json(x)));
      c.exponents.push_back(e);
    }
    c.dimension = c.coefficients.size();
    const Json& g = j.at("group_order");
    c.group_order = g.is_string() ? Integer(g.get<std::string>()) : Integer(static_cast<long>(int64_from_json(g)));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed chart form JSON: ") + e.what());
  }
}

}  // namespace toricdist
