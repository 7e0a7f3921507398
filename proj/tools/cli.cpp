#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "toricdist/classify.hpp"
#include "toricdist/counting.hpp"
#include "toricdist/errors.hpp"
#include "toricdist/forms.hpp"
#include "toricdist/gradedring.hpp"
#include "toricdist/serialize.hpp"

using namespace toricdist;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const std::string& kind, const std::string& detail, int code) {
  Json e;
  e["error"]["kind"] = kind;
  e["error"]["detail"] = detail;
  emit(e);
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

// A JSON file or a family id such as "hirzebruch(1)". A file may carry a
// table-driven Chow presentation under "chow_table".
VarietySpec load_variety(const std::string& arg) {
  if (!std::filesystem::is_regular_file(arg)) return make_family(parse_family(arg));
  Json j = parse_json_text(read_file(arg), arg);
  if (j.contains("chow_table")) {
    auto p = presentation_from_json(j.at("chow_table").dump());
    register_presentation(p);
    if (!j.contains("chow") || j.at("chow").is_null()) j["chow"] = p->id();
  }
  return variety_from_json(j);
}

Multidegree load_degree(const VarietySpec& v, const std::string& text) {
  auto tuple = parse_degree(text);
  if (tuple.size() != static_cast<std::size_t>(v.r))
    throw Error(ErrorKind::LengthMismatch, "degree '" + text + "' needs " + std::to_string(v.r) + " entries");
  return tuple_to_class(v, tuple);
}

Json tuple_json(const VarietySpec& v, const Multidegree& d) {
  Json a = Json::array();
  for (auto x : class_to_tuple(v, d)) a.push_back(integer_json(x));
  return a;
}

CountMethod method_from(const std::string& s) {
  if (s == "general") return CountMethod::General;
  if (s == "closed") return CountMethod::ClosedForm;
  if (s == "cover") return CountMethod::Cover;
  throw Error(ErrorKind::InvalidInput, "unknown method '" + s + "'");
}

// Affine space with every coordinate of degree 1, for forms given without a
// variety.
VarietySpec standard_grading(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidInput, "need at least two variables");
  VarietySpec v = projective(static_cast<int>(k) - 1);
  v.name = "standard grading on C^" + std::to_string(k);
  v.family = Family{};
  v.variable_names = default_variable_names(v.family, k);
  v.irrelevant_set.reset();
  v.orbifold.reset();
  v.chow.reset();
  return v;
}

struct FormInput {
  VarietySpec variety;
  OneForm form;
  VariableNames names;
};

FormInput load_form(const std::string& text, const std::string& variety_arg) {
  FormInput in;
  if (!variety_arg.empty()) {
    in.variety = load_variety(variety_arg);
    in.names = variable_names(in.variety);
    in.form = parse_one_form(text, in.names);
  } else {
    in.form = parse_one_form(text, VariableNames::open());
    in.variety = standard_grading(in.form.nvars());
    in.names = variable_names(in.variety);
  }
  return in;
}

Polynomial load_polynomial(const std::string& text, const FormInput& in) {
  Polynomial p = parse_polynomial(text, in.names);
  if (p.nvars() != in.form.nvars()) {
    Polynomial widened(in.form.nvars());
    for (const auto& [e, c] : p.terms()) {
      if (e.size() > in.form.nvars()) throw Error(ErrorKind::LengthMismatch, "polynomial uses variables the form does not have");
      Exponents f(e);
      f.resize(in.form.nvars(), 0);
      widened.add_term(f, c);
    }
    return widened;
  }
  return p;
}

std::vector<Multidegree> degree_box(const VarietySpec& v, std::int64_t box) {
  std::vector<Multidegree> out;
  std::size_t r = static_cast<std::size_t>(v.r);
  std::vector<std::int64_t> t(r, -box);
  while (true) {
    out.push_back(t);
    std::size_t i = r;
    while (i > 0 && t[i - 1] == box) t[--i] = -box;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

Json sweep(const VarietySpec& v, std::int64_t box, CountMethod method, bool parallel) {
  std::vector<Multidegree> tuples = degree_box(v, box);
  std::vector<Rational> counts(tuples.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) counts[i] = count(v, tuple_to_class(v, tuples[i]), method, false).count;
  };
  if (parallel) {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t chunk = (tuples.size() + threads - 1) / threads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk, end = std::min(tuples.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    work(0, tuples.size());
  }
  Json j;
  j["variety"] = v.name;
  j["box"] = box;
  j["method"] = method_name(method);
  Json rows = Json::array(), zeros = Json::array();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Json row;
    Json d = Json::array();
    for (auto x : tuples[i]) d.push_back(integer_json(x));
    row["d"] = d;
    row["count"] = to_string(counts[i]);
    rows.push_back(row);
    if (counts[i] == 0) zeros.push_back(d);
  }
  j["counts"] = rows;
  j["zero_count_degrees"] = zeros;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of codimension-one distributions on toric orbifolds"};
  app.require_subcommand(1, 1);

  std::string variety_arg, degree_arg, form_arg, poly_arg, p_arg, q_arg, family_arg, params_arg, path_arg, method_arg = "general";
  bool cross_check = false, parallel = false;
  std::int64_t box = 50;

  auto* describe = app.add_subcommand("describe", "Grading, radial fields and irrelevant set of a variety");
  describe->add_option("variety", variety_arg, "JSON file or family id")->required();

  auto* hdim = app.add_subcommand("hdim", "Dimension of a graded piece of the Cox ring");
  hdim->add_option("variety", variety_arg)->required();
  hdim->add_option("alpha", degree_arg)->required();

  auto* cnt = app.add_subcommand("count", "Weighted number of singularities in degree d");
  cnt->add_option("variety", variety_arg)->required();
  cnt->add_option("d", degree_arg)->required();
  cnt->add_option("--method", method_arg, "general, closed or cover");
  cnt->add_flag("--cross-check", cross_check, "Compare against every other applicable method");

  auto* classify = app.add_subcommand("classify", "Regular distributions of a family");
  classify->add_option("family", family_arg)->required();
  classify->add_option("params", params_arg, "Parameter list such as [1,1,1]");
  classify->add_option("--box", box, "Search box for multiprojective spaces");

  auto* validate = app.add_subcommand("validate", "Check that a 1-form defines a distribution of degree d");
  validate->add_option("variety", variety_arg)->required();
  validate->add_option("form", form_arg)->required();
  validate->add_option("d", degree_arg)->required();

  auto* integrable = app.add_subcommand("integrable", "Frobenius condition w ^ dw = 0");
  integrable->add_option("form", form_arg)->required();
  integrable->add_option("--variety", variety_arg);

  auto* invariant = app.add_subcommand("invariant", "Whether {f = 0} is invariant");
  invariant->add_option("form", form_arg)->required();
  invariant->add_option("f", poly_arg)->required();
  invariant->add_option("--variety", variety_arg);

  auto* first = app.add_subcommand("first-integral", "Whether P/Q is a rational first integral");
  first->add_option("form", form_arg)->required();
  first->add_option("P", p_arg)->required();
  first->add_option("Q", q_arg)->required();
  first->add_option("--variety", variety_arg);

  auto* darboux = app.add_subcommand("darboux", "Darboux-Jouanolou bound");
  darboux->add_option("variety", variety_arg)->required();
  darboux->add_option("d", degree_arg)->required();

  auto* formspace = app.add_subcommand("formspace", "Basis of the distributions of degree d");
  formspace->add_option("variety", variety_arg)->required();
  formspace->add_option("d", degree_arg)->required();

  auto* index = app.add_subcommand("index", "Local index of a monomial chart form");
  index->add_option("chart", path_arg, "JSON file")->required();

  auto* sw = app.add_subcommand("sweep", "Counts over a box of degrees");
  sw->add_option("variety", variety_arg)->required();
  sw->add_option("--d-box", box, "Half-width of the degree box")->required();
  sw->add_option("--method", method_arg);
  sw->add_flag("--parallel", parallel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("InvalidInput", e.what(), kExitInput);
  }

  std::size_t cap = enumeration_cap_from_env();
  try {
    if (*describe) {
      VarietySpec v = load_variety(variety_arg);
      Json j = to_json(v);
      j["variables"] = v.variable_names;
      Json fields = Json::array();
      for (const auto& f : radial_fields(v)) fields.push_back(f.weights);
      j["radial_fields"] = fields;
      if (v.irrelevant_set) {
        Json z = Json::array();
        for (const auto& sub : *v.irrelevant_set) {
          Json names = Json::array();
          for (auto i : sub) names.push_back(v.variable_names[i]);
          z.push_back(names);
        }
        j["irrelevant"] = z;
      } else {
        j["irrelevant"] = nullptr;
      }
      emit(j);
    } else if (*hdim) {
      VarietySpec v = load_variety(variety_arg);
      Multidegree a = load_degree(v, degree_arg);
      Json j;
      j["variety"] = v.name;
      j["alpha"] = tuple_json(v, a);
      j["dim"] = integer_json(graded_piece_dim(v, a, cap));
      emit(j);
    } else if (*cnt) {
      VarietySpec v = load_variety(variety_arg);
      emit(to_json(count(v, load_degree(v, degree_arg), method_from(method_arg), cross_check), v));
    } else if (*classify) {
      Family f = params_arg.empty() ? parse_family(family_arg) : parse_family(family_arg, params_arg);
      VarietySpec v = make_family(f);
      emit(to_json(classify_regular(v, {box, cap}), v));
    } else if (*validate) {
      VarietySpec v = load_variety(variety_arg);
      OneForm w = parse_one_form(form_arg, variable_names(v));
      Multidegree d = load_degree(v, degree_arg);
      ValidationReport rep = validate_distribution(v, w, d);
      Json j;
      j["variety"] = v.name;
      j["d"] = tuple_json(v, d);
      Json body = to_json(rep, v);
      for (auto& [key, value] : body.items()) j[key] = value;
      emit(j);
      return rep.valid ? 0 : kExitValidation;
    } else if (*integrable) {
      FormInput in = load_form(form_arg, variety_arg);
      ThreeForm obstruction = integrability_obstruction(in.form);
      Json j;
      j["integrable"] = obstruction.is_zero();
      j["obstruction"] = to_string(obstruction, in.names);
      emit(j);
    } else if (*invariant) {
      FormInput in = load_form(form_arg, variety_arg);
      Json j;
      j["invariant"] = invariant_hypersurface_check(in.form, load_polynomial(poly_arg, in));
      emit(j);
    } else if (*first) {
      FormInput in = load_form(form_arg, variety_arg);
      Json j;
      j["first_integral"] = rational_first_integral_check(in.variety, in.form, load_polynomial(p_arg, in), load_polynomial(q_arg, in));
      emit(j);
    } else if (*darboux) {
      VarietySpec v = load_variety(variety_arg);
      Multidegree d = load_degree(v, degree_arg);
      Json j;
      j["variety"] = v.name;
      j["d"] = tuple_json(v, d);
      j["bound"] = integer_json(darboux_bound(v, d, cap));
      emit(j);
    } else if (*formspace) {
      VarietySpec v = load_variety(variety_arg);
      Multidegree d = load_degree(v, degree_arg);
      auto basis = form_space_basis(v, d, cap);
      Json j;
      j["variety"] = v.name;
      j["d"] = tuple_json(v, d);
      j["dimension"] = basis.size();
      Json forms = Json::array();
      for (const auto& w : basis) forms.push_back(to_string(w, variable_names(v)));
      j["basis"] = forms;
      emit(j);
    } else if (*index) {
      MonomialChartForm c = chart_form_from_json(parse_json_text(read_file(path_arg), path_arg));
      Json j;
      j["index"] = to_string(monomial_local_index(c));
      emit(j);
    } else if (*sw) {
      VarietySpec v = load_variety(variety_arg);
      if (box < 0) throw Error(ErrorKind::InvalidInput, "--d-box must be nonnegative");
      emit(sweep(v, box, method_from(method_arg), parallel));
    }
  } catch (const Error& e) {
    int code = kExitInput;
    if (e.kind() == ErrorKind::EnumerationCapExceeded) code = kExitCap;
    if (e.kind() == ErrorKind::InvalidDistribution) code = kExitValidation;
    return emit_error(kind_name(e.kind()), e.detail(), code);
  } catch (const nlohmann::json::exception& e) {
    return emit_error("InvalidInput", e.what(), kExitInput);
  }
  return 0;
}
