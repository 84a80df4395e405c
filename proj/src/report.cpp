#include "spinspec/report.hpp"

#include <fstream>
#include <sstream>

#include "spinspec/error.hpp"

namespace spinspec {

namespace {

Rational coordinate(const Json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(Errc::ParseError, "coordinate must be an integer or a \"p/q\" string, got " + v.dump());
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

Json word_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

Json labels_json(const Labels& labels) {
  Json out = Json::array();
  for (auto l : labels) out.push_back(l);
  return out;
}

std::string labels_text(const Labels& labels) {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + std::to_string(labels[i]);
  return s + "]";
}

Json header(const Space& space) {
  Json out;
  out["space"] = space.label;
  out["g"] = space.pair.g.type().name();
  out["k"] = k_structure(space.pair).describe();
  out["n"] = space.pair.dim;
  return out;
}

std::string header_text(const Space& space) {
  std::ostringstream os;
  os << "space: " << space.label << "\n"
     << "G = " << space.pair.g.type().name() << ", K = " << k_structure(space.pair).describe()
     << ", n = " << space.pair.dim << "\n";
  return os.str();
}

}  // namespace

Space resolve_catalog(std::string_view name) {
  return {std::string(name), build_pair(find_catalog_entry(name))};
}

Space resolve_document(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "pair document must be a JSON object");
  if (doc.contains("catalog")) {
    if (!doc["catalog"].is_string()) throw Error(Errc::ParseError, "\"catalog\" must be a string");
    return resolve_catalog(doc["catalog"].get<std::string>());
  }
  if (!doc.contains("g") || !doc.contains("k_simple_roots"))
    throw Error(Errc::ParseError, "pair document needs \"g\" and \"k_simple_roots\" or \"catalog\"");
  const Json& g = doc["g"];
  if (!g.is_object() || !g.contains("family") || !g.contains("rank") || !g["family"].is_string() ||
      !g["rank"].is_number_integer())
    throw Error(Errc::ParseError, "\"g\" must be {\"family\": <letter>, \"rank\": <int>}");
  const SimpleType type =
      SimpleType::parse(g["family"].get<std::string>() + std::to_string(g["rank"].get<int>()));

  const Json& roots = doc["k_simple_roots"];
  if (!roots.is_array()) throw Error(Errc::ParseError, "\"k_simple_roots\" must be an array");
  std::vector<Weight> k_simple;
  for (const auto& r : roots) {
    if (!r.is_array()) throw Error(Errc::ParseError, "each root must be an array, got " + r.dump());
    std::vector<Rational> coords;
    for (const auto& c : r) coords.push_back(coordinate(c));
    k_simple.emplace_back(std::move(coords));
  }
  return {doc.dump(), build_pair(RootSystem(type), std::move(k_simple))};
}

Space load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
  return resolve_document(doc);
}

Json to_json(const Rational& q) {
  Json out;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    out["num"] = q.get_num().get_si();
    out["den"] = q.get_den().get_si();
  } else {
    out["num"] = q.get_num().get_str();
    out["den"] = q.get_den().get_str();
  }
  return out;
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords()) out.push_back(to_json(c));
  return out;
}

std::string render(const Rational& q) {
  if (is_integer(q)) return to_string(q);
  return to_string(q) + " (≈ " + to_decimal(q) + ")";
}

// ---------------------------------------------------------------------------
// eigenvalue

EigenvalueReport make_report(const Space& space) {
  const SymmetricPair& pair = space.pair;
  EigenvalueReport r;
  r.space = space.label;
  r.n = pair.dim;
  r.spin = pair.spin;
  r.strange_formula = strange_formula_check(pair);
  r.components = spin_decomposition(pair);
  const SpinComponent w0 = select_w0(pair.g, r.components);
  for (std::size_t i = 0; i < r.components.size(); ++i)
    if (r.components[i].beta == w0.beta) r.w0 = i;
  r.w0_g_weight = g_dominant_weight(w0);
  r.w0_dominant = w0_weight_is_dominant(pair, w0);
  r.lambda1_squared = first_eigenvalue_squared(pair);
  r.max_form_value = first_eigenvalue_squared_max_form(pair);
  return r;
}

Json components_json(const Space& space, const std::vector<SpinComponent>& components) {
  Json out = header(space);
  Json arr = Json::array();
  for (const auto& c : components) {
    Json j;
    j["beta"] = to_json(c.beta);
    j["w"] = word_json(c.w.word());
    j["norm2"] = to_json(c.norm2);
    j["dim"] = c.dim.get_str();
    arr.push_back(std::move(j));
  }
  out["components"] = std::move(arr);
  return out;
}

Json to_json(const EigenvalueReport& r) {
  Json out;
  out["space"] = r.space;
  out["n"] = r.n;
  out["spin"] = r.spin;
  out["strange_formula"] = {{"lhs", to_json(r.strange_formula.lhs)},
                            {"rhs", to_json(r.strange_formula.rhs)},
                            {"ok", r.strange_formula.ok}};
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"beta", to_json(c.beta)},
                     {"w", word_json(c.w.word())},
                     {"norm2", to_json(c.norm2)},
                     {"dim", c.dim.get_str()}});
  out["components"] = std::move(comps);
  const auto& w0 = r.components[r.w0];
  out["w0"] = {{"w", word_json(w0.w.word())},
               {"beta", to_json(w0.beta)},
               {"beta_g", to_json(r.w0_g_weight)}};
  out["w0_dominant"] = r.w0_dominant;
  out["lambda1_squared"] = to_json(r.lambda1_squared);
  out["lambda1_squared_approx"] = to_decimal(r.lambda1_squared);
  out["max_form_value"] = to_json(r.max_form_value);
  if (r.spectrum) {
    Json lines = Json::array();
    for (const auto& l : *r.spectrum)
      lines.push_back({{"eigenvalue", to_json(l.eigenvalue)}, {"lambda", to_json(l.g_highest_weight)}});
    out["spectrum"] = std::move(lines);
  }
  return out;
}

std::string to_text(const EigenvalueReport& r) {
  std::ostringstream os;
  const auto& w0 = r.components[r.w0];
  os << "space: " << r.space << "\n"
     << "n = " << r.n << ", spin = " << (r.spin ? "yes" : "no") << "\n"
     << "strange formula: " << to_string(r.strange_formula.lhs) << " = "
     << to_string(r.strange_formula.rhs) << (r.strange_formula.ok ? " ok" : " FAILED") << "\n"
     << "spin components: " << r.components.size() << "\n"
     << "w0 = " << word_text(w0.w.word()) << ", beta_w0 = " << w0.beta.to_string()
     << ", |beta_w0|^2 = " << render(w0.norm2) << "\n"
     << "w0^-1 beta_w0 = " << r.w0_g_weight.to_string()
     << (r.w0_dominant ? " (G-dominant)" : " (NOT G-dominant)") << "\n"
     << "lambda_1^2 = " << render(r.lambda1_squared) << "\n"
     << "max formula = " << render(r.max_form_value)
     << (r.max_form_value == r.lambda1_squared ? "" : " MISMATCH") << "\n";
  return os.str();
}

std::string components_text(const Space& space, const std::vector<SpinComponent>& components) {
  std::ostringstream os;
  os << header_text(space) << "spin representation: " << components.size()
     << " K-irreducible components\n";
  for (const auto& c : components)
    os << "  beta = " << c.beta.to_string() << "  |beta|^2 = " << render(c.norm2)
       << "  dim = " << c.dim.get_str() << "  w = " << word_text(c.w.word()) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// spectrum

Json spectrum_json(const Space& space, const Rational& cutoff,
                   const std::vector<SpectrumLine>& lines) {
  Json out = header(space);
  out["cutoff"] = to_json(cutoff);
  Json arr = Json::array();
  for (const auto& l : lines) {
    Json j;
    j["eigenvalue"] = to_json(l.eigenvalue);
    j["eigenvalue_approx"] = to_decimal(l.eigenvalue);
    j["lambda"] = to_json(l.g_highest_weight);
    j["labels"] = labels_json(l.g_labels);
    j["casimir"] = to_json(l.casimir);
    j["g_dim"] = l.g_dim.get_str();
    j["hom_dim"] = l.hom_dim;
    j["multiplicity"] = l.multiplicity.get_str();
    arr.push_back(std::move(j));
  }
  out["lines"] = std::move(arr);
  return out;
}

std::string spectrum_text(const Space& space, const Rational& cutoff,
                          const std::vector<SpectrumLine>& lines) {
  std::ostringstream os;
  os << header_text(space) << "eigenvalues of D^2 up to " << render(cutoff) << ": "
     << lines.size() << "\n";
  for (const auto& l : lines)
    os << "  " << render(l.eigenvalue) << "  lambda = " << labels_text(l.g_labels)
       << "  dim V = " << l.g_dim.get_str() << "  hom = " << l.hom_dim
       << "  mult = " << l.multiplicity.get_str() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// verify

Json verify_json(const std::string& space, const VerifyReport& report) {
  Json out;
  out["space"] = space;
  out["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"ok", c.ok},
                      {"skipped", c.skipped},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"detail", c.detail}});
  out["checks"] = std::move(checks);
  out["notes"] = report.notes;
  return out;
}

std::string verify_text(const std::string& space, const VerifyReport& report) {
  std::ostringstream os;
  os << space << ": " << (report.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.skipped ? "skip" : c.ok ? "pass" : "FAIL") << "  " << c.name;
    if (!c.skipped) os << "  " << c.lhs << " vs " << c.rhs;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& n : report.notes) os << "  note  " << n << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// list

Json catalog_json() {
  Json out = Json::array();
  for (const auto& e : catalog()) {
    const SymmetricPair pair = build_pair(e);
    out.push_back({{"name", e.name},
                   {"g", e.g_type.name()},
                   {"k", k_structure(pair).describe()},
                   {"n", pair.dim},
                   {"spin", pair.spin},
                   {"notes", e.notes}});
  }
  return out;
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& e : catalog()) {
    const SymmetricPair pair = build_pair(e);
    std::string name = e.name;
    name.resize(std::max<std::size_t>(name.size(), 16), ' ');
    os << name << "  " << e.g_type.name() << "  K = " << k_structure(pair).describe()
       << "  n = " << pair.dim << "  spin = " << (pair.spin ? "yes" : "no") << "  " << e.notes
       << "\n";
  }
  return os.str();
}

}  // namespace spinspec
