#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinspec/dirac.hpp"
#include "spinspec/symmspace.hpp"
#include "spinspec/verify.hpp"

namespace spinspec {

using Json = nlohmann::ordered_json;

/// A resolved space: the label echoes the catalog name or the pair document.
struct Space {
  std::string label;
  SymmetricPair pair;
};

/// {"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1,-1],[1,1]]} or
/// {"catalog": "sphere-even(2)"}. Coordinates are integers or "p/q" strings.
/// Throws ParseError and every build_pair error.
Space resolve_document(const Json& doc);
Space resolve_catalog(std::string_view name);
Space load_pair_file(const std::string& path);

Json to_json(const Rational& q);
Json to_json(const Weight& w);

/// "p/q (≈ d.dddddd)"; integers print without the decimal.
std::string render(const Rational& q);

struct EigenvalueReport {
  std::string space;
  int n = 0;
  bool spin = false;
  StrangeFormula strange_formula;
  std::vector<SpinComponent> components;
  std::size_t w0 = 0;  // index into components
  Weight w0_g_weight;
  bool w0_dominant = false;
  Rational lambda1_squared;
  Rational max_form_value;
  std::optional<std::vector<SpectrumLine>> spectrum;
};

/// Throws NotSpin.
EigenvalueReport make_report(const Space& space);

Json to_json(const EigenvalueReport& report);
std::string to_text(const EigenvalueReport& report);

Json components_json(const Space& space, const std::vector<SpinComponent>& components);
std::string components_text(const Space& space, const std::vector<SpinComponent>& components);

Json spectrum_json(const Space& space, const Rational& cutoff,
                   const std::vector<SpectrumLine>& lines);
std::string spectrum_text(const Space& space, const Rational& cutoff,
                          const std::vector<SpectrumLine>& lines);

Json verify_json(const std::string& space, const VerifyReport& report);
std::string verify_text(const std::string& space, const VerifyReport& report);

Json catalog_json();
std::string catalog_text();

}  // namespace spinspec
