// Command-line front end: first Dirac eigenvalue, spin decomposition, low-lying
// spectrum and the verification battery for spin symmetric spaces G/K.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinspec/error.hpp"
#include "spinspec/report.hpp"

namespace {

using namespace spinspec;

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kCap = 3 };

struct Options {
  std::string format = "text";
  std::string space;
  std::string pair_file;
  std::string cutoff;
  std::string spectrum_cutoff;
  bool all = false;
};

Space resolve(const Options& o) {
  if (!o.pair_file.empty()) {
    if (!o.space.empty()) throw Error(Errc::ParseError, "give either a space name or --pair-file");
    return load_pair_file(o.pair_file);
  }
  if (o.space.empty()) throw Error(Errc::ParseError, "no space given (name or --pair-file)");
  return resolve_catalog(o.space);
}

bool json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (json(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_eigenvalue(const Options& o) {
  const Space space = resolve(o);
  const EigenvalueReport r = make_report(space);
  emit(o, to_json(r), to_text(r));
  return kOk;
}

int cmd_decompose(const Options& o) {
  const Space space = resolve(o);
  const auto comps = spin_decomposition(space.pair);
  emit(o, components_json(space, comps), components_text(space, comps));
  return kOk;
}

int cmd_spectrum(const Options& o) {
  const Space space = resolve(o);
  const Rational cutoff = parse_rational(o.cutoff);
  const auto lines = spectrum_below(space.pair, cutoff);
  emit(o, spectrum_json(space, cutoff, lines), spectrum_text(space, cutoff, lines));
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  if (!o.spectrum_cutoff.empty()) vo.spectrum_cutoff = parse_rational(o.spectrum_cutoff);

  std::vector<Space> spaces;
  if (o.all) {
    if (!o.space.empty() || !o.pair_file.empty())
      throw Error(Errc::ParseError, "--all takes no space");
    for (const auto& e : catalog()) spaces.push_back({e.name, build_pair(e)});
  } else {
    spaces.push_back(resolve(o));
  }

  bool ok = true;
  Json all = Json::array();
  for (const auto& s : spaces) {
    const VerifyReport report = verify_pair(s.pair, vo);
    ok = ok && report.ok();
    if (json(o))
      all.push_back(verify_json(s.label, report));
    else
      std::cout << verify_text(s.label, report);
  }
  if (json(o)) std::cout << (o.all ? all : all[0]).dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_list(const Options& o) {
  emit(o, catalog_json(), catalog_text());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First eigenvalue and low-lying spectrum of the Dirac operator on spin symmetric spaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("space", o.space, "Catalog name, see `list`");
    sub->add_option("--pair-file", o.pair_file, "JSON pair document")->check(CLI::ExistingFile);
    sub->fallthrough();
  };

  auto* eigen = app.add_subcommand("eigenvalue", "Smallest eigenvalue of D^2");
  add_space(eigen);
  auto* decomp = app.add_subcommand("decompose", "K-irreducible components of the spin representation");
  add_space(decomp);
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of D^2 up to a cutoff");
  add_space(spectrum);
  spectrum->add_option("--cutoff", o.cutoff, "Upper bound p/q")->required();
  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  add_space(verify);
  verify->add_flag("--all", o.all, "Every catalog entry");
  verify->add_option("--spectrum-cutoff", o.spectrum_cutoff, "Also scan the spectrum up to p/q");
  auto* list = app.add_subcommand("list", "Catalog of spin symmetric spaces");
  list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*eigen) return cmd_eigenvalue(o);
    if (*decomp) return cmd_decompose(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*verify) return cmd_verify(o);
    if (*list) return cmd_list(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::NotSpin) std::cerr << "the space is not spin\n";
    return e.code() == Errc::CapExceeded ? kCap : kInvalid;
  }
  return kInvalid;
}
