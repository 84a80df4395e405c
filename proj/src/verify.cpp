#include "spinspec/verify.hpp"

#include <algorithm>

#include "spinspec/error.hpp"

namespace spinspec {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

namespace {

CheckResult equality(std::string name, const Rational& lhs, const Rational& rhs,
                     std::string detail = {}) {
  return {std::move(name), lhs == rhs, false, to_string(lhs), to_string(rhs), std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), true, true, {}, {}, std::move(why)};
}

}  // namespace

VerifyReport verify_pair(const SymmetricPair& pair, const VerifyOptions& options) {
  const RootSystem& rs = pair.g;
  VerifyReport report;
  auto& checks = report.checks;

  const auto sf = strange_formula_check(pair);
  checks.push_back(equality("strange_formula", sf.lhs, sf.rhs, "|delta_G|^2 - |delta_K|^2 = n/16"));

  const auto components = spin_decomposition(pair);
  const Rational lambda1 = first_eigenvalue_squared(pair);
  const Rational lambda1_max = first_eigenvalue_squared_max_form(pair);
  checks.push_back(equality("min_form_equals_max_form", lambda1, lambda1_max));

  const auto k = k_structure(pair);
  checks.push_back(equality("kostant_cardinality",
                            Rational(Integer(std::to_string(components.size() * k.weyl_order))),
                            Rational(Integer(std::to_string(weyl_group_order(rs.type())))),
                            "|W| * |W_K| = |W_G|"));

  Integer total = 0;
  for (const auto& c : components) total += c.dim;
  Integer expected = 1;
  mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), static_cast<unsigned>(pair.dim / 2));
  checks.push_back(equality("spin_dimension_sum", Rational(total), Rational(expected),
                            "sum of component dimensions = 2^(n/2)"));

  {
    const Rational n16 = ratio(pair.dim, 16);
    CheckResult c{"component_casimir", true, false, to_string(n16), to_string(n16),
                  "|beta_w + delta_K|^2 - |delta_K|^2 = n/16 for every w"};
    for (const auto& comp : components) {
      Rational v = killing_norm2(rs, comp.beta + pair.delta_k) - killing_norm2(rs, pair.delta_k);
      if (v != n16) {
        c.ok = false;
        c.lhs = to_string(v);
        c.detail += "; fails at beta = " + comp.beta.to_string();
        break;
      }
    }
    checks.push_back(std::move(c));
  }

  const auto maxima = maximal_minimal_components(rs, components);
  if (maxima.size() > 1)
    report.notes.push_back(std::to_string(maxima.size()) +
                           " dominance-incomparable components of minimal norm");
  for (const auto& m : maxima) {
    const Weight bg = g_dominant_weight(m);
    const bool ok = w0_weight_is_dominant(pair, m);
    checks.push_back({"w0_dominant", ok, false, bg.to_string(), "G-dominant",
                      "beta_w0 = " + m.beta.to_string()});
  }

  const SpinComponent w0 = select_w0(rs, components);
  const Weight bg0 = g_dominant_weight(w0);
  const Rational n16 = ratio(pair.dim, 16);
  if (is_dominant(rs, bg0, rs.positive_roots())) {
    checks.push_back(equality("w0_casimir", casimir_eigenvalue(rs, bg0),
                              2 * w0.norm2 + n16, "casimir(beta^G_w0) = 2|beta_w0|^2 + n/16"));
  }

  if (pair.noncompact_positives.size() <= options.oracle_max_noncompact) {
    const auto weights = spin_weights_bruteforce(pair, options.oracle_max_noncompact);
    const auto content = decompose_into_k_irreps(pair, weights);
    std::vector<Weight> got, want;
    bool multiplicity_one = true;
    for (const auto& [mu, m] : content) {
      got.push_back(mu);
      multiplicity_one = multiplicity_one && m == 1;
    }
    for (const auto& c : components) want.push_back(c.beta);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    checks.push_back({"spin_weight_oracle", multiplicity_one && got == want, false,
                      std::to_string(content.size()) + " irreducibles from " +
                          std::to_string(weights.size()) + " weights",
                      std::to_string(components.size()) + " Kostant components",
                      multiplicity_one ? "" : "some multiplicity differs from 1"});
  } else {
    checks.push_back(skipped("spin_weight_oracle",
                             std::to_string(pair.noncompact_positives.size()) +
                                 " positive noncompact roots exceed the oracle cap"));
  }

  {
    const Labels top = rs.integral_labels(bg0);
    const Integer dim = weyl_dimension(rs, bg0, rs.positive_roots());
    if (dim <= options.branching_dim_cap) {
      const auto m = branching_multiplicity(pair, bg0, w0.beta, options.branching_dim_cap);
      checks.push_back({"w0_branching", m >= 1, false, std::to_string(m), ">= 1",
                        "m(V(beta^G_w0)|K, beta_w0), dim V = " + dim.get_str()});
    } else {
      checks.push_back(skipped("w0_branching", "dim V = " + dim.get_str() + " exceeds the cap"));
    }
  }

  if (options.spectrum_cutoff) {
    const auto lines = spectrum_below(pair, *options.spectrum_cutoff, options.branching_dim_cap);
    if (lines.empty()) {
      checks.push_back({"spectrum_minimality", false, false, "empty spectrum", to_string(lambda1),
                        "no eigenvalue below the cutoff"});
    } else {
      const auto& low = lines.front();
      checks.push_back(equality("spectrum_minimality", low.eigenvalue, lambda1,
                                "lowest eigenvalue of D^2 below the cutoff"));
      checks.push_back(equality("spectrum_minimizer_casimir", low.casimir, 2 * w0.norm2 + n16,
                                "lambda = " + low.g_highest_weight.to_string()));
    }
  }
  return report;
}

}  // namespace spinspec
