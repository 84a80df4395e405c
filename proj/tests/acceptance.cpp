// Acceptance suite: one line per criterion, exact comparisons, pinned runtime bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinspec/dirac.hpp"
#include "spinspec/error.hpp"
#include "spinspec/symmspace.hpp"
#include "spinspec/weyl.hpp"

using namespace spinspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    ok = false;
    if (failures.size() < 8) failures.push_back(why);
  }
};

struct Criterion {
  std::string name;
  double bound_seconds;
  std::function<Outcome()> run;
};

std::vector<SymmetricPair> catalog_pairs() {
  std::vector<SymmetricPair> out;
  for (const auto& e : catalog()) out.push_back(build_pair(e));
  return out;
}

const std::vector<SymmetricPair>& pairs() {
  static const std::vector<SymmetricPair> p = catalog_pairs();
  return p;
}

const std::string& name_of(std::size_t i) { return catalog()[i].name; }

std::vector<SimpleType> types_up_to_rank(int r) {
  std::vector<SimpleType> out;
  for (int k = 1; k <= r; ++k) out.push_back({Family::A, k});
  for (int k = 2; k <= r; ++k) out.push_back({Family::B, k});
  for (int k = 3; k <= r; ++k) out.push_back({Family::C, k});
  for (int k = 4; k <= r; ++k) out.push_back({Family::D, k});
  for (int k = 6; k <= 8 && k <= r; ++k) out.push_back({Family::E, k});
  if (r >= 4) out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

Outcome strange_formula() {
  Outcome o;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto sf = strange_formula_check(pairs()[i]);
    if (!sf.ok) o.fail(name_of(i) + ": " + to_string(sf.lhs) + " != " + to_string(sf.rhs));
  }
  o.detail = std::to_string(pairs().size()) + " catalog entries, catalog construction included";
  return o;
}

Outcome even_spheres() {
  Outcome o;
  for (int m = 1; m <= 6; ++m) {
    const auto p = build_pair(find_catalog_entry("sphere-even(" + std::to_string(m) + ")"));
    const Rational got = first_eigenvalue_squared(p);
    const Rational want = ratio(4 * m * m, 8 * (2 * m - 1));
    if (got != want) o.fail("m = " + std::to_string(m) + ": " + to_string(got) + " != " + to_string(want));
  }
  if (first_eigenvalue_squared(build_pair(find_catalog_entry("sphere-even(1)"))) != ratio(1, 2)) o.fail("S^2 != 1/2");
  if (first_eigenvalue_squared(build_pair(find_catalog_entry("sphere-even(2)"))) != ratio(2, 3)) o.fail("S^4 != 2/3");
  if (first_eigenvalue_squared(build_pair(find_catalog_entry("sphere-even(3)"))) != ratio(9, 10)) o.fail("S^6 != 9/10");
  o.detail = "m = 1..6 against (2m)^2/(8(2m-1))";
  return o;
}

Outcome formula_identity() {
  Outcome o;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const Rational a = first_eigenvalue_squared(pairs()[i]);
    const Rational b = first_eigenvalue_squared_max_form(pairs()[i]);
    if (a != b) o.fail(name_of(i) + ": " + to_string(a) + " != " + to_string(b));
  }
  o.detail = std::to_string(pairs().size()) + " catalog entries";
  return o;
}

Outcome kostant() {
  Outcome o;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto& p = pairs()[i];
    const std::uint64_t size = enumerate_kostant_set(p.g, p.k_positives).size();
    const std::uint64_t wk = k_structure(p).weyl_order;
    if (size * wk != weyl_group_order(p.g.type()))
      o.fail(name_of(i) + ": |W| = " + std::to_string(size) + ", |W_G|/|W_K| = " +
             std::to_string(weyl_group_order(p.g.type())) + "/" + std::to_string(wk));
  }

  // Every Z/2 grading by one node of every type with |W_G| <= 2000.
  int compared = 0;
  for (const auto& t : types_up_to_rank(5)) {
    if (weyl_group_order(t) > 2000) continue;
    const RootSystem rs(t);
    const auto group = enumerate_weyl_group(rs, 2000);
    for (int node = 0; node < t.rank; ++node) {
      SymmetricPair p = [&] {
        try {
          return build_pair(rs, parity_grading_k_simple_roots(rs, node));
        } catch (const Error&) {
          return SymmetricPair{rs, {}, {}, {}, {}, {}, 0, 0, false};
        }
      }();
      if (p.dim == 0) continue;
      std::set<RationalMatrix> fast, slow;
      for (const auto& w : enumerate_kostant_set(rs, p.k_positives).elements) fast.insert(w.action());
      for (const auto& w : group)
        if (contains_k_positives(rs, w, p.k_positives)) slow.insert(w.action());
      ++compared;
      if (fast != slow)
        o.fail(t.name() + " node " + std::to_string(node + 1) + ": search " +
               std::to_string(fast.size()) + " vs filter " + std::to_string(slow.size()));
    }
  }
  o.detail = std::to_string(pairs().size()) + " cardinalities, " + std::to_string(compared) +
             " pairs compared with the filtered group";
  return o;
}

Outcome spin_weight_oracle() {
  Outcome o;
  int checked = 0;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto& p = pairs()[i];
    if (p.noncompact_positives.size() > 16) continue;
    ++checked;
    const auto weights = spin_weights_bruteforce(p, 16);
    const auto parts = decompose_into_k_irreps(p, weights);
    const auto comps = spin_decomposition(p);
    std::multiset<Weight> got, want;
    Integer dims = 0;
    for (const auto& [mu, m] : parts)
      for (std::int64_t k = 0; k < m; ++k) got.insert(mu);
    for (const auto& c : comps) {
      want.insert(c.beta);
      dims += c.dim;
    }
    if (got != want)
      o.fail(name_of(i) + ": " + std::to_string(got.size()) + " extracted vs " +
             std::to_string(want.size()) + " components");
    if (dims != Integer(1) << (p.dim / 2)) o.fail(name_of(i) + ": dimension sum " + dims.get_str());
    Integer from_parts = 0;
    for (const auto& [mu, m] : parts) from_parts += m * weyl_dimension(p.g, mu, p.k_positives);
    if (from_parts != static_cast<long>(weights.size())) o.fail(name_of(i) + ": extracted dimensions");
  }
  o.detail = std::to_string(checked) + " entries with at most 16 positive noncompact roots";
  return o;
}

Outcome w0_dominant() {
  Outcome o;
  int incomparable = 0;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto& p = pairs()[i];
    const auto comps = spin_decomposition(p);
    const auto maxima = maximal_minimal_components(p.g, comps);
    if (maxima.size() > 1) {
      ++incomparable;
      std::cout << "  note: " << name_of(i) << " has " << maxima.size()
                << " incomparable minimal-norm components\n";
    }
    for (const auto& m : maxima)
      if (!w0_weight_is_dominant(p, m))
        o.fail(name_of(i) + ": " + g_dominant_weight(m).to_string() + " is not G-dominant");
  }
  o.detail = std::to_string(pairs().size()) + " entries, " + std::to_string(incomparable) +
             " with incomparable minima";
  return o;
}

Outcome w0_branching() {
  Outcome o;
  int checked = 0, skipped = 0;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto& p = pairs()[i];
    const auto w0 = select_w0(p.g, spin_decomposition(p));
    const Weight lambda = g_dominant_weight(w0);
    if (weyl_dimension(p.g, lambda, p.g.positive_roots()) > kBranchingDimCap) {
      ++skipped;
      continue;
    }
    ++checked;
    const auto m = branching_multiplicity(p, lambda, w0.beta, kBranchingDimCap);
    if (m < 1) o.fail(name_of(i) + ": multiplicity " + std::to_string(m));
  }
  o.detail = std::to_string(checked) + " entries with dim V <= 10^6 (" + std::to_string(skipped) +
             " above the cap)";
  return o;
}

Outcome spectrum_end_to_end() {
  Outcome o;
  int checked = 0;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    const auto& p = pairs()[i];
    if (p.g.rank() > 4) continue;
    ++checked;
    const Rational l1 = first_eigenvalue_squared(p);
    const auto lines = spectrum_below(p, l1 + 1);
    if (lines.empty()) {
      o.fail(name_of(i) + ": empty spectrum");
      continue;
    }
    if (lines.front().eigenvalue != l1)
      o.fail(name_of(i) + ": minimum " + to_string(lines.front().eigenvalue) + " != " + to_string(l1));
    const auto w0 = select_w0(p.g, spin_decomposition(p));
    const Rational want = 2 * w0.norm2 + ratio(p.dim, 16);
    if (casimir_eigenvalue(p.g, lines.front().g_highest_weight) != want)
      o.fail(name_of(i) + ": casimir of the minimizer != " + to_string(want));
  }
  const auto s2 = spectrum_below(build_pair(find_catalog_entry("sphere-even(1)")), 3);
  std::vector<Rational> evs;
  for (const auto& l : s2) evs.push_back(l.eigenvalue);
  if (evs != std::vector<Rational>{ratio(1, 2), Rational(2)}) o.fail("S^2 below 3 is not {1/2, 2}");
  o.detail = std::to_string(checked) + " entries of rank <= 4, S^2 below 3 = {1/2, 2}";
  return o;
}

Outcome normalization() {
  Outcome o;
  int checked = 0;
  for (const auto& t : types_up_to_rank(8)) {
    const RootSystem rs(t);
    ++checked;
    const Rational c = casimir_eigenvalue(rs, rs.highest_root());
    if (c != 1) o.fail(t.name() + ": " + to_string(c));
  }
  o.detail = std::to_string(checked) + " simple types";
  return o;
}

Outcome spin_detection() {
  Outcome o;
  const auto cp2 = build_pair(RootSystem({Family::A, 2}), {{1, -1, 0}});
  const auto s4 = build_pair(RootSystem({Family::B, 2}), {{1, -1}, {1, 1}});
  const auto s2 = build_pair(RootSystem({Family::A, 1}), {});
  if (check_spin(cp2)) o.fail("CP^2 accepted");
  if (!check_spin(s4)) o.fail("S^4 rejected");
  if (!check_spin(s2)) o.fail("S^2 rejected");
  try {
    spin_decomposition(cp2);
    o.fail("CP^2 decomposed");
  } catch (const Error& e) {
    if (e.code() != Errc::NotSpin) o.fail(std::string("CP^2: ") + e.what());
  }
  o.detail = "CP^2 rejected, S^2 and S^4 accepted";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"strange formula", 1, strange_formula},
      {"even spheres", 1, even_spheres},
      {"min and max forms agree", 1, formula_identity},
      {"Kostant set", 30, kostant},
      {"spin weight decomposition oracle", 300, spin_weight_oracle},
      {"w0 weight is G-dominant", 1, w0_dominant},
      {"w0 branching multiplicity", 300, w0_branching},
      {"spectrum minimum end to end", 600, spectrum_end_to_end},
      {"Casimir of the highest root", 1, normalization},
      {"spin detection", 1, spin_detection},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.bound_seconds) o.fail("runtime above the bound");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << o.detail << "; " << secs
         << " s, bound " << c.bound_seconds << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? "FAILED " : "OK ") << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed\n";
  return failed ? 1 : 0;
}
