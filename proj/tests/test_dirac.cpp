#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "spinspec/dirac.hpp"
#include "spinspec/error.hpp"

using namespace spinspec;

namespace {

SymmetricPair s2() { return build_pair(RootSystem({Family::A, 1}), {}); }
SymmetricPair s4() { return build_pair(RootSystem({Family::B, 2}), {{1, -1}, {1, 1}}); }
SymmetricPair cp2() { return build_pair(RootSystem({Family::A, 2}), {{1, -1, 0}}); }
SymmetricPair sphere(int m) { return build_pair(find_catalog_entry("sphere-even(" + std::to_string(m) + ")")); }

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Round sphere S^n normalized to scalar curvature n/2, so radius^2 = 2(n-1):
// D^2 has eigenvalues (n/2 + k)^2 / (2(n-1)), each with multiplicity
// 2 * 2^(n/2) * C(k+n-1, k) for n even.
std::map<Rational, Integer> sphere_spectrum(int n, const Rational& cutoff) {
  std::map<Rational, Integer> out;
  for (int k = 0;; ++k) {
    const Rational half = ratio(n + 2 * k, 2);
    const Rational ev = half * half / (2 * (n - 1));
    if (ev > cutoff) break;
    out[ev] = 2 * (Integer(1) << (n / 2)) * binomial(k + n - 1, k);
  }
  return out;
}

std::map<Weight, std::int64_t> expand_all_weights(const SymmetricPair& pair, const Weight& lambda) {
  return freudenthal_multiplicities(pair.g, lambda);
}

}  // namespace

TEST_CASE("spin decomposition of S^2 and S^4") {
  const auto a = spin_decomposition(s2());
  REQUIRE(a.size() == 2);
  const Weight half = s2().g.simple_roots()[0] * ratio(1, 2);
  CHECK(std::set<Weight>{a[0].beta, a[1].beta} == std::set<Weight>{half, -half});
  CHECK(a[0].dim == 1);
  CHECK(a[1].dim == 1);

  const auto b = spin_decomposition(s4());
  REQUIRE(b.size() == 2);
  CHECK(std::set<Weight>{b[0].beta, b[1].beta} ==
        std::set<Weight>{{ratio(1, 2), ratio(1, 2)}, {ratio(1, 2), ratio(-1, 2)}});
  CHECK(b[0].dim + b[1].dim == 4);
}

TEST_CASE("non-spin spaces are rejected with the failing pairing") {
  try {
    spin_decomposition(cp2());
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSpin);
    CHECK(std::string(e.what()).find("3/2") != std::string::npos);
  }
  CHECK_THROWS_AS(first_eigenvalue_squared(cp2()), Error);
  CHECK_THROWS_AS(spectrum_below(cp2(), 10), Error);
}

TEST_CASE("selected component") {
  const auto a = s2();
  CHECK(select_w0(a.g, spin_decomposition(a)).beta == a.g.simple_roots()[0] * ratio(1, 2));
  const auto b = s4();
  const auto w0 = select_w0(b.g, spin_decomposition(b));
  CHECK(w0.beta == Weight{ratio(1, 2), ratio(1, 2)});
  CHECK(g_dominant_weight(w0) == Weight{ratio(1, 2), ratio(1, 2)});
  CHECK(w0_weight_is_dominant(b, w0));
  CHECK(dominance_leq(b.g, Weight{ratio(1, 2), ratio(-1, 2)}, Weight{ratio(1, 2), ratio(1, 2)}));
  CHECK_FALSE(dominance_leq(b.g, Weight{ratio(1, 2), ratio(1, 2)}, Weight{ratio(1, 2), ratio(-1, 2)}));
}

TEST_CASE("first eigenvalue on small spheres") {
  CHECK(first_eigenvalue_squared(s2()) == ratio(1, 2));
  CHECK(first_eigenvalue_squared(s4()) == ratio(2, 3));
  CHECK(first_eigenvalue_squared(sphere(3)) == ratio(9, 10));
  CHECK(first_eigenvalue_squared_max_form(s2()) == ratio(1, 2));
  CHECK(first_eigenvalue_squared_max_form(s4()) == ratio(2, 3));
}

TEST_CASE("even spheres attain the Friedrich bound") {
  // n scal / (4(n-1)) with scal = n/2
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const int n = 2 * m;
    CHECK(first_eigenvalue_squared(sphere(m)) == ratio(n * n, 8 * (n - 1)));
  }
}

TEST_CASE("Casimir eigenvalues") {
  const RootSystem a1({Family::A, 1});
  CHECK(casimir_eigenvalue(a1, a1.simple_roots()[0] * ratio(1, 2)) == ratio(3, 8));
  for (SimpleType t : {SimpleType{Family::A, 5}, SimpleType{Family::C, 4}, SimpleType{Family::E, 8},
                       SimpleType{Family::G, 2}}) {
    const RootSystem rs(t);
    CHECK(casimir_eigenvalue(rs, rs.highest_root()) == 1);
  }
  CHECK_THROWS_AS(casimir_eigenvalue(a1, -a1.simple_roots()[0]), Error);
}

TEST_CASE("spin weights and their K-decomposition") {
  const auto p = s4();
  const auto w = spin_weights_bruteforce(p);
  CHECK(std::multiset<Weight>(w.begin(), w.end()) ==
        std::multiset<Weight>{{ratio(1, 2), ratio(1, 2)},
                              {ratio(1, 2), ratio(-1, 2)},
                              {ratio(-1, 2), ratio(1, 2)},
                              {ratio(-1, 2), ratio(-1, 2)}});
  const auto parts = decompose_into_k_irreps(p, w);
  CHECK(std::map<Weight, std::int64_t>(parts.begin(), parts.end()) ==
        std::map<Weight, std::int64_t>{{{ratio(1, 2), ratio(1, 2)}, 1}, {{ratio(1, 2), ratio(-1, 2)}, 1}});

  CHECK_THROWS_AS(spin_weights_bruteforce(build_pair(find_catalog_entry("EVIII"))), Error);
  std::vector<Weight> lopsided{{ratio(1, 2), ratio(1, 2)}};
  CHECK_THROWS_AS(decompose_into_k_irreps(p, lopsided), Error);
}

TEST_CASE("components have Casimir n/16 and dimensions sum to 2^(n/2)") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto p = build_pair(e);
    const auto comps = spin_decomposition(p);
    Integer total = 0;
    for (const auto& c : comps) {
      total += c.dim;
      CHECK(killing_norm2(p.g, c.beta + p.delta_k) - killing_norm2(p.g, p.delta_k) == ratio(p.dim, 16));
      CHECK(c.norm2 == killing_norm2(p.g, c.beta));
    }
    CHECK(total == Integer(1) << (p.dim / 2));
    for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i - 1].norm2 <= comps[i].norm2);
  }
}

TEST_CASE("Freudenthal multiplicities") {
  const RootSystem a1({Family::A, 1});
  const Weight a = a1.simple_roots()[0];
  CHECK(freudenthal_multiplicities(a1, a) ==
        std::map<Weight, std::int64_t>{{a, 1}, {Weight(2), 1}, {-a, 1}});

  const RootSystem b2({Family::B, 2});
  const auto adj = freudenthal_multiplicities(b2, Weight{1, 1});
  CHECK(adj.at(Weight{0, 0}) == 2);
  CHECK(adj.size() == 9);

  // Multiplicities are constant on Weyl orbits.
  const RootSystem c3({Family::C, 3});
  const auto ch = freudenthal_multiplicities(c3, c3.fundamental_weights()[0] + c3.fundamental_weights()[2]);
  std::int64_t total = 0;
  for (const auto& [mu, m] : ch) {
    total += m;
    for (const auto& s : c3.simple_roots()) CHECK(ch.at(reflect(c3, mu, s)) == m);
  }
  CHECK(Integer(std::to_string(total)) ==
        weyl_dimension(c3, c3.fundamental_weights()[0] + c3.fundamental_weights()[2], c3.positive_roots()));
  CHECK_THROWS_AS(freudenthal_multiplicities(b2, Weight{40, 30}, 1000), Error);
}

TEST_CASE("branching to K") {
  const auto a = s2();
  const Weight half = a.g.simple_roots()[0] * ratio(1, 2);
  CHECK(branching_multiplicity(a, half, half) == 1);
  CHECK(branching_multiplicity(a, half, -half) == 1);
  CHECK(branching_multiplicity(a, half, Weight(2)) == 0);

  const auto b = s4();
  CHECK(branching_multiplicity(b, Weight{ratio(1, 2), ratio(1, 2)}, Weight{ratio(1, 2), ratio(1, 2)}) >= 1);
}

TEST_CASE("branching agrees with decomposing the full weight multiset") {
  for (const char* name : {"AIII(2,2)", "CI(3)", "G", "FII", "BDI(2,6)"}) {
    CAPTURE(name);
    const auto p = build_pair(find_catalog_entry(name));
    const auto& fw = p.g.fundamental_weights();
    for (const Weight& lambda : {fw.front(), fw.back(), fw.front() + fw.back(), p.g.highest_root()}) {
      const auto restricted = restrict_to_k(p, lambda);
      std::vector<Weight> weights;
      for (const auto& [mu, m] : expand_all_weights(p, lambda))
        for (std::int64_t i = 0; i < m; ++i) weights.push_back(mu);
      const auto oracle = decompose_into_k_irreps(p, weights);
      CHECK(std::map<Weight, std::int64_t>(restricted.begin(), restricted.end()) ==
            std::map<Weight, std::int64_t>(oracle.begin(), oracle.end()));

      Integer sum = 0;
      for (const auto& [mu, m] : restricted)
        sum += Integer(std::to_string(m)) * weyl_dimension(p.g, mu, p.k_positives);
      CHECK(sum == weyl_dimension(p.g, lambda, p.g.positive_roots()));
    }
  }
}

TEST_CASE("spectrum of S^2 below 3") {
  const auto lines = spectrum_below(s2(), 3);
  REQUIRE(lines.size() == 2);
  const Weight a = s2().g.simple_roots()[0];
  CHECK(lines[0].eigenvalue == ratio(1, 2));
  CHECK(lines[0].g_highest_weight == a * ratio(1, 2));
  CHECK(lines[1].eigenvalue == 2);
  CHECK(lines[1].g_highest_weight == a * ratio(3, 2));
}

TEST_CASE("sphere spectra match the round-sphere closed form") {
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    const int n = 2 * m;
    const Rational cutoff = 6;
    std::map<Rational, Integer> got;
    for (const auto& l : spectrum_below(sphere(m), cutoff)) got[l.eigenvalue] += l.multiplicity;
    CHECK(got == sphere_spectrum(n, cutoff));
  }
}

TEST_CASE("spectrum minimum equals the closed formula") {
  for (const char* name : {"AIII(1,3)", "CII(1,2)", "DIII(4)", "G", "FII", "BDI(4,4)"}) {
    CAPTURE(name);
    const auto p = build_pair(find_catalog_entry(name));
    const Rational l1 = first_eigenvalue_squared(p);
    const auto lines = spectrum_below(p, l1 + 1);
    REQUIRE_FALSE(lines.empty());
    CHECK(lines.front().eigenvalue == l1);
    for (const auto& l : lines) {
      CHECK(l.eigenvalue <= l1 + 1);
      CHECK(l.eigenvalue == l.casimir + ratio(p.dim, 16));
      CHECK(l.hom_dim >= 1);
      CHECK(l.multiplicity == l.g_dim * l.hom_dim);
    }
    // Nothing strictly below the minimum.
    CHECK(spectrum_below(p, l1 - ratio(1, 1000)).empty());
  }
}
