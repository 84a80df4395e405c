#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "spinspec/rootsystem.hpp"
#include "spinspec/symmspace.hpp"
#include "spinspec/weyl.hpp"

namespace spinspec {

/// Default bound on |Phi_n^+| for the subset enumeration of spin weights.
inline constexpr std::size_t kSpinOracleCap = 20;
/// Default bound on dim V_lambda for branching computations.
inline constexpr std::int64_t kBranchingDimCap = 1'000'000;

/// One irreducible K-summand of the spin representation: highest weight
/// beta = w.delta_G - delta_K for w in the Kostant set.
struct SpinComponent {
  WeylElement w;
  Weight beta;
  Rational norm2;  // Killing-normalized |beta|^2
  Integer dim;
};

/// One eigenvalue of D^2 coming from the G-irreducible with highest weight lambda.
struct SpectrumLine {
  Rational eigenvalue;  // casimir + n/16
  Weight g_highest_weight;
  Labels g_labels;
  Rational casimir;
  Integer g_dim;
  std::int64_t hom_dim = 0;  // dim Hom_K(V_lambda, Sigma)
  Integer multiplicity;      // g_dim * hom_dim
};

/// Components sorted by (norm2 ascending, beta descending). Throws NotSpin.
std::vector<SpinComponent> spin_decomposition(const SymmetricPair& pair);

/// beta <= beta' in the dominance order of G: beta' - beta is a nonnegative
/// integer combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& beta, const Weight& beta_prime);

/// Minimal-norm components that are maximal for the dominance order.
std::vector<SpinComponent> maximal_minimal_components(const RootSystem& rs,
                                                      std::span<const SpinComponent> components);

/// A minimal-norm component, maximal for dominance; ties between incomparable
/// candidates go to the lexicographically largest beta.
SpinComponent select_w0(const RootSystem& rs, std::span<const SpinComponent> components);

/// w^{-1}.beta_w = delta_G - w^{-1}.delta_K.
Weight g_dominant_weight(const SpinComponent& component);

/// Whether w0^{-1}.beta_{w0} is G-dominant.
bool w0_weight_is_dominant(const SymmetricPair& pair, const SpinComponent& w0_component);

/// 2 min_w |beta_w|^2 + n/8. Throws NotSpin.
Rational first_eigenvalue_squared(const SymmetricPair& pair);

/// 2|delta_G|^2 + 2|delta_K|^2 - 4 max_w <w.delta_G, delta_K> + n/8. Throws NotSpin.
Rational first_eigenvalue_squared_max_form(const SymmetricPair& pair);

/// |lambda + delta_G|^2 - |delta_G|^2. Throws NotDominant, NotIntegral.
Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda);

/// {delta_n - sum(A) : A subset of Phi_n^+}, with repetition. Throws CapExceeded.
std::vector<Weight> spin_weights_bruteforce(const SymmetricPair& pair,
                                            std::size_t cap = kSpinOracleCap);

/// K-irreducible content of a W_K-invariant multiset of G-integral weights,
/// sorted by highest weight. Throws InconsistentCharacter, NotIntegral.
std::vector<std::pair<Weight, std::int64_t>> decompose_into_k_irreps(
    const SymmetricPair& pair, std::span<const Weight> weights);

/// All weights of the G-irreducible with highest weight lambda.
std::map<Weight, std::int64_t> freudenthal_multiplicities(const RootSystem& rs,
                                                          const Weight& lambda,
                                                          std::int64_t dim_cap = kBranchingDimCap);

/// K-irreducible content of the restriction of the G-irreducible lambda.
std::vector<std::pair<Weight, std::int64_t>> restrict_to_k(const SymmetricPair& pair,
                                                           const Weight& lambda,
                                                           std::int64_t dim_cap = kBranchingDimCap);

/// Multiplicity of the K-irreducible mu in the G-irreducible lambda restricted to K.
std::int64_t branching_multiplicity(const SymmetricPair& pair, const Weight& lambda,
                                    const Weight& mu, std::int64_t dim_cap = kBranchingDimCap);

/// Every eigenvalue of D^2 not exceeding `cutoff`, sorted by eigenvalue.
/// Throws NotSpin, CapExceeded.
std::vector<SpectrumLine> spectrum_below(const SymmetricPair& pair, const Rational& cutoff,
                                         std::int64_t dim_cap = kBranchingDimCap);

}  // namespace spinspec
