#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spinspec/linalg.hpp"
#include "spinspec/rootsystem.hpp"

namespace spinspec {

/// An element of the Weyl group, held as its exact linear action on the
/// ambient space. The word is a reduced expression w = s_{word[0]} ... s_{word[k-1]}
/// kept for reporting; only the action is compared.
class WeylElement {
 public:
  static WeylElement identity(std::size_t dim);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  /// Reflection across the hyperplane orthogonal to a root.
  static WeylElement reflection(const RootSystem& rs, const Weight& alpha);
  /// Wraps an action matrix, recovering a reduced word by descent.
  static WeylElement from_action(const RootSystem& rs, RationalMatrix action);

  const RationalMatrix& action() const { return action_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  std::size_t dim() const { return action_.size(); }

  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.action_ == b.action_;
  }

 private:
  WeylElement(RationalMatrix action, std::vector<int> word)
      : action_(std::move(action)), word_(std::move(word)) {}

  RationalMatrix action_;
  std::vector<int> word_;

  friend class WeylGroupBuilder;
  friend WeylElement compose(const RootSystem&, const WeylElement&, const WeylElement&);
};

/// a∘b, with a freshly reduced word.
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylElement& w);

/// lambda - <lambda, alpha^v> alpha. Throws NotARoot.
Weight reflect(const RootSystem& rs, const Weight& lambda, const Weight& alpha);

/// Throws DimensionMismatch.
Weight apply(const WeylElement& w, const Weight& lambda);

/// The set {w in W_G : w.Phi_G^+ contains Phi_K^+}.
struct KostantSet {
  std::vector<WeylElement> elements;
  std::size_t size() const { return elements.size(); }
};

/// Breadth-first search from the identity under right multiplication by simple
/// reflections, keeping elements with <w.delta_G, a^v> > 0 for every simple
/// root a of `k_positives`. Throws InvalidSubsystem if `k_positives` is not a
/// set of positive roots of `rs`.
KostantSet enumerate_kostant_set(const RootSystem& rs, std::span<const Weight> k_positives);

/// Whole Weyl group by breadth-first search. Throws CapExceeded beyond `cap`.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap);

/// Literal membership test w.Phi_G^+ ⊇ Phi_K^+.
bool contains_k_positives(const RootSystem& rs, const WeylElement& w,
                          std::span<const Weight> k_positives);

/// Kostant set by filtering the full group with the literal definition.
KostantSet kostant_set_bruteforce(const RootSystem& rs, std::span<const Weight> k_positives,
                                  std::size_t cap);

/// W_G-orbit of lambda (sorted). Throws CapExceeded.
std::vector<Weight> full_orbit(const RootSystem& rs, const Weight& lambda, std::size_t cap);

/// The dominant element of the orbit of lambda under the Weyl group of
/// `positives`, and an element w with w.lambda equal to it.
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& lambda,
                                                       std::span<const Weight> positives);

}  // namespace spinspec
