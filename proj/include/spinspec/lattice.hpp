#pragma once

// Integer machinery on Dynkin-label coordinates of the weight lattice of G.
//
// Every weight handled here is G-integral, so it is an integer vector of labels
// <x, a_i^v> for the simple roots a_i of G. A PositiveSystem describes either
// Phi_G^+ itself or the positive roots of an equal-rank subsystem Phi_K^+ in
// those same coordinates; K-dominance, K-reflections and the Freudenthal
// recursion for K then run without leaving integer arithmetic.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "spinspec/rational.hpp"
#include "spinspec/rootsystem.hpp"

namespace spinspec {

/// Dominant part of a character: dominant weight -> multiplicity.
using DominantCharacter = std::map<Labels, std::int64_t>;

/// s_i on labels of G (row i of the Cartan matrix holds the labels of a_i).
void reflect_simple(const std::vector<std::vector<int>>& cartan, int i, Labels& x);

/// w.x for w = s_{word[0]} ... s_{word[k-1]}.
Labels apply_word(const std::vector<std::vector<int>>& cartan, std::span<const int> word, Labels x);

class PositiveSystem {
 public:
  /// Positive system of G itself.
  static PositiveSystem of_group(const RootSystem& rs);
  /// Positive system given by explicit positive roots of rs (may be empty: a torus).
  PositiveSystem(const RootSystem& rs, std::span<const Weight> positives);

  std::size_t coords() const { return coords_; }
  std::size_t num_simple() const { return simple_.size(); }
  const std::vector<Labels>& simple_roots() const { return simple_; }
  const std::vector<Labels>& positive_roots() const { return positive_; }
  /// 2 delta of this positive system, in labels.
  const Labels& two_delta() const { return two_delta_; }

  /// <x, a^v> for the i-th simple root of this system.
  std::int64_t coroot_pairing(std::size_t i, const Labels& x) const;
  bool is_dominant(const Labels& x) const;
  Labels to_dominant(Labels x) const;

  /// Basic form scaled by form_denominator(): an exact integer.
  std::int64_t form(const Labels& a, const Labels& b) const;
  std::int64_t form_denominator() const { return den_; }
  /// Scaled (x + delta, x + delta), times 4 so that it stays integral.
  std::int64_t shifted_norm4(const Labels& x) const;

  /// Weyl dimension of the irreducible with highest weight x (dominant).
  Integer dimension(const Labels& x) const;

  /// Orbit under the Weyl group of this system. Throws CapExceeded.
  std::vector<Labels> orbit(const Labels& x, std::size_t cap) const;

  /// Dominant weights and multiplicities of the irreducible with highest weight
  /// `highest`, by the Freudenthal recursion. Throws NotDominant.
  DominantCharacter dominant_character(const Labels& highest) const;

  /// Splits a W-invariant character (given by its dominant part) into
  /// irreducibles by repeatedly removing the character of a dominant weight of
  /// maximal |x + delta|. Returns (highest weight, multiplicity) in extraction
  /// order. Throws InconsistentCharacter if a multiplicity would go negative.
  std::vector<std::pair<Labels, std::int64_t>> extract_irreducibles(
      DominantCharacter remaining) const;

 private:
  PositiveSystem() = default;
  void finish(const RootSystem& rs);

  std::size_t coords_ = 0;
  std::vector<std::vector<std::int64_t>> gram_;  // den * (w_i, w_j)
  std::int64_t den_ = 1;
  std::vector<Labels> simple_;
  std::vector<Labels> simple_coroot_;
  std::vector<Labels> positive_;
  std::vector<Labels> positive_dual_;  // gram_ * alpha
  Labels two_delta_;
};

}  // namespace spinspec
