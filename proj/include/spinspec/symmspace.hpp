#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinspec/rootsystem.hpp"

namespace spinspec {

/// An equal-rank symmetric pair (G, K) described by the roots of K inside the
/// root system of G. Compact roots are the roots of K, noncompact roots the rest.
struct SymmetricPair {
  RootSystem g;
  std::vector<Weight> k_simple_roots;
  std::vector<Weight> k_positives;           // Phi_K^+ = Phi_K ∩ Phi_G^+
  std::vector<Weight> noncompact_positives;  // Phi_n^+
  Weight delta_k;
  Weight delta_n;
  int dim = 0;   // n = |Phi_n|
  Rational scal;  // n/2 for the metric induced by minus the Killing form
  bool spin = false;
};

/// Builds and validates a pair. K's roots are the orbit of the given roots
/// under their own reflections; the given roots must be the simple roots of
/// Phi_K ∩ Phi_G^+. Throws NotARoot, DimensionMismatch, NotClosed,
/// NotSimpleList, NotGraded, NoNoncompact.
SymmetricPair build_pair(RootSystem g, std::vector<Weight> k_simple_roots);

/// First simple root i of G with <delta_n, a_i^v> not an integer.
struct SpinObstruction {
  int simple_index;
  Rational pairing;
};
std::optional<SpinObstruction> spin_obstruction(const SymmetricPair& pair);

/// delta_n lies in the weight lattice of the simply-connected G.
bool check_spin(const SymmetricPair& pair);

struct StrangeFormula {
  Rational lhs;  // |delta_G|^2 - |delta_K|^2
  Rational rhs;  // n/16
  bool ok = false;
};
StrangeFormula strange_formula_check(const SymmetricPair& pair);

/// Simple factors of K (torus directions are reported separately).
struct KStructure {
  std::vector<SimpleType> factors;
  int torus_rank = 0;
  std::uint64_t weyl_order = 1;

  std::string describe() const;  // e.g. "A1xA1", "D5xT1", "T1"
};
KStructure k_structure(const SymmetricPair& pair);

struct CatalogEntry {
  std::string name;
  SimpleType g_type;
  std::vector<Weight> k_simple_roots;
  std::string notes;
};

/// Every generated equal-rank pair before the spin filter, in catalog order.
std::vector<CatalogEntry> catalog_candidates();

/// Equal-rank irreducible spin pairs, built from Z/2-gradings by the parity of
/// one simple-root coefficient and filtered by check_spin.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownSpace.
const CatalogEntry& find_catalog_entry(std::string_view name);

SymmetricPair build_pair(const CatalogEntry& entry);

/// K-simple roots of the grading "coefficient of simple root `node` is even".
std::vector<Weight> parity_grading_k_simple_roots(const RootSystem& g, int node);

}  // namespace spinspec
