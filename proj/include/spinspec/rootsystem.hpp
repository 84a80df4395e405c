#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinspec/rational.hpp"

namespace spinspec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type such as B2 or E7.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  /// Parses "B2", "E8", ... and validates the rank. Throws ParseError / InvalidRank.
  static SimpleType parse(std::string_view text);

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Throws Error{InvalidRank} unless the rank is admissible for the family.
void validate(const SimpleType& type);

/// Order of the Weyl group, from the closed-form table.
std::uint64_t weyl_group_order(const SimpleType& type);

/// Dual Coxeter number h^v.
int dual_coxeter_number(const SimpleType& type);

/// A vector of exact rationals in the ambient orthogonal basis of a root system.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  std::string to_string() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b);
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }

 private:
  std::vector<Rational> coords_;
};

/// Integer vector of Dynkin labels <lambda, alpha_i^v> (or any integer coordinates).
using Labels = std::vector<std::int64_t>;

/// Exact root datum of a simple type in its classical orthogonal realization.
///
/// Ambient spaces: A_r lives on the sum-zero hyperplane of Q^{r+1}, B/C/D/F4 on
/// Q^r, G2 on the sum-zero hyperplane of Q^3, and E6/E7/E8 inside Q^8 with the
/// Bourbaki simple roots of E8. The basic form is the standard dot product
/// scaled so that long roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  /// Ordered by height, then lexicographically descending on coordinates.
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Coefficients of each positive root in the simple roots (same order).
  const std::vector<std::vector<int>>& positive_root_coefficients() const { return coeffs_; }
  /// cartan_matrix()[i][j] = 2(a_i,a_j)/(a_j,a_j).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  const Weight& weyl_vector() const { return delta_; }
  const Weight& highest_root() const { return positive_.back(); }
  int dual_coxeter() const { return dual_coxeter_; }
  std::size_t num_roots() const { return 2 * positive_.size(); }

  /// W-invariant form normalized so long roots have (a,a) = 2.
  Rational basic_form(const Weight& u, const Weight& v) const;

  bool is_root(const Weight& v) const;
  std::optional<std::size_t> positive_index(const Weight& v) const;
  bool is_positive_root(const Weight& v) const { return positive_index(v).has_value(); }

  /// <lambda, a_i^v> for every simple root.
  std::vector<Rational> dynkin_labels(const Weight& lambda) const;
  /// Dynkin labels of an integral weight; throws NotIntegral otherwise.
  Labels integral_labels(const Weight& lambda) const;
  Weight from_labels(std::span<const std::int64_t> labels) const;
  Weight from_labels(std::span<const Rational> labels) const;
  /// Coefficients of lambda in the basis of simple roots.
  std::vector<Rational> root_coordinates(const Weight& lambda) const;

  /// Throws DimensionMismatch unless v lives in this ambient space.
  void check_dim(const Weight& v) const;

 private:
  SimpleType type_;
  std::size_t ambient_dim_ = 0;
  Rational form_scale_;
  int dual_coxeter_ = 0;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Weight> fundamental_;
  Weight delta_;
  std::map<Weight, std::size_t> positive_lookup_;
};

RootSystem build_root_system(SimpleType type);

/// Killing-normalized product: basic_form / (2 h^v).
Rational killing_inner_product(const RootSystem& rs, const Weight& u, const Weight& v);
inline Rational killing_norm2(const RootSystem& rs, const Weight& u) {
  return killing_inner_product(rs, u, u);
}

/// 2<lambda,alpha>/<alpha,alpha>. Throws NotARoot.
Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Weight& alpha);

/// Simple roots of a positive system given as a list of positive roots.
std::vector<Weight> simple_roots_of(const RootSystem& rs, std::span<const Weight> positives);

/// Dominance with respect to the simple roots of `positives`.
bool is_dominant(const RootSystem& rs, const Weight& lambda, std::span<const Weight> positives);

/// Weyl dimension formula for the positive system `positives` (G or a subsystem).
/// Throws NotDominant / NotIntegral.
Integer weyl_dimension(const RootSystem& rs, const Weight& lambda,
                       std::span<const Weight> positives);

}  // namespace spinspec
