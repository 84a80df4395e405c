#include "spinspec/rootsystem.hpp"

#include <algorithm>
#include <set>

#include "spinspec/error.hpp"
#include "spinspec/linalg.hpp"

namespace spinspec {

// ---------------------------------------------------------------------------
// SimpleType

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(Errc::ParseError, "bad Lie type '" + std::string(text) + "'");
  SimpleType t;
  switch (text.front()) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw Error(Errc::ParseError, "unknown Lie family in '" + std::string(text) + "'");
  }
  int r = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || r > 1000)
      throw Error(Errc::ParseError, "bad rank in '" + std::string(text) + "'");
    r = 10 * r + (c - '0');
  }
  t.rank = r;
  validate(t);
  return t;
}

void validate(const SimpleType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 3; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw Error(Errc::InvalidRank, "no simple type " + t.name());
}

std::uint64_t weyl_group_order(const SimpleType& t) {
  validate(t);
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << r) * factorial(r);
    case Family::D: return (std::uint64_t{1} << (r - 1)) * factorial(r);
    case Family::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int dual_coxeter_number(const SimpleType& t) {
  validate(t);
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r + 1;
    case Family::B: return 2 * r - 1;
    case Family::C: return r + 1;
    case Family::D: return 2 * r - 2;
    case Family::E: return r == 6 ? 12 : r == 7 ? 18 : 30;
    case Family::F: return 9;
    case Family::G: return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += spinspec::to_string(coords_[i]);
  }
  return s + ")";
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.dim() != dim()) throw Error(Errc::DimensionMismatch, "weight addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.dim() != dim()) throw Error(Errc::DimensionMismatch, "weight subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

Weight unit(std::size_t dim, std::size_t i, const Rational& s = 1) {
  Weight w(dim);
  w[i] = s;
  return w;
}

/// e_i - e_j
Weight diff(std::size_t dim, std::size_t i, std::size_t j) { return unit(dim, i) - unit(dim, j); }

struct Realization {
  std::size_t dim;
  Rational scale;
  std::vector<Weight> simple;
};

Realization realize(const SimpleType& t) {
  const int r = t.rank;
  Realization out;
  out.scale = 1;
  switch (t.family) {
    case Family::A:
      out.dim = r + 1;
      for (int i = 0; i < r; ++i) out.simple.push_back(diff(out.dim, i, i + 1));
      break;
    case Family::B:
      out.dim = r;
      for (int i = 0; i + 1 < r; ++i) out.simple.push_back(diff(out.dim, i, i + 1));
      out.simple.push_back(unit(out.dim, r - 1));
      break;
    case Family::C:
      out.dim = r;
      out.scale = ratio(1, 2);
      for (int i = 0; i + 1 < r; ++i) out.simple.push_back(diff(out.dim, i, i + 1));
      out.simple.push_back(unit(out.dim, r - 1, 2));
      break;
    case Family::D:
      out.dim = r;
      for (int i = 0; i + 1 < r; ++i) out.simple.push_back(diff(out.dim, i, i + 1));
      out.simple.push_back(unit(out.dim, r - 2) + unit(out.dim, r - 1));
      break;
    case Family::E: {
      out.dim = 8;
      const Rational h(1, 2);
      Weight a1(8);
      for (int i = 0; i < 8; ++i) a1[i] = (i == 0 || i == 7) ? h : -h;
      out.simple.push_back(a1);
      out.simple.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i < r - 2; ++i) out.simple.push_back(diff(8, i + 1, i));
      break;
    }
    case Family::F: {
      out.dim = 4;
      const Rational h(1, 2);
      out.simple = {diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), Weight{h, -h, -h, -h}};
      break;
    }
    case Family::G:
      out.dim = 3;
      out.scale = ratio(1, 3);
      out.simple = {Weight{1, -1, 0}, Weight{-2, 1, 1}};
      break;
  }
  return out;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type) {
  validate(type_);
  Realization real = realize(type_);
  ambient_dim_ = real.dim;
  form_scale_ = real.scale;
  simple_ = std::move(real.simple);
  dual_coxeter_ = dual_coxeter_number(type_);

  const int r = rank();
  cartan_.assign(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational c = 2 * basic_form(simple_[i], simple_[j]) / basic_form(simple_[j], simple_[j]);
      cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // Closure from the simple roots: for a positive root b and simple a_i, with
  // q the largest k such that b - k a_i is a root, b + a_i is a root iff
  // q - <b, a_i^v> > 0.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    level.push_back(c);
    known.insert(c);
  }
  std::vector<std::vector<int>> all;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& b : level) {
      all.push_back(b);
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += b[j] * cartan_[j][i];
        int q = 0;
        std::vector<int> down = b;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        if (q - pairing > 0) {
          std::vector<int> up = b;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    for (const auto& c : next) known.insert(c);
    level.assign(next.begin(), next.end());
  }

  struct Entry {
    int height;
    Weight root;
    std::vector<int> coeffs;
  };
  std::vector<Entry> entries;
  for (auto& c : all) {
    Weight w(ambient_dim_);
    int h = 0;
    for (int j = 0; j < r; ++j) {
      if (c[j]) w += simple_[j] * Rational(c[j]);
      h += c[j];
    }
    entries.push_back({h, std::move(w), std::move(c)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return b.root < a.root;
  });
  for (auto& e : entries) {
    positive_lookup_.emplace(e.root, positive_.size());
    positive_.push_back(std::move(e.root));
    coeffs_.push_back(std::move(e.coeffs));
  }

  // fundamental weights: w_i = sum_j (A^{-1})_{ij} a_j
  RationalMatrix a(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = cartan_[i][j];
  RationalMatrix inv = invert(a);
  for (int i = 0; i < r; ++i) {
    Weight w(ambient_dim_);
    for (int j = 0; j < r; ++j)
      if (inv[i][j] != 0) w += simple_[j] * inv[i][j];
    fundamental_.push_back(std::move(w));
  }

  delta_ = Weight(ambient_dim_);
  for (const auto& p : positive_) delta_ += p;
  delta_ *= ratio(1, 2);
}

RootSystem build_root_system(SimpleType type) { return RootSystem(type); }

void RootSystem::check_dim(const Weight& v) const {
  if (v.dim() != ambient_dim_)
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(ambient_dim_) +
                                             " coordinates, got " + std::to_string(v.dim()));
}

Rational RootSystem::basic_form(const Weight& u, const Weight& v) const {
  check_dim(u);
  check_dim(v);
  Rational s = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i) s += u[i] * v[i];
  return s * form_scale_;
}

std::optional<std::size_t> RootSystem::positive_index(const Weight& v) const {
  auto it = positive_lookup_.find(v);
  if (it == positive_lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Weight& v) const {
  return positive_index(v).has_value() || positive_index(-v).has_value();
}

std::vector<Rational> RootSystem::dynkin_labels(const Weight& lambda) const {
  std::vector<Rational> out;
  out.reserve(rank());
  for (const auto& a : simple_) out.push_back(2 * basic_form(lambda, a) / basic_form(a, a));
  return out;
}

Labels RootSystem::integral_labels(const Weight& lambda) const {
  Labels out;
  for (const auto& q : dynkin_labels(lambda)) {
    if (!is_integer(q)) throw Error(Errc::NotIntegral, "weight " + lambda.to_string());
    out.push_back(q.get_num().get_si());
  }
  return out;
}

Weight RootSystem::from_labels(std::span<const std::int64_t> labels) const {
  if (labels.size() != static_cast<std::size_t>(rank()))
    throw Error(Errc::DimensionMismatch, "label vector length");
  Weight w(ambient_dim_);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i]) w += fundamental_[i] * Rational(static_cast<long>(labels[i]));
  return w;
}

Weight RootSystem::from_labels(std::span<const Rational> labels) const {
  if (labels.size() != static_cast<std::size_t>(rank()))
    throw Error(Errc::DimensionMismatch, "label vector length");
  Weight w(ambient_dim_);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != 0) w += fundamental_[i] * labels[i];
  return w;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& lambda) const {
  // lambda = sum_i c_i a_i with c_i = 2(lambda, w_i)/(a_i, a_i)
  std::vector<Rational> out;
  for (int i = 0; i < rank(); ++i)
    out.push_back(2 * basic_form(lambda, fundamental_[i]) / basic_form(simple_[i], simple_[i]));
  return out;
}

// ---------------------------------------------------------------------------
// free functions

Rational killing_inner_product(const RootSystem& rs, const Weight& u, const Weight& v) {
  return rs.basic_form(u, v) / (2 * rs.dual_coxeter());
}

Rational coroot_pairing(const RootSystem& rs, const Weight& lambda, const Weight& alpha) {
  rs.check_dim(lambda);
  rs.check_dim(alpha);
  if (!rs.is_root(alpha)) throw Error(Errc::NotARoot, alpha.to_string());
  return 2 * rs.basic_form(lambda, alpha) / rs.basic_form(alpha, alpha);
}

std::vector<Weight> simple_roots_of(const RootSystem& rs, std::span<const Weight> positives) {
  std::set<Weight> pos(positives.begin(), positives.end());
  std::vector<Weight> out;
  for (const auto& a : positives) {
    if (!rs.is_root(a)) throw Error(Errc::NotARoot, a.to_string());
    bool decomposable = false;
    for (const auto& b : positives) {
      if (b == a) continue;
      if (pos.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda, std::span<const Weight> positives) {
  for (const auto& a : simple_roots_of(rs, positives))
    if (coroot_pairing(rs, lambda, a) < 0) return false;
  return true;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda,
                       std::span<const Weight> positives) {
  rs.check_dim(lambda);
  for (const auto& a : simple_roots_of(rs, positives)) {
    Rational p = coroot_pairing(rs, lambda, a);
    if (p < 0) throw Error(Errc::NotDominant, lambda.to_string());
    if (!is_integer(p)) throw Error(Errc::NotIntegral, lambda.to_string());
  }
  Weight delta(rs.ambient_dim());
  for (const auto& a : positives) delta += a;
  delta *= ratio(1, 2);
  const Weight shifted = lambda + delta;
  Rational dim = 1;
  for (const auto& a : positives) dim *= rs.basic_form(shifted, a) / rs.basic_form(delta, a);
  if (!is_integer(dim))
    throw Error(Errc::NotIntegral, "non-integral Weyl dimension for " + lambda.to_string());
  return dim.get_num();
}

}  // namespace spinspec
