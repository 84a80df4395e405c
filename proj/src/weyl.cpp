#include "spinspec/weyl.hpp"

#include <deque>
#include <map>
#include <set>

#include "spinspec/error.hpp"
#include "spinspec/lattice.hpp"

namespace spinspec {

namespace {

Rational dot(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

// M * v
Weight act(const RationalMatrix& m, const Weight& v) {
  Weight out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < v.dim(); ++j)
      if (v[j] != 0 && m[i][j] != 0) s += m[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

// M * S_alpha, where S_alpha = I - (2/(a.a)) a a^T in the ambient dot product.
RationalMatrix times_reflection(const RationalMatrix& m, const Weight& alpha) {
  const Weight u = act(m, alpha);
  const Rational c = 2 / dot(alpha, alpha);
  RationalMatrix out = m;
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    if (alpha[j] == 0) continue;
    const Rational f = c * alpha[j];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (u[i] != 0) out[i][j] -= f * u[i];
  }
  return out;
}

// S_alpha * M
RationalMatrix reflection_times(const RationalMatrix& m, const Weight& alpha) {
  const Rational c = 2 / dot(alpha, alpha);
  RationalMatrix out = m;
  const std::size_t d = m.size();
  for (std::size_t j = 0; j < d; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (alpha[i] != 0) s += alpha[i] * m[i][j];
    if (s == 0) continue;
    s *= c;
    for (std::size_t i = 0; i < d; ++i)
      if (alpha[i] != 0) out[i][j] -= s * alpha[i];
  }
  return out;
}

RationalMatrix identity_matrix(std::size_t d) {
  RationalMatrix m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Labels delta_labels(const RootSystem& rs) { return Labels(rs.rank(), 1); }

}  // namespace

/// Assembles elements whose word is known to be reduced (breadth-first depth).
class WeylGroupBuilder {
 public:
  static WeylElement make(RationalMatrix action, std::vector<int> word) {
    return WeylElement(std::move(action), std::move(word));
  }
};

// ---------------------------------------------------------------------------

WeylElement WeylElement::identity(std::size_t dim) { return WeylElement(identity_matrix(dim), {}); }

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw Error(Errc::NotARoot, "simple root index out of range");
  return WeylElement(times_reflection(identity_matrix(rs.ambient_dim()), rs.simple_roots()[i]),
                     {i});
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Weight& alpha) {
  rs.check_dim(alpha);
  if (!rs.is_root(alpha)) throw Error(Errc::NotARoot, alpha.to_string());
  return from_action(rs, times_reflection(identity_matrix(rs.ambient_dim()), alpha));
}

WeylElement WeylElement::from_action(const RootSystem& rs, RationalMatrix action) {
  if (action.size() != rs.ambient_dim())
    throw Error(Errc::DimensionMismatch, "action matrix size");
  // Descent: if w(a_i) < 0 then l(w s_i) = l(w) - 1.
  std::vector<int> reversed;
  RationalMatrix m = action;
  const std::size_t max_len = rs.positive_roots().size();
  while (true) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.is_positive_root(-act(m, rs.simple_roots()[i]))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    reversed.push_back(descent);
    if (reversed.size() > max_len)
      throw Error(Errc::InvalidSubsystem, "matrix is not a Weyl group element");
    m = times_reflection(m, rs.simple_roots()[descent]);
  }
  if (m != identity_matrix(rs.ambient_dim())) {
    // Fix the part orthogonal to the roots (ambient dim > rank) and compare on roots.
    for (const auto& a : rs.simple_roots())
      if (act(m, a) != a) throw Error(Errc::InvalidSubsystem, "matrix is not a Weyl group element");
  }
  return WeylElement(std::move(action), std::vector<int>(reversed.rbegin(), reversed.rend()));
}

WeylElement WeylElement::inverse() const {
  // Weyl group elements are orthogonal for the ambient dot product.
  const std::size_t d = action_.size();
  RationalMatrix t(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t[i][j] = action_[j][i];
  return WeylElement(std::move(t), std::vector<int>(word_.rbegin(), word_.rend()));
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return WeylElement::from_action(rs, multiply(a.action_, b.action_));
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& a : rs.positive_roots())
    if (rs.is_positive_root(-apply(w, a))) ++count;
  return count;
}

Weight reflect(const RootSystem& rs, const Weight& lambda, const Weight& alpha) {
  return lambda - alpha * coroot_pairing(rs, lambda, alpha);
}

Weight apply(const WeylElement& w, const Weight& lambda) {
  if (lambda.dim() != w.dim())
    throw Error(Errc::DimensionMismatch, "Weyl element acts on dimension " +
                                             std::to_string(w.dim()) + ", weight has " +
                                             std::to_string(lambda.dim()));
  return act(w.action(), lambda);
}

// ---------------------------------------------------------------------------

namespace {

/// Integer functionals x -> <x, a^v> (on Dynkin labels) for simple roots of a positive system.
std::vector<Labels> simple_coroot_functionals(const RootSystem& rs,
                                              std::span<const Weight> positives) {
  std::vector<Labels> out;
  for (const auto& a : simple_roots_of(rs, positives)) {
    Labels f;
    for (const auto& fw : rs.fundamental_weights()) {
      Rational p = coroot_pairing(rs, fw, a);
      f.push_back(p.get_num().get_si());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::int64_t eval(const Labels& f, const Labels& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
  return s;
}

void check_positive_system(const RootSystem& rs, std::span<const Weight> k_positives) {
  std::set<Weight> seen;
  for (const auto& a : k_positives) {
    if (a.dim() != rs.ambient_dim() || !rs.is_positive_root(a))
      throw Error(Errc::InvalidSubsystem, "not a positive root of " + rs.type().name() + ": " +
                                              a.to_string());
    if (!seen.insert(a).second)
      throw Error(Errc::InvalidSubsystem, "repeated root " + a.to_string());
  }
}

}  // namespace

KostantSet enumerate_kostant_set(const RootSystem& rs, std::span<const Weight> k_positives) {
  check_positive_system(rs, k_positives);
  const auto& cartan = rs.cartan_matrix();
  const auto coroots = simple_coroot_functionals(rs, k_positives);
  auto member = [&](const Labels& image) {
    for (const auto& f : coroots)
      if (eval(f, image) <= 0) return false;
    return true;
  };

  KostantSet out;
  std::set<Labels> visited;
  const Labels delta = delta_labels(rs);
  visited.insert(delta);
  out.elements.push_back(WeylElement::identity(rs.ambient_dim()));
  if (!member(delta))
    throw Error(Errc::InvalidSubsystem, "identity fails the membership test");

  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      std::vector<int> word = out.elements[head].word();
      word.push_back(i);
      Labels image = apply_word(cartan, word, delta);
      if (visited.count(image) || !member(image)) continue;
      visited.insert(image);
      RationalMatrix m = times_reflection(out.elements[head].action(), rs.simple_roots()[i]);
      out.elements.push_back(WeylGroupBuilder::make(std::move(m), std::move(word)));
    }
  }
  return out;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
  const auto& cartan = rs.cartan_matrix();
  const Labels delta = delta_labels(rs);
  std::set<Labels> visited{delta};
  std::vector<WeylElement> out{WeylElement::identity(rs.ambient_dim())};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      std::vector<int> word = out[head].word();
      word.push_back(i);
      Labels image = apply_word(cartan, word, delta);
      if (!visited.insert(image).second) continue;
      if (out.size() >= cap)
        throw Error(Errc::CapExceeded, "Weyl group of " + rs.type().name() + " exceeds " +
                                           std::to_string(cap) + " elements");
      out.push_back(WeylGroupBuilder::make(
          times_reflection(out[head].action(), rs.simple_roots()[i]), std::move(word)));
    }
  }
  return out;
}

bool contains_k_positives(const RootSystem& rs, const WeylElement& w,
                          std::span<const Weight> k_positives) {
  std::set<Weight> image;
  for (const auto& a : rs.positive_roots()) image.insert(apply(w, a));
  for (const auto& a : k_positives)
    if (!image.count(a)) return false;
  return true;
}

KostantSet kostant_set_bruteforce(const RootSystem& rs, std::span<const Weight> k_positives,
                                  std::size_t cap) {
  check_positive_system(rs, k_positives);
  KostantSet out;
  for (auto& w : enumerate_weyl_group(rs, cap))
    if (contains_k_positives(rs, w, k_positives)) out.elements.push_back(std::move(w));
  return out;
}

std::vector<Weight> full_orbit(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
  rs.check_dim(lambda);
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : rs.simple_roots()) {
      Weight y = reflect(rs, x, a);
      if (seen.count(y)) continue;
      if (seen.size() >= cap)
        throw Error(Errc::CapExceeded, "orbit of " + lambda.to_string() + " exceeds " +
                                           std::to_string(cap) + " elements");
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& lambda,
                                                       std::span<const Weight> positives) {
  rs.check_dim(lambda);
  const auto simple = simple_roots_of(rs, positives);
  Weight x = lambda;
  RationalMatrix m = identity_matrix(rs.ambient_dim());
  // Each step strictly raises x in the dominance order of the positive system,
  // so the loop terminates.
  while (true) {
    const Weight* negative = nullptr;
    for (const auto& a : simple)
      if (coroot_pairing(rs, x, a) < 0) {
        negative = &a;
        break;
      }
    if (!negative) break;
    x = reflect(rs, x, *negative);
    m = reflection_times(m, *negative);
  }
  return {std::move(x), WeylElement::from_action(rs, std::move(m))};
}

}  // namespace spinspec
