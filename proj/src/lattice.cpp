#include "spinspec/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "spinspec/error.hpp"

namespace spinspec {

void reflect_simple(const std::vector<std::vector<int>>& cartan, int i, Labels& x) {
  const std::int64_t c = x[i];
  if (c == 0) return;
  for (std::size_t j = 0; j < x.size(); ++j) x[j] -= c * cartan[i][j];
}

Labels apply_word(const std::vector<std::vector<int>>& cartan, std::span<const int> word,
                  Labels x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) reflect_simple(cartan, *it, x);
  return x;
}

namespace {

std::int64_t dot(const Labels& a, const Labels& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string show(const Labels& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

}  // namespace

PositiveSystem PositiveSystem::of_group(const RootSystem& rs) {
  return PositiveSystem(rs, rs.positive_roots());
}

PositiveSystem::PositiveSystem(const RootSystem& rs, std::span<const Weight> positives) {
  for (const auto& a : positives) positive_.push_back(rs.integral_labels(a));
  for (const auto& a : simple_roots_of(rs, positives)) {
    simple_.push_back(rs.integral_labels(a));
    Labels f;
    for (const auto& fw : rs.fundamental_weights())
      f.push_back(::spinspec::coroot_pairing(rs, fw, a).get_num().get_si());
    simple_coroot_.push_back(std::move(f));
  }
  finish(rs);
}

void PositiveSystem::finish(const RootSystem& rs) {
  coords_ = static_cast<std::size_t>(rs.rank());
  const auto& fw = rs.fundamental_weights();
  std::vector<std::vector<Rational>> g(coords_, std::vector<Rational>(coords_));
  Integer lcm = 1;
  for (std::size_t i = 0; i < coords_; ++i)
    for (std::size_t j = 0; j < coords_; ++j) {
      g[i][j] = rs.basic_form(fw[i], fw[j]);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g[i][j].get_den().get_mpz_t());
    }
  den_ = lcm.get_si();
  gram_.assign(coords_, std::vector<std::int64_t>(coords_));
  for (std::size_t i = 0; i < coords_; ++i)
    for (std::size_t j = 0; j < coords_; ++j) {
      Rational v = g[i][j] * lcm;
      gram_[i][j] = v.get_num().get_si();
    }
  two_delta_.assign(coords_, 0);
  for (const auto& a : positive_) {
    Labels d(coords_, 0);
    for (std::size_t i = 0; i < coords_; ++i) {
      d[i] = dot(gram_[i], a);
      two_delta_[i] += a[i];
    }
    positive_dual_.push_back(std::move(d));
  }
}

std::int64_t PositiveSystem::coroot_pairing(std::size_t i, const Labels& x) const {
  return dot(simple_coroot_[i], x);
}

bool PositiveSystem::is_dominant(const Labels& x) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (coroot_pairing(i, x) < 0) return false;
  return true;
}

Labels PositiveSystem::to_dominant(Labels x) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      const std::int64_t p = coroot_pairing(i, x);
      if (p < 0) {
        for (std::size_t j = 0; j < coords_; ++j) x[j] -= p * simple_[i][j];
        changed = true;
      }
    }
  }
  return x;
}

std::int64_t PositiveSystem::form(const Labels& a, const Labels& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coords_; ++i) {
    if (a[i] == 0) continue;
    s += a[i] * dot(gram_[i], b);
  }
  return s;
}

std::int64_t PositiveSystem::shifted_norm4(const Labels& x) const {
  Labels y(coords_);
  for (std::size_t i = 0; i < coords_; ++i) y[i] = 2 * x[i] + two_delta_[i];
  return form(y, y);
}

Integer PositiveSystem::dimension(const Labels& x) const {
  if (!is_dominant(x)) throw Error(Errc::NotDominant, show(x));
  Labels y(coords_);
  for (std::size_t i = 0; i < coords_; ++i) y[i] = 2 * x[i] + two_delta_[i];
  Integer num = 1, den = 1;
  for (const auto& d : positive_dual_) {
    num *= static_cast<long>(dot(y, d));
    den *= static_cast<long>(dot(two_delta_, d));
  }
  return num / den;
}

std::vector<Labels> PositiveSystem::orbit(const Labels& x, std::size_t cap) const {
  std::set<Labels> seen{x};
  std::deque<Labels> queue{x};
  while (!queue.empty()) {
    Labels cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      const std::int64_t p = coroot_pairing(i, cur);
      if (p == 0) continue;
      Labels y = cur;
      for (std::size_t j = 0; j < coords_; ++j) y[j] -= p * simple_[i][j];
      if (seen.count(y)) continue;
      if (seen.size() >= cap)
        throw Error(Errc::CapExceeded, "orbit exceeds " + std::to_string(cap) + " weights");
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

DominantCharacter PositiveSystem::dominant_character(const Labels& highest) const {
  if (!is_dominant(highest)) throw Error(Errc::NotDominant, show(highest));

  // Dominant weights below `highest`: covering relations among dominant weights
  // are differences of positive roots, so a search through dominant weights
  // reached by subtracting positive roots finds all of them.
  std::set<Labels> dominant{highest};
  std::deque<Labels> queue{highest};
  while (!queue.empty()) {
    Labels cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : positive_) {
      Labels y = cur;
      for (std::size_t j = 0; j < coords_; ++j) y[j] -= a[j];
      if (!is_dominant(y) || dominant.count(y)) continue;
      dominant.insert(y);
      queue.push_back(std::move(y));
    }
  }

  std::vector<std::pair<std::int64_t, Labels>> order;
  for (const auto& mu : dominant) order.emplace_back(shifted_norm4(mu), mu);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  DominantCharacter mult;
  mult[highest] = 1;
  for (const auto& [norm, mu] : order) {
    if (mu == highest) continue;
    // (lambda+delta)^2 - (mu+delta)^2 = (lambda - mu, lambda + mu + 2 delta)
    Labels diff(coords_), sum(coords_);
    for (std::size_t j = 0; j < coords_; ++j) {
      diff[j] = highest[j] - mu[j];
      sum[j] = highest[j] + mu[j] + two_delta_[j];
    }
    const std::int64_t gap = form(diff, sum);
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < positive_.size(); ++r) {
      const auto& a = positive_[r];
      const std::int64_t mu_a = dot(mu, positive_dual_[r]);
      const std::int64_t a_a = dot(a, positive_dual_[r]);
      Labels nu = mu;
      for (std::int64_t k = 1;; ++k) {
        for (std::size_t j = 0; j < coords_; ++j) nu[j] += a[j];
        auto it = mult.find(to_dominant(nu));
        if (it == mult.end()) break;
        acc += (mu_a + k * a_a) * it->second;
      }
    }
    acc *= 2;
    if (gap <= 0 || acc <= 0 || acc % gap != 0)
      throw Error(Errc::InconsistentCharacter, "Freudenthal recursion is not integral at " +
                                                   show(mu));
    mult[mu] = acc / gap;
  }
  return mult;
}

std::vector<std::pair<Labels, std::int64_t>> PositiveSystem::extract_irreducibles(
    DominantCharacter remaining) const {
  std::vector<std::pair<Labels, std::int64_t>> out;
  for (auto it = remaining.begin(); it != remaining.end();) {
    if (it->second < 0)
      throw Error(Errc::InconsistentCharacter, "negative multiplicity at " + show(it->first));
    if (!is_dominant(it->first))
      throw Error(Errc::InconsistentCharacter, "non-dominant entry " + show(it->first));
    it = it->second == 0 ? remaining.erase(it) : std::next(it);
  }
  while (!remaining.empty()) {
    auto best = remaining.begin();
    std::int64_t best_norm = shifted_norm4(best->first);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const std::int64_t n = shifted_norm4(it->first);
      if (n >= best_norm) {  // ties resolve to the lexicographically largest
        best = it;
        best_norm = n;
      }
    }
    const Labels top = best->first;
    const std::int64_t count = best->second;
    for (const auto& [mu, m] : dominant_character(top)) {
      auto it = remaining.find(mu);
      const std::int64_t have = it == remaining.end() ? 0 : it->second;
      if (have < count * m)
        throw Error(Errc::InconsistentCharacter,
                    "removing " + std::to_string(count) + " x " + show(top) +
                        " would leave a negative multiplicity at " + show(mu));
      if (have == count * m)
        remaining.erase(it);
      else
        it->second -= count * m;
    }
    out.emplace_back(top, count);
  }
  return out;
}

}  // namespace spinspec
