#include "spinspec/dirac.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "spinspec/error.hpp"
#include "spinspec/lattice.hpp"

namespace spinspec {

namespace {

void require_spin(const SymmetricPair& pair) {
  if (const auto bad = spin_obstruction(pair))
    throw Error(Errc::NotSpin, "<delta_n, a_" + std::to_string(bad->simple_index + 1) +
                                   "^v> = " + to_string(bad->pairing) + " is not an integer");
}

/// Everything needed to branch G-representations to K on integer labels.
struct BranchingEngine {
  const SymmetricPair& pair;
  PositiveSystem g_sys;
  PositiveSystem k_sys;
  std::vector<std::vector<int>> kostant_words;

  explicit BranchingEngine(const SymmetricPair& p)
      : pair(p), g_sys(PositiveSystem::of_group(p.g)), k_sys(p.g, p.k_positives) {
    for (const auto& w : enumerate_kostant_set(p.g, p.k_positives).elements)
      kostant_words.push_back(w.word());
  }

  Labels g_dominant_labels(const Weight& lambda) const {
    Labels x = pair.g.integral_labels(lambda);
    if (!g_sys.is_dominant(x)) throw Error(Errc::NotDominant, lambda.to_string());
    return x;
  }

  /// The K-dominant weights of W_G.mu are the distinct w.mu, w in the Kostant
  /// set, for G-dominant mu.
  DominantCharacter restrict_dominant(const DominantCharacter& g_char) const {
    DominantCharacter out;
    for (const auto& [mu, m] : g_char) {
      std::set<Labels> images;
      for (const auto& word : kostant_words) images.insert(apply_word(pair.g.cartan_matrix(), word, mu));
      for (const auto& x : images) out[x] += m;
    }
    return out;
  }

  std::vector<std::pair<Labels, std::int64_t>> branch(const Labels& lambda,
                                                      std::int64_t dim_cap) const {
    const Integer dim = g_sys.dimension(lambda);
    if (dim > dim_cap)
      throw Error(Errc::CapExceeded, "dim V = " + dim.get_str() + " exceeds the branching cap " +
                                         std::to_string(dim_cap));
    return k_sys.extract_irreducibles(restrict_dominant(g_sys.dominant_character(lambda)));
  }
};

std::vector<std::pair<Weight, std::int64_t>> to_weights(
    const RootSystem& rs, const std::vector<std::pair<Labels, std::int64_t>>& content) {
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& [x, m] : content) out.emplace_back(rs.from_labels(x), m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  return out;
}

}  // namespace

std::vector<SpinComponent> spin_decomposition(const SymmetricPair& pair) {
  require_spin(pair);
  const RootSystem& rs = pair.g;
  const PositiveSystem k_sys(rs, pair.k_positives);
  std::vector<SpinComponent> out;
  for (auto& w : enumerate_kostant_set(rs, pair.k_positives).elements) {
    Weight beta = apply(w, rs.weyl_vector()) - pair.delta_k;
    Rational norm2 = killing_norm2(rs, beta);
    Integer dim = k_sys.dimension(rs.integral_labels(beta));
    out.push_back({std::move(w), std::move(beta), std::move(norm2), std::move(dim)});
  }
  std::sort(out.begin(), out.end(), [](const SpinComponent& a, const SpinComponent& b) {
    if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
    return b.beta < a.beta;
  });
  return out;
}

bool dominance_leq(const RootSystem& rs, const Weight& beta, const Weight& beta_prime) {
  for (const auto& c : rs.root_coordinates(beta_prime - beta))
    if (c < 0 || !is_integer(c)) return false;
  return true;
}

std::vector<SpinComponent> maximal_minimal_components(const RootSystem& rs,
                                                      std::span<const SpinComponent> components) {
  if (components.empty()) return {};
  Rational best = components.front().norm2;
  for (const auto& c : components) best = std::min(best, c.norm2);
  std::vector<const SpinComponent*> minima;
  for (const auto& c : components)
    if (c.norm2 == best) minima.push_back(&c);

  std::vector<SpinComponent> out;
  for (const auto* c : minima) {
    bool dominated = false;
    for (const auto* d : minima)
      if (d != c && d->beta != c->beta && dominance_leq(rs, c->beta, d->beta)) dominated = true;
    if (!dominated) out.push_back(*c);
  }
  std::sort(out.begin(), out.end(),
            [](const SpinComponent& a, const SpinComponent& b) { return b.beta < a.beta; });
  return out;
}

SpinComponent select_w0(const RootSystem& rs, std::span<const SpinComponent> components) {
  auto candidates = maximal_minimal_components(rs, components);
  if (candidates.empty()) throw Error(Errc::InvalidSubsystem, "no spin components");
  return candidates.front();
}

Weight g_dominant_weight(const SpinComponent& component) {
  return apply(component.w.inverse(), component.beta);
}

bool w0_weight_is_dominant(const SymmetricPair& pair, const SpinComponent& w0_component) {
  return is_dominant(pair.g, g_dominant_weight(w0_component), pair.g.positive_roots());
}

Rational first_eigenvalue_squared(const SymmetricPair& pair) {
  const auto components = spin_decomposition(pair);
  Rational best = components.front().norm2;
  for (const auto& c : components) best = std::min(best, c.norm2);
  return 2 * best + ratio(pair.dim, 8);
}

Rational first_eigenvalue_squared_max_form(const SymmetricPair& pair) {
  require_spin(pair);
  const RootSystem& rs = pair.g;
  const Weight& dg = rs.weyl_vector();
  std::optional<Rational> best;
  for (const auto& w : enumerate_kostant_set(rs, pair.k_positives).elements) {
    Rational p = killing_inner_product(rs, apply(w, dg), pair.delta_k);
    if (!best || p > *best) best = p;
  }
  return 2 * killing_norm2(rs, dg) + 2 * killing_norm2(rs, pair.delta_k) - 4 * *best +
         ratio(pair.dim, 8);
}

Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda) {
  rs.check_dim(lambda);
  for (const auto& l : rs.dynkin_labels(lambda)) {
    if (!is_integer(l)) throw Error(Errc::NotIntegral, lambda.to_string());
    if (l < 0) throw Error(Errc::NotDominant, lambda.to_string());
  }
  const Weight shifted = lambda + rs.weyl_vector();
  return killing_norm2(rs, shifted) - killing_norm2(rs, rs.weyl_vector());
}

std::vector<Weight> spin_weights_bruteforce(const SymmetricPair& pair, std::size_t cap) {
  const auto& roots = pair.noncompact_positives;
  if (roots.size() > cap)
    throw Error(Errc::CapExceeded, std::to_string(roots.size()) +
                                       " positive noncompact roots exceed the cap of " +
                                       std::to_string(cap));
  // Gray code: consecutive subsets differ by one root.
  const std::size_t total = std::size_t{1} << roots.size();
  std::vector<Weight> out;
  out.reserve(total);
  Weight current = pair.delta_n;
  out.push_back(current);
  std::vector<bool> in(roots.size(), false);
  for (std::size_t i = 1; i < total; ++i) {
    const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(i));
    if (in[bit])
      current += roots[bit];
    else
      current -= roots[bit];
    in[bit] = !in[bit];
    out.push_back(current);
  }
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> decompose_into_k_irreps(
    const SymmetricPair& pair, std::span<const Weight> weights) {
  const RootSystem& rs = pair.g;
  const PositiveSystem k_sys(rs, pair.k_positives);

  std::map<Labels, std::int64_t> counts;
  for (const auto& w : weights) counts[rs.integral_labels(w)] += 1;

  DominantCharacter dominant;
  std::int64_t expected_total = 0;
  for (const auto& [x, m] : counts) {
    if (!k_sys.is_dominant(x)) continue;
    dominant[x] = m;
    const auto orbit_cap = static_cast<std::size_t>(weights.size()) + 1;
    try {
      expected_total += m * static_cast<std::int64_t>(k_sys.orbit(x, orbit_cap).size());
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      throw Error(Errc::InconsistentCharacter, "weight multiset is not invariant under W_K");
    }
  }
  for (const auto& [x, m] : counts) {
    auto it = dominant.find(k_sys.to_dominant(x));
    if (it == dominant.end() || it->second != m)
      throw Error(Errc::InconsistentCharacter, "weight multiset is not invariant under W_K");
  }
  if (expected_total != static_cast<std::int64_t>(weights.size()))
    throw Error(Errc::InconsistentCharacter, "weight multiset is not invariant under W_K");

  return to_weights(rs, k_sys.extract_irreducibles(std::move(dominant)));
}

std::map<Weight, std::int64_t> freudenthal_multiplicities(const RootSystem& rs,
                                                          const Weight& lambda,
                                                          std::int64_t dim_cap) {
  const PositiveSystem g_sys = PositiveSystem::of_group(rs);
  const Labels top = rs.integral_labels(lambda);
  if (!g_sys.is_dominant(top)) throw Error(Errc::NotDominant, lambda.to_string());
  const Integer dim = g_sys.dimension(top);
  if (dim > dim_cap)
    throw Error(Errc::CapExceeded, "dim V = " + dim.get_str() + " exceeds " +
                                       std::to_string(dim_cap));
  std::map<Weight, std::int64_t> out;
  for (const auto& [mu, m] : g_sys.dominant_character(top))
    for (const auto& x : g_sys.orbit(mu, static_cast<std::size_t>(dim_cap) + 1))
      out[rs.from_labels(x)] = m;
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> restrict_to_k(const SymmetricPair& pair,
                                                           const Weight& lambda,
                                                           std::int64_t dim_cap) {
  const BranchingEngine engine(pair);
  return to_weights(pair.g, engine.branch(engine.g_dominant_labels(lambda), dim_cap));
}

std::int64_t branching_multiplicity(const SymmetricPair& pair, const Weight& lambda,
                                    const Weight& mu, std::int64_t dim_cap) {
  const BranchingEngine engine(pair);
  const Labels top = engine.g_dominant_labels(lambda);
  const Labels target = pair.g.integral_labels(mu);
  if (!engine.k_sys.is_dominant(target)) throw Error(Errc::NotDominant, mu.to_string());
  for (const auto& [x, m] : engine.branch(top, dim_cap))
    if (x == target) return m;
  return 0;
}

std::vector<SpectrumLine> spectrum_below(const SymmetricPair& pair, const Rational& cutoff,
                                         std::int64_t dim_cap) {
  require_spin(pair);
  const RootSystem& rs = pair.g;
  const BranchingEngine engine(pair);
  const PositiveSystem& g_sys = engine.g_sys;

  std::vector<Labels> targets;
  for (const auto& c : spin_decomposition(pair)) targets.push_back(rs.integral_labels(c.beta));
  std::sort(targets.begin(), targets.end());

  // casimir(lambda) = (lambda, lambda + 2 delta) / (2 h^v), and g_sys.form is
  // the basic form times its denominator.
  const Rational bound = cutoff - ratio(pair.dim, 16);
  const Rational scale = Rational(g_sys.form_denominator() * 2 * rs.dual_coxeter());
  auto casimir_scaled = [&](const Labels& x) {
    Labels y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += g_sys.two_delta()[i];
    return g_sys.form(x, y);
  };

  // Weights of V_lambda are congruent to lambda modulo the root lattice, and
  // every beta_w is congruent to delta_n, so only that coset can contribute.
  auto same_coset = [&](const Labels& x) {
    for (const auto& c : rs.root_coordinates(rs.from_labels(x) - pair.delta_n))
      if (!is_integer(c)) return false;
    return true;
  };

  std::vector<SpectrumLine> out;
  if (bound < 0) return out;
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  Labels x(r, 0);
  // casimir is increasing in every fundamental-weight coordinate, so each
  // coordinate can stop at the first value past the bound.
  std::function<void(std::size_t)> scan = [&](std::size_t i) {
    if (i == r) {
      const Rational cas = Rational(casimir_scaled(x)) / scale;
      if (cas > bound || !same_coset(x)) return;
      std::int64_t hom = 0;
      for (const auto& [mu, m] : engine.branch(x, dim_cap))
        if (std::binary_search(targets.begin(), targets.end(), mu)) hom += m;
      if (hom == 0) return;
      SpectrumLine line;
      line.casimir = cas;
      line.eigenvalue = cas + ratio(pair.dim, 16);
      line.g_labels = x;
      line.g_highest_weight = rs.from_labels(x);
      line.g_dim = g_sys.dimension(x);
      line.hom_dim = hom;
      line.multiplicity = line.g_dim * hom;
      out.push_back(std::move(line));
      return;
    }
    for (x[i] = 0;; ++x[i]) {
      if (Rational(casimir_scaled(x)) / scale > bound) break;
      scan(i + 1);
    }
    x[i] = 0;
  };
  scan(0);

  std::sort(out.begin(), out.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.g_labels < b.g_labels;
  });
  return out;
}

}  // namespace spinspec
