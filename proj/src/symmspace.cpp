#include "spinspec/symmspace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "spinspec/error.hpp"

namespace spinspec {

namespace {

using Coeffs = std::vector<int>;

/// Roots of G as integer coefficient vectors in the simple roots. Ids 0..N-1
/// are the positive roots in order, N..2N-1 their negatives.
class RootIndex {
 public:
  explicit RootIndex(const RootSystem& rs) : rs_(rs) {
    const auto& pos = rs.positive_root_coefficients();
    n_ = static_cast<int>(pos.size());
    for (int i = 0; i < n_; ++i) coeffs_.push_back(pos[i]);
    for (int i = 0; i < n_; ++i) {
      Coeffs c = pos[i];
      for (auto& x : c) x = -x;
      coeffs_.push_back(std::move(c));
    }
    for (int i = 0; i < 2 * n_; ++i) ids_.emplace(coeffs_[i], i);
  }

  int size() const { return 2 * n_; }
  bool positive(int id) const { return id < n_; }
  int negate(int id) const { return id < n_ ? id + n_ : id - n_; }
  const Coeffs& coeffs(int id) const { return coeffs_[id]; }

  std::optional<int> find(const Coeffs& c) const {
    const auto it = ids_.find(c);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> sum(int a, int b) const {
    Coeffs c = coeffs_[a];
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += coeffs_[b][i];
    return find(c);
  }
  int id_of(const Weight& root) const {
    if (const auto i = rs_.positive_index(root)) return static_cast<int>(*i);
    return static_cast<int>(*rs_.positive_index(-root)) + n_;
  }
  Weight weight(int id) const {
    return positive(id) ? rs_.positive_roots()[id] : -rs_.positive_roots()[id - n_];
  }

  /// Closure of +-gens under the reflections in gens.
  std::set<int> generated(const std::vector<int>& gens) const {
    // <a_j, g^v> for each generator g and simple root a_j
    std::vector<Coeffs> pairing;
    for (int g : gens) {
      Coeffs p;
      for (const auto& a : rs_.simple_roots())
        p.push_back(static_cast<int>(coroot_pairing(rs_, a, weight(g)).get_num().get_si()));
      pairing.push_back(std::move(p));
    }
    std::set<int> out;
    std::deque<int> queue;
    for (int g : gens)
      for (int r : {g, negate(g)})
        if (out.insert(r).second) queue.push_back(r);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int p = 0;
        for (std::size_t j = 0; j < pairing[k].size(); ++j) p += coeffs_[x][j] * pairing[k][j];
        if (p == 0) continue;
        Coeffs y = coeffs_[x];
        for (std::size_t j = 0; j < y.size(); ++j) y[j] -= p * coeffs_[gens[k]][j];
        const int id = *find(y);
        if (out.insert(id).second) queue.push_back(id);
      }
    }
    return out;
  }

 private:
  const RootSystem& rs_;
  int n_ = 0;
  std::vector<Coeffs> coeffs_;
  std::map<Coeffs, int> ids_;
};

Weight half_sum(std::size_t dim, const std::vector<Weight>& roots) {
  Weight s(dim);
  for (const auto& a : roots) s += a;
  return s * ratio(1, 2);
}

}  // namespace

SymmetricPair build_pair(RootSystem g, std::vector<Weight> k_simple_roots) {
  for (const auto& a : k_simple_roots) {
    g.check_dim(a);
    if (!g.is_root(a)) throw Error(Errc::NotARoot, a.to_string() + " is not a root of " +
                                                       g.type().name());
  }

  SymmetricPair pair{std::move(g), {}, {}, {}, {}, {}, 0, 0, false};
  const RootSystem& rs = pair.g;
  const RootIndex index(rs);
  std::vector<int> gens;
  for (const auto& a : k_simple_roots) gens.push_back(index.id_of(a));

  const std::set<int> phi_k = index.generated(gens);
  for (int a : phi_k)
    for (int b : phi_k) {
      const auto s = index.sum(a, b);
      if (s && !phi_k.count(*s))
        throw Error(Errc::NotClosed, index.weight(a).to_string() + " + " +
                                         index.weight(b).to_string() + " = " +
                                         index.weight(*s).to_string() + " is a root outside Phi_K");
    }

  for (int i = 0; i < index.size() / 2; ++i)
    (phi_k.count(i) ? pair.k_positives : pair.noncompact_positives).push_back(rs.positive_roots()[i]);
  if (pair.noncompact_positives.empty())
    throw Error(Errc::NoNoncompact, "K has all the roots of G; G/K is a point");

  const std::vector<Weight> simple = simple_roots_of(rs, pair.k_positives);
  std::set<Weight> given(k_simple_roots.begin(), k_simple_roots.end());
  if (given.size() != k_simple_roots.size() ||
      given != std::set<Weight>(simple.begin(), simple.end()))
    throw Error(Errc::NotSimpleList,
                "the listed roots are not the simple roots of Phi_K ∩ Phi_G^+");

  for (int a = 0; a < index.size(); ++a) {
    if (phi_k.count(a)) continue;
    for (int b = 0; b < index.size(); ++b) {
      const auto s = index.sum(a, b);
      if (!s) continue;
      if (!phi_k.count(b) && !phi_k.count(*s))
        throw Error(Errc::NotGraded, index.weight(a).to_string() + " + " +
                                         index.weight(b).to_string() + " is a noncompact root");
      if (phi_k.count(b) && phi_k.count(*s))
        throw Error(Errc::NotGraded, index.weight(a).to_string() + " + " +
                                         index.weight(b).to_string() + " is compact");
    }
  }

  pair.k_simple_roots = std::move(k_simple_roots);
  pair.delta_k = half_sum(rs.ambient_dim(), pair.k_positives);
  pair.delta_n = rs.weyl_vector() - pair.delta_k;
  pair.dim = 2 * static_cast<int>(pair.noncompact_positives.size());
  pair.scal = ratio(pair.dim, 2);
  pair.spin = !spin_obstruction(pair).has_value();
  return pair;
}

std::optional<SpinObstruction> spin_obstruction(const SymmetricPair& pair) {
  const auto labels = pair.g.dynkin_labels(pair.delta_n);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!is_integer(labels[i])) return SpinObstruction{static_cast<int>(i), labels[i]};
  return std::nullopt;
}

bool check_spin(const SymmetricPair& pair) { return !spin_obstruction(pair).has_value(); }

StrangeFormula strange_formula_check(const SymmetricPair& pair) {
  StrangeFormula out;
  out.lhs = killing_norm2(pair.g, pair.g.weyl_vector()) - killing_norm2(pair.g, pair.delta_k);
  out.rhs = ratio(pair.dim, 16);
  out.ok = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// structure of K

std::string KStructure::describe() const {
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : "x") + f.name();
  if (torus_rank > 0) s += (s.empty() ? "T" : "xT") + std::to_string(torus_rank);
  return s;
}

KStructure k_structure(const SymmetricPair& pair) {
  const RootSystem& rs = pair.g;
  const auto& simple = pair.k_simple_roots;
  const std::size_t l = simple.size();

  // connected components of the Dynkin diagram of K
  std::vector<int> comp(l, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = ncomp;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < l; ++j)
        if (comp[j] < 0 && rs.basic_form(simple[i], simple[j]) != 0) {
          comp[j] = ncomp;
          queue.push_back(j);
        }
    }
    ++ncomp;
  }

  const RootIndex index(rs);
  KStructure out;
  out.torus_rank = rs.rank() - static_cast<int>(l);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> gens;
    for (std::size_t i = 0; i < l; ++i)
      if (comp[i] == c) gens.push_back(index.id_of(simple[i]));
    const int rank = static_cast<int>(gens.size());
    std::vector<Weight> roots;
    for (int a : index.generated(gens))
      if (index.positive(a)) roots.push_back(index.weight(a));
    const int npos = static_cast<int>(roots.size());
    Rational longest = 0;
    for (const auto& a : roots) longest = std::max(longest, rs.basic_form(a, a));
    int nshort = 0;
    for (const auto& a : roots)
      if (rs.basic_form(a, a) < longest) ++nshort;

    SimpleType t{Family::A, rank};
    if (nshort == 0) {
      if (npos == rank * (rank + 1) / 2)
        t.family = Family::A;
      else if (npos == rank * (rank - 1))
        t.family = Family::D;
      else
        t.family = Family::E;
    } else if (rank == 2 && npos == 6) {
      t.family = Family::G;
    } else if (rank == 4 && npos == 24) {
      t.family = Family::F;
    } else {
      t.family = nshort == rank ? Family::B : Family::C;
    }
    out.factors.push_back(t);
    out.weyl_order *= weyl_group_order(t);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
  return out;
}

// ---------------------------------------------------------------------------
// catalog

std::vector<Weight> parity_grading_k_simple_roots(const RootSystem& g, int node) {
  if (node < 0 || node >= g.rank()) throw Error(Errc::InvalidSubsystem, "node out of range");
  std::vector<Weight> k_positives;
  for (std::size_t i = 0; i < g.positive_roots().size(); ++i)
    if (g.positive_root_coefficients()[i][node] % 2 == 0) k_positives.push_back(g.positive_roots()[i]);
  return simple_roots_of(g, k_positives);
}

namespace {

struct Candidate {
  std::string name;
  SimpleType type;
  int node;
  std::string notes;
};

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::vector<Candidate> candidates() {
  std::vector<Candidate> out;
  out.push_back({"sphere-even(1)", {Family::A, 1}, 0, "S^2 = SU(2)/U(1)"});
  for (int m = 2; m <= 6; ++m)
    out.push_back({"sphere-even(" + std::to_string(m) + ")", {Family::B, m}, m - 1,
                   "S^" + std::to_string(2 * m) + " = Spin(" + std::to_string(2 * m + 1) +
                       ")/Spin(" + std::to_string(2 * m) + ")"});

  for (int total = 3; total <= 8; ++total)
    for (int p = 1; 2 * p <= total; ++p)
      out.push_back({"AIII" + pq(p, total - p), {Family::A, total - 1}, p - 1,
                     "SU(" + std::to_string(total) + ")/S(U(" + std::to_string(p) + ")xU(" +
                         std::to_string(total - p) + "))"});

  for (int n = 3; n <= 5; ++n)
    out.push_back({"CI(" + std::to_string(n) + ")", {Family::C, n}, n - 1,
                   "Sp(" + std::to_string(n) + ")/U(" + std::to_string(n) + ")"});

  for (int total = 3; total <= 5; ++total)
    for (int p = 1; 2 * p <= total; ++p)
      out.push_back({"CII" + pq(p, total - p), {Family::C, total}, p - 1,
                     "Sp(" + std::to_string(total) + ")/Sp(" + std::to_string(p) + ")xSp(" +
                         std::to_string(total - p) + ")"});

  for (int n = 4; n <= 6; ++n)
    out.push_back({"DIII(" + std::to_string(n) + ")", {Family::D, n}, n - 1,
                   "SO(" + std::to_string(2 * n) + ")/U(" + std::to_string(n) + ")"});

  // Real Grassmannians SO(p+q)/SO(p)xSO(q) with p = 2k even and q >= 2.
  std::set<std::pair<int, int>> seen;
  auto add_bdi = [&](SimpleType t, int node, int p, int q) {
    auto key = std::minmax(p, q);
    if (!seen.insert(key).second) return;
    out.push_back({"BDI" + pq(key.first, key.second), t, node,
                   "SO(" + std::to_string(p + q) + ")/SO(" + std::to_string(key.first) + ")xSO(" +
                       std::to_string(key.second) + ")"});
  };
  for (int total = 5; total <= 12; ++total) {
    if (total % 2 == 1) {
      const int m = (total - 1) / 2;
      for (int k = 1; k < m; ++k) add_bdi({Family::B, m}, k - 1, 2 * k, total - 2 * k);
    } else if (total >= 8) {
      const int m = total / 2;
      for (int k = 1; k <= m - 2; ++k) add_bdi({Family::D, m}, k - 1, 2 * k, total - 2 * k);
    }
  }

  // Exceptional spaces, one per distinct dimension.
  struct Known {
    SimpleType type;
    int dim;
    const char* name;
    const char* notes;
  };
  static const Known known[] = {
      {{Family::G, 2}, 8, "G", "G2/SO(4)"},
      {{Family::F, 4}, 28, "FI", "F4/Sp(3)Sp(1)"},
      {{Family::F, 4}, 16, "FII", "F4/Spin(9)"},
      {{Family::E, 6}, 40, "EII", "E6/SU(6)Sp(1)"},
      {{Family::E, 6}, 32, "EIII", "E6/Spin(10)U(1)"},
      {{Family::E, 7}, 70, "EV", "E7/SU(8)"},
      {{Family::E, 7}, 64, "EVI", "E7/Spin(12)Sp(1)"},
      {{Family::E, 7}, 54, "EVII", "E7/E6U(1)"},
      {{Family::E, 8}, 128, "EVIII", "E8/Spin(16)"},
      {{Family::E, 8}, 112, "EIX", "E8/E7Sp(1)"},
  };
  for (const SimpleType t : {SimpleType{Family::G, 2}, SimpleType{Family::F, 4},
                             SimpleType{Family::E, 6}, SimpleType{Family::E, 7},
                             SimpleType{Family::E, 8}}) {
    const RootSystem rs(t);
    std::set<int> dims;
    for (int node = 0; node < t.rank; ++node) {
      int noncompact = 0;
      for (const auto& c : rs.positive_root_coefficients())
        if (c[node] % 2) ++noncompact;
      if (!dims.insert(2 * noncompact).second) continue;
      for (const auto& k : known)
        if (k.type == t && k.dim == 2 * noncompact) out.push_back({k.name, t, node, k.notes});
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_candidates() {
  std::vector<CatalogEntry> out;
  for (const auto& c : candidates()) {
    const RootSystem rs(c.type);
    out.push_back({c.name, c.type, parity_grading_k_simple_roots(rs, c.node), c.notes});
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (auto& e : catalog_candidates())
      if (build_pair(e).spin) out.push_back(std::move(e));
    return out;
  }();
  return entries;
}

const CatalogEntry& find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(Errc::UnknownSpace, "no catalog entry named '" + std::string(name) + "'");
}

SymmetricPair build_pair(const CatalogEntry& entry) {
  return build_pair(RootSystem(entry.g_type), entry.k_simple_roots);
}

}  // namespace spinspec
