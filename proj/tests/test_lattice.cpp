#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "spinspec/error.hpp"
#include "spinspec/lattice.hpp"

using namespace spinspec;

namespace {

Labels unit(std::size_t n, std::size_t i, std::int64_t c = 1) {
  Labels x(n, 0);
  x[i] = c;
  return x;
}

Integer character_dimension(const PositiveSystem& sys, const DominantCharacter& ch) {
  Integer total = 0;
  for (const auto& [mu, m] : ch) total += Integer(std::to_string(m)) * static_cast<long>(sys.orbit(mu, 100000).size());
  return total;
}

// Tensor square of a minuscule representation, whose weights are one orbit.
DominantCharacter tensor_square_of_orbit(const PositiveSystem& sys, const Labels& minuscule) {
  const auto weights = sys.orbit(minuscule, 100000);
  DominantCharacter ch;
  for (const auto& a : weights)
    for (const auto& b : weights) {
      Labels s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      if (sys.is_dominant(s)) ++ch[s];
    }
  return ch;
}

}  // namespace

TEST_CASE("dimension on labels agrees with the Weyl formula on weights") {
  for (SimpleType t : {SimpleType{Family::B, 3}, SimpleType{Family::E, 6}, SimpleType{Family::G, 2}}) {
    const RootSystem rs(t);
    const auto sys = PositiveSystem::of_group(rs);
    for (int i = 0; i < t.rank; ++i) {
      Labels x = unit(t.rank, i, 2);
      x[0] += 1;
      CHECK(sys.dimension(x) == weyl_dimension(rs, rs.from_labels(x), rs.positive_roots()));
    }
  }
}

TEST_CASE("Freudenthal characters sum to the Weyl dimension") {
  for (SimpleType t : {SimpleType{Family::A, 3}, SimpleType{Family::B, 3}, SimpleType{Family::C, 3},
                       SimpleType{Family::D, 4}, SimpleType{Family::G, 2}, SimpleType{Family::F, 4}}) {
    const RootSystem rs(t);
    const auto sys = PositiveSystem::of_group(rs);
    for (int i = 0; i < t.rank; ++i) {
      for (int j = i; j < t.rank; ++j) {
        Labels x = unit(t.rank, i);
        x[j] += 1;
        CAPTURE(t.name());
        CAPTURE(i);
        CAPTURE(j);
        const auto ch = sys.dominant_character(x);
        CHECK(ch.at(x) == 1);
        CHECK(character_dimension(sys, ch) == sys.dimension(x));
      }
    }
  }
}

TEST_CASE("adjoint zero weight multiplicity equals the rank") {
  for (SimpleType t : {SimpleType{Family::A, 2}, SimpleType{Family::B, 2}, SimpleType{Family::E, 7},
                       SimpleType{Family::F, 4}}) {
    const RootSystem rs(t);
    const auto sys = PositiveSystem::of_group(rs);
    const auto ch = sys.dominant_character(rs.integral_labels(rs.highest_root()));
    CHECK(ch.at(Labels(t.rank, 0)) == t.rank);
  }
}

TEST_CASE("symmetric powers of the A_r standard representation are multiplicity free") {
  const RootSystem a3({Family::A, 3});
  const auto sys = PositiveSystem::of_group(a3);
  for (int k = 1; k <= 5; ++k) {
    const auto ch = sys.dominant_character(unit(3, 0, k));
    for (const auto& [mu, m] : ch) CHECK(m == 1);
    // C(k+3, 3)
    CHECK(sys.dimension(unit(3, 0, k)) == (k + 1) * (k + 2) * (k + 3) / 6);
  }
}

TEST_CASE("tensor squares split into the expected irreducibles") {
  {
    // C^4 (x) C^4 = Sym^2 + Lambda^2
    const auto sys = PositiveSystem::of_group(RootSystem({Family::A, 3}));
    const auto parts = sys.extract_irreducibles(tensor_square_of_orbit(sys, unit(3, 0)));
    const std::map<Labels, std::int64_t> got(parts.begin(), parts.end());
    CHECK(got == std::map<Labels, std::int64_t>{{{2, 0, 0}, 1}, {{0, 1, 0}, 1}});
  }
  {
    // 8 (x) 8 for the spin representation of B3: 1 + 7 + 21 + 35
    const auto sys = PositiveSystem::of_group(RootSystem({Family::B, 3}));
    const auto parts = sys.extract_irreducibles(tensor_square_of_orbit(sys, unit(3, 2)));
    std::multiset<long> dims;
    for (const auto& [x, m] : parts) {
      CHECK(m == 1);
      dims.insert(sys.dimension(x).get_si());
    }
    CHECK(dims == std::multiset<long>{1, 7, 21, 35});
  }
  {
    // 27 (x) 27 for E6: 27* + 351 + 351'
    const auto sys = PositiveSystem::of_group(RootSystem({Family::E, 6}));
    const auto parts = sys.extract_irreducibles(tensor_square_of_orbit(sys, unit(6, 0)));
    std::multiset<long> dims;
    for (const auto& [x, m] : parts) dims.insert(sys.dimension(x).get_si());
    CHECK(dims == std::multiset<long>{27, 351, 351});
  }
}

TEST_CASE("extraction rejects characters that are not W-invariant sums") {
  const auto sys = PositiveSystem::of_group(RootSystem({Family::A, 2}));
  // adjoint with one zero weight missing
  DominantCharacter ch{{{0, 0}, 1}, {{1, 1}, 1}};
  CHECK_THROWS_AS(sys.extract_irreducibles(ch), Error);
}

TEST_CASE("torus positive system") {
  const RootSystem a2({Family::A, 2});
  const PositiveSystem torus(a2, std::span<const Weight>{});
  CHECK(torus.num_simple() == 0);
  CHECK(torus.is_dominant({-3, 5}));
  CHECK(torus.dimension({-3, 5}) == 1);
  CHECK(torus.orbit({1, -1}, 10).size() == 1);
}

TEST_CASE("to_dominant lands in the dominant chamber of the same orbit") {
  const RootSystem d5({Family::D, 5});
  const auto sys = PositiveSystem::of_group(d5);
  const Labels x{-2, 3, -1, 0, 4};
  const Labels d = sys.to_dominant(x);
  CHECK(sys.is_dominant(d));
  const auto o = sys.orbit(d, 100000);
  CHECK(std::find(o.begin(), o.end(), x) != o.end());
}
