#pragma once

#include <vector>

#include "spinspec/rational.hpp"

namespace spinspec {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse of a square matrix. Throws InvalidSubsystem if singular.
RationalMatrix invert(RationalMatrix m);

/// Rank by exact row reduction.
std::size_t matrix_rank(RationalMatrix m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace spinspec
