#pragma once

#include <cstdint>
#include <vector>

namespace blockext::modp {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major

std::int64_t pow(std::int64_t base, std::uint64_t e, std::int64_t m);
/// Inverse of a unit modulo a prime m.
std::int64_t inv(std::int64_t a, std::int64_t m);
/// Least generator of the multiplicative group of F_p.
std::int64_t primitive_root(std::int64_t p);

/// Basis of {v : A v = 0} over F_p; A has `cols` columns.
std::vector<Vec> null_space(Mat A, int cols, std::int64_t p);
/// Characteristic polynomial det(xI - A), constant term first.
Vec charpoly(Mat A, std::int64_t p);
/// Rank over F_p.
int rank(Mat A, std::int64_t p);

}  // namespace blockext::modp
