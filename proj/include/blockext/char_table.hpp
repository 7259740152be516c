#pragma once

#include <cstdint>
#include <vector>

#include "blockext/class_function.hpp"

namespace blockext {

/// Least prime l = 1 mod exp(G) with l >= 2 ceil(sqrt |G|) + 1.
std::int64_t dixon_prime(int order, int exponent);

/// Irreducible characters of G (Dixon-Schneider), values in Q(zeta_exp(G)),
/// sorted by degree then by values in class order.  Orthogonality is checked
/// exactly before returning.  Results are cached per group object.
std::vector<ClassFunction> char_table(const GroupPtr& G);

/// Exact first and second orthogonality of a full table.
bool table_is_orthogonal(const std::vector<ClassFunction>& table);

}  // namespace blockext
