#pragma once

#include <span>

#include "assoc/array.hpp"

namespace assoc {

// Entry count per key on the axis, as a single column "deg".
AssocArray degree(const AssocArray& a, Axis axis);

// A ⊕.⊗ Aᵀ under arith. Symmetric; the diagonal holds squared row norms.
// Throws DomainError on Text values (apply logical() first).
AssocArray correlate(const AssocArray& a);

// Frontier exactly `steps` hops from the sources, following entries as
// directed edges row -> column. Returned as a single row "front" of ones.
// With steps == 0 the sources that appear in A (either axis) are returned.
AssocArray bfs(const AssocArray& a, std::span<const Key> sources, std::size_t steps);

}  // namespace assoc
