#pragma once

#include <span>
#include <utility>

#include "assoc/array.hpp"

namespace assoc {

// {(k,k)=1 for k in ks}. Throws ArgumentError on a repeated key.
AssocArray identity_from_keys(std::span<const Key> ks);

// {(r,c)=1 for each pair}. Throws ArgumentError when a row or a column key repeats.
AssocArray perm_from_pairs(std::span<const std::pair<Key, Key>> pairs);

// Non-empty, every value exactly 1, and each row and each column holds one entry.
bool is_permutation(const AssocArray& a);

// Non-empty and every row is related to every column.
bool is_clique(const AssocArray& a);

}  // namespace assoc
