#pragma once

#include <span>

#include "assoc/array.hpp"

namespace assoc {

// A ⊕ B. Support is the union; shared cells combine with sr.plus.
// This is table insertion T = T ⊕ B.
AssocArray eladd(const AssocArray& a, const AssocArray& b, Semiring sr);

// A ⊗ B. Support is within the intersection; shared cells combine with sr.times.
AssocArray elmult(const AssocArray& a, const AssocArray& b, Semiring sr);

// Entries of T on the support of M, values unchanged (table selection).
AssocArray mask_select(const AssocArray& t, const AssocArray& m);

// Entries of T off the support of M.
AssocArray delete_entries(const AssocArray& t, const AssocArray& m);

// A ⊕.⊗ B: C(i,j) = ⊕_k A(i,k) ⊗ B(k,j), contracting over the keys shared by
// A's columns and B's rows. Keys present on only one side contribute nothing.
AssocArray arrayprod(const AssocArray& a, const AssocArray& b, Semiring sr);

// Pass-through products. The selector only routes values: for every selector
// entry (i,k) the row k of T is copied to row i (select_rows_by), or for every
// selector entry (k,j) the column k of T is copied to column j
// (select_cols_by). Values, Text included, pass unchanged; when several
// selector entries land on one cell the lattice maximum is kept.
AssocArray select_rows_by(const AssocArray& selector, const AssocArray& t);
AssocArray select_cols_by(const AssocArray& t, const AssocArray& selector);

// T(ks,:) or T(:,ks) as a product with the identity array on ks.
// Throws ArgumentError on repeated keys.
AssocArray perm_select(const AssocArray& t, std::span<const Key> ks, Axis axis);

// (r,c)=v becomes (r,v)=1; collisions in a row add up. Turns a column of
// labels into an incidence array so products can count co-occurrences.
// Throws KeyError when a value is not a valid key.
AssocArray incidence(const AssocArray& a);

}  // namespace assoc
