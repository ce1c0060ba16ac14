#include "assoc/algebra.hpp"

#include <functional>
#include <map>

#include "assoc/error.hpp"
#include "assoc/patterns.hpp"

namespace assoc {

namespace {

void require_domain(const AssocArray& a, Semiring sr) {
    if (!sr.numeric_only()) return;
    for (const Entry& e : a.entries()) {
        if (!e.value.is_number()) {
            throw DomainError("semiring " + std::string(sr.name()) + " is numeric-only, cell (" + e.row.str() + ", " +
                              e.col.str() + ") holds text");
        }
    }
}

int compare_cells(const Entry& a, const Entry& b) {
    if (auto c = a.row <=> b.row; c != 0) return c < 0 ? -1 : 1;
    if (auto c = a.col <=> b.col; c != 0) return c < 0 ? -1 : 1;
    return 0;
}

// Walks both sorted entry lists; `keep_t` decides whether a T entry survives
// given whether its cell is in the mask.
AssocArray filter_by_support(const AssocArray& t, const AssocArray& m, bool keep_masked) {
    std::vector<Entry> out;
    auto te = t.entries();
    auto me = m.entries();
    std::size_t j = 0;
    for (const Entry& e : te) {
        while (j < me.size() && compare_cells(me[j], e) < 0) ++j;
        const bool masked = j < me.size() && compare_cells(me[j], e) == 0;
        if (masked == keep_masked) out.push_back(e);
    }
    return AssocArray::from_entries(std::move(out));
}

}  // namespace

AssocArray eladd(const AssocArray& a, const AssocArray& b, Semiring sr) {
    require_domain(a, sr);
    require_domain(b, sr);
    auto ae = a.entries();
    auto be = b.entries();
    std::vector<Entry> out;
    out.reserve(ae.size() + be.size());
    std::size_t i = 0, j = 0;
    while (i < ae.size() || j < be.size()) {
        const int c = i == ae.size() ? 1 : j == be.size() ? -1 : compare_cells(ae[i], be[j]);
        if (c < 0) {
            out.push_back(ae[i++]);
        } else if (c > 0) {
            out.push_back(be[j++]);
        } else {
            Value v = sr.plus(ae[i].value, be[j].value);
            if (!sr.drops(v)) out.push_back(Entry{ae[i].row, ae[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return AssocArray::from_entries(std::move(out));
}

AssocArray elmult(const AssocArray& a, const AssocArray& b, Semiring sr) {
    require_domain(a, sr);
    require_domain(b, sr);
    auto ae = a.entries();
    auto be = b.entries();
    std::vector<Entry> out;
    std::size_t i = 0, j = 0;
    while (i < ae.size() && j < be.size()) {
        const int c = compare_cells(ae[i], be[j]);
        if (c < 0) {
            ++i;
        } else if (c > 0) {
            ++j;
        } else {
            Value v = sr.times(ae[i].value, be[j].value);
            if (!sr.drops(v)) out.push_back(Entry{ae[i].row, ae[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return AssocArray::from_entries(std::move(out));
}

AssocArray mask_select(const AssocArray& t, const AssocArray& m) { return filter_by_support(t, m, true); }

AssocArray delete_entries(const AssocArray& t, const AssocArray& m) { return filter_by_support(t, m, false); }

AssocArray arrayprod(const AssocArray& a, const AssocArray& b, Semiring sr) {
    require_domain(a, sr);
    require_domain(b, sr);
    std::vector<Entry> out;
    auto ae = a.entries();
    using Acc = std::map<std::reference_wrapper<const Key>, Value, std::less<Key>>;
    for (std::size_t i = 0; i < ae.size();) {
        const Key& row = ae[i].row;
        Acc acc;
        // the row's entries are contiguous and ordered by the contraction key
        for (; i < ae.size() && ae[i].row == row; ++i) {
            for (const Entry& be : b.row(ae[i].col)) {
                Value t = sr.times(ae[i].value, be.value);
                auto [it, fresh] = acc.try_emplace(std::cref(be.col), t);
                if (!fresh) it->second = sr.plus(it->second, t);
            }
        }
        for (auto& [col, v] : acc) {
            if (!sr.drops(v)) out.push_back(Entry{row, col.get(), std::move(v)});
        }
    }
    return AssocArray::from_entries(std::move(out));
}

AssocArray select_rows_by(const AssocArray& selector, const AssocArray& t) {
    std::vector<Entry> routed;
    for (const Entry& s : selector.entries()) {
        for (const Entry& e : t.row(s.col)) routed.push_back(Entry{s.row, e.col, e.value});
    }
    return AssocArray::from_triples(routed, Semiring::lattice());
}

AssocArray select_cols_by(const AssocArray& t, const AssocArray& selector) {
    return transpose(select_rows_by(transpose(selector), transpose(t)));
}

AssocArray perm_select(const AssocArray& t, std::span<const Key> ks, Axis axis) {
    const AssocArray p = identity_from_keys(ks);
    return axis == Axis::Row ? select_rows_by(p, t) : select_cols_by(t, p);
}

AssocArray incidence(const AssocArray& a) {
    std::vector<Entry> ones;
    ones.reserve(a.nnz());
    for (const Entry& e : a.entries()) ones.push_back(Entry{e.row, Key(e.value.to_string()), Value(1.0)});
    return AssocArray::from_triples(ones, Semiring::arith());
}

}  // namespace assoc
