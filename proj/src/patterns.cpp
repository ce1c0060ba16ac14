#include "assoc/patterns.hpp"

#include <algorithm>
#include <set>

#include "assoc/error.hpp"

namespace assoc {

AssocArray identity_from_keys(std::span<const Key> ks) {
    std::vector<Entry> diag;
    diag.reserve(ks.size());
    for (const Key& k : ks) diag.push_back(Entry{k, k, Value(1.0)});
    try {
        return AssocArray::from_entries(std::move(diag));
    } catch (const ArgumentError&) {
        throw ArgumentError("identity_from_keys: repeated key");
    }
}

AssocArray perm_from_pairs(std::span<const std::pair<Key, Key>> pairs) {
    std::set<Key> rows, cols;
    std::vector<Entry> out;
    out.reserve(pairs.size());
    for (const auto& [r, c] : pairs) {
        if (!rows.insert(r).second) throw ArgumentError("perm_from_pairs: repeated row key \"" + r.str() + "\"");
        if (!cols.insert(c).second) throw ArgumentError("perm_from_pairs: repeated column key \"" + c.str() + "\"");
        out.push_back(Entry{r, c, Value(1.0)});
    }
    return AssocArray::from_entries(std::move(out));
}

bool is_permutation(const AssocArray& a) {
    if (a.empty()) return false;
    std::set<Key> cols;
    const Value one(1.0);
    const Key* prev_row = nullptr;
    for (const Entry& e : a.entries()) {
        if (!(e.value == one)) return false;
        if (prev_row && *prev_row == e.row) return false;
        if (!cols.insert(e.col).second) return false;
        prev_row = &e.row;
    }
    return true;
}

bool is_clique(const AssocArray& a) {
    if (a.empty()) return false;
    const std::size_t rows = a.keys(Axis::Row).size();
    const std::size_t cols = a.keys(Axis::Column).size();
    // cells are unique, so a full count means full support
    return a.nnz() == rows * cols;
}

}  // namespace assoc
