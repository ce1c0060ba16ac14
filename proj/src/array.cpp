#include "assoc/array.hpp"

#include <algorithm>

#include "assoc/error.hpp"

namespace assoc {

KeySpec KeySpec::set(std::vector<Key> keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return KeySpec(Set{std::move(keys)});
}

KeySpec KeySpec::range(Key lo, Key hi) {
    if (hi < lo) throw ArgumentError("range lower bound \"" + lo.str() + "\" exceeds upper bound \"" + hi.str() + "\"");
    return KeySpec(Range{std::move(lo), std::move(hi)});
}

bool KeySpec::matches(const Key& k) const {
    struct Visitor {
        const Key& k;
        bool operator()(const All&) const { return true; }
        bool operator()(const Set& s) const { return std::binary_search(s.keys.begin(), s.keys.end(), k); }
        bool operator()(const Range& r) const { return !(k < r.lo) && !(r.hi < k); }
        bool operator()(const Prefix& p) const { return k.starts_with(p.prefix); }
    };
    return std::visit(Visitor{k}, spec_);
}

AssocArray AssocArray::from_triples(std::span<const Entry> triples, Semiring combiner) {
    std::vector<Entry> live;
    live.reserve(triples.size());
    for (const Entry& t : triples) {
        if (!t.value.is_empty()) live.push_back(t);
    }
    // stable so that repeated cells fold in input order
    std::stable_sort(live.begin(), live.end(), cell_less);

    AssocArray out;
    out.entries_.reserve(live.size());
    for (std::size_t i = 0; i < live.size();) {
        std::size_t j = i + 1;
        Value acc = live[i].value;
        for (; j < live.size() && live[j].row == live[i].row && live[j].col == live[i].col; ++j) {
            acc = combiner.plus(acc, live[j].value);
        }
        if (!combiner.drops(acc)) out.entries_.push_back(Entry{live[i].row, live[i].col, std::move(acc)});
        i = j;
    }
    return out;
}

AssocArray AssocArray::from_entries(std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return e.value.is_empty(); });
    if (!std::is_sorted(entries.begin(), entries.end(), cell_less)) {
        std::sort(entries.begin(), entries.end(), cell_less);
    }
    auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                  [](const Entry& a, const Entry& b) { return a.row == b.row && a.col == b.col; });
    if (dup != entries.end()) {
        throw ArgumentError("repeated cell (" + dup->row.str() + ", " + dup->col.str() + ")");
    }
    AssocArray out;
    out.entries_ = std::move(entries);
    return out;
}

std::optional<Value> AssocArray::get(const Key& row, const Key& col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<const Key&, const Key&>(row, col),
                               [](const Entry& e, const std::pair<const Key&, const Key&>& rc) {
                                   if (auto c = e.row <=> rc.first; c != 0) return c < 0;
                                   return e.col < rc.second;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return std::nullopt;
}

std::span<const Entry> AssocArray::row(const Key& row) const {
    auto lo = std::lower_bound(entries_.begin(), entries_.end(), row,
                               [](const Entry& e, const Key& k) { return e.row < k; });
    auto hi = std::upper_bound(lo, entries_.end(), row, [](const Key& k, const Entry& e) { return k < e.row; });
    return {lo, hi};
}

std::vector<Key> AssocArray::keys(Axis axis) const {
    std::vector<Key> out;
    if (axis == Axis::Row) {
        for (const Entry& e : entries_) {
            if (out.empty() || out.back() != e.row) out.push_back(e.row);
        }
        return out;
    }
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.col);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool AssocArray::all_numeric() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.value.is_number(); });
}

AssocArray subarray(const AssocArray& a, const KeySpec& rows, const KeySpec& cols) {
    if (rows.is_all() && cols.is_all()) return a;
    std::vector<Entry> kept;
    for (const Entry& e : a.entries()) {
        if (rows.matches(e.row) && cols.matches(e.col)) kept.push_back(e);
    }
    return AssocArray::from_entries(std::move(kept));
}

AssocArray transpose(const AssocArray& a) {
    std::vector<Entry> swapped;
    swapped.reserve(a.nnz());
    for (const Entry& e : a.entries()) swapped.push_back(Entry{e.col, e.row, e.value});
    return AssocArray::from_entries(std::move(swapped));
}

AssocArray logical(const AssocArray& a) {
    std::vector<Entry> ones;
    ones.reserve(a.nnz());
    for (const Entry& e : a.entries()) ones.push_back(Entry{e.row, e.col, Value(1.0)});
    return AssocArray::from_entries(std::move(ones));
}

std::ostream& operator<<(std::ostream& os, const AssocArray& a) {
    os << '{';
    bool first = true;
    for (const Entry& e : a.entries()) {
        os << (first ? "" : ", ") << '(' << e.row << ',' << e.col << ")=" << e.value;
        first = false;
    }
    return os << '}';
}

}  // namespace assoc
