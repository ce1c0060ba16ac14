#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "assoc/key.hpp"
#include "assoc/semiring.hpp"
#include "assoc/value.hpp"

namespace assoc {

struct Entry {
    Key row;
    Key col;
    Value value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

enum class Axis { Row, Column };

// Orders entries by (row, col).
inline bool cell_less(const Entry& a, const Entry& b) noexcept {
    if (auto c = a.row <=> b.row; c != 0) return c < 0;
    return a.col < b.col;
}

// Which keys of an axis take part in a sub-array.
class KeySpec {
public:
    struct All {};
    struct Set {
        std::vector<Key> keys;  // sorted, duplicate-free
    };
    struct Range {
        Key lo, hi;  // inclusive at both ends
    };
    struct Prefix {
        Key prefix;
    };

    static KeySpec all() { return KeySpec(All{}); }
    // Sorts the keys and removes repeats.
    static KeySpec set(std::vector<Key> keys);
    // Throws ArgumentError when lo > hi.
    static KeySpec range(Key lo, Key hi);
    static KeySpec prefix(Key p) { return KeySpec(Prefix{std::move(p)}); }

    bool matches(const Key& k) const;
    bool is_all() const noexcept { return std::holds_alternative<All>(spec_); }

    const std::variant<All, Set, Range, Prefix>& variant() const noexcept { return spec_; }

private:
    template <class T>
    explicit KeySpec(T spec) : spec_(std::move(spec)) {}

    std::variant<All, Set, Range, Prefix> spec_;
};

// Finite map from (row key, column key) to a non-empty Value.
//
// Entries are kept sorted by (row, col); no cell appears twice and no stored
// value is canonical-empty, so every derived row and column is non-empty.
// Instances are immutable once built.
class AssocArray {
public:
    AssocArray() = default;

    // Builds an array from triples. Canonical-empty inputs are skipped,
    // repeated cells are folded with combiner.plus in input order, and
    // results the combiner drops are not stored.
    static AssocArray from_triples(std::span<const Entry> triples, Semiring combiner);
    static AssocArray from_triples(std::initializer_list<Entry> triples, Semiring combiner) {
        return from_triples(std::span<const Entry>(triples.begin(), triples.size()), combiner);
    }

    // Adopts entries in any order. Canonical-empty values are dropped;
    // a repeated cell throws ArgumentError.
    static AssocArray from_entries(std::vector<Entry> entries);

    std::optional<Value> get(const Key& row, const Key& col) const;

    // Sorted, duplicate-free keys that carry at least one entry on the axis.
    std::vector<Key> keys(Axis axis) const;

    std::size_t nnz() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::span<const Entry> entries() const noexcept { return entries_; }

    // Entries whose row equals `row`; contiguous because of the sort order.
    std::span<const Entry> row(const Key& row) const;

    bool all_numeric() const noexcept;

    friend bool operator==(const AssocArray&, const AssocArray&) = default;

private:
    std::vector<Entry> entries_;
};

AssocArray subarray(const AssocArray& a, const KeySpec& rows, const KeySpec& cols);
AssocArray transpose(const AssocArray& a);
// Same support, every value replaced by 1.
AssocArray logical(const AssocArray& a);

std::ostream& operator<<(std::ostream& os, const AssocArray& a);

}  // namespace assoc
