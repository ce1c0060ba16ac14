#include "assoc/graph.hpp"

#include <algorithm>
#include <map>

#include "assoc/algebra.hpp"
#include "assoc/error.hpp"

namespace assoc {

AssocArray degree(const AssocArray& a, Axis axis) {
    std::map<Key, std::size_t> counts;
    for (const Entry& e : a.entries()) ++counts[axis == Axis::Row ? e.row : e.col];
    std::vector<Entry> out;
    const Key deg("deg");
    for (const auto& [k, n] : counts) out.push_back(Entry{k, deg, Value(static_cast<double>(n))});
    return AssocArray::from_entries(std::move(out));
}

AssocArray correlate(const AssocArray& a) {
    if (!a.all_numeric()) throw DomainError("correlate needs numeric values; apply logical() to tables first");
    return arrayprod(a, transpose(a), Semiring::arith());
}

AssocArray bfs(const AssocArray& a, std::span<const Key> sources, std::size_t steps) {
    const Key front("front");
    const std::vector<Key> rows = a.keys(Axis::Row);
    const std::vector<Key> cols = a.keys(Axis::Column);
    std::vector<Entry> start;
    for (const Key& s : sources) {
        if (std::binary_search(rows.begin(), rows.end(), s) || std::binary_search(cols.begin(), cols.end(), s)) {
            start.push_back(Entry{front, s, Value(1.0)});
        }
    }
    AssocArray frontier = AssocArray::from_triples(start, Semiring::lattice());
    for (std::size_t k = 0; k < steps && !frontier.empty(); ++k) {
        frontier = logical(select_rows_by(frontier, a));
    }
    return frontier;
}

}  // namespace assoc
