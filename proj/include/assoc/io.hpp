#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "assoc/array.hpp"

namespace assoc {

inline constexpr std::string_view kTriplesMagic = "%aa-triples 1";

// One line of a triple or segment file: row TAB col TAB tag TAB value LF.
// Tags: 'n' finite decimal number, 't' raw text, 'x' tombstone (segments only).
struct TripleRecord {
    Key row;
    Key col;
    char tag;
    std::string value_text;

    static TripleRecord from_entry(const Entry& e);
    static TripleRecord tombstone(Key row, Key col);

    bool is_tombstone() const noexcept { return tag == 'x'; }
    // nullopt for tombstones.
    std::optional<Value> value() const;
};

// Serialized record including the trailing LF.
std::string format_record(const TripleRecord& rec);

// Parses one line without its LF. Throws ParseError.
TripleRecord parse_record(std::string_view line, std::size_t line_no, bool allow_tombstone);

// RFC 4180 CSV whose first row names the columns (its first cell is ignored)
// and whose first column names the rows. Empty cells are skipped; cells that
// are entirely a finite decimal become Numbers, all others Text.
AssocArray read_table(std::istream& in);

// `%aa-triples 1` followed by records. Repeated cells keep the lattice maximum.
AssocArray read_triples(std::istream& in);

// Deterministic: magic line, then one record per entry in (row, col) order.
// Returns the number of bytes written; throws IoError on a failed sink.
std::size_t write_triples(const AssocArray& a, std::ostream& out);

// Graphviz digraph: one node per distinct key (row and column names merged),
// one labelled edge per entry, all in sorted order.
std::size_t export_dot(const AssocArray& a, std::ostream& out);

AssocArray read_table_file(const std::filesystem::path& path);
AssocArray read_triples_file(const std::filesystem::path& path);
std::size_t write_triples_file(const AssocArray& a, const std::filesystem::path& path);

}  // namespace assoc
