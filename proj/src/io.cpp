#include "assoc/io.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

#include "assoc/error.hpp"

namespace assoc {

namespace {

std::string slurp(std::istream& in) {
    std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read failure");
    return data;
}

Key key_at(std::string_view text, std::size_t line_no) {
    if (!Key::valid(text)) throw ParseError("invalid key \"" + std::string(text) + "\"", line_no);
    return Key(text);
}

struct CsvRecord {
    std::vector<std::string> fields;
    std::size_t line;
};

// RFC 4180 with LF or CRLF line ends. Completely blank lines are skipped.
std::vector<CsvRecord> parse_csv(const std::string& s) {
    std::vector<CsvRecord> records;
    std::size_t i = 0;
    std::size_t line = 1;
    while (i < s.size()) {
        const std::size_t record_line = line;
        if (s[i] == '\n' || (s[i] == '\r' && i + 1 < s.size() && s[i + 1] == '\n')) {
            i += s[i] == '\r' ? 2 : 1;
            ++line;
            continue;
        }
        CsvRecord rec{{}, record_line};
        bool end_of_record = false;
        while (!end_of_record) {
            std::string field;
            if (i < s.size() && s[i] == '"') {
                ++i;
                for (;;) {
                    if (i >= s.size()) throw ParseError("unterminated quoted field", record_line);
                    if (s[i] == '"') {
                        if (i + 1 < s.size() && s[i + 1] == '"') {
                            field += '"';
                            i += 2;
                            continue;
                        }
                        ++i;
                        break;
                    }
                    if (s[i] == '\n') ++line;
                    field += s[i++];
                }
            } else {
                while (i < s.size() && s[i] != ',' && s[i] != '\n' && s[i] != '\r') {
                    if (s[i] == '"') throw ParseError("quote inside unquoted field", line);
                    field += s[i++];
                }
            }
            rec.fields.push_back(std::move(field));
            if (i >= s.size()) {
                end_of_record = true;
            } else if (s[i] == ',') {
                ++i;
            } else if (s[i] == '\n') {
                ++i;
                ++line;
                end_of_record = true;
            } else if (s[i] == '\r' && i + 1 < s.size() && s[i + 1] == '\n') {
                i += 2;
                ++line;
                end_of_record = true;
            } else {
                throw ParseError("unexpected character after field", line);
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string dot_id(std::string_view text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

std::size_t emit(std::ostream& out, std::string_view text) {
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failure");
    return text.size();
}

}  // namespace

TripleRecord TripleRecord::from_entry(const Entry& e) {
    return TripleRecord{e.row, e.col, e.value.is_number() ? 'n' : 't', e.value.to_string()};
}

TripleRecord TripleRecord::tombstone(Key row, Key col) { return TripleRecord{std::move(row), std::move(col), 'x', {}}; }

std::optional<Value> TripleRecord::value() const {
    switch (tag) {
        case 'n': {
            double x = 0.0;
            if (!parse_decimal(value_text, x)) throw DomainError("not a finite decimal: \"" + value_text + "\"");
            return Value(x);
        }
        case 't': return Value(value_text);
        default: return std::nullopt;
    }
}

std::string format_record(const TripleRecord& rec) {
    std::string line;
    line.reserve(rec.row.size() + rec.col.size() + rec.value_text.size() + 5);
    line += rec.row.str();
    line += '\t';
    line += rec.col.str();
    line += '\t';
    line += rec.tag;
    line += '\t';
    line += rec.value_text;
    line += '\n';
    return line;
}

TripleRecord parse_record(std::string_view line, std::size_t line_no, bool allow_tombstone) {
    std::string_view parts[3];
    for (auto& part : parts) {
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) throw ParseError("expected row<TAB>col<TAB>type<TAB>value", line_no);
        part = line.substr(0, tab);
        line.remove_prefix(tab + 1);
    }
    TripleRecord rec{key_at(parts[0], line_no), key_at(parts[1], line_no), '\0', std::string(line)};
    if (parts[2].size() != 1) throw ParseError("bad type tag \"" + std::string(parts[2]) + "\"", line_no);
    rec.tag = parts[2][0];
    switch (rec.tag) {
        case 'n': {
            double x = 0.0;
            if (!parse_decimal(rec.value_text, x)) {
                throw ParseError("unparseable number \"" + rec.value_text + "\"", line_no);
            }
            break;
        }
        case 't':
            if (rec.value_text.find('\r') != std::string::npos) throw ParseError("CR in text value", line_no);
            break;
        case 'x':
            if (!allow_tombstone) throw ParseError("tombstone outside a segment", line_no);
            if (!rec.value_text.empty()) throw ParseError("tombstone carries a value", line_no);
            break;
        default: throw ParseError("bad type tag \"" + std::string(parts[2]) + "\"", line_no);
    }
    return rec;
}

AssocArray read_table(std::istream& in) {
    const std::vector<CsvRecord> records = parse_csv(slurp(in));
    if (records.empty()) throw ParseError("missing header row", 1);

    const CsvRecord& header = records.front();
    std::vector<Key> cols;
    std::set<Key> seen_cols;
    for (std::size_t j = 1; j < header.fields.size(); ++j) {
        Key k = key_at(header.fields[j], header.line);
        if (!seen_cols.insert(k).second) throw ParseError("duplicate column key \"" + k.str() + "\"", header.line);
        cols.push_back(std::move(k));
    }

    std::vector<Entry> entries;
    std::set<Key> seen_rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const CsvRecord& rec = records[r];
        if (rec.fields.size() != header.fields.size()) {
            throw ParseError("expected " + std::to_string(header.fields.size()) + " fields, got " +
                                 std::to_string(rec.fields.size()),
                             rec.line);
        }
        Key row = key_at(rec.fields[0], rec.line);
        if (!seen_rows.insert(row).second) throw ParseError("duplicate row key \"" + row.str() + "\"", rec.line);
        for (std::size_t j = 1; j < rec.fields.size(); ++j) {
            const std::string& cell = rec.fields[j];
            if (cell.empty()) continue;
            double x = 0.0;
            try {
                Value v = parse_decimal(cell, x) ? Value(x) : Value(cell);
                entries.push_back(Entry{row, cols[j - 1], std::move(v)});
            } catch (const DomainError& e) {
                throw ParseError(e.what(), rec.line);
            }
        }
    }
    return AssocArray::from_entries(std::move(entries));
}

AssocArray read_triples(std::istream& in) {
    const std::string data = slurp(in);
    std::size_t pos = 0;
    std::size_t line_no = 0;
    std::vector<Entry> entries;
    while (pos < data.size()) {
        auto nl = data.find('\n', pos);
        if (nl == std::string::npos) nl = data.size();
        const std::string_view line(data.data() + pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != kTriplesMagic) throw ParseError("bad magic line, expected \"%aa-triples 1\"", 1);
            continue;
        }
        const TripleRecord rec = parse_record(line, line_no, false);
        entries.push_back(Entry{rec.row, rec.col, *rec.value()});
    }
    if (line_no == 0) throw ParseError("bad magic line, expected \"%aa-triples 1\"", 1);
    return AssocArray::from_triples(entries, Semiring::lattice());
}

std::size_t write_triples(const AssocArray& a, std::ostream& out) {
    std::size_t bytes = emit(out, std::string(kTriplesMagic) + "\n");
    for (const Entry& e : a.entries()) bytes += emit(out, format_record(TripleRecord::from_entry(e)));
    out.flush();
    if (!out) throw IoError("write failure");
    return bytes;
}

std::size_t export_dot(const AssocArray& a, std::ostream& out) {
    std::set<Key> nodes;
    for (const Entry& e : a.entries()) {
        nodes.insert(e.row);
        nodes.insert(e.col);
    }
    std::size_t bytes = emit(out, "digraph aa {\n");
    for (const Key& k : nodes) bytes += emit(out, "  " + dot_id(k.str()) + ";\n");
    for (const Entry& e : a.entries()) {
        bytes += emit(out, "  " + dot_id(e.row.str()) + " -> " + dot_id(e.col.str()) +
                               " [label=" + dot_id(e.value.to_string()) + "];\n");
    }
    bytes += emit(out, "}\n");
    out.flush();
    if (!out) throw IoError("write failure");
    return bytes;
}

AssocArray read_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_table(in);
}

AssocArray read_triples_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_triples(in);
}

std::size_t write_triples_file(const AssocArray& a, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    return write_triples(a, out);
}

}  // namespace assoc
