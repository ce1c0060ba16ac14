#include "assoc/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>

#include "assoc/error.hpp"

namespace fs = std::filesystem;

namespace assoc {

namespace {

constexpr const char* kManifest = "MANIFEST";
constexpr const char* kLock = "LOCK";

std::string errno_text() { return std::strerror(errno); }

void write_all(int fd, const std::string& data, const fs::path& p) {
    const char* ptr = data.data();
    std::size_t left = data.size();
    while (left > 0) {
        const ssize_t n = ::write(fd, ptr, left);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw IoError("write " + p.string() + ": " + errno_text());
        }
        ptr += n;
        left -= static_cast<std::size_t>(n);
    }
}

// Writes and fsyncs `data` to `p`, replacing any previous content.
void write_durably(const fs::path& p, const std::string& data) {
    const int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) throw IoError("create " + p.string() + ": " + errno_text());
    try {
        write_all(fd, data, p);
        if (::fsync(fd) != 0) throw IoError("fsync " + p.string() + ": " + errno_text());
    } catch (...) {
        ::close(fd);
        throw;
    }
    if (::close(fd) != 0) throw IoError("close " + p.string() + ": " + errno_text());
}

void sync_dir(const fs::path& dir) {
    const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
    if (fd < 0) return;
    ::fsync(fd);
    ::close(fd);
}

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read " + p.string());
    return data;
}

std::optional<std::uint64_t> parse_segment_name(std::string_view name) {
    // seg-########.aat
    if (name.size() != 16 || !name.starts_with("seg-") || !name.ends_with(".aat")) return std::nullopt;
    std::uint64_t seq = 0;
    for (char ch : name.substr(4, 8)) {
        if (ch < '0' || ch > '9') return std::nullopt;
        seq = seq * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return seq;
}

// Segment sequence numbers from MANIFEST; empty when it does not exist yet.
std::vector<std::uint64_t> read_manifest(const fs::path& dir) {
    const auto data = read_file(dir / kManifest);
    if (!data) return {};
    std::vector<std::uint64_t> seqs;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < data->size()) {
        const auto nl = data->find('\n', pos);
        if (nl == std::string::npos) throw StoreError("MANIFEST: unterminated line");
        const std::string_view line(data->data() + pos, nl - pos);
        pos = nl + 1;
        if (++line_no == 1) {
            if (line != kManifestMagic) throw StoreError("MANIFEST: bad magic line");
            continue;
        }
        auto seq = parse_segment_name(line);
        if (!seq) throw StoreError("MANIFEST: bad segment name \"" + std::string(line) + "\"");
        if (!seqs.empty() && *seq <= seqs.back()) throw StoreError("MANIFEST: segments out of order");
        seqs.push_back(*seq);
    }
    if (line_no == 0) throw StoreError("MANIFEST: empty file");
    return seqs;
}

// Parses a segment. A final line without LF is a torn write: it is dropped
// and reported through `warnings`.
std::vector<TripleRecord> parse_segment(const std::string& name, const std::string& data,
                                        std::vector<std::string>& warnings) {
    std::string_view body(data);
    if (!body.empty() && body.back() != '\n') {
        const auto last_nl = body.rfind('\n');
        const std::size_t keep = last_nl == std::string_view::npos ? 0 : last_nl + 1;
        warnings.push_back(name + ": ignoring truncated final record (" + std::to_string(body.size() - keep) +
                           " bytes)");
        body = body.substr(0, keep);
    }
    std::vector<TripleRecord> records;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < body.size()) {
        const auto nl = body.find('\n', pos);
        const std::string_view line = body.substr(pos, nl - pos);
        pos = nl + 1;
        if (++line_no == 1) {
            if (line != kSegmentMagic) throw StoreError(name + ": bad magic line");
            continue;
        }
        try {
            records.push_back(parse_record(line, line_no, true));
        } catch (const ParseError& e) {
            throw StoreError(name + ": " + e.what());
        }
    }
    return records;
}

}  // namespace

std::string segment_name(std::uint64_t seq) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "seg-%08llu.aat", static_cast<unsigned long long>(seq));
    return buf;
}

AssocArray Snapshot::select(const KeySpec& rows, const KeySpec& cols) const {
    std::map<std::pair<Key, Key>, std::optional<Value>> cells;
    for (const auto& segment : records_) {
        for (const TripleRecord& rec : segment) {
            if (!rows.matches(rec.row) || !cols.matches(rec.col)) continue;
            std::optional<Value> v = rec.value();
            if (v && v->is_empty()) v.reset();
            cells.insert_or_assign({rec.row, rec.col}, std::move(v));
        }
    }
    std::vector<Entry> live;
    for (auto& [cell, v] : cells) {
        if (v) live.push_back(Entry{cell.first, cell.second, std::move(*v)});
    }
    return AssocArray::from_entries(std::move(live));
}

Table::Table(fs::path dir, int lock_fd) : dir_(std::move(dir)), lock_fd_(lock_fd) {
    warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
}

Table::Table(Table&& other) noexcept
    : dir_(std::move(other.dir_)), lock_fd_(std::exchange(other.lock_fd_, -1)), next_seq_(other.next_seq_),
      warn_(std::move(other.warn_)) {}

Table& Table::operator=(Table&& other) noexcept {
    if (this != &other) {
        if (lock_fd_ >= 0) ::close(lock_fd_);
        dir_ = std::move(other.dir_);
        lock_fd_ = std::exchange(other.lock_fd_, -1);
        next_seq_ = other.next_seq_;
        warn_ = std::move(other.warn_);
    }
    return *this;
}

Table::~Table() {
    // closing the descriptor releases the flock
    if (lock_fd_ >= 0) ::close(lock_fd_);
}

Table Table::open(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw StoreError(dir.string() + " is not a directory");

    const fs::path lock_path = dir / kLock;
    const int fd = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd < 0) throw IoError("open " + lock_path.string() + ": " + errno_text());
    if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
        const int err = errno;
        ::close(fd);
        if (err == EWOULDBLOCK) return open_read_only(dir);
        throw IoError("lock " + lock_path.string() + ": " + std::strerror(err));
    }

    Table t(dir, fd);
    if (!fs::exists(dir / kManifest)) t.write_manifest({});
    const std::vector<std::uint64_t> seqs = read_manifest(dir);
    std::uint64_t max_seq = 0;
    for (std::uint64_t s : seqs) {
        if (!fs::exists(dir / segment_name(s))) throw StoreError("MANIFEST lists missing segment " + segment_name(s));
        max_seq = std::max(max_seq, s);
    }
    // unlisted leftovers of failed writes are never reused
    for (const auto& item : fs::directory_iterator(dir)) {
        if (auto s = parse_segment_name(item.path().filename().string())) max_seq = std::max(max_seq, *s);
    }
    t.next_seq_ = max_seq + 1;
    return t;
}

Table Table::open_read_only(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw StoreError(dir.string() + " is not a table directory");
    for (std::uint64_t s : read_manifest(dir)) {
        if (!fs::exists(dir / segment_name(s))) throw StoreError("MANIFEST lists missing segment " + segment_name(s));
    }
    return Table(dir, -1);
}

void Table::require_writer(const char* op) const {
    if (read_only()) throw StoreError(std::string(op) + ": table " + dir_.string() + " is open read-only");
}

void Table::write_manifest(const std::vector<std::uint64_t>& seqs) const {
    std::string text(kManifestMagic);
    text += '\n';
    for (std::uint64_t s : seqs) text += segment_name(s) + "\n";
    const fs::path tmp = dir_ / "MANIFEST.tmp";
    write_durably(tmp, text);
    std::error_code ec;
    fs::rename(tmp, dir_ / kManifest, ec);
    if (ec) throw IoError("rename MANIFEST: " + ec.message());
    sync_dir(dir_);
}

std::uint64_t Table::append_segment(const std::vector<TripleRecord>& records) {
    const std::uint64_t seq = next_seq_++;
    const fs::path p = dir_ / segment_name(seq);
    std::string text(kSegmentMagic);
    text += '\n';
    for (const TripleRecord& rec : records) text += format_record(rec);
    try {
        write_durably(p, text);
    } catch (...) {
        std::error_code ec;
        fs::remove(p, ec);
        throw;
    }
    return seq;
}

std::size_t Table::commit(const std::vector<TripleRecord>& records) {
    std::vector<std::uint64_t> seqs = read_manifest(dir_);
    const std::uint64_t seq = append_segment(records);
    seqs.push_back(seq);
    try {
        write_manifest(seqs);
    } catch (...) {
        std::error_code ec;
        fs::remove(dir_ / segment_name(seq), ec);
        throw;
    }
    return records.size();
}

std::size_t Table::insert(const AssocArray& b) {
    require_writer("insert");
    if (b.empty()) return 0;
    std::vector<TripleRecord> records;
    records.reserve(b.nnz());
    for (const Entry& e : b.entries()) records.push_back(TripleRecord::from_entry(e));
    return commit(records);
}

std::size_t Table::erase(const AssocArray& mask) {
    require_writer("delete");
    if (mask.empty()) return 0;
    std::vector<TripleRecord> records;
    records.reserve(mask.nnz());
    for (const Entry& e : mask.entries()) records.push_back(TripleRecord::tombstone(e.row, e.col));
    return commit(records);
}

std::pair<std::size_t, std::size_t> Table::compact() {
    require_writer("compact");
    const Snapshot snap = snapshot();
    const std::size_t before = snap.segments().size();
    const AssocArray live = snap.materialize();

    std::vector<std::uint64_t> seqs;
    if (!live.empty()) {
        std::vector<TripleRecord> records;
        records.reserve(live.nnz());
        for (const Entry& e : live.entries()) records.push_back(TripleRecord::from_entry(e));
        seqs.push_back(append_segment(records));
    }
    try {
        write_manifest(seqs);
    } catch (...) {
        std::error_code ec;
        if (!seqs.empty()) fs::remove(dir_ / segment_name(seqs.front()), ec);
        throw;
    }
    for (std::uint64_t s : snap.segments()) {
        std::error_code ec;
        fs::remove(dir_ / segment_name(s), ec);
    }
    return {before, seqs.size()};
}

Snapshot Table::snapshot() const {
    // A compaction may retire segments between reading MANIFEST and opening
    // them; re-read MANIFEST until it is stable.
    for (int attempt = 0;; ++attempt) {
        Snapshot snap;
        snap.seqs_ = read_manifest(dir_);
        bool complete = true;
        for (std::size_t i = 0; i < snap.seqs_.size(); ++i) {
            const std::string name = segment_name(snap.seqs_[i]);
            auto data = read_file(dir_ / name);
            if (!data) {
                complete = false;
                break;
            }
            snap.records_.push_back(parse_segment(name, *data, snap.warnings_));
        }
        if (complete) return snap;
        if (read_manifest(dir_) == snap.seqs_ || attempt >= 8) {
            throw StoreError("MANIFEST lists a missing segment in " + dir_.string());
        }
    }
}

AssocArray Table::select(const KeySpec& rows, const KeySpec& cols) const {
    const Snapshot snap = snapshot();
    if (warn_) {
        for (const std::string& w : snap.warnings()) warn_(w);
    }
    return snap.select(rows, cols);
}

}  // namespace assoc
