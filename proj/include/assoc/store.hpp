#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/array.hpp"
#include "assoc/io.hpp"

namespace assoc {

inline constexpr std::string_view kManifestMagic = "%aa-manifest 1";
inline constexpr std::string_view kSegmentMagic = "%aa-seg 1";

// Segment file name for a sequence number: seg-00000042.aat
std::string segment_name(std::uint64_t seq);

// Immutable view of a table as listed by one reading of its MANIFEST.
//
// All listed segments are loaded when the snapshot is taken, so the view
// stays valid after a later compaction removes those files.
class Snapshot {
public:
    // Supersede fold of the segments, oldest first, restricted to the specs.
    AssocArray select(const KeySpec& rows, const KeySpec& cols) const;
    AssocArray materialize() const { return select(KeySpec::all(), KeySpec::all()); }

    const std::vector<std::uint64_t>& segments() const noexcept { return seqs_; }
    // Recoverable damage found while loading, e.g. a truncated final record.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    friend class Table;

    std::vector<std::uint64_t> seqs_;
    std::vector<std::vector<TripleRecord>> records_;
    std::vector<std::string> warnings_;
};

// An associative array bound to an on-disk directory.
//
// Layout: MANIFEST (magic line, then segment names oldest first), immutable
// segment files, and a LOCK file. Inserts and deletes each append one
// segment; a later record for a cell supersedes earlier ones, tombstones
// included. MANIFEST is replaced atomically by write-then-rename.
//
// One writer at a time holds an exclusive lock on LOCK for the lifetime of
// the handle; any number of read-only handles may coexist with it.
class Table {
public:
    using WarningHandler = std::function<void(const std::string&)>;

    // Creates the directory and an empty MANIFEST when absent. If another
    // writer holds the lock, a read-only handle is returned instead.
    // Throws StoreError when MANIFEST lists a missing segment.
    static Table open(const std::filesystem::path& dir);
    static Table open_read_only(const std::filesystem::path& dir);

    Table(Table&& other) noexcept;
    Table& operator=(Table&& other) noexcept;
    Table(const Table&) = delete;
    Table& operator=(const Table&) = delete;
    ~Table();

    bool read_only() const noexcept { return lock_fd_ < 0; }
    const std::filesystem::path& path() const noexcept { return dir_; }

    // T = T ⊕ B with last-write-wins on shared cells. Returns records written;
    // an empty B writes no segment.
    std::size_t insert(const AssocArray& b);

    // One tombstone per cell of the mask's support.
    std::size_t erase(const AssocArray& mask);

    // Merges every segment into at most one holding only live records.
    // Returns (segments before, segments after).
    std::pair<std::size_t, std::size_t> compact();

    Snapshot snapshot() const;
    AssocArray select(const KeySpec& rows, const KeySpec& cols) const;
    AssocArray materialize() const { return select(KeySpec::all(), KeySpec::all()); }

    // Receives snapshot warnings from select(); defaults to stderr.
    void on_warning(WarningHandler handler) { warn_ = std::move(handler); }

private:
    Table(std::filesystem::path dir, int lock_fd);

    void require_writer(const char* op) const;
    std::size_t commit(const std::vector<TripleRecord>& records);
    std::uint64_t append_segment(const std::vector<TripleRecord>& records);
    void write_manifest(const std::vector<std::uint64_t>& seqs) const;

    std::filesystem::path dir_;
    int lock_fd_ = -1;
    std::uint64_t next_seq_ = 1;
    WarningHandler warn_;
};

}  // namespace assoc
