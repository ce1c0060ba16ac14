#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace assoc {

// Row or column label.
//
// Keys are non-empty byte strings that never contain TAB, LF or CR, so they
// can be written unescaped into the tab-separated triple format. Ordering is
// bytewise lexicographic (bytes compare as unsigned).
class Key {
public:
    Key(std::string text);
    Key(std::string_view text) : Key(std::string(text)) {}
    Key(const char* text) : Key(std::string(text)) {}

    const std::string& str() const noexcept { return text_; }
    std::size_t size() const noexcept { return text_.size(); }

    bool starts_with(const Key& prefix) const noexcept { return text_.starts_with(prefix.text_); }

    friend bool operator==(const Key&, const Key&) = default;
    friend std::strong_ordering operator<=>(const Key& a, const Key& b) noexcept;

    // True when `text` would be accepted as a key.
    static bool valid(std::string_view text) noexcept;

private:
    std::string text_;
};

inline std::ostream& operator<<(std::ostream& os, const Key& k) { return os << k.str(); }

}  // namespace assoc

template <>
struct std::hash<assoc::Key> {
    std::size_t operator()(const assoc::Key& k) const noexcept { return std::hash<std::string>{}(k.str()); }
};
