#include "assoc/key.hpp"

#include <algorithm>
#include <cstring>

#include "assoc/error.hpp"

namespace assoc {

bool Key::valid(std::string_view text) noexcept {
    if (text.empty()) return false;
    return std::none_of(text.begin(), text.end(), [](char ch) { return ch == '\t' || ch == '\n' || ch == '\r'; });
}

Key::Key(std::string text) : text_(std::move(text)) {
    if (text_.empty()) throw KeyError("key must not be empty");
    if (!valid(text_)) throw KeyError("key contains TAB, LF or CR: \"" + text_ + "\"");
}

std::strong_ordering operator<=>(const Key& a, const Key& b) noexcept {
    const std::size_t n = std::min(a.text_.size(), b.text_.size());
    // memcmp compares as unsigned char
    if (int c = std::memcmp(a.text_.data(), b.text_.data(), n); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.text_.size() <=> b.text_.size();
}

}  // namespace assoc
