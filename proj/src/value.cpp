#include "assoc/value.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

#include "assoc/error.hpp"

namespace assoc {

Value::Value(double number) : data_(number) {
    if (std::isnan(number)) throw DomainError("NaN is not a storable value");
    if (!std::isfinite(number)) throw DomainError("non-finite number is not a storable value");
}

Value::Value(std::string text) : data_(std::move(text)) {
    const auto& s = std::get<std::string>(data_);
    if (s.find_first_of("\r\n") != std::string::npos) throw DomainError("text value contains LF or CR");
}

double Value::number() const {
    if (!is_number()) throw DomainError("value \"" + text() + "\" is not a number");
    return std::get<double>(data_);
}

const std::string& Value::text() const {
    if (!is_text()) throw DomainError("value " + format_number(std::get<double>(data_)) + " is not text");
    return std::get<std::string>(data_);
}

bool Value::is_empty() const noexcept {
    if (const double* d = std::get_if<double>(&data_)) return *d == 0.0;
    return std::get<std::string>(data_).empty();
}

std::string Value::to_string() const {
    if (const double* d = std::get_if<double>(&data_)) return format_number(*d);
    return std::get<std::string>(data_);
}

bool operator==(const Value& a, const Value& b) noexcept { return (a <=> b) == 0; }

std::weak_ordering operator<=>(const Value& a, const Value& b) noexcept {
    if (a.is_number() != b.is_number()) {
        return a.is_number() ? std::weak_ordering::less : std::weak_ordering::greater;
    }
    if (a.is_number()) {
        const double x = std::get<double>(a.data_);
        const double y = std::get<double>(b.data_);
        if (x < y) return std::weak_ordering::less;
        if (y < x) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    const auto& s = std::get<std::string>(a.data_);
    const auto& t = std::get<std::string>(b.data_);
    const int c = std::memcmp(s.data(), t.data(), std::min(s.size(), t.size()));
    if (c != 0) return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
    return s.size() <=> t.size();
}

std::string format_number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw DomainError("cannot format number");
    return std::string(buf, end);
}

bool is_decimal(std::string_view s) noexcept {
    std::size_t i = 0;
    auto digits = [&] {
        const std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        return i > start;
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!digits()) return false;
    if (i < s.size() && s[i] == '.') {
        ++i;
        if (!digits()) return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (!digits()) return false;
    }
    return i == s.size();
}

bool parse_decimal(std::string_view s, double& out) noexcept {
    if (!is_decimal(s)) return false;
    // from_chars rejects a leading '+'
    if (s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) return false;
    out = x;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
    if (v.is_text()) return os << '"' << v.text() << '"';
    return os << v.to_string();
}

}  // namespace assoc
