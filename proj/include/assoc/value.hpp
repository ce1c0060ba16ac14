#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

namespace assoc {

// A stored cell: a finite Number or a Text.
//
// Number(0.0) and Text("") are the canonical empty values. Arrays never store
// them; operations drop any result that is empty.
//
// Total order: every Number precedes every Text, Numbers compare numerically
// and Texts compare bytewise.
class Value {
public:
    Value(double number);
    template <std::integral I>
    Value(I number) : Value(static_cast<double>(number)) {}
    Value(std::string text);
    Value(std::string_view text) : Value(std::string(text)) {}
    Value(const char* text) : Value(std::string(text)) {}

    bool is_number() const noexcept { return std::holds_alternative<double>(data_); }
    bool is_text() const noexcept { return std::holds_alternative<std::string>(data_); }

    // Throws DomainError when the alternative does not match.
    double number() const;
    const std::string& text() const;

    bool is_empty() const noexcept;

    // Numbers use the shortest decimal form that round-trips; Text is returned verbatim.
    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b) noexcept;
    friend std::weak_ordering operator<=>(const Value& a, const Value& b) noexcept;

private:
    std::variant<double, std::string> data_;
};

// Shortest round-trip decimal representation of a finite double.
std::string format_number(double x);

// Full-cell finite decimal: optional sign, digits, optional fraction, optional exponent.
bool is_decimal(std::string_view text) noexcept;

// Parses text accepted by is_decimal; returns false on overflow to infinity.
bool parse_decimal(std::string_view text, double& out) noexcept;

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace assoc
