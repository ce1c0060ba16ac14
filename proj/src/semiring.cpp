#include "assoc/semiring.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "assoc/error.hpp"

namespace assoc {

namespace {

constexpr std::array<Semiring, 5> kBuiltins{
    Semiring::arith(), Semiring::maxplus(), Semiring::minplus(), Semiring::maxmin(), Semiring::lattice(),
};

double num(const Semiring& sr, const Value& v) {
    if (!v.is_number()) {
        throw DomainError("semiring " + std::string(sr.name()) + " is numeric-only, got text \"" + v.text() + "\"");
    }
    return v.number();
}

}  // namespace

Semiring Semiring::by_name(std::string_view name) {
    for (const Semiring& sr : kBuiltins) {
        if (sr.name() == name) return sr;
    }
    throw ArgumentError("unknown semiring \"" + std::string(name) + "\"");
}

std::span<const Semiring> Semiring::builtins() noexcept { return kBuiltins; }

std::string_view Semiring::name() const noexcept {
    switch (kind_) {
        case SemiringKind::Arith: return "arith";
        case SemiringKind::MaxPlus: return "maxplus";
        case SemiringKind::MinPlus: return "minplus";
        case SemiringKind::MaxMin: return "maxmin";
        case SemiringKind::Lattice: return "lattice";
    }
    return "?";
}

Value Semiring::plus(const Value& a, const Value& b) const {
    switch (kind_) {
        case SemiringKind::Arith: return Value(num(*this, a) + num(*this, b));
        case SemiringKind::MaxPlus:
        case SemiringKind::MaxMin: return Value(std::max(num(*this, a), num(*this, b)));
        case SemiringKind::MinPlus: return Value(std::min(num(*this, a), num(*this, b)));
        case SemiringKind::Lattice: return a < b ? b : a;
    }
    throw DomainError("unreachable semiring kind");
}

Value Semiring::times(const Value& a, const Value& b) const {
    switch (kind_) {
        case SemiringKind::Arith: return Value(num(*this, a) * num(*this, b));
        case SemiringKind::MaxPlus:
        case SemiringKind::MinPlus: return Value(num(*this, a) + num(*this, b));
        case SemiringKind::MaxMin: return Value(std::min(num(*this, a), num(*this, b)));
        case SemiringKind::Lattice: return b < a ? b : a;
    }
    throw DomainError("unreachable semiring kind");
}

std::optional<Value> Semiring::zero() const {
    if (kind_ == SemiringKind::Arith) return Value(0.0);
    return std::nullopt;
}

std::optional<Value> Semiring::one() const {
    switch (kind_) {
        case SemiringKind::Arith: return Value(1.0);
        case SemiringKind::MaxPlus:
        case SemiringKind::MinPlus: return Value(0.0);
        default: return std::nullopt;
    }
}

bool Semiring::drops(const Value& v) const {
    if (v.is_empty()) return true;
    auto z = zero();
    return z && *z == v;
}

void Semiring::require(const Value& v) const {
    if (numeric_only()) num(*this, v);
}

}  // namespace assoc
