#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "assoc/value.hpp"

namespace assoc {

enum class SemiringKind { Arith, MaxPlus, MinPlus, MaxMin, Lattice };

// One of the built-in (plus, times) pairs used to combine stored values.
//
//   arith    +    ×    zero 0    one 1
//   maxplus  max  +    zero -inf (absent)  one 0
//   minplus  min  +    zero +inf (absent)  one 0
//   maxmin   max  min  identities absent
//   lattice  max  min  over the Value total order, Text allowed
//
// Identities that are not finite numbers are represented only by the absence
// of an entry, so zero()/one() return nullopt for them.
class Semiring {
public:
    constexpr explicit Semiring(SemiringKind kind) noexcept : kind_(kind) {}

    static constexpr Semiring arith() noexcept { return Semiring(SemiringKind::Arith); }
    static constexpr Semiring maxplus() noexcept { return Semiring(SemiringKind::MaxPlus); }
    static constexpr Semiring minplus() noexcept { return Semiring(SemiringKind::MinPlus); }
    static constexpr Semiring maxmin() noexcept { return Semiring(SemiringKind::MaxMin); }
    static constexpr Semiring lattice() noexcept { return Semiring(SemiringKind::Lattice); }

    // Throws ArgumentError for an unknown name.
    static Semiring by_name(std::string_view name);
    static std::span<const Semiring> builtins() noexcept;

    SemiringKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;
    bool numeric_only() const noexcept { return kind_ != SemiringKind::Lattice; }

    // Both throw DomainError on Text operands of a numeric-only semiring, or
    // when the result is not a finite number.
    Value plus(const Value& a, const Value& b) const;
    Value times(const Value& a, const Value& b) const;

    std::optional<Value> zero() const;
    std::optional<Value> one() const;

    // True when `v` must not be stored as a result of this semiring:
    // canonical-empty, or equal to the representable additive identity.
    bool drops(const Value& v) const;

    // Throws DomainError when `v` is outside the value domain.
    void require(const Value& v) const;

    friend constexpr bool operator==(Semiring, Semiring) = default;

private:
    SemiringKind kind_;
};

}  // namespace assoc
