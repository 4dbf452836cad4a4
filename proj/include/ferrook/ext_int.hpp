#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ferrook {

/// An integer extended by negative infinity, the degree of the zero polynomial.
class ExtendedInt {
public:
    constexpr ExtendedInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the arithmetic

    static constexpr ExtendedInt neg_infinity() { return ExtendedInt(); }

    constexpr bool is_neg_infinity() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    std::int64_t value() const {
        if (!value_) throw std::logic_error("value() on negative infinity");
        return *value_;
    }

    friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
        if (!a.value_ || !b.value_) return neg_infinity();
        return ExtendedInt(*a.value_ + *b.value_);
    }

    friend constexpr bool operator==(const ExtendedInt&, const ExtendedInt&) = default;

    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
        if (!a.value_ && !b.value_) return std::strong_ordering::equal;
        if (!a.value_) return std::strong_ordering::less;
        if (!b.value_) return std::strong_ordering::greater;
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("-inf"); }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedInt& v) { return os << v.to_string(); }

private:
    constexpr ExtendedInt() = default;
    std::optional<std::int64_t> value_;
};

inline constexpr ExtendedInt max(ExtendedInt a, ExtendedInt b) { return a < b ? b : a; }

}  // namespace ferrook
