#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers used for every time quantity.
 *
 * Rational wraps a GMP rational so that numerator and denominator are
 * arbitrary-precision integers, always in lowest terms with a positive
 * denominator. Fleet sizes are ceilings of rational expressions, so the
 * ceil/floor helpers below never go through floating point.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace uavcov {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long long value);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& value);

    /// Parses "p", "-p", "p/q" or a terminating decimal such as "0.25".
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] BigInt floor() const;
    [[nodiscard]] BigInt ceil() const;

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;
    /// Decimal rendering rounded half-away-from-zero to the given places.
    [[nodiscard]] std::string to_decimal(int places) const;
    /// Exact decimal when the expansion terminates, "p/q" otherwise.
    [[nodiscard]] std::string to_exact_decimal() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_{0};
};

/// Time in seconds. External formats carry integer milliseconds.
using RationalTime = Rational;

[[nodiscard]] RationalTime from_ms(long long ms);
[[nodiscard]] RationalTime minutes(const Rational& m);
[[nodiscard]] RationalTime seconds(const Rational& s);
/// Millisecond rendering: "123" when integral, "p/q" otherwise.
[[nodiscard]] std::string to_ms_string(const RationalTime& t);
/// Inverse of to_ms_string.
[[nodiscard]] RationalTime parse_ms(std::string_view text);

/// Smallest integer k with k*b >= a; b must be positive.
[[nodiscard]] BigInt ceil_div(const Rational& a, const Rational& b);
/// Largest integer k with k*b <= a; b must be positive.
[[nodiscard]] BigInt floor_div(const Rational& a, const Rational& b);

/// Narrowing with a range check; throws std::overflow_error.
[[nodiscard]] std::int64_t to_i64(const BigInt& v);
[[nodiscard]] std::uint64_t to_u64(const BigInt& v);

}  // namespace uavcov
