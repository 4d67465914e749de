#ifndef HOPCUM_SCALAR_HPP
#define HOPCUM_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopcum {

/// Exact rational number backed by GMP.
///
/// The value is always kept in canonical form: numerator and denominator
/// coprime, denominator positive. Every constructor canonicalizes, so two
/// equal rationals always have identical representations and print
/// identically.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(implicit)
    Scalar(long numerator, long denominator);
    explicit Scalar(const mpq_class& value);

    /// Parses "p/q", "p" or "-p/q" (decimal digits only). Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static Scalar parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// Canonical "p/q" rendering; integers print without a denominator.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Scalar& operator+=(const Scalar& rhs) { value_ += rhs.value_; return *this; }
    Scalar& operator-=(const Scalar& rhs) { value_ -= rhs.value_; return *this; }
    Scalar& operator*=(const Scalar& rhs) { value_ *= rhs.value_; return *this; }
    Scalar& operator/=(const Scalar& rhs);

    /// this += a * b without a temporary on the caller side.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend Scalar operator-(const Scalar& x) { return Scalar(mpq_class(-x.value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// n! as an exact rational.
Scalar factorial(unsigned n);

/// x^k for k >= 0.
Scalar power(const Scalar& x, unsigned k);

}  // namespace hopcum

#endif  // HOPCUM_SCALAR_HPP
