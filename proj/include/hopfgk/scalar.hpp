#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfgk {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
    static Scalar parse(std::string_view text);

    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool isZero() const { return sgn(value_) == 0; }
    bool isOne() const { return value_ == 1; }
    bool isInteger() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    /// Always "p/q", used for machine-readable output.
    std::string fractionString() const;

    Scalar operator-() const { return Scalar(mpq_class(-value_)); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

}  // namespace hopfgk
