#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace timmp {

/// Exact rational number with canonical sign and reduced form.
///
/// Thin value wrapper over GMP's mpq_class so the rest of the code base never
/// touches the C API and never sees a floating point value.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p", "p/q" or "-p/q". Throws ValidationError on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Numerator as a signed 64-bit integer; throws if it does not fit.
    std::int64_t numerator_i64() const;
    std::int64_t denominator_i64() const;

    /// Smallest integer not below this value.
    std::int64_t ceil_i64() const;

    /// Always "p/q", including integers ("2/1"); the machine-readable form.
    std::string str() const;
    /// "p" for integers and "p/q" otherwise; for human-facing summaries.
    std::string pretty() const;
    /// Decimal approximation for human summaries only.
    double approx() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

private:
    mpq_class value_{0};
};

Rational reciprocal(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Least common multiple of the denominators; 1 for an empty range.
template <class Range>
std::int64_t lcm_of_denominators(const Range& values);

}  // namespace timmp

#include "timmp/detail/rational_impl.hpp"
