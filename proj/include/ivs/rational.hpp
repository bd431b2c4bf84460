#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ivs {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. All comparisons and arithmetic are exact; nothing
/// in the library ever rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    /// num/den, canonicalized. Throws validation_error if den == 0.
    Rational(long num, long den);

    /// Parses "p/q", "p", or a finite decimal literal such as "-1.25".
    /// Exponents, infinities and NaN are rejected. Throws parse_error.
    static Rational parse(std::string_view text);

    /// Canonical text: "p/q" in lowest terms, or "p" when the value is an
    /// integer. parse(str()) round-trips exactly.
    std::string str() const;

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    friend Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.v_))); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ivs
