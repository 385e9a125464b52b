#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilescale {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored normalized: denominator > 0 and
/// gcd(|num|, den) = 1. All arithmetic is exact; there is deliberately no
/// conversion from floating point.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rat operator-() const { return Rat(unchecked{}, -num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer <= *this.
    Int floor() const {
        Int q = num_ / den_;          // truncates toward zero
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    /// Fractional part in [0, 1): *this - floor().
    Rat frac() const { return *this - Rat(floor()); }

    /// True iff the fractional part is exactly 1/2.
    bool frac_is_half() const {
        Int r = num_ % den_;
        if (r < 0) r += den_;
        return 2 * r == den_;
    }

    /// Canonical form: "num/den", or "num" when the value is an integer.
    std::string str() const;

    /// Parses "num", "num/den"; throws std::invalid_argument on malformed
    /// input or zero denominator.
    static Rat parse(const std::string& s);

    /// Decimal approximation; only for rendering, never fed back into math.
    double to_double() const;

private:
    struct unchecked {};
    Rat(unchecked, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize();

    Int num_;
    Int den_;
};

/// floor(x + 1/2): the integer closest to x, ties rounding up.
Int round_nearest(const Rat& x);

/// Distance from x to the closest integer; always in [0, 1/2].
Rat nearest_int_distance(const Rat& x);

/// Smallest positive lambda such that lambda*s is an integer for every s in
/// `values` (all of which must be positive). Equals lcm(denominators) /
/// gcd(numerators). Throws std::invalid_argument on empty or non-positive
/// input.
Rat rational_group_generator(std::span<const Rat> values);

/// base^exp for non-negative integer exponents.
Int ipow(const Int& base, unsigned long exp);

} // namespace tilescale
