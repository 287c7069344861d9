#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>

#include "modcat/error.hpp"

namespace modcat {

/// Exact rational on 64-bit numerator/denominator. All intermediates go
/// through 128-bit arithmetic and overflow raises errc::overflow instead of
/// wrapping. Denominator is always positive, gcd(num,den)=1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    /// Renders "n" for integers, "n/d" otherwise.
    std::string str() const;
    static Rational parse(const std::string& s);

  private:
    void assign(long long n, long long d);
    static Rational from128(__int128 n, __int128 d);

    long long num_;
    long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace modcat
