#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modcat/rational.hpp"

namespace modcat {

/// Element of Q/Z in canonical form: 0 <= num < den, gcd(num,den)=1.
/// These are additive exponents of roots of unity; the value e^{2*pi*i*q}
/// itself lives in CycloNumber.
class RootExponent {
  public:
    RootExponent() : num_(0), den_(1) {}
    RootExponent(long long num, long long den) { assign(num, den); }
    explicit RootExponent(const Rational& r) { assign(r.num(), r.den()); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    /// Order as an element of Q/Z.
    long long order() const { return den_; }

    RootExponent operator+(const RootExponent& o) const;
    RootExponent operator-(const RootExponent& o) const;
    RootExponent operator-() const { return RootExponent(-num_, den_); }
    RootExponent times(long long k) const;

    bool operator==(const RootExponent& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RootExponent& o) const { return !(*this == o); }
    bool operator<(const RootExponent& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
    static RootExponent parse(const std::string& s);

  private:
    void assign(long long num, long long den);

    long long num_;
    long long den_;
};

std::ostream& operator<<(std::ostream& os, const RootExponent& q);

} // namespace modcat
