#include "modcat/root_exponent.hpp"

#include <numeric>
#include <ostream>

namespace modcat {

void RootExponent::assign(long long num, long long den) {
    check(den != 0, errc::bad_input, "root exponent with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

RootExponent RootExponent::operator+(const RootExponent& o) const {
    __int128 d = (__int128)den_ * o.den_ / std::gcd(den_, o.den_);
    __int128 n = (__int128)num_ * (d / den_) + (__int128)o.num_ * (d / o.den_);
    if (d > INT64_MAX) fail(errc::overflow, "root exponent overflow");
    return RootExponent((long long)(n % d), (long long)d);
}

RootExponent RootExponent::operator-(const RootExponent& o) const { return *this + (-o); }

RootExponent RootExponent::times(long long k) const {
    __int128 n = (__int128)num_ * (k % den_);
    return RootExponent((long long)(n % den_), den_);
}

RootExponent RootExponent::parse(const std::string& s) {
    Rational r = Rational::parse(s);
    return RootExponent(r.num(), r.den());
}

std::ostream& operator<<(std::ostream& os, const RootExponent& q) { return os << q.str(); }

} // namespace modcat
