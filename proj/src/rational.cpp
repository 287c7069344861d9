#include "modcat/rational.hpp"

#include <cstdlib>
#include <ostream>

namespace modcat {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::overflow, "rational arithmetic overflow");
    return static_cast<long long>(v);
}

} // namespace

void Rational::assign(long long n, long long d) {
    check(d != 0, errc::bad_input, "rational with zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    __int128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    num_ = narrow(nn);
    den_ = narrow(dd);
}

Rational Rational::from128(__int128 n, __int128 d) {
    check(d != 0, errc::bad_input, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return from128((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return from128((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return from128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    check(o.num_ != 0, errc::bad_input, "rational division by zero");
    return from128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational Rational::parse(const std::string& s) {
    check(!s.empty(), errc::bad_input, "empty rational literal");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::logic_error&) {
        fail(errc::bad_input, "malformed rational literal: " + s);
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* errc_name(errc c) {
    switch (c) {
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_prime: return "NotPrime";
        case errc::overflow: return "Overflow";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::not_a_cocycle: return "NotACocycle";
        case errc::not_isotropic: return "NotIsotropic";
        case errc::not_even: return "NotEven";
        case errc::not_bilinear: return "NotBilinear";
        case errc::degenerate: return "Degenerate";
        case errc::degenerate_model: return "DegenerateModel";
        case errc::empty_fiber: return "EmptyFiber";
        case errc::lift_invalid: return "LiftInvalid";
        case errc::section_invalid: return "SectionInvalid";
        case errc::singular_s: return "SingularS";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

} // namespace modcat
