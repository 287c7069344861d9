#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcat/rational.hpp"
#include "modcat/root_exponent.hpp"

namespace modcat {

long long totient(long long n);
/// Coefficients of the N-th cyclotomic polynomial, constant term first, monic.
const std::vector<long long>& cyclotomic_polynomial(long long n);

/// Element of the cyclotomic field Q(zeta_N), held as rational coefficients
/// in the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th
/// cyclotomic polynomial. The conductor is minimized on construction, so
/// equality is plain coefficient comparison. Conductors are normalized to
/// never be congruent to 2 mod 4.
class CycloNumber {
  public:
    CycloNumber() : conductor_(1), coeffs_(1) {}
    CycloNumber(const Rational& r) : conductor_(1), coeffs_{r} {}
    CycloNumber(long long n) : conductor_(1), coeffs_{Rational(n)} {}

    /// e^{2 pi i q}: satisfies root(q1)*root(q2) == root(q1+q2).
    static CycloNumber root_of_unity(const RootExponent& q);
    /// Build from explicit coefficients in Q(zeta_n); reduces and minimizes.
    static CycloNumber from_coeffs(long long n, std::vector<Rational> coeffs);

    long long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return conductor_ == 1 && coeffs_[0] == Rational(1); }

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    /// Complex conjugation zeta -> zeta^{-1}; a ring automorphism.
    CycloNumber conjugate() const;

    bool operator==(const CycloNumber& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }
    /// Deterministic total order (conductor, then coefficients); used for
    /// canonical label sorting, no numeric meaning.
    bool lex_less(const CycloNumber& o) const;

    /// The rational value when the number lies in Q.
    std::optional<Rational> try_rational() const;
    /// The exponent q with *this == root_of_unity(q), when that holds.
    std::optional<RootExponent> try_root_exponent() const;

    /// Divide by an exact rational.
    CycloNumber div_rational(const Rational& r) const;
    /// Exact division; requires o to be a root of unity times a rational.
    /// (General field inversion is not needed anywhere in this library.)

    std::string str() const;

  private:
    CycloNumber(long long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    std::vector<Rational> embedded_coeffs(long long m) const;
    void minimize();

    long long conductor_;
    std::vector<Rational> coeffs_;
};

} // namespace modcat
