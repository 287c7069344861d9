#pragma once

#include "modcat/fingrp.hpp"
#include "modcat/metric.hpp"

namespace modcat {

/// Element of F_{p^m}: coefficient vector over F_p in the power basis of
/// the modulus, length m.
using FFElt = std::vector<long long>;

/// F_{p^m} with the deterministic (lexicographically smallest) monic
/// irreducible modulus. Elements are indexed 0..p^m-1 in coefficient
/// mixed-radix order.
class FiniteField {
  public:
    FiniteField(long long p, long long m);

    long long p() const { return p_; }
    long long degree() const { return m_; }
    long long size() const { return size_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    FFElt zero() const { return FFElt(m_, 0); }
    FFElt one() const;
    FFElt from_index(long long i) const;
    long long index_of(const FFElt& x) const;

    FFElt add(const FFElt& a, const FFElt& b) const;
    FFElt sub(const FFElt& a, const FFElt& b) const;
    FFElt neg(const FFElt& a) const;
    FFElt mul(const FFElt& a, const FFElt& b) const;
    FFElt pow(const FFElt& a, long long e) const;
    FFElt inv(const FFElt& a) const;
    bool is_zero(const FFElt& a) const;

    FFElt frobenius(const FFElt& a) const { return pow(a, p_); }

    /// Tr(x) = sum of Frobenius conjugates, landing in F_p.
    long long trace(const FFElt& a) const;
    /// Nm(x) = product of Frobenius conjugates, landing in F_p.
    long long norm(const FFElt& a) const;

  private:
    long long p_, m_, size_;
    std::vector<long long> modulus_; // monic, length m+1
};

/// Additive (Frobenius-linearized) polynomial phi(y) = F^{-s}(sum a_i y^{p^i});
/// the frobshift s only matters for the intended map, not its kernel.
struct AdditivePoly {
    std::vector<FFElt> coeffs;
    long long frobshift = 0;
};

struct AdditiveKernel {
    std::vector<FFElt> basis;    // F_p-basis
    std::vector<FFElt> elements; // all roots
};

/// Roots of phi in K; always an F_p-subspace.
AdditiveKernel additive_kernel(const AdditivePoly& phi, const FiniteField& k);

/// The anisotropic metric group (F_{p^2}, Nm(.)/p) on (Z/p)^2.
MetricGroup norm_form(long long p);

/// Finite model of the fake Heisenberg group on F_q x F_q with
/// (x,a)(y,b) = (x+y, a+b+x y^p). Index of (x,a) is x_index * q + a_index.
struct FakeHeisenberg {
    FiniteGroup group;
    FiniteField field;
    std::vector<long long> center_elements;  // group element indices, = 0 x F_q
    std::vector<long long> radical;          // field indices x with Tr(B(x,.)) = 0
    MetricGroup attached_metric;             // the norm form of Example-type kernels

    long long elt(long long x_index, long long a_index) const {
        return x_index * field.size() + a_index;
    }
    long long x_of(long long g) const { return g / field.size(); }
    long long a_of(long long g) const { return g % field.size(); }
};

/// B(x,y) = x y^p - x^p y, the commutator pairing with values in the center.
FFElt heisenberg_pairing(const FiniteField& f, const FFElt& x, const FFElt& y);

FakeHeisenberg fake_heisenberg(long long p, long long m, long long cap = 4096);

bool is_prime(long long p);

} // namespace modcat
