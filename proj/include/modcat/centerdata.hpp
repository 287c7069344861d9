#pragma once

#include "modcat/fingrp.hpp"
#include "modcat/metric.hpp"

namespace modcat {

/// Q/Z-valued normalized 3-cocycle on a finite group (trivial action),
/// stored as a flat |G|^3 table.
struct QzCocycle3 {
    FiniteGroup gamma;
    std::vector<RootExponent> values;

    QzCocycle3() = default;
    explicit QzCocycle3(FiniteGroup g)
        : gamma(std::move(g)), values(gamma.size() * gamma.size() * gamma.size()) {}

    const RootExponent& at(long long a, long long b, long long c) const {
        long long n = gamma.size();
        return values[(a * n + b) * n + c];
    }
    RootExponent& at(long long a, long long b, long long c) {
        long long n = gamma.size();
        return values[(a * n + b) * n + c];
    }
    bool is_zero() const;
    /// Normalization and the 3-cocycle identity; throws NotACocycle.
    void validate() const;
};

/// Verlinde fusion in one of two shapes: a permutation-style product table
/// when every object is invertible, or the dense tensor N_{ij}^k.
struct FusionTensor {
    long long n = 0;
    bool pointed_like = false;
    std::vector<long long> product; // pointed_like: k at i*n+j
    std::vector<long long> dense;   // otherwise: N_{ij}^k at (i*n+j)*n+k

    long long coeff(long long i, long long j, long long k) const {
        if (pointed_like) return product[i * n + j] == k ? 1 : 0;
        return dense[(i * n + j) * n + k];
    }
};

/// Numerical modular data: unit label first, S unnormalized with S_00 = 1
/// and the unit row equal to the dims.
struct ModularData {
    std::vector<std::string> labels;
    std::vector<long long> dims;
    std::vector<RootExponent> twists;
    std::vector<std::vector<CycloNumber>> s;
    std::optional<FusionTensor> fusion;

    long long size() const { return (long long)labels.size(); }
    long long fpdim() const;
    void validate_basic() const; // shape, S symmetry, unit row
};

/// M(A, theta): labels A, dims 1, twists q, S(a,b) = e^{2 pi i b(a,b)},
/// fusion the group law.
ModularData pointed_modular_data(const MetricGroup& m);

/// Modular data of the twisted double of Gamma. Labels are pairs (conjugacy
/// class, projective irreducible of the centralizer for the transgressed
/// 2-cocycle); S is the trace of the monodromy on the associated modules.
ModularData double_modular_data(const FiniteGroup& gamma, const QzCocycle3& omega,
                                long long cap = 32);

enum class Charge { Plus, Minus, NonReal };
struct GaussCharge {
    CycloNumber tau_plus;
    CycloNumber tau_minus;
    Charge charge;
    long long fpdim;
};
GaussCharge gauss_charge(const ModularData& d);

struct CpVerdict {
    enum Kind { CpPlus, CpMinus, FailsCriterion1, FailsCriterion2, FailsCriterion3 } kind;
    const char* name() const;
    bool passed() const { return kind == CpPlus || kind == CpMinus; }
};
/// The three recognition criteria: FPdim an even power of p, integer dims,
/// multiplicative central charge +-1; the sign decides CpPlus vs CpMinus.
CpVerdict check_cp_criteria(const ModularData& d, long long p);

/// N_{ij}^k from the S-matrix; validates unitarity of S/sqrt(fpdim) and
/// nonnegative integrality of every coefficient.
FusionTensor verlinde_fusion(const ModularData& d);

ModularData deligne_product(const ModularData& a, const ModularData& b);

/// Hyperbolic-oracle comparison: the twisted double of an abelian Gamma at
/// omega = 0 against pointed data of the hyperbolic form on Gamma x Gamma^;
/// returns the label bijection when the tables match exactly.
std::optional<std::vector<long long>> match_labels(const ModularData& a, const ModularData& b);

} // namespace modcat
