#pragma once

#include "modcat/cyclotomic.hpp"
#include "modcat/finab.hpp"

namespace modcat {

/// Q/Z-valued quadratic form on a finite abelian group, held as a full value
/// table. Satisfies q(a) = q(-a) and biadditivity of the polarization
/// b(a,c) = q(a+c) - q(a) - q(c); both are enforced by validate_metric.
struct QuadraticForm {
    FinAbGroup group;
    std::vector<RootExponent> values;

    const RootExponent& q(long long index) const { return values[index]; }
    RootExponent q(const AbElt& e) const { return values[group.index_of(e)]; }
    RootExponent bilinear(long long a, long long c) const;
};

/// Pre-metric or metric group (A, q); `radical` is the radical of the
/// polarization, trivial exactly when the form is nondegenerate.
struct MetricGroup {
    QuadraticForm form;
    std::vector<long long> radical;

    bool nondegenerate() const { return radical.size() == 1; }
    const FinAbGroup& group() const { return form.group; }
};

/// Checks the two quadratic-form axioms and computes the radical.
/// Throws NotEven / NotBilinear naming the first violated axiom.
MetricGroup validate_metric(const FinAbGroup& a, std::vector<RootExponent> values);

void require_nondegenerate(const MetricGroup& m);

/// tau(+-) = sum_a e^{+-2 pi i q(a)}.
CycloNumber gauss_sum(const MetricGroup& m, int sign);

struct IsotropicSubgroup {
    AbSubgroup sub;
    bool maximal; // maximal among all isotropic subgroups of m
};

/// All subgroups with q identically zero, optionally filtered to those
/// setwise invariant under the action. Maximality is judged against the
/// full isotropic family, not the filtered one.
std::vector<IsotropicSubgroup> isotropic_subgroups(const MetricGroup& m,
                                                   const AbAction* action = nullptr,
                                                   long long cap = 4096);

/// B^perp for a subgroup B.
AbSubgroup perp_subgroup(const MetricGroup& m, const AbSubgroup& b);

struct SubquotientResult {
    MetricGroup metric;
    QuotientResult structure; // quotient of B^perp by B (within B^perp coordinates)
    AbSubgroup perp;
};

/// Induced metric group on B^perp / B for an isotropic B.
SubquotientResult subquotient(const MetricGroup& m, const AbSubgroup& b);

struct WittWitness {
    std::vector<AbSubgroup> chain;      // the isotropic subgroup chosen at each stage
    std::vector<MetricGroup> stages;    // stages[0] = input, stages.back() = residue
    MetricGroup residue;                // anisotropic
};

/// Reduce to the anisotropic residue along maximal isotropic subgroups,
/// deterministically (lexicographically least maximal subgroup each step).
/// With an action, only invariant subgroups are used and the action is
/// carried through the subquotients.
WittWitness witt_reduce(const MetricGroup& m, const AbAction* action = nullptr,
                        long long cap = 4096);

/// q1 (+) q2 on the direct sum.
MetricGroup orthogonal_sum(const MetricGroup& m1, const MetricGroup& m2);

/// Form-preserving isomorphism search.
bool metric_isomorphic(const MetricGroup& m1, const MetricGroup& m2);

enum class WittClass { CpPlusCompatible, CpMinusCompatible, Neither };
const char* witt_class_name(WittClass c);

/// Witt-level classifier: residue trivial / the anisotropic norm form /
/// anything else. The input must be a metric p-group.
WittClass classify_cp_witt(const MetricGroup& m, long long cap = 4096);

/// Hyperbolic form on A x A^: q(a, chi) = chi(a). Labels pair the element
/// coordinates with dual coordinates in matching factor order.
MetricGroup hyperbolic_form(const FinAbGroup& a);

/// The subgroup k*A.
AbSubgroup multiples_subgroup(const FinAbGroup& a, long long k);

} // namespace modcat
