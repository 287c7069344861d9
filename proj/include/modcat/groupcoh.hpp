#pragma once

#include <optional>

#include "modcat/finab.hpp"
#include "modcat/modsolve.hpp"

namespace modcat {

/// Normalized n-cochain on Gamma with coefficients in a Gamma-module:
/// a full table Gamma^n -> M whose value is 0 whenever an argument is the
/// identity. Degree 0 is a single module element.
class Cochain {
  public:
    Cochain() = default;
    Cochain(AbAction module, long long degree); // zero cochain

    const AbAction& module() const { return module_; }
    const FiniteGroup& gamma() const { return module_.group(); }
    long long degree() const { return degree_; }

    long long table_size() const { return (long long)values_.size(); }
    long long tuple_index(const std::vector<long long>& tuple) const;
    std::vector<long long> tuple_of(long long index) const;

    const AbElt& value(long long tuple_index) const { return values_[tuple_index]; }
    const AbElt& value(const std::vector<long long>& tuple) const {
        return values_[tuple_index(tuple)];
    }
    /// Setter re-checks normalization lazily via validate().
    void set_value(const std::vector<long long>& tuple, AbElt v);
    void set_value(long long tuple_index, AbElt v);

    bool is_zero() const;
    bool is_normalized() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    bool operator==(const Cochain& o) const;

    /// Flat coordinates (tuple-major, then module coordinates); the layout
    /// used by the linear-algebra bridge.
    std::vector<long long> flat() const;
    static Cochain from_flat(const AbAction& module, long long degree,
                             const std::vector<long long>& coords);

  private:
    AbAction module_;
    long long degree_ = 0;
    std::vector<AbElt> values_;
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

struct CocycleComparison {
    bool first_is_cocycle = false;
    bool second_is_cocycle = false;
    std::optional<Cochain> witness; // beta with d(beta) = c1 - c2
};

/// Cocycle flags plus a coboundary witness for the difference, when one
/// exists; absence is a proof (the full linear system is solved).
CocycleComparison cocycle_tests(const Cochain& c1, const Cochain& c2);

/// The linear system "d(beta) = rhs" for normalized (degree-1) unknowns,
/// shared by cocycle_tests and cohomology_group.
ModSystem coboundary_system(const AbAction& module, long long degree);

struct CohomologyGroup {
    AbAction module;
    long long degree = 0;
    std::vector<long long> invariant_factors; // ascending divisibility, each > 1
    std::vector<Cochain> generators;          // cocycles generating H^n
    long long order() const {
        long long o = 1;
        for (long long f : invariant_factors) o *= f;
        return o;
    }
    /// All class representatives (coefficient sweep over the generators);
    /// the zero class alone when the group vanishes.
    std::vector<Cochain> all_classes() const;
};

/// H^n(Gamma, M) = ker d^n / im d^{n-1} over normalized cochains.
/// Caps: degree <= 3 for |Gamma| <= 16, degree 4 for |Gamma| <= 8.
CohomologyGroup cohomology_group(const AbAction& module, long long degree);

/// Short exact sequence 0 -> C -> Mid -> Q -> 0 of Gamma-modules with a
/// set-theoretic section Q -> Mid of the projection. Exactness and
/// equivariance are validated on construction.
struct SESData {
    AbAction sub;    // C
    AbAction mid;    // the extension
    AbAction quot;   // Q
    AbHom incl;      // C -> Mid
    AbHom proj;      // Mid -> Q
    std::vector<AbElt> section; // per Q element index: an element of Mid

    void validate() const;
};

/// Connecting map: lift an n-cocycle valued in Q through the section, take
/// the coboundary, and read the result in C.
Cochain connecting_map(const SESData& ses, const Cochain& f);

/// The induced-module sequence 0 -> Z/p^n (diagonal) -> (Z/p^n)[Gamma] ->
/// H -> 0 with the left-translation action; H^i(Gamma, (Z/p^n)[Gamma]) = 0
/// for i > 0, which makes the connecting map an isomorphism in our range.
SESData induced_module_ses(const FiniteGroup& gamma, long long p, long long n);

/// A 2-cocycle f valued in H = (Z/p^n)[Gamma]/diagonal with delta(f)
/// cohomologous to omega (a 3-cocycle valued in Z/p^n with trivial action).
/// Computed by solving d(g) = omega inside the induced module (always
/// solvable by Shapiro vanishing) and projecting.
Cochain shapiro_lift(const SESData& induced, const Cochain& omega);

/// Batched lift: one elimination shared by all right-hand sides.
std::vector<Cochain> shapiro_lift_batch(const SESData& induced,
                                        const std::vector<Cochain>& omegas);

/// Tabled extension of Gamma by the module along a normalized 2-cocycle:
/// (m1,g1)(m2,g2) = (m1 + g1+m2 + f(g1,g2), g1 g2), element index m*|Gamma|+g.
struct ExtensionData {
    FiniteGroup total;
    AbAction module;                    // the Gamma-module (M, action)
    Cochain f;                          // the defining cocycle
    std::vector<long long> proj;        // total -> Gamma element index
    std::vector<long long> section;     // Gamma -> total element index
    std::vector<long long> module_elt;  // M element index -> total element index
};
ExtensionData extension_from_cocycle(const AbAction& module, const Cochain& f,
                                     long long cap = 4096);

/// Structured extension for large modules: elements are explicit pairs,
/// multiplication is the cocycle formula, nothing is tabled.
struct CocycleExtension {
    AbAction module;
    Cochain f;

    using Elt = std::pair<AbElt, long long>;
    Elt identity() const { return {module.module().zero(), 0}; }
    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt section(long long gamma) const { return {module.module().zero(), gamma}; }
    AbElt module_part_of(const Elt& e) const { return e.first; }
};
CocycleExtension structured_extension(const AbAction& module, const Cochain& f);

/// Recover the defining 2-cocycle of a tabled extension from an explicit
/// normal abelian subgroup and a section of the quotient map; also returns
/// the conjugation action. Throws SectionInvalid when the section does not
/// hit each coset exactly once or does not start at the identity.
struct ExtensionAnalysis {
    FiniteGroup gamma;                  // quotient group on coset indices
    AbAction module;                    // conjugation action of gamma on M
    Cochain f;                          // extracted cocycle
    std::vector<long long> coset_of;    // total element -> gamma element
    std::vector<long long> m_to_total;  // M element index -> total element index
    std::vector<long long> total_to_m;  // total element index -> M index or -1
};
ExtensionAnalysis cocycle_from_extension(const FiniteGroup& g,
                                         const std::vector<long long>& normal_abelian,
                                         const std::vector<long long>& section);

} // namespace modcat
