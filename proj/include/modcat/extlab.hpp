#pragma once

#include "modcat/frobalg.hpp"
#include "modcat/groupcoh.hpp"

namespace modcat {

/// Finite stand-in for a multiplicative local system on an abelian N with
/// Gamma-action: a Gamma-equivariant central extension 0 -> C -> Ntilde ->
/// N -> 0 together with a faithful character of the (cyclic) kernel C.
struct LocalSystemDatum {
    SESData extension;      // quot = N with its Gamma-action
    RootExponent chi_gen;   // chi_C of the generator of C; order = |C|

    const AbAction& n_action() const { return extension.quot; }
    const FinAbGroup& n_group() const { return extension.quot.module(); }
    RootExponent chi(const AbElt& c) const { return chi_gen.times(c[0]); }
    void validate() const;
};

/// The local system of the group ring construction: Ntilde = (Z/p^n)[Gamma]
/// with translation action, C the diagonal, chi the standard embedding.
LocalSystemDatum induced_local_system(const FiniteGroup& gamma, long long p, long long n);

/// 0 -> Z/a -> Z/(a b) -> Z/b -> 0 with trivial action and chi = 1/a.
LocalSystemDatum cyclic_local_system(const FiniteGroup& gamma, long long a, long long b);

/// Finite model of the trace character psi(Tr(.)) on the additive group of
/// F_q: push the length-2 Witt extension (Z/p^2)^m of F_q out along Tr,
/// leaving a Z/p kernel. Gamma acts trivially.
LocalSystemDatum trace_local_system(const FiniteGroup& gamma, const FiniteField& field);

/// Split datum C + N with C = Z/c_order acted on trivially; every pullback
/// is trivial. Models the trivial multiplicative local system.
LocalSystemDatum split_local_system(long long c_order, const AbAction& n_action);

/// Two-step nilpotent data: a finite group H with a marked central subgroup
/// identified with an abstract abelian N such that H/N is abelian.
struct ClassTwoData {
    FiniteGroup h;
    FinAbGroup n;
    std::vector<long long> n_to_h; // N element index -> H element index
    std::vector<long long> h_to_n; // H element index -> N index or -1

    void validate() const;
    /// [a, k] expressed in N coordinates.
    AbElt commutator_in_n(long long a, long long k) const;
};

struct SplittingWitness {
    bool trivial = false;
    std::vector<AbElt> lift; // per H element: value in Ntilde (when trivial)
};

/// Whether the pullback along phi (a homomorphism H -> N, given as a value
/// table in N coordinates) of the extension splits; the witness is a
/// lifting homomorphism H -> Ntilde, verified by substitution.
SplittingWitness pullback_trivial(const LocalSystemDatum& l, const FiniteGroup& h,
                                  const std::vector<AbElt>& phi);

/// K = {k in H : the commutator-with-k map pulls the local system back
/// trivially}; always a subgroup containing N.
std::vector<long long> radical_k(const ClassTwoData& data, const LocalSystemDatum& l);

/// Outer-action data of the two-step construction: representative
/// automorphisms alpha_gamma whose Inn-cosets form a homomorphism
/// Gamma -> Out(H), preserving N with the action carried by the local
/// system, and trivial on H/N.
struct OuterActionData {
    ClassTwoData base;
    LocalSystemDatum loc;     // on N; its Gamma-action must match the reps
    FiniteGroup gamma;
    std::vector<GroupMap> reps;

    void validate() const;
};

/// The central extension 0 -> K/N -> K_Gamma -> Gamma -> 0 of Eq-(kgamma)
/// type: fibers K_gamma are the automorphisms in the coset alpha_gamma Inn(H)
/// whose twisted-commutator map pulls the local system back trivially.
struct CentralExtensionResult {
    FiniteGroup k_gamma;                  // disjoint-union group, identity first
    std::vector<long long> fiber_of;      // element -> gamma
    std::vector<GroupMap> autos;          // element -> automorphism of H
    std::vector<long long> lifts;         // per gamma: chosen element of K_gamma
    FinAbGroup kn;                        // model of K/N
    std::vector<long long> kn_to_h;       // K/N element -> an H representative
    Cochain f;                            // 2-cocycle on Gamma valued in K/N
    std::vector<long long> k_elements;    // the subgroup K inside H
};
CentralExtensionResult central_extension(const OuterActionData& data);

/// Lex-least lift of f to K inside H (identity over the zero coset).
std::vector<std::vector<long long>> default_f_lift(const OuterActionData& data,
                                                   const CentralExtensionResult& ce);

/// The obstruction 3-cocycle of Eq-(omega) type:
/// alpha~_a(F(b,c)) F(a,bc) = omega(a,b,c) F(a,b) F(ab,c), valued in N.
Cochain obstruction_omega(const OuterActionData& data, const CentralExtensionResult& ce,
                          const std::vector<std::vector<long long>>& f_lift);

/// beta = delta(omega) along the local system's extension, valued in C;
/// composing with chi_C gives the Q/Z-valued 4-cocycle of the paper.
Cochain beta_obstruction(const OuterActionData& data, const Cochain& omega);

/// Associator recovery: rebuild the 2-cocycle of the extension by honest
/// multiplications in it, then push through the connecting map.
/// The extension's module must be the quotient module of ses.
Cochain associator_from_extension(const CocycleExtension& ext, const SESData& ses);
Cochain associator_from_extension(const ExtensionData& ext, const SESData& ses);

} // namespace modcat
