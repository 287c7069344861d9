#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "modcat/cyclotomic.hpp"

namespace modcat {

/// Ordinary character table with exact cyclotomic values. Rows are
/// irreducible characters evaluated on the canonical class representatives;
/// the trivial character comes first.
struct CharacterTable {
    std::vector<long long> class_reps;
    std::vector<long long> class_sizes;
    std::vector<long long> dims;
    std::vector<std::vector<CycloNumber>> rows;
};

/// Generic finite group described by its multiplication table over element
/// indices 0..n-1, index 0 the identity. Immutable; conjugacy data is
/// computed at construction and the character table on first request.
/// Copies share the underlying core.
class FiniteGroup {
  public:
    FiniteGroup(); // trivial group

    static FiniteGroup from_table(const std::vector<std::vector<long long>>& table);
    static FiniteGroup cyclic(long long n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    /// Closure of permutation generators acting on {0..m-1}.
    static FiniteGroup from_permutations(const std::vector<std::vector<long long>>& gens,
                                         long long cap = 4096);

    long long size() const;
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;
    long long conj(long long g, long long h) const { return mul(mul(g, h), inv(g)); } // g h g^-1
    long long commutator(long long a, long long b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }
    long long power(long long a, long long e) const;
    long long order_of(long long a) const;
    long long exponent() const;
    bool is_abelian() const;

    /// Conjugacy classes in canonical order: sorted by (element order,
    /// least member index); class 0 is {identity}.
    const std::vector<std::vector<long long>>& conj_classes() const;
    long long class_of(long long a) const;
    std::vector<long long> centralizer(long long a) const;
    std::vector<long long> center() const;
    /// Greedy deterministic generating set.
    std::vector<long long> minimal_generators() const;

    const CharacterTable& character_table() const;

    bool operator==(const FiniteGroup& o) const { return core_ == o.core_; }

    const std::vector<uint16_t>& raw_table() const;

    struct Core; // definition private to the implementation

  private:
    std::shared_ptr<Core> core_;
};

/// Homomorphism between finite groups, stored as the image of every element.
struct GroupMap {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<long long> images;

    GroupMap() = default;
    GroupMap(FiniteGroup src, FiniteGroup tgt, std::vector<long long> imgs, bool validate = true);

    long long operator()(long long a) const { return images[a]; }
    bool is_bijective() const;
    GroupMap compose(const GroupMap& inner) const; // this o inner
    static GroupMap identity(const FiniteGroup& g);
    bool operator==(const GroupMap& o) const { return images == o.images; }
};

/// Full automorphism group plus the inner/outer bookkeeping.
struct AutomorphismData {
    std::vector<GroupMap> all;
    std::vector<long long> inner;      // indices into `all`
    std::vector<long long> coset_of;   // per automorphism: outer coset id
    std::vector<long long> coset_reps; // one automorphism index per coset
};
AutomorphismData automorphisms(const FiniteGroup& g, long long cap = 256);

/// Conjugation automorphism h -> g h g^-1.
GroupMap inner_automorphism(const FiniteGroup& g, long long by);

/// Subgroup re-indexed as a standalone group; to_sub maps parent indices
/// (-1 when outside), from_sub maps back.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<long long> from_sub;
    std::vector<long long> to_sub;
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, std::vector<long long> elements);

/// Irreducible projective representation data for a 2-cocycle tau on G:
/// chi[g] is the trace of the canonical lift (0,g) in the central extension
/// of G by Z/m determined by tau.
struct ProjectiveIrrep {
    long long dim;
    std::vector<CycloNumber> chi;
};

/// Projective irreducibles for the Q/Z-valued normalized 2-cocycle tau,
/// computed through the central extension of G by Z/m where m is the lcm of
/// the value orders. Count equals the number of tau-regular classes and
/// sum of dim^2 is |G|.
std::vector<ProjectiveIrrep> projective_irreps(const FiniteGroup& g,
                                               const std::vector<std::vector<RootExponent>>& tau);

/// Cyclic decomposition of an abelian group: basis elements, their orders,
/// and coordinates of every element over the basis.
struct AbelianBasis {
    std::vector<long long> basis;
    std::vector<long long> orders;
    std::vector<std::vector<long long>> coords;
};
AbelianBasis abelian_basis(const FiniteGroup& g);

/// Closure of a set of elements inside g.
std::vector<long long> generated_subgroup(const FiniteGroup& g,
                                          const std::vector<long long>& gens);

/// Derived subgroup [G, G].
std::vector<long long> commutator_subgroup(const FiniteGroup& g);

/// Quotient by a normal subgroup: coset group (identity coset first),
/// the coset of every element, and one representative per coset.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<long long> coset_of;
    std::vector<long long> reps;
};
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<long long>& normal);

/// Backtracking isomorphism test (tiny groups).
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

} // namespace modcat
