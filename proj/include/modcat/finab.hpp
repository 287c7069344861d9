#pragma once

#include <optional>
#include <vector>

#include "modcat/fingrp.hpp"

namespace modcat {

using AbElt = std::vector<long long>;

/// Finite abelian group presented by its cyclic factor orders (each > 1,
/// sorted ascending). Elements are coefficient tuples reduced mod the
/// factor orders; element indices run in mixed-radix order.
class FinAbGroup {
  public:
    FinAbGroup() = default; // trivial group
    explicit FinAbGroup(std::vector<long long> orders);

    const std::vector<long long>& orders() const { return orders_; }
    long long rank() const { return (long long)orders_.size(); }
    long long size() const { return size_; }
    long long exponent() const;

    long long index_of(const AbElt& e) const;
    AbElt element(long long index) const;
    AbElt reduce(AbElt e) const;

    AbElt zero() const { return AbElt(orders_.size(), 0); }
    AbElt add(const AbElt& a, const AbElt& b) const;
    AbElt neg(const AbElt& a) const;
    AbElt sub(const AbElt& a, const AbElt& b) const { return add(a, neg(b)); }
    AbElt smul(long long k, const AbElt& a) const;
    long long order_of(const AbElt& a) const;
    bool is_zero(const AbElt& a) const;

    /// The same group as a generic FiniteGroup with matching element indices.
    FiniteGroup as_finite_group() const;

    bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }

  private:
    std::vector<long long> orders_;
    long long size_ = 1;
};

/// Homomorphism of finite abelian groups; column j of the matrix is the
/// image of the j-th standard generator of the source. Well-definedness
/// congruences are checked on construction.
class AbHom {
  public:
    AbHom() = default;
    AbHom(FinAbGroup src, FinAbGroup tgt, std::vector<std::vector<long long>> matrix,
          bool validate = true);

    static AbHom identity(const FinAbGroup& g);
    static AbHom zero(const FinAbGroup& src, const FinAbGroup& tgt);

    const FinAbGroup& source() const { return src_; }
    const FinAbGroup& target() const { return tgt_; }
    const std::vector<std::vector<long long>>& matrix() const { return mat_; }

    AbElt apply(const AbElt& e) const;
    AbHom compose(const AbHom& inner) const; // this o inner
    bool is_identity() const;
    bool is_bijective() const;
    std::optional<AbHom> inverse() const;

    bool operator==(const AbHom& o) const { return mat_ == o.mat_; }

  private:
    FinAbGroup src_, tgt_;
    std::vector<std::vector<long long>> mat_; // tgt.rank x src.rank
};

/// Action of a finite group on a finite abelian module: a homomorphism
/// Gamma -> Aut(module), stored as one AbHom per group element.
class AbAction {
  public:
    AbAction() = default;
    /// Trivial action.
    AbAction(FiniteGroup gamma, FinAbGroup module);
    AbAction(FiniteGroup gamma, FinAbGroup module, std::vector<AbHom> maps, bool validate = true);

    const FiniteGroup& group() const { return gamma_; }
    const FinAbGroup& module() const { return module_; }
    const AbHom& map(long long g) const { return maps_[g]; }
    AbElt act(long long g, const AbElt& e) const { return maps_[g].apply(e); }
    bool is_trivial() const;

  private:
    FiniteGroup gamma_;
    FinAbGroup module_;
    std::vector<AbHom> maps_;
};

/// Subgroup given by generators plus the full sorted element-index list.
struct AbSubgroup {
    std::vector<long long> gens;     // element indices
    std::vector<long long> elements; // sorted element indices, always contains 0
};

/// Closure of a set of elements (by index).
AbSubgroup closure_subgroup(const FinAbGroup& g, const std::vector<long long>& gen_indices);

/// All subgroups (optionally only those setwise invariant under the action).
/// Ordered canonically (by size, then lexicographic element list).
std::vector<AbSubgroup> subgroups(const FinAbGroup& g, const AbAction* invariant_under = nullptr,
                                  long long cap = 4096);

bool subgroup_contains(const AbSubgroup& s, long long elt_index);
bool is_subgroup_of(const AbSubgroup& a, const AbSubgroup& b); // a <= b

struct QuotientResult {
    FinAbGroup quotient;
    AbHom projection;                 // A -> quotient
    std::vector<AbElt> section;       // per quotient element index: a representative in A
};

/// Quotient A/B with projection and a set-theoretic section.
QuotientResult quotient(const FinAbGroup& a, const AbSubgroup& b);

/// Image subgroup of a homomorphism.
AbSubgroup image_subgroup(const AbHom& h);
/// Kernel subgroup of a homomorphism.
AbSubgroup kernel_subgroup(const AbHom& h);

/// A subgroup re-expressed as a standalone FinAbGroup with an embedding
/// back into the parent; to_sub maps parent element indices to subgroup
/// element indices (-1 outside).
struct SubgroupBasis {
    FinAbGroup group;
    AbHom embedding;              // group -> parent
    std::vector<long long> to_sub; // parent element index -> subgroup index or -1
};
SubgroupBasis subgroup_as_finab(const FinAbGroup& a, const AbSubgroup& s);

} // namespace modcat
