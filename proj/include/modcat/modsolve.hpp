#pragma once

#include <optional>
#include <vector>

#include "modcat/error.hpp"

namespace modcat {

/// Sparse linear system over products of cyclic rings: find x with
///   sum_j M[i][j] x_j = rhs_i  (mod row_mod[i])   for every row i,
/// where variable j is only meaningful mod var_mod[j]. Used for all
/// coboundary solving; the module structure of cochain spaces maps onto
/// per-coordinate moduli.
struct ModSystem {
    long long nrows = 0;
    long long ncols = 0;
    std::vector<long long> row_mod;
    std::vector<long long> var_mod;
    struct Entry {
        long long row, col, coeff;
    };
    std::vector<Entry> entries;

    void add(long long row, long long col, long long coeff) {
        if (coeff != 0) entries.push_back({row, col, coeff});
    }
};

/// Result of a batched solve: one optional particular solution per right
/// hand side, plus generators of the homogeneous solution group (shared).
/// Absence of a solution is a proof of inconsistency: the solver works over
/// each prime power of the moduli and fails only when some residue system
/// is genuinely unsolvable.
struct ModSolveResult {
    std::vector<std::optional<std::vector<long long>>> solutions;
    std::vector<std::vector<long long>> kernel;
};

ModSolveResult solve_linear(const ModSystem& sys, const std::vector<std::vector<long long>>& rhs);

/// Convenience single-rhs wrapper.
std::optional<std::vector<long long>> solve_linear_one(const ModSystem& sys,
                                                       const std::vector<long long>& rhs);

/// Invariant factors d_1 | d_2 | ... of the abelian group presented by
/// generators with given orders modulo the columns of `relations`
/// (each relation expressed in those generators). Also returns, for each
/// invariant factor, the expression of a generator of that cyclic summand
/// in the original generators.
struct PresentationResult {
    std::vector<long long> factors;                   // > 1, divisibility chain
    std::vector<std::vector<long long>> factor_gens;  // coefficients over the input generators
};
PresentationResult quotient_presentation(const std::vector<long long>& gen_orders,
                                         const std::vector<std::vector<long long>>& relations);

} // namespace modcat
