#pragma once

#include "modcat/fingrp.hpp"

namespace modcat {

/// All isomorphism classes of groups of order p^k (k small), generated as
/// extensions of Z/p by the abelian groups of order p^{k-1} and deduplicated
/// by isomorphism testing. Every p-group has an abelian normal subgroup of
/// index p in the orders supported here (<= p^4).
std::vector<FiniteGroup> p_groups_of_order(long long n);

} // namespace modcat
