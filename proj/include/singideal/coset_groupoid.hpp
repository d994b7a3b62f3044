#pragma once

// The coset groupoid of a finite group G and an invariant family X: arrows
// are the cosets gX, s(Y) = y^-1 Y, r(Y) = Y y^-1, and composable cosets
// multiply pointwise. Units are the members of the family.

#include <vector>

#include "singideal/group.hpp"
#include "singideal/groupoid.hpp"
#include "singideal/ideal.hpp"

namespace singideal {

struct CosetGroupoid {
    FiniteGroup group;
    SubgroupFamily family;
    std::vector<Coset> cosets;  // arrow i is cosets[i], distinct_cosets order
    FiniteGroupoid groupoid;    // unit u is family[u]

    std::size_t arrow_of(std::span<const Element> sorted_elements) const;
};

/// Throws Error{not_invariant}; throws Error{internal_inconsistency} if the
/// source or range of a coset depends on the chosen representative.
CosetGroupoid build_coset_groupoid(const FiniteGroup& g, const SubgroupFamily& family);

/// q(a)(Y) = sum of a over Y.
GroupoidFunction q_map(const CosetGroupoid& cg, const GroupAlgebraElement& a);
GroupoidFunction q_map(const FiniteGroup& g, const SubgroupFamily& family, const GroupAlgebraElement& a);

/// Kernel of the linear map a -> q(a), assembled column by column from q(delta_g).
std::vector<RationalVector> q_kernel(const CosetGroupoid& cg);
std::size_t kernel_of_q_dimension(const FiniteGroup& g, const SubgroupFamily& family);

}  // namespace singideal
