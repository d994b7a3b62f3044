#pragma once

// Named groups used by the batch commands and the test suites.

#include <cstddef>
#include <string>
#include <vector>

#include "singideal/group.hpp"

namespace singideal {

/// Isomorphism type of a finite abelian group as prime-power cyclic factors,
/// ordered by prime and then by decreasing exponent.
struct AbelianType {
    std::vector<std::size_t> factors;

    std::size_t order() const noexcept;
    std::string name() const;
    auto operator<=>(const AbelianType&) const = default;
};

/// One entry per isomorphism class of order 1..max_order, sorted by order
/// then factors. Order 1 is the empty factor list.
std::vector<AbelianType> abelian_types(std::size_t max_order);
FiniteGroup build_abelian(const AbelianType& type);

/// Cyclic groups of order 1..12, (Z2)^2, (Z2)^3, Z2xZ4, S3, S4, D4, D5, Q8.
std::vector<FiniteGroup> standard_catalog();

}  // namespace singideal
