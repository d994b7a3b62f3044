#pragma once

// Depth-N truncation of the groupoid  G x {inf}  ⊔  (coset groupoid) x {1..N}.
//
// The fibre at infinity is the group itself; each level n carries a copy of
// the coset groupoid. A basic neighbourhood of (g, inf) with cutoff n is
// {(g, inf)} together with the cosets gX (X in the family) at levels n..N.
// The level units are dense, so a function vanishing on every level arrow
// but not at infinity is singular.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "singideal/coset_groupoid.hpp"

namespace singideal {

inline constexpr std::size_t default_hls_depth = 3;

struct LevelArrow {
    std::size_t arrow = 0;  // arrow of the coset groupoid
    std::size_t level = 0;  // 1..depth

    auto operator<=>(const LevelArrow&) const = default;
};

struct BasicNeighborhood {
    Element at_infinity = 0;
    std::vector<LevelArrow> tail;  // sorted
};

class TruncatedHLS {
public:
    const FiniteGroup& group() const noexcept { return levels_.front().group; }
    const SubgroupFamily& family() const noexcept { return levels_.front().family; }
    std::size_t depth() const noexcept { return levels_.size(); }
    const CosetGroupoid& level(std::size_t n) const { return levels_.at(n - 1); }

    /// The point at infinity plus one unit per (member, level).
    std::size_t unit_count() const noexcept { return 1 + family().size() * depth(); }
    std::size_t infinity_arrow_count() const noexcept { return group().order(); }
    std::size_t level_arrow_count() const noexcept { return levels_.front().cosets.size(); }

    BasicNeighborhood basic_neighborhood(Element g, std::size_t cutoff) const;

private:
    friend TruncatedHLS build_hls(const FiniteGroup&, const SubgroupFamily&, std::size_t);
    std::vector<CosetGroupoid> levels_;
};

/// Throws Error{not_invariant} or Error{invalid_argument} for depth 0.
TruncatedHLS build_hls(const FiniteGroup& g, const SubgroupFamily& family,
                       std::size_t depth = default_hls_depth);

/// Points (g, inf) that every basic neighbourhood of theirs absorbs from the
/// tail of the constant sequence of units (X, n). Throws
/// Error{subgroup_not_in_family}.
Subgroup limit_set(const TruncatedHLS& hls, const Subgroup& tail);

/// Limit sets of all constant-tail sequences of level units.
SubgroupFamily essential_fiber(const TruncatedHLS& hls);

bool is_extremely_dangerous(const TruncatedHLS& hls);

struct SingularCandidate {
    std::vector<Rational> infinity_values;            // indexed by group element
    std::map<LevelArrow, Rational> level_values;      // every level arrow present
    std::size_t cutoff = 1;
};

/// f = sum_g b(g) 1_{U(g, cutoff)} with U the basic neighbourhood; no check
/// that b is a witness.
SingularCandidate lift_through_neighborhoods(const TruncatedHLS& hls, std::span<const Rational> b,
                                             std::size_t cutoff);

/// Throws Error{not_a_witness} when b violates a coset constraint and
/// Error{invalid_argument} when cutoff is outside 1..depth.
SingularCandidate singular_function_from_witness(const TruncatedHLS& hls, std::span<const Integer> b,
                                                 std::size_t cutoff);

/// Zero on every level arrow and non-zero somewhere at infinity.
bool verify_singular(const TruncatedHLS& hls, const SingularCandidate& f);

}  // namespace singideal
