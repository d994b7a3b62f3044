#pragma once

// Finite discrete groupoids with a precomputed composition table, and the
// convolution algebra of rational functions on their arrows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "singideal/linalg.hpp"
#include "singideal/parallel.hpp"

namespace singideal {

struct Arrow {
    std::size_t source = 0;
    std::size_t range = 0;
};

class FiniteGroupoid {
public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    FiniteGroupoid() = default;
    /// compose is row-major arrows x arrows with `none` where undefined.
    FiniteGroupoid(std::size_t unit_count, std::vector<Arrow> arrows, std::vector<std::size_t> inverse,
                   std::vector<std::size_t> unit_arrows, std::vector<std::size_t> compose);

    std::uint64_t id() const noexcept { return id_; }
    std::size_t unit_count() const noexcept { return unit_count_; }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    std::size_t source(std::size_t a) const { return arrows_[a].source; }
    std::size_t range(std::size_t a) const { return arrows_[a].range; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t unit_arrow(std::size_t u) const { return unit_arrows_[u]; }
    /// `none` unless source(a) == range(b).
    std::size_t compose(std::size_t a, std::size_t b) const { return compose_[a * arrows_.size() + b]; }

    /// Arrows with the given source, in increasing arrow order.
    std::span<const std::size_t> arrows_with_source(std::size_t u) const { return by_source_[u]; }

private:
    std::uint64_t id_ = 0;
    std::size_t unit_count_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> unit_arrows_;
    std::vector<std::size_t> compose_;
    std::vector<std::vector<std::size_t>> by_source_;
};

/// Exhaustive check of the range/source, inverse, unit and associativity laws.
bool satisfies_groupoid_axioms(const FiniteGroupoid& g);

/// The reduction G|_X: arrows with source and range in X. Units of the result
/// follow the increasing order of X; arrow_map[i] is the arrow of the parent.
struct Reduction {
    FiniteGroupoid groupoid;
    std::vector<std::size_t> unit_map;
    std::vector<std::size_t> arrow_map;
};
Reduction reduce(const FiniteGroupoid& g, std::span<const std::size_t> units);

struct GroupoidFunction {
    std::uint64_t groupoid_id = 0;
    std::vector<Rational> values;  // indexed by arrow

    bool operator==(const GroupoidFunction&) const = default;
};

GroupoidFunction zero_function(const FiniteGroupoid& g);
GroupoidFunction arrow_indicator(const FiniteGroupoid& g, std::size_t arrow);
/// Indicator of the unit arrows over the given units (all units when empty).
GroupoidFunction unit_indicator(const FiniteGroupoid& g, std::span<const std::size_t> units = {});

/// (f1 * f2)(x) = sum over h with s(h) = s(x) of f1(x h^-1) f2(h).
/// Throws Error{mismatched_groupoid}.
GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2, Exec exec = Exec::parallel);
/// f*(x) = f(x^-1).
GroupoidFunction involution(const FiniteGroupoid& g, const GroupoidFunction& f);
GroupoidFunction add(const GroupoidFunction& a, const GroupoidFunction& b);

namespace reference {

/// Sums f1(a) f2(b) into ab over every composable pair.
GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2);

}  // namespace reference

}  // namespace singideal
