#pragma once

// Finite groups given by Cayley tables, their subgroups, conjugation-invariant
// subgroup families and left cosets.
//
// Elements are the integers 0..order-1 and the identity is always 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace singideal {

using Element = std::uint32_t;

inline constexpr std::size_t default_order_cap = 5040;
inline constexpr std::size_t default_enumeration_cap = 48;

class FiniteGroup {
public:
    /// Validates the table (identity at 0, Latin rows, associativity) and
    /// derives the inverse table. Throws Error{invalid_table} on failure.
    static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                  std::size_t order_cap = default_order_cap);

    /// Row-major flat table already known to satisfy the group axioms.
    static FiniteGroup from_trusted_table(std::size_t order, std::vector<Element> flat);

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return 0; }

    Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
    Element inv(Element a) const noexcept { return inverse_[a]; }
    Element conjugate(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }

    std::span<const Element> row(Element a) const noexcept {
        return {table_.data() + a * order_, order_};
    }
    std::span<const Element> inverses() const noexcept { return inverse_; }

    std::size_t element_order(Element a) const noexcept;
    bool is_abelian() const noexcept;
    bool contains(Element a) const noexcept { return a < order_; }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool operator==(const FiniteGroup& other) const noexcept {
        return order_ == other.order_ && table_ == other.table_;
    }

private:
    FiniteGroup(std::size_t order, std::vector<Element> table);

    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::string name_;
};

/// Exhaustive identity/inverse/associativity check on a built group.
bool satisfies_group_axioms(const FiniteGroup& g);

// Constructors with canonical element orderings.
FiniteGroup cyclic(std::size_t n, std::size_t order_cap = default_order_cap);
FiniteGroup direct_product(std::span<const FiniteGroup> factors,
                           std::size_t order_cap = default_order_cap);
FiniteGroup symmetric(std::size_t n, std::size_t order_cap = default_order_cap);
FiniteGroup dihedral(std::size_t n, std::size_t order_cap = default_order_cap);
FiniteGroup quaternion8();

/// Sorted element list; always contains 0 when valid.
struct Subgroup {
    std::vector<Element> elements;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(Element a) const noexcept;
    bool is_trivial() const noexcept { return elements.size() == 1; }

    auto operator<=>(const Subgroup&) const = default;
    bool operator==(const Subgroup&) const = default;
};

/// Size first, then lexicographic. This is the canonical order of families
/// and of enumerate_subgroups output.
struct SubgroupOrder {
    bool operator()(const Subgroup& a, const Subgroup& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements < b.elements;
    }
};

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements);
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elements);
Subgroup conjugate(const FiniteGroup& g, Element by, const Subgroup& x);

/// A set of subgroups in canonical order. Construction does not enforce
/// conjugation invariance; the ideal computations check it on entry.
class SubgroupFamily {
public:
    SubgroupFamily() = default;
    explicit SubgroupFamily(std::vector<Subgroup> members);

    const std::vector<Subgroup>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const Subgroup& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Subgroup& x) const noexcept;
    /// Position of x in members(), or size() when absent.
    std::size_t index_of(const Subgroup& x) const noexcept;
    bool contains_trivial() const noexcept;

    bool is_conjugation_invariant(const FiniteGroup& g) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool operator==(const SubgroupFamily&) const = default;

private:
    std::vector<Subgroup> members_;
};

SubgroupFamily family_union(const SubgroupFamily& a, const SubgroupFamily& b);

struct Coset {
    std::vector<Element> elements;
    Element representative = 0;
    std::size_t subgroup_index = 0;  // into the defining family

    bool operator==(const Coset&) const = default;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          std::size_t cap = default_enumeration_cap);
SubgroupFamily minimal_subgroups(const FiniteGroup& g);
SubgroupFamily conjugation_closure(const FiniteGroup& g, std::span<const Subgroup> seeds);
/// Conjugacy classes of subgroups, each as its own family.
std::vector<SubgroupFamily> subgroup_conjugacy_classes(const FiniteGroup& g,
                                                       std::size_t cap = default_enumeration_cap);
Subgroup normal_closure_subgroup(const FiniteGroup& g, const SubgroupFamily& family);
bool is_normal(const FiniteGroup& g, const Subgroup& x);

/// Every left coset gX, family order first and representative order within
/// each member. Cosets of distinct subgroups never coincide as sets.
std::vector<Coset> distinct_cosets(const FiniteGroup& g, const SubgroupFamily& family);

/// Left cosets of a single subgroup, ordered by representative.
std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& x);

/// The subgroup as a group in its own right. Local index i stands for
/// lambda.elements[i], so local 0 is still the identity.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& lambda);

/// {lambda ∩ X : X in family}, re-indexed into local indices of lambda.
SubgroupFamily restrict_family(const FiniteGroup& g, const Subgroup& lambda,
                               const SubgroupFamily& family);

}  // namespace singideal
