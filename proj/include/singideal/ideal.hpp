#pragma once

// Decision procedures for the ideal J of a finite group relative to a
// conjugation-invariant subgroup family: the intersection of the kernels of
// the quasi-regular representations on the cosets of each member.
//
// For a finite group everything lives in C^G, so the ideal and its
// intersection with the group algebra are both subspaces of C^G and are
// computed exactly. Two independent routes are provided:
//   * coset constraints: sum of a over every coset gX vanishes;
//   * the stacked quasi-regular representations, linearized entrywise.

#include <cstddef>
#include <optional>
#include <vector>

#include "singideal/group.hpp"
#include "singideal/linalg.hpp"

namespace singideal {

struct GroupAlgebraElement {
    std::vector<Rational> coeffs;  // indexed by group element

    static GroupAlgebraElement delta(std::size_t order, Element g);
    bool is_integral() const;
    bool operator==(const GroupAlgebraElement&) const = default;
};

/// Convolution in the group algebra: (a*b)(g) = sum_h a(h) b(h^-1 g).
GroupAlgebraElement multiply(const FiniteGroup& g, const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);
/// a*(g) = a(g^-1); coefficients are rational so conjugation is trivial.
GroupAlgebraElement adjoint(const FiniteGroup& g, const GroupAlgebraElement& a);

struct CrossChecks {
    bool kernels_equal = false;          // coset route vs representation route, exact subspaces
    bool span_duality = false;           // coset indicators span C^G iff kernel is zero
    std::optional<bool> witness_valid;   // present when a witness was emitted
    std::optional<std::size_t> q_kernel_dim;  // filled by callers that run the groupoid oracle

    bool operator==(const CrossChecks&) const = default;
};

struct IdealReport {
    std::size_t algebraic_kernel_dim = 0;
    std::size_t full_kernel_dim = 0;
    std::optional<IntegerVector> witness;
    bool weak_containment = false;
    bool in_class_I = false;
    std::optional<bool> ai_verdict;
    CrossChecks cross_checks;

    bool operator==(const IdealReport&) const = default;
};

/// Throws Error{not_invariant} when the family is empty or not closed under
/// conjugation.
void require_invariant_family(const FiniteGroup& g, const SubgroupFamily& family);

/// One 0/1 row per distinct coset, one column per element.
RationalMatrix coset_constraint_matrix(const FiniteGroup& g, const SubgroupFamily& family);

std::vector<RationalVector> algebraic_ideal_kernel(const FiniteGroup& g, const SubgroupFamily& family);

/// Integerized first kernel vector, or nullopt when the kernel is zero.
std::optional<IntegerVector> integer_witness(const FiniteGroup& g, const SubgroupFamily& family);

/// True iff every coset sum of a vanishes.
bool satisfies_coset_constraints(const FiniteGroup& g, const SubgroupFamily& family,
                                 std::span<const Rational> a);

/// Permutation matrix of delta_{hX} -> delta_{ghX} on left cosets ordered by
/// representative; entry (i, j) is 1 when g maps coset j to coset i.
RationalMatrix quasi_regular_matrix(const FiniteGroup& g, const Subgroup& x, Element by);

/// Kernel of a -> (sum_g a(g) lambda_{G/X}(g))_{X in family}, with every
/// matrix entry of every member contributing one linear equation.
std::vector<RationalVector> full_ideal_kernel(const FiniteGroup& g, const SubgroupFamily& family);

bool weak_containment_regular(const FiniteGroup& g, const SubgroupFamily& family);

/// Throws Error{internal_inconsistency} if the two kernels differ or the
/// report lands outside class I; neither can happen for a finite group.
IdealReport class_I_check(const FiniteGroup& g, const SubgroupFamily& family);

/// The span test for the minimal-subgroup family. The trivial group has an
/// empty family and gets a vacuous true verdict.
IdealReport property_AI(const FiniteGroup& g);

/// For each prime p, at most one subgroup of order p. Throws
/// Error{not_abelian}.
bool abelian_AI_criterion(const FiniteGroup& g);

}  // namespace singideal
