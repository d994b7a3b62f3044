#include "singideal/ideal.hpp"

#include <map>
#include <set>

#include "singideal/error.hpp"

namespace singideal {

GroupAlgebraElement GroupAlgebraElement::delta(std::size_t order, Element g) {
    GroupAlgebraElement a;
    a.coeffs.assign(order, Rational(0));
    a.coeffs.at(g) = 1;
    return a;
}

bool GroupAlgebraElement::is_integral() const {
    for (const auto& q : coeffs) {
        if (q.get_den() != 1) return false;
    }
    return true;
}

GroupAlgebraElement multiply(const FiniteGroup& g, const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
    GroupAlgebraElement out;
    out.coeffs.assign(g.order(), Rational(0));
    for (Element x = 0; x < g.order(); ++x) {
        if (a.coeffs[x] == 0) continue;
        for (Element y = 0; y < g.order(); ++y) {
            if (b.coeffs[y] != 0) out.coeffs[g.mul(x, y)] += a.coeffs[x] * b.coeffs[y];
        }
    }
    return out;
}

GroupAlgebraElement adjoint(const FiniteGroup& g, const GroupAlgebraElement& a) {
    GroupAlgebraElement out;
    out.coeffs.resize(g.order());
    for (Element x = 0; x < g.order(); ++x) out.coeffs[g.inv(x)] = a.coeffs[x];
    return out;
}

void require_invariant_family(const FiniteGroup& g, const SubgroupFamily& family) {
    if (family.empty()) throw Error(ErrorCode::not_invariant, "subgroup family is empty");
    if (!family.is_conjugation_invariant(g)) {
        throw Error(ErrorCode::not_invariant, "subgroup family is not closed under conjugation");
    }
}

RationalMatrix coset_constraint_matrix(const FiniteGroup& g, const SubgroupFamily& family) {
    const auto cosets = distinct_cosets(g, family);
    RationalMatrix m(cosets.size(), g.order());
    for (std::size_t r = 0; r < cosets.size(); ++r) {
        for (Element e : cosets[r].elements) m(r, e) = 1;
    }
    return m;
}

std::vector<RationalVector> algebraic_ideal_kernel(const FiniteGroup& g, const SubgroupFamily& family) {
    require_invariant_family(g, family);
    return kernel_basis(coset_constraint_matrix(g, family));
}

std::optional<IntegerVector> integer_witness(const FiniteGroup& g, const SubgroupFamily& family) {
    const auto kernel = algebraic_ideal_kernel(g, family);
    if (kernel.empty()) return std::nullopt;
    return integerize(kernel.front());
}

bool satisfies_coset_constraints(const FiniteGroup& g, const SubgroupFamily& family,
                                 std::span<const Rational> a) {
    if (a.size() != g.order()) return false;
    for (const auto& coset : distinct_cosets(g, family)) {
        Rational sum = 0;
        for (Element e : coset.elements) sum += a[e];
        if (sum != 0) return false;
    }
    return true;
}

RationalMatrix quasi_regular_matrix(const FiniteGroup& g, const Subgroup& x, Element by) {
    const auto cosets = left_cosets(g, x);
    std::vector<std::size_t> coset_of(g.order());
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        for (Element e : cosets[i].elements) coset_of[e] = i;
    }
    RationalMatrix m(cosets.size(), cosets.size());
    for (std::size_t j = 0; j < cosets.size(); ++j) {
        m(coset_of[g.mul(by, cosets[j].representative)], j) = 1;
    }
    return m;
}

std::vector<RationalVector> full_ideal_kernel(const FiniteGroup& g, const SubgroupFamily& family) {
    require_invariant_family(g, family);
    // Identical linearized rows are common (each is the indicator of a coset
    // of a conjugate); keeping one copy leaves the kernel unchanged.
    std::set<RationalVector> rows;
    for (const auto& x : family) {
        std::vector<RationalMatrix> images;
        images.reserve(g.order());
        for (Element h = 0; h < g.order(); ++h) images.push_back(quasi_regular_matrix(g, x, h));
        const std::size_t k = images.front().rows();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                RationalVector row(g.order());
                for (Element h = 0; h < g.order(); ++h) row[h] = images[h](i, j);
                rows.insert(std::move(row));
            }
        }
    }
    const std::vector<RationalVector> distinct(rows.begin(), rows.end());
    return kernel_basis(stack(distinct, g.order()));
}

bool weak_containment_regular(const FiniteGroup& g, const SubgroupFamily& family) {
    return full_ideal_kernel(g, family).empty();
}

IdealReport class_I_check(const FiniteGroup& g, const SubgroupFamily& family) {
    require_invariant_family(g, family);
    const RationalMatrix constraints = coset_constraint_matrix(g, family);
    const auto algebraic = kernel_basis(constraints);
    const auto full = full_ideal_kernel(g, family);

    IdealReport report;
    report.algebraic_kernel_dim = algebraic.size();
    report.full_kernel_dim = full.size();
    report.weak_containment = full.empty();
    report.in_class_I = full.empty() || !algebraic.empty();

    report.cross_checks.kernels_equal =
        algebraic.size() == full.size() && same_subspace(algebraic, full, g.order());
    report.cross_checks.span_duality = (rank(constraints) == g.order()) == algebraic.empty();

    if (!algebraic.empty()) {
        IntegerVector w = integerize(algebraic.front());
        const RationalVector wq = to_rational(w);
        report.cross_checks.witness_valid = !is_zero(wq) && is_zero(multiply(constraints, wq));
        report.witness = std::move(w);
    }

    if (!report.cross_checks.kernels_equal) {
        throw Error(ErrorCode::internal_inconsistency,
                    "coset-constraint kernel (dim " + std::to_string(algebraic.size()) +
                        ") differs from quasi-regular kernel (dim " + std::to_string(full.size()) + ")");
    }
    if (!report.cross_checks.span_duality) {
        throw Error(ErrorCode::internal_inconsistency, "coset span test disagrees with kernel dimension");
    }
    if (report.cross_checks.witness_valid == false) {
        throw Error(ErrorCode::internal_inconsistency, "integer witness violates a coset constraint");
    }
    if (!report.in_class_I) {
        throw Error(ErrorCode::internal_inconsistency, "finite group reported outside class I");
    }
    return report;
}

IdealReport property_AI(const FiniteGroup& g) {
    const SubgroupFamily minimal = minimal_subgroups(g);
    if (minimal.empty()) {
        IdealReport vacuous;
        vacuous.weak_containment = true;
        vacuous.in_class_I = true;
        vacuous.ai_verdict = true;
        vacuous.cross_checks.kernels_equal = true;
        vacuous.cross_checks.span_duality = true;
        return vacuous;
    }
    IdealReport report = class_I_check(g, minimal);
    report.ai_verdict = report.algebraic_kernel_dim > 0;
    return report;
}

bool abelian_AI_criterion(const FiniteGroup& g) {
    if (!g.is_abelian()) throw Error(ErrorCode::not_abelian, "group is not abelian");
    std::map<std::size_t, std::size_t> per_prime;
    for (const auto& x : minimal_subgroups(g)) {
        if (++per_prime[x.size()] > 1) return false;
    }
    return true;
}

}  // namespace singideal
