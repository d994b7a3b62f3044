#include "singideal/hls.hpp"

#include <algorithm>

#include "singideal/error.hpp"

namespace singideal {

TruncatedHLS build_hls(const FiniteGroup& g, const SubgroupFamily& family, std::size_t depth) {
    if (depth == 0) throw Error(ErrorCode::invalid_argument, "truncation depth must be at least 1");
    TruncatedHLS hls;
    const CosetGroupoid level = build_coset_groupoid(g, family);
    hls.levels_.assign(depth, level);
    return hls;
}

BasicNeighborhood TruncatedHLS::basic_neighborhood(Element g, std::size_t cutoff) const {
    if (!group().contains(g)) throw Error(ErrorCode::index_out_of_range, "element " + std::to_string(g));
    if (cutoff == 0 || cutoff > depth()) {
        throw Error(ErrorCode::invalid_argument, "cutoff outside 1.." + std::to_string(depth()));
    }
    BasicNeighborhood u{g, {}};
    const CosetGroupoid& cg = levels_.front();
    for (const auto& x : family()) {
        std::vector<Element> gx;
        for (Element e : x.elements) gx.push_back(group().mul(g, e));
        std::sort(gx.begin(), gx.end());
        const std::size_t arrow = cg.arrow_of(gx);
        for (std::size_t n = cutoff; n <= depth(); ++n) u.tail.push_back({arrow, n});
    }
    std::sort(u.tail.begin(), u.tail.end());
    return u;
}

Subgroup limit_set(const TruncatedHLS& hls, const Subgroup& tail) {
    const std::size_t unit = hls.family().index_of(tail);
    if (unit == hls.family().size()) {
        throw Error(ErrorCode::subgroup_not_in_family, "tail subgroup is not a member of the family");
    }
    const std::size_t unit_arrow = hls.level(1).groupoid.unit_arrow(unit);

    Subgroup out;
    for (Element g = 0; g < hls.group().order(); ++g) {
        // The sequence (X, n) converges to (g, inf) iff each neighbourhood
        // U(g, cutoff) contains all its terms from level `cutoff` on.
        bool absorbed = true;
        for (std::size_t cutoff = 1; cutoff <= hls.depth() && absorbed; ++cutoff) {
            const auto u = hls.basic_neighborhood(g, cutoff);
            for (std::size_t n = cutoff; n <= hls.depth() && absorbed; ++n) {
                absorbed = std::binary_search(u.tail.begin(), u.tail.end(), LevelArrow{unit_arrow, n});
            }
        }
        if (absorbed) out.elements.push_back(g);
    }
    return out;
}

SubgroupFamily essential_fiber(const TruncatedHLS& hls) {
    std::vector<Subgroup> limits;
    for (const auto& x : hls.family()) limits.push_back(limit_set(hls, x));
    return SubgroupFamily(std::move(limits));
}

bool is_extremely_dangerous(const TruncatedHLS& hls) {
    return !essential_fiber(hls).contains(Subgroup{{0}});
}

SingularCandidate lift_through_neighborhoods(const TruncatedHLS& hls, std::span<const Rational> b,
                                             std::size_t cutoff) {
    if (b.size() != hls.group().order()) {
        throw Error(ErrorCode::dimension_mismatch, "coefficient vector has the wrong length");
    }
    if (cutoff == 0 || cutoff > hls.depth()) {
        throw Error(ErrorCode::invalid_argument, "cutoff outside 1.." + std::to_string(hls.depth()));
    }
    SingularCandidate f;
    f.cutoff = cutoff;
    f.infinity_values.assign(b.begin(), b.end());
    for (std::size_t n = 1; n <= hls.depth(); ++n) {
        for (std::size_t a = 0; a < hls.level_arrow_count(); ++a) f.level_values[{a, n}] = 0;
    }
    for (Element g = 0; g < hls.group().order(); ++g) {
        if (b[g] == 0) continue;
        for (const auto& point : hls.basic_neighborhood(g, cutoff).tail) f.level_values[point] += b[g];
    }
    return f;
}

SingularCandidate singular_function_from_witness(const TruncatedHLS& hls, std::span<const Integer> b,
                                                 std::size_t cutoff) {
    const RationalVector bq = to_rational(b);
    if (bq.size() != hls.group().order() || is_zero(bq) ||
        !satisfies_coset_constraints(hls.group(), hls.family(), bq)) {
        throw Error(ErrorCode::not_a_witness, "element is not a non-zero solution of the coset constraints");
    }
    return lift_through_neighborhoods(hls, bq, cutoff);
}

bool verify_singular(const TruncatedHLS& hls, const SingularCandidate& f) {
    if (f.infinity_values.size() != hls.group().order()) return false;
    for (const auto& [point, value] : f.level_values) {
        if (value != 0) return false;
    }
    return !is_zero(f.infinity_values);
}

}  // namespace singideal
