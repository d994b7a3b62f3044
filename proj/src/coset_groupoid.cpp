#include "singideal/coset_groupoid.hpp"

#include <algorithm>
#include <map>

#include "singideal/error.hpp"

namespace singideal {

namespace {

std::vector<Element> sorted_product(const FiniteGroup& g, Element left, std::span<const Element> set,
                                    Element right) {
    std::vector<Element> out;
    out.reserve(set.size());
    for (Element e : set) out.push_back(g.mul(g.mul(left, e), right));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::size_t CosetGroupoid::arrow_of(std::span<const Element> sorted_elements) const {
    for (std::size_t a = 0; a < cosets.size(); ++a) {
        if (std::ranges::equal(cosets[a].elements, sorted_elements)) return a;
    }
    return FiniteGroupoid::none;
}

CosetGroupoid build_coset_groupoid(const FiniteGroup& g, const SubgroupFamily& family) {
    require_invariant_family(g, family);
    CosetGroupoid cg{g, family, distinct_cosets(g, family), {}};

    std::map<std::vector<Element>, std::size_t> index;
    for (std::size_t a = 0; a < cg.cosets.size(); ++a) index.emplace(cg.cosets[a].elements, a);
    auto lookup = [&](const std::vector<Element>& elements) {
        const auto it = index.find(elements);
        if (it == index.end()) {
            throw Error(ErrorCode::internal_inconsistency, "product of cosets is not a coset of the family");
        }
        return it->second;
    };
    auto unit_of = [&](const std::vector<Element>& elements) {
        const std::size_t u = family.index_of(Subgroup{elements});
        if (u == family.size()) {
            throw Error(ErrorCode::internal_inconsistency, "source or range is not a member of the family");
        }
        return u;
    };

    const std::size_t n = cg.cosets.size();
    std::vector<Arrow> arrows(n);
    std::vector<std::size_t> inverse(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& y = cg.cosets[a].elements;
        // s(Y) = y^-1 Y and r(Y) = Y y^-1 for every choice of y in Y.
        const std::size_t s = unit_of(sorted_product(g, g.inv(y.front()), y, 0));
        const std::size_t r = unit_of(sorted_product(g, 0, y, g.inv(y.front())));
        for (Element rep : y) {
            if (unit_of(sorted_product(g, g.inv(rep), y, 0)) != s ||
                unit_of(sorted_product(g, 0, y, g.inv(rep))) != r) {
                throw Error(ErrorCode::internal_inconsistency, "source/range depend on the representative");
            }
        }
        arrows[a] = {s, r};
        std::vector<Element> inv;
        for (Element e : y) inv.push_back(g.inv(e));
        std::sort(inv.begin(), inv.end());
        inverse[a] = lookup(inv);
    }

    std::vector<std::size_t> unit_arrows(family.size());
    for (std::size_t u = 0; u < family.size(); ++u) unit_arrows[u] = lookup(family[u].elements);

    // YZ = yz s(Z) when s(Y) = r(Z).
    std::vector<std::size_t> compose(n * n, FiniteGroupoid::none);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (arrows[a].source != arrows[b].range) continue;
            const Element yz = g.mul(cg.cosets[a].representative, cg.cosets[b].representative);
            compose[a * n + b] = lookup(sorted_product(g, yz, family[arrows[b].source].elements, 0));
        }
    }
    cg.groupoid = FiniteGroupoid(family.size(), std::move(arrows), std::move(inverse),
                                 std::move(unit_arrows), std::move(compose));
    return cg;
}

GroupoidFunction q_map(const CosetGroupoid& cg, const GroupAlgebraElement& a) {
    if (a.coeffs.size() != cg.group.order()) {
        throw Error(ErrorCode::dimension_mismatch, "group algebra element has the wrong length");
    }
    GroupoidFunction f = zero_function(cg.groupoid);
    for (std::size_t y = 0; y < cg.cosets.size(); ++y) {
        for (Element e : cg.cosets[y].elements) f.values[y] += a.coeffs[e];
    }
    return f;
}

GroupoidFunction q_map(const FiniteGroup& g, const SubgroupFamily& family, const GroupAlgebraElement& a) {
    return q_map(build_coset_groupoid(g, family), a);
}

std::vector<RationalVector> q_kernel(const CosetGroupoid& cg) {
    const std::size_t order = cg.group.order();
    RationalMatrix linear(cg.groupoid.arrow_count(), order);
    for (Element h = 0; h < order; ++h) {
        const GroupoidFunction column = q_map(cg, GroupAlgebraElement::delta(order, h));
        for (std::size_t y = 0; y < column.values.size(); ++y) linear(y, h) = column.values[y];
    }
    return kernel_basis(linear);
}

std::size_t kernel_of_q_dimension(const FiniteGroup& g, const SubgroupFamily& family) {
    return q_kernel(build_coset_groupoid(g, family)).size();
}

}  // namespace singideal
