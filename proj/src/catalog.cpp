#include "singideal/catalog.hpp"

#include <algorithm>
#include <functional>

namespace singideal {

namespace {

// Partitions of k into parts listed in decreasing order.
void partitions(std::size_t k, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
    if (k == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t part = std::min(k, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(k - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::size_t AbelianType::order() const noexcept {
    std::size_t n = 1;
    for (std::size_t f : factors) n *= f;
    return n;
}

std::string AbelianType::name() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t f : factors) out += (out.empty() ? "Z" : "xZ") + std::to_string(f);
    return out;
}

std::vector<AbelianType> abelian_types(std::size_t max_order) {
    std::vector<AbelianType> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
        // choices[i] lists the factor lists available for the i-th prime power
        std::vector<std::vector<std::vector<std::size_t>>> choices;
        std::size_t rest = n;
        for (std::size_t p = 2; p <= rest; ++p) {
            std::size_t k = 0;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            if (k == 0) continue;
            std::vector<std::vector<std::size_t>> parts;
            std::vector<std::size_t> current;
            partitions(k, k, current, parts);
            std::vector<std::vector<std::size_t>> factor_lists;
            for (const auto& part : parts) {
                std::vector<std::size_t> fs;
                for (std::size_t e : part) {
                    std::size_t q = 1;
                    for (std::size_t i = 0; i < e; ++i) q *= p;
                    fs.push_back(q);
                }
                factor_lists.push_back(std::move(fs));
            }
            choices.push_back(std::move(factor_lists));
        }
        std::vector<std::size_t> acc;
        std::function<void(std::size_t)> expand = [&](std::size_t i) {
            if (i == choices.size()) {
                out.push_back(AbelianType{acc});
                return;
            }
            for (const auto& fs : choices[i]) {
                acc.insert(acc.end(), fs.begin(), fs.end());
                expand(i + 1);
                acc.resize(acc.size() - fs.size());
            }
        };
        expand(0);
    }
    std::stable_sort(out.begin(), out.end(), [](const AbelianType& a, const AbelianType& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.factors < b.factors;
    });
    return out;
}

FiniteGroup build_abelian(const AbelianType& type) {
    std::vector<FiniteGroup> factors;
    for (std::size_t f : type.factors) factors.push_back(cyclic(f));
    FiniteGroup g = direct_product(factors);
    g.set_name(type.name());
    return g;
}

std::vector<FiniteGroup> standard_catalog() {
    std::vector<FiniteGroup> out;
    for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic(n));
    const FiniteGroup z2 = cyclic(2);
    const FiniteGroup z4 = cyclic(4);
    out.push_back(build_abelian({{2, 2}}));
    out.push_back(build_abelian({{2, 2, 2}}));
    const FiniteGroup z2z4[] = {z2, z4};
    out.push_back(direct_product(z2z4));
    out.push_back(symmetric(3));
    out.push_back(symmetric(4));
    out.push_back(dihedral(4));
    out.push_back(dihedral(5));
    out.push_back(quaternion8());
    return out;
}

}  // namespace singideal
