#include "singideal/groupoid.hpp"

#include <algorithm>
#include <atomic>

#include "singideal/error.hpp"

namespace singideal {

namespace {

std::uint64_t next_groupoid_id() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

void require_same(const FiniteGroupoid& g, const GroupoidFunction& f) {
    if (f.groupoid_id != g.id() || f.values.size() != g.arrow_count()) {
        throw Error(ErrorCode::mismatched_groupoid, "function is defined on a different groupoid");
    }
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::size_t unit_count, std::vector<Arrow> arrows,
                               std::vector<std::size_t> inverse, std::vector<std::size_t> unit_arrows,
                               std::vector<std::size_t> compose)
    : id_(next_groupoid_id()),
      unit_count_(unit_count),
      arrows_(std::move(arrows)),
      inverse_(std::move(inverse)),
      unit_arrows_(std::move(unit_arrows)),
      compose_(std::move(compose)),
      by_source_(unit_count) {
    for (std::size_t a = 0; a < arrows_.size(); ++a) by_source_[arrows_[a].source].push_back(a);
}

bool satisfies_groupoid_axioms(const FiniteGroupoid& g) {
    const std::size_t n = g.arrow_count();
    for (std::size_t u = 0; u < g.unit_count(); ++u) {
        const std::size_t e = g.unit_arrow(u);
        if (g.source(e) != u || g.range(e) != u || g.inverse(e) != e) return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t ai = g.inverse(a);
        if (g.range(ai) != g.source(a) || g.source(ai) != g.range(a)) return false;
        if (g.inverse(ai) != a) return false;
        if (g.compose(a, ai) != g.unit_arrow(g.range(a))) return false;
        if (g.compose(ai, a) != g.unit_arrow(g.source(a))) return false;
        if (g.compose(g.unit_arrow(g.range(a)), a) != a) return false;
        if (g.compose(a, g.unit_arrow(g.source(a))) != a) return false;
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = g.compose(a, b);
            const bool composable = g.source(a) == g.range(b);
            if (composable != (ab != FiniteGroupoid::none)) return false;
            if (!composable) continue;
            if (g.range(ab) != g.range(a) || g.source(ab) != g.source(b)) return false;
            for (std::size_t c = 0; c < n; ++c) {
                if (g.range(c) != g.source(b)) continue;
                if (g.compose(ab, c) != g.compose(a, g.compose(b, c))) return false;
            }
        }
    }
    return true;
}

Reduction reduce(const FiniteGroupoid& g, std::span<const std::size_t> units) {
    Reduction out;
    std::vector<std::size_t> local_unit(g.unit_count(), FiniteGroupoid::none);
    out.unit_map.assign(units.begin(), units.end());
    std::sort(out.unit_map.begin(), out.unit_map.end());
    out.unit_map.erase(std::unique(out.unit_map.begin(), out.unit_map.end()), out.unit_map.end());
    for (std::size_t i = 0; i < out.unit_map.size(); ++i) {
        if (out.unit_map[i] >= g.unit_count()) {
            throw Error(ErrorCode::unit_not_found, "unit " + std::to_string(out.unit_map[i]));
        }
        local_unit[out.unit_map[i]] = i;
    }

    std::vector<std::size_t> local_arrow(g.arrow_count(), FiniteGroupoid::none);
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        const std::size_t s = local_unit[g.source(a)], r = local_unit[g.range(a)];
        if (s == FiniteGroupoid::none || r == FiniteGroupoid::none) continue;
        local_arrow[a] = arrows.size();
        out.arrow_map.push_back(a);
        arrows.push_back({s, r});
    }
    const std::size_t n = arrows.size();
    std::vector<std::size_t> inverse(n), compose(n * n, FiniteGroupoid::none), unit_arrows;
    for (std::size_t i = 0; i < n; ++i) {
        inverse[i] = local_arrow[g.inverse(out.arrow_map[i])];
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ab = g.compose(out.arrow_map[i], out.arrow_map[j]);
            if (ab != FiniteGroupoid::none) compose[i * n + j] = local_arrow[ab];
        }
    }
    for (std::size_t u : out.unit_map) unit_arrows.push_back(local_arrow[g.unit_arrow(u)]);
    out.groupoid = FiniteGroupoid(out.unit_map.size(), std::move(arrows), std::move(inverse),
                                  std::move(unit_arrows), std::move(compose));
    return out;
}

GroupoidFunction zero_function(const FiniteGroupoid& g) {
    return GroupoidFunction{g.id(), std::vector<Rational>(g.arrow_count())};
}

GroupoidFunction arrow_indicator(const FiniteGroupoid& g, std::size_t arrow) {
    GroupoidFunction f = zero_function(g);
    f.values.at(arrow) = 1;
    return f;
}

GroupoidFunction unit_indicator(const FiniteGroupoid& g, std::span<const std::size_t> units) {
    GroupoidFunction f = zero_function(g);
    if (units.empty()) {
        for (std::size_t u = 0; u < g.unit_count(); ++u) f.values[g.unit_arrow(u)] = 1;
        return f;
    }
    for (std::size_t u : units) {
        if (u >= g.unit_count()) throw Error(ErrorCode::unit_not_found, "unit " + std::to_string(u));
        f.values[g.unit_arrow(u)] = 1;
    }
    return f;
}

GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2, Exec exec) {
    require_same(g, f1);
    require_same(g, f2);
    GroupoidFunction out = zero_function(g);
    const auto n = static_cast<std::ptrdiff_t>(g.arrow_count());
    const bool par = exec == Exec::parallel && g.arrow_count() >= parallel_grain / 8;
#pragma omp parallel for schedule(dynamic, 4) if (par)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        Rational acc = 0;
        for (std::size_t h : g.arrows_with_source(g.source(ux))) {
            if (f2.values[h] == 0) continue;
            const Rational& left = f1.values[g.compose(ux, g.inverse(h))];
            if (left != 0) acc += left * f2.values[h];
        }
        out.values[ux] = std::move(acc);
    }
    return out;
}

GroupoidFunction involution(const FiniteGroupoid& g, const GroupoidFunction& f) {
    require_same(g, f);
    GroupoidFunction out = zero_function(g);
    for (std::size_t a = 0; a < g.arrow_count(); ++a) out.values[a] = f.values[g.inverse(a)];
    return out;
}

GroupoidFunction add(const GroupoidFunction& a, const GroupoidFunction& b) {
    if (a.groupoid_id != b.groupoid_id || a.values.size() != b.values.size()) {
        throw Error(ErrorCode::mismatched_groupoid, "functions live on different groupoids");
    }
    GroupoidFunction out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

namespace reference {

GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2) {
    require_same(g, f1);
    require_same(g, f2);
    GroupoidFunction out = zero_function(g);
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        for (std::size_t b = 0; b < g.arrow_count(); ++b) {
            const std::size_t ab = g.compose(a, b);
            if (ab != FiniteGroupoid::none) out.values[ab] += f1.values[a] * f2.values[b];
        }
    }
    return out;
}

}  // namespace reference

}  // namespace singideal
