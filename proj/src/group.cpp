#include "singideal/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "singideal/error.hpp"

namespace singideal {

namespace {

void check_cap(std::size_t order, std::size_t cap) {
    if (order > cap) {
        throw Error(ErrorCode::size_cap_exceeded,
                    "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    }
}

bool is_permutation_of_range(std::span<const Element> values, std::size_t n) {
    std::vector<char> seen(n, 0);
    for (Element v : values) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
    std::vector<char> member(g.order(), 0);
    std::vector<Element> out{0};
    member[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Element x = out[i];
        for (Element s : gens) {
            const Element y = g.mul(x, s);
            if (!member[y]) {
                member[y] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_indices(const FiniteGroup& g, std::span<const Element> elements) {
    for (Element e : elements) {
        if (!g.contains(e)) {
            throw Error(ErrorCode::index_out_of_range,
                        "element " + std::to_string(e) + " not in group of order " +
                            std::to_string(g.order()));
        }
    }
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table)
    : order_(order), table_(std::move(table)), inverse_(order, 0) {
    for (Element a = 0; a < order_; ++a) {
        const auto r = row(a);
        inverse_[a] = static_cast<Element>(std::find(r.begin(), r.end(), Element{0}) - r.begin());
    }
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Element> flat) {
    return FiniteGroup(order, std::move(flat));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> rows, std::size_t order_cap) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::invalid_table, "empty table");
    check_cap(n, order_cap);

    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw Error(ErrorCode::invalid_table, "table is not square");
        if (!is_permutation_of_range(r, n)) {
            throw Error(ErrorCode::invalid_table, "row is not a permutation of the elements");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    std::vector<Element> column(n);
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a = 0; a < n; ++a) column[a] = flat[a * n + b];
        if (!is_permutation_of_range(column, n)) {
            throw Error(ErrorCode::invalid_table, "column is not a permutation of the elements");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (flat[a] != a || flat[a * n] != a) {
            throw Error(ErrorCode::invalid_table, "element 0 is not the identity");
        }
    }
    FiniteGroup g(n, std::move(flat));
    if (!satisfies_group_axioms(g)) {
        throw Error(ErrorCode::invalid_table, "multiplication is not associative");
    }
    return g;
}

std::size_t FiniteGroup::element_order(Element a) const noexcept {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a) {
        for (Element b = a + 1; b < order_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

bool satisfies_group_axioms(const FiniteGroup& g) {
    const auto n = static_cast<Element>(g.order());
    for (Element a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
        if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
    }
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            const auto row_ab = g.row(g.mul(a, b));
            for (Element c = 0; c < n; ++c) {
                if (row_ab[c] != g.mul(a, g.mul(b, c))) return false;
            }
        }
    }
    return true;
}

FiniteGroup cyclic(std::size_t n, std::size_t order_cap) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "cyclic group needs n >= 1");
    check_cap(n, order_cap);
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
    }
    auto g = FiniteGroup::from_trusted_table(n, std::move(table));
    g.set_name("Z" + std::to_string(n));
    return g;
}

// Mixed radix with the first factor most significant.
FiniteGroup direct_product(std::span<const FiniteGroup> factors, std::size_t order_cap) {
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f.order();
        check_cap(n, order_cap);
    }
    std::vector<std::size_t> digits_a(factors.size()), digits_b(factors.size());
    auto split = [&](std::size_t x, std::vector<std::size_t>& digits) {
        for (std::size_t k = factors.size(); k-- > 0;) {
            digits[k] = x % factors[k].order();
            x /= factors[k].order();
        }
    };
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        split(a, digits_a);
        for (std::size_t b = 0; b < n; ++b) {
            split(b, digits_b);
            std::size_t c = 0;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                c = c * factors[k].order() +
                    factors[k].mul(static_cast<Element>(digits_a[k]), static_cast<Element>(digits_b[k]));
            }
            table[a * n + b] = static_cast<Element>(c);
        }
    }
    auto g = FiniteGroup::from_trusted_table(n, std::move(table));
    std::string name;
    for (const auto& f : factors) name += (name.empty() ? "" : "x") + f.name();
    g.set_name(name.empty() ? "1" : name);
    return g;
}

// Permutations of {0..n-1} in lexicographic order; (s*t)(i) = s(t(i)).
FiniteGroup symmetric(std::size_t n, std::size_t order_cap) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "symmetric group needs n >= 1");
    std::size_t order = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        order *= k;
        check_cap(order, order_cap);
    }
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::uint8_t>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));

    std::vector<Element> table(order * order);
    std::vector<std::uint8_t> prod(n);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
            table[a * order + b] = index.at(prod);
        }
    }
    auto g = FiniteGroup::from_trusted_table(order, std::move(table));
    g.set_name("S" + std::to_string(n));
    return g;
}

// r^k s^e has index k + n*e; r^a s^e * r^b s^f = r^(a + (-1)^e b) s^(e+f).
FiniteGroup dihedral(std::size_t n, std::size_t order_cap) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    check_cap(order, order_cap);
    std::vector<Element> table(order * order);
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x % n, e = x / n;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t b = y % n, f = y / n;
            const std::size_t rot = e == 0 ? (a + b) % n : (a + n - b) % n;
            table[x * order + y] = static_cast<Element>(rot + n * ((e + f) % 2));
        }
    }
    auto g = FiniteGroup::from_trusted_table(order, std::move(table));
    g.set_name("D" + std::to_string(n));
    return g;
}

// Index 2*u + s for unit u in {1,i,j,k} and sign bit s (1 means negative).
FiniteGroup quaternion8() {
    // unit products: kUnit[u][v] is the unit, kSign[u][v] whether it is negated
    static constexpr std::array<std::array<int, 4>, 4> kUnit{{
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    }};
    static constexpr std::array<std::array<int, 4>, 4> kSign{{
        {0, 0, 0, 0},
        {0, 1, 0, 1},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
    }};
    std::vector<Element> table(64);
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const int u = x / 2, v = y / 2;
            const int sign = (x % 2) ^ (y % 2) ^ kSign[u][v];
            table[x * 8 + y] = static_cast<Element>(2 * kUnit[u][v] + sign);
        }
    }
    auto g = FiniteGroup::from_trusted_table(8, std::move(table));
    g.set_name("Q8");
    return g;
}

bool Subgroup::contains(Element a) const noexcept {
    return std::binary_search(elements.begin(), elements.end(), a);
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
    if (elements.empty()) return false;
    std::vector<char> member(g.order(), 0);
    for (Element e : elements) {
        if (!g.contains(e)) return false;
        member[e] = 1;
    }
    if (!member[0]) return false;
    for (Element a : elements) {
        if (!member[g.inv(a)]) return false;
        for (Element b : elements) {
            if (!member[g.mul(a, b)]) return false;
        }
    }
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elements) {
    check_indices(g, elements);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(g, elements)) {
        throw Error(ErrorCode::invalid_subgroup, "element set is not closed under the group law");
    }
    return Subgroup{std::move(elements)};
}

Subgroup conjugate(const FiniteGroup& g, Element by, const Subgroup& x) {
    Subgroup out;
    out.elements.reserve(x.size());
    for (Element e : x.elements) out.elements.push_back(g.conjugate(by, e));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

SubgroupFamily::SubgroupFamily(std::vector<Subgroup> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), SubgroupOrder{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubgroupFamily::contains(const Subgroup& x) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), x, SubgroupOrder{});
}

std::size_t SubgroupFamily::index_of(const Subgroup& x) const noexcept {
    const auto it = std::lower_bound(members_.begin(), members_.end(), x, SubgroupOrder{});
    if (it == members_.end() || *it != x) return members_.size();
    return static_cast<std::size_t>(it - members_.begin());
}

bool SubgroupFamily::contains_trivial() const noexcept {
    return !members_.empty() && members_.front().is_trivial();
}

bool SubgroupFamily::is_conjugation_invariant(const FiniteGroup& g) const {
    for (const auto& x : members_) {
        for (Element h = 0; h < g.order(); ++h) {
            if (!contains(conjugate(g, h, x))) return false;
        }
    }
    return true;
}

SubgroupFamily family_union(const SubgroupFamily& a, const SubgroupFamily& b) {
    std::vector<Subgroup> all = a.members();
    all.insert(all.end(), b.begin(), b.end());
    return SubgroupFamily(std::move(all));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
    check_indices(g, gens);
    return Subgroup{closure(g, gens)};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
    if (g.order() > cap) {
        throw Error(ErrorCode::cap_exceeded, "subgroup enumeration is capped at order " +
                                                 std::to_string(cap));
    }
    // Every subgroup is reached by a chain <> < <k1> < <k1,k2> < ... of
    // one-element extensions, so extending each found subgroup by each
    // outside element finds them all.
    std::set<Subgroup, SubgroupOrder> found{Subgroup{{0}}};
    std::vector<Subgroup> work{Subgroup{{0}}};
    while (!work.empty()) {
        Subgroup h = std::move(work.back());
        work.pop_back();
        std::vector<Element> gens = h.elements;
        gens.push_back(0);
        for (Element x = 0; x < g.order(); ++x) {
            if (h.contains(x)) continue;
            gens.back() = x;
            Subgroup k{closure(g, gens)};
            if (found.insert(k).second) work.push_back(std::move(k));
        }
    }
    return {found.begin(), found.end()};
}

SubgroupFamily minimal_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    for (Element a = 1; a < g.order(); ++a) {
        const std::size_t k = g.element_order(a);
        bool prime = k >= 2;
        for (std::size_t d = 2; d * d <= k && prime; ++d) prime = k % d != 0;
        if (prime) {
            const Element gen[] = {a};
            out.push_back(Subgroup{closure(g, gen)});
        }
    }
    return SubgroupFamily(std::move(out));
}

SubgroupFamily conjugation_closure(const FiniteGroup& g, std::span<const Subgroup> seeds) {
    std::set<Subgroup, SubgroupOrder> found;
    std::vector<Subgroup> work;
    for (const auto& s : seeds) {
        check_indices(g, s.elements);
        if (found.insert(s).second) work.push_back(s);
    }
    while (!work.empty()) {
        Subgroup x = std::move(work.back());
        work.pop_back();
        for (Element h = 1; h < g.order(); ++h) {
            Subgroup y = conjugate(g, h, x);
            if (found.insert(y).second) work.push_back(std::move(y));
        }
    }
    return SubgroupFamily({found.begin(), found.end()});
}

std::vector<SubgroupFamily> subgroup_conjugacy_classes(const FiniteGroup& g, std::size_t cap) {
    std::vector<SubgroupFamily> classes;
    std::set<Subgroup, SubgroupOrder> seen;
    for (const auto& x : enumerate_subgroups(g, cap)) {
        if (seen.contains(x)) continue;
        const Subgroup seed[] = {x};
        SubgroupFamily cls = conjugation_closure(g, seed);
        seen.insert(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

Subgroup normal_closure_subgroup(const FiniteGroup& g, const SubgroupFamily& family) {
    std::vector<char> member(g.order(), 0);
    std::vector<Element> gens;
    for (const auto& x : family) {
        for (Element e : x.elements) {
            for (Element h = 0; h < g.order(); ++h) {
                const Element c = g.conjugate(h, e);
                if (!member[c]) {
                    member[c] = 1;
                    gens.push_back(c);
                }
            }
        }
    }
    return Subgroup{closure(g, gens)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& x) {
    for (Element h = 0; h < g.order(); ++h) {
        for (Element e : x.elements) {
            if (!x.contains(g.conjugate(h, e))) return false;
        }
    }
    return true;
}

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& x) {
    std::vector<Coset> out;
    std::vector<char> covered(g.order(), 0);
    for (Element rep = 0; rep < g.order(); ++rep) {
        if (covered[rep]) continue;
        Coset c;
        c.representative = rep;
        c.elements.reserve(x.size());
        for (Element e : x.elements) {
            const Element y = g.mul(rep, e);
            covered[y] = 1;
            c.elements.push_back(y);
        }
        std::sort(c.elements.begin(), c.elements.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Coset> distinct_cosets(const FiniteGroup& g, const SubgroupFamily& family) {
    std::vector<Coset> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (auto& c : left_cosets(g, family[i])) {
            c.subgroup_index = i;
            out.push_back(std::move(c));
        }
    }
    return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& lambda) {
    const std::size_t n = lambda.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Element prod = g.mul(lambda.elements[a], lambda.elements[b]);
            const auto it = std::lower_bound(lambda.elements.begin(), lambda.elements.end(), prod);
            table[a * n + b] = static_cast<Element>(it - lambda.elements.begin());
        }
    }
    return FiniteGroup::from_trusted_table(n, std::move(table));
}

SubgroupFamily restrict_family(const FiniteGroup& g, const Subgroup& lambda,
                               const SubgroupFamily& family) {
    check_indices(g, lambda.elements);
    std::vector<Subgroup> out;
    for (const auto& x : family) {
        Subgroup local;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (x.contains(lambda.elements[i])) local.elements.push_back(static_cast<Element>(i));
        }
        out.push_back(std::move(local));
    }
    return SubgroupFamily(std::move(out));
}

}  // namespace singideal
