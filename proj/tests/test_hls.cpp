#include "doctest.h"
#include "oracles.hpp"
#include "singideal/catalog.hpp"
#include "singideal/error.hpp"
#include "singideal/hls.hpp"
#include "singideal/random.hpp"

using namespace singideal;

namespace {

SubgroupFamily family_of(const FiniteGroup& g, std::vector<std::vector<Element>> members) {
    std::vector<Subgroup> xs;
    for (auto& m : members) xs.push_back(make_subgroup(g, std::move(m)));
    return SubgroupFamily(std::move(xs));
}

SubgroupFamily class_of(const FiniteGroup& g, std::vector<Element> gens) {
    const Subgroup x = subgroup_generated(g, gens);
    return conjugation_closure(g, std::span<const Subgroup>(&x, 1));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::parse_error;
}

SingularCandidate zero_candidate(const TruncatedHLS& hls) {
    SingularCandidate f;
    f.infinity_values.assign(hls.group().order(), Rational(0));
    for (std::size_t n = 1; n <= hls.depth(); ++n) {
        for (std::size_t a = 0; a < hls.level_arrow_count(); ++a) f.level_values[{a, n}] = 0;
    }
    return f;
}

}  // namespace

TEST_CASE("build_hls examples") {
    const FiniteGroup z2 = cyclic(2);
    const TruncatedHLS a = build_hls(z2, family_of(z2, {{0, 1}}), 3);
    CHECK(a.unit_count() == 4);
    CHECK(a.infinity_arrow_count() == 2);
    CHECK(a.level_arrow_count() == 1);
    CHECK(a.depth() == 3);

    const FiniteGroup z1 = cyclic(1);
    const TruncatedHLS b = build_hls(z1, family_of(z1, {{0}}), 1);
    CHECK(b.unit_count() == 2);
    CHECK(b.infinity_arrow_count() == 1);
    CHECK(b.level_arrow_count() == 1);

    const FiniteGroup s3 = symmetric(3);
    const TruncatedHLS c = build_hls(s3, class_of(s3, {1}), 2);
    CHECK(c.unit_count() == 7);
    CHECK(c.infinity_arrow_count() == 6);
    CHECK(c.level_arrow_count() == 9);
    for (std::size_t n = 1; n <= 2; ++n) CHECK(c.level(n).cosets == c.level(1).cosets);

    CHECK(code_of([&] { build_hls(s3, class_of(s3, {1}), 0); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { build_hls(s3, family_of(s3, {{0, 1}}), 2); }) == ErrorCode::not_invariant);
}

TEST_CASE("basic neighborhoods contain the translated cosets at the tail levels") {
    const FiniteGroup s3 = symmetric(3);
    const TruncatedHLS hls = build_hls(s3, class_of(s3, {1}), 3);
    for (Element g = 0; g < 6; ++g) {
        for (std::size_t cutoff = 1; cutoff <= 3; ++cutoff) {
            const BasicNeighborhood u = hls.basic_neighborhood(g, cutoff);
            CHECK(u.at_infinity == g);
            CHECK(u.tail.size() == hls.family().size() * (4 - cutoff));
            for (const LevelArrow& la : u.tail) {
                CHECK(la.level >= cutoff);
                CHECK(la.level <= 3);
                CHECK(std::binary_search(hls.level(1).cosets[la.arrow].elements.begin(),
                                         hls.level(1).cosets[la.arrow].elements.end(), g));
            }
        }
    }
    CHECK(code_of([&] { hls.basic_neighborhood(0, 4); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { hls.basic_neighborhood(6, 1); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("limit_set examples") {
    const FiniteGroup z2 = cyclic(2);
    const TruncatedHLS a = build_hls(z2, family_of(z2, {{0, 1}}), 3);
    CHECK(limit_set(a, make_subgroup(z2, {0, 1})).elements == std::vector<Element>{0, 1});

    const FiniteGroup d4 = dihedral(4);
    const TruncatedHLS b = build_hls(d4, family_of(d4, {{0}}), 2);
    CHECK(limit_set(b, make_subgroup(d4, {0})).elements == std::vector<Element>{0});

    const FiniteGroup s3 = symmetric(3);
    const SubgroupFamily t = class_of(s3, {2});  // (0 1) swaps the first two letters
    const TruncatedHLS c = build_hls(s3, t, 3);
    const Subgroup x = make_subgroup(s3, {0, oracle::lexicographic_index({1, 0, 2})});
    CHECK(limit_set(c, x) == x);

    CHECK(code_of([&] { limit_set(c, make_subgroup(s3, {0})); }) == ErrorCode::subgroup_not_in_family);
}

TEST_CASE("essential fiber and danger examples") {
    const FiniteGroup z2 = cyclic(2);
    const SubgroupFamily whole = family_of(z2, {{0, 1}});
    const TruncatedHLS a = build_hls(z2, whole, 3);
    CHECK(essential_fiber(a) == whole);
    CHECK(is_extremely_dangerous(a));

    const FiniteGroup s4 = symmetric(4);
    const SubgroupFamily trivial = family_of(s4, {{0}});
    const TruncatedHLS b = build_hls(s4, trivial, 2);
    CHECK(essential_fiber(b) == trivial);
    CHECK_FALSE(is_extremely_dangerous(b));

    const TruncatedHLS c = build_hls(z2, family_of(z2, {{0}, {0, 1}}), 1);
    CHECK_FALSE(is_extremely_dangerous(c));

    const FiniteGroup s3 = symmetric(3);
    const SubgroupFamily t = class_of(s3, {1});
    CHECK(essential_fiber(build_hls(s3, t, 2)) == t);
}

TEST_CASE("singular_function_from_witness examples") {
    const FiniteGroup z2 = cyclic(2);
    const TruncatedHLS a = build_hls(z2, family_of(z2, {{0, 1}}), 3);
    const IntegerVector b{1, -1};
    const SingularCandidate f = singular_function_from_witness(a, b, 1);
    CHECK(f.infinity_values == std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(f.level_values.size() == 3);
    for (const auto& [la, v] : f.level_values) CHECK(v == 0);
    CHECK(verify_singular(a, f));

    const FiniteGroup s3 = symmetric(3);
    const TruncatedHLS c = build_hls(s3, class_of(s3, {1}), 3);
    IntegerVector sign;
    for (std::size_t i = 0; i < 6; ++i) sign.emplace_back(oracle::lexicographic_sign(3, i));
    for (std::size_t cutoff = 1; cutoff <= 3; ++cutoff) {
        const SingularCandidate s = singular_function_from_witness(c, sign, cutoff);
        for (std::size_t i = 0; i < 6; ++i) CHECK(s.infinity_values[i] == oracle::lexicographic_sign(3, i));
        for (const auto& [la, v] : s.level_values) CHECK(v == 0);
        CHECK(verify_singular(c, s));
    }

    const IntegerVector not_witness{1, 0, 0, 0, 0, 0};
    CHECK(code_of([&] { singular_function_from_witness(c, not_witness, 1); }) == ErrorCode::not_a_witness);
    CHECK(code_of([&] { singular_function_from_witness(c, sign, 4); }) == ErrorCode::invalid_argument);
    CHECK(code_of([&] { singular_function_from_witness(c, sign, 0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("verify_singular negatives") {
    const FiniteGroup s3 = symmetric(3);
    const TruncatedHLS hls = build_hls(s3, class_of(s3, {1}), 2);
    SingularCandidate zero = zero_candidate(hls);
    CHECK_FALSE(verify_singular(hls, zero));

    SingularCandidate level = zero_candidate(hls);
    level.level_values[{4, 2}] = 1;
    CHECK_FALSE(verify_singular(hls, level));

    SingularCandidate both = zero_candidate(hls);
    both.infinity_values[3] = 2;
    CHECK(verify_singular(hls, both));
    both.level_values[{0, 1}] = Rational(1, 3);
    CHECK_FALSE(verify_singular(hls, both));
}

TEST_CASE("lift_through_neighborhoods level values are coset sums") {
    const FiniteGroup z6 = cyclic(6);
    const TruncatedHLS hls = build_hls(z6, family_of(z6, {{0, 3}}), 3);
    RationalSampler rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto b = random_element(6, rng);
        const std::size_t cutoff = 1 + static_cast<std::size_t>(trial % 3);
        const SingularCandidate f = lift_through_neighborhoods(hls, b.coeffs, cutoff);
        CHECK(f.infinity_values == b.coeffs);
        for (const auto& [la, v] : f.level_values) {
            Rational sum = 0;
            for (Element e : hls.level(1).cosets[la.arrow].elements) sum += b.coeffs[e];
            CHECK(v == (la.level >= cutoff ? sum : Rational(0)));
        }
    }
}

TEST_CASE("property: verdicts over the catalog are depth independent") {
    RationalSampler rng(31);
    for (const FiniteGroup& g : standard_catalog()) {
        if (g.order() > 12) continue;
        for (const SubgroupFamily& family : subgroup_conjugacy_classes(g)) {
            const auto kernel = algebraic_ideal_kernel(g, family);
            const auto witness = integer_witness(g, family);
            for (std::size_t depth = 1; depth <= 3; ++depth) {
                const TruncatedHLS hls = build_hls(g, family, depth);
                CAPTURE(g.name());
                CAPTURE(depth);
                CHECK(essential_fiber(hls) == family);
                CHECK(is_extremely_dangerous(hls) == !family.contains_trivial());
                for (const auto& x : family) CHECK(limit_set(hls, x) == x);
                if (witness) {
                    for (std::size_t cutoff = 1; cutoff <= depth; ++cutoff) {
                        CHECK(verify_singular(hls, singular_function_from_witness(hls, *witness, cutoff)));
                    }
                } else {
                    // level constraints are the coset sums, so only b = 0 could pass
                    for (int trial = 0; trial < 5; ++trial) {
                        const auto b = random_element(g.order(), rng);
                        if (is_zero(b.coeffs)) continue;
                        CHECK_FALSE(verify_singular(hls, lift_through_neighborhoods(hls, b.coeffs, 1)));
                    }
                    for (Element e = 0; e < g.order(); ++e) {
                        const auto d = GroupAlgebraElement::delta(g.order(), e);
                        CHECK_FALSE(verify_singular(hls, lift_through_neighborhoods(hls, d.coeffs, 1)));
                    }
                }
                // any non-witness fails, whatever the kernel
                const auto d0 = GroupAlgebraElement::delta(g.order(), 0);
                CHECK_FALSE(verify_singular(hls, lift_through_neighborhoods(hls, d0.coeffs, depth)));
            }
        }
    }
}
