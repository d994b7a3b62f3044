#include <random>

#include "doctest.h"
#include "singideal/error.hpp"
#include "singideal/linalg.hpp"

using namespace singideal;

namespace {

RationalMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RationalVector> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        RationalVector v;
        for (long x : r) v.emplace_back(x);
        cols = v.size();
        rs.push_back(std::move(v));
    }
    return RationalMatrix::from_rows(rs, cols);
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_bias) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (static_cast<int>(rng() % 10) < zero_bias) continue;
            Rational q(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
            q.canonicalize();
            m(r, c) = q;
        }
    }
    return m;
}

// Rows that are random combinations of a few generators, so the rank is
// usually well below min(rows, cols).
RationalMatrix low_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t gens) {
    const RationalMatrix basis = random_matrix(rng, gens, cols, 3);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < gens; ++k) {
            const Rational w(static_cast<long>(rng() % 5) - 2);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) += w * basis(k, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(RationalMatrix(3, 3)) == 0);
    CHECK(rank(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(from_ints({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}})) == 2);
    CHECK(rank(RationalMatrix(0, 4)) == 0);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
    const auto k = kernel_basis(from_ints({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{Rational(-1), Rational(1)});
    CHECK(integerize(k[0]) == IntegerVector{Integer(1), Integer(-1)});
}

TEST_CASE("spans_full examples") {
    const std::vector<RationalVector> std3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(spans_full(std3, 3));
    const std::vector<RationalVector> diag{{1, 1}};
    CHECK_FALSE(spans_full(diag, 2));

    // indicators of the six affine lines of F_2^2 with elements ordered (0,0),(0,1),(1,0),(1,1)
    const std::vector<RationalVector> lines{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0},
                                            {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    CHECK(spans_full(lines, 4));

    const std::vector<RationalVector> bad{{1, 0}};
    CHECK_THROWS_AS(spans_full(bad, 3), Error);
}

TEST_CASE("integerize examples") {
    CHECK(integerize(RationalVector{Rational(1, 2), Rational(-1, 3)}) == IntegerVector{3, -2});
    CHECK(integerize(RationalVector{Rational(2), Rational(4)}) == IntegerVector{1, 2});
    CHECK(integerize(RationalVector{Rational(-1), Rational(1)}) == IntegerVector{1, -1});
    CHECK(integerize(RationalVector{Rational(0), Rational(-3, 2), Rational(9, 2)}) == IntegerVector{0, 1, -3});
    try {
        integerize(RationalVector{Rational(0), Rational(0)});
        FAIL("expected zero-vector");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::zero_vector);
    }
}

TEST_CASE("property: rank-nullity and exact kernel membership") {
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        const RationalMatrix m = trial % 2 ? random_matrix(rng, rows, cols, static_cast<int>(rng() % 8))
                                           : low_rank_matrix(rng, rows, cols, 1 + rng() % 3);
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& x : basis) CHECK(is_zero(multiply(m, x)));
        CHECK(rank(m) == reference::rank(m));
        // the free-variable basis is unique, so both eliminations agree exactly
        CHECK(basis == reference::kernel_basis(m));
        CHECK(kernel_basis(m, Exec::serial) == basis);
    }
}

TEST_CASE("property: integerize normal form") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        RationalVector v(1 + rng() % 6);
        for (auto& q : v) {
            q = Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 12) + 1);
            q.canonicalize();
        }
        if (is_zero(v)) continue;
        const IntegerVector w = integerize(v);
        Integer g = 0;
        for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        CHECK(g == 1);
        const auto lead = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
        CHECK(*lead > 0);
        // w is a non-zero multiple of v: cross-multiplication against the leading entry
        const std::size_t i = static_cast<std::size_t>(lead - w.begin());
        CHECK(v[i] != 0);
        for (std::size_t j = 0; j < v.size(); ++j) CHECK(Rational(w[j]) * v[i] == Rational(w[i]) * v[j]);
    }
}

TEST_CASE("property: spans_full matches the rank of the stacked matrix") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng() % 6, count = rng() % 8;
        const RationalMatrix m = random_matrix(rng, count, dim, 6);
        std::vector<RationalVector> vs;
        for (std::size_t r = 0; r < count; ++r) vs.emplace_back(m.row(r).begin(), m.row(r).end());
        CHECK(spans_full(vs, dim) == (reference::rank(m) == dim));
    }
}

TEST_CASE("subspace helpers") {
    const std::size_t dim = 4;
    const std::vector<RationalVector> a{{1, 0, 0, 0}, {0, 1, 0, 0}};
    const std::vector<RationalVector> b{{0, 1, 0, 0}, {0, 0, 1, 0}};
    const std::vector<RationalVector> a2{{1, 1, 0, 0}, {1, -1, 0, 0}};
    CHECK(same_subspace(a, a2, dim));
    CHECK_FALSE(same_subspace(a, b, dim));
    const auto meet = intersect_subspaces(a, b, dim);
    REQUIRE(meet.size() == 1);
    CHECK(same_subspace(meet, std::vector<RationalVector>{{0, 1, 0, 0}}, dim));
    CHECK(intersect_subspaces(a, std::vector<RationalVector>{{0, 0, 0, 1}}, dim).empty());
    CHECK(in_span(a, RationalVector{3, -2, 0, 0}, dim));
    CHECK_FALSE(in_span(a, RationalVector{0, 0, 1, 0}, dim));
    CHECK(basis_of(std::vector<RationalVector>{{1, 1, 0, 0}, {2, 2, 0, 0}}, dim).size() == 1);
}

TEST_CASE("parallel elimination matches the serial path on a large matrix") {
    std::mt19937_64 rng(3);
    const RationalMatrix m = low_rank_matrix(rng, 300, 40, 25);
    const EchelonForm par = echelon_form(m, Exec::parallel);
    const EchelonForm ser = echelon_form(m, Exec::serial);
    CHECK(par.rows == ser.rows);
    CHECK(par.pivot_columns == ser.pivot_columns);
    CHECK(par.rank() == reference::rank(m));
}
