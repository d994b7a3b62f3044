#include "singideal/linalg.hpp"

#include <algorithm>
#include <string>

#include "singideal/error.hpp"

namespace singideal {

namespace {

void check_length(std::span<const Rational> v, std::size_t dim) {
    if (v.size() != dim) {
        throw Error(ErrorCode::dimension_mismatch,
                    "vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    }
}

IntegerVector clear_denominators(std::span<const Rational> row) {
    Integer lcm = 1;
    for (const auto& q : row) {
        if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    IntegerVector out(row.size());
    Integer content = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = row[j].get_num() * (lcm / row[j].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[j].get_mpz_t());
    }
    if (content > 1) {
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

bool is_zero_row(const IntegerVector& row) {
    return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_length(rows[r], cols);
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

EchelonForm echelon_form(const RationalMatrix& m, Exec exec) {
    EchelonForm out;
    out.cols = m.cols();

    std::vector<IntegerVector> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntegerVector row = clear_denominators(m.row(r));
        if (!is_zero_row(row)) work.push_back(std::move(row));
    }

    Integer prev = 1;
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < cols && !work.empty(); ++c) {
        const auto pivot_it = std::find_if(work.begin(), work.end(),
                                           [c](const IntegerVector& row) { return row[c] != 0; });
        if (pivot_it == work.end()) continue;
        std::iter_swap(work.begin(), pivot_it);
        IntegerVector pivot = std::move(work.front());

        // Bareiss step on the remaining rows; the division by the previous
        // pivot is exact.
        const auto n = static_cast<std::ptrdiff_t>(work.size());
        const std::size_t work_items = static_cast<std::size_t>(n) * (cols - c);
        const bool par = exec == Exec::parallel && work_items >= parallel_grain;
#pragma omp parallel for schedule(static) if (par)
        for (std::ptrdiff_t i = 1; i < n; ++i) {
            IntegerVector& row = work[static_cast<std::size_t>(i)];
            Integer lead = row[c];
            row[c] = 0;
            Integer t;
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = pivot[c] * row[j];
                t -= lead * pivot[j];
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }

        prev = pivot[c];
        out.pivot_columns.push_back(c);
        out.rows.push_back(std::move(pivot));
        work.erase(work.begin());
        std::erase_if(work, is_zero_row);
    }
    return out;
}

std::size_t rank(const RationalMatrix& m, Exec exec) { return echelon_form(m, exec).rank(); }

std::vector<RationalVector> kernel_basis(const EchelonForm& e) {
    std::vector<char> is_pivot(e.cols, 0);
    for (std::size_t p : e.pivot_columns) is_pivot[p] = 1;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(e.cols);
        x[f] = 1;
        for (std::size_t k = e.rows.size(); k-- > 0;) {
            const std::size_t p = e.pivot_columns[k];
            Rational acc = 0;
            for (std::size_t j = p + 1; j < e.cols; ++j) {
                if (x[j] != 0 && e.rows[k][j] != 0) acc += Rational(e.rows[k][j]) * x[j];
            }
            x[p] = -acc / Rational(e.rows[k][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m, Exec exec) {
    return kernel_basis(echelon_form(m, exec));
}

RationalMatrix stack(std::span<const RationalVector> vectors, std::size_t dim) {
    return RationalMatrix::from_rows(vectors, dim);
}

bool spans_full(std::span<const RationalVector> vectors, std::size_t dim) {
    return rank(stack(vectors, dim)) == dim;
}

IntegerVector integerize(std::span<const Rational> v) {
    if (is_zero(v)) throw Error(ErrorCode::zero_vector, "cannot integerize the zero vector");
    IntegerVector out = clear_denominators(v);
    const auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) {
        for (auto& x : out) x = -x;
    }
    return out;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
    check_length(v, m.cols());
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0 && v[c] != 0) acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

RationalVector to_rational(std::span<const Integer> v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<RationalVector> basis_of(std::span<const RationalVector> vectors, std::size_t dim) {
    const EchelonForm e = echelon_form(stack(vectors, dim));
    std::vector<RationalVector> out;
    out.reserve(e.rows.size());
    for (const auto& row : e.rows) out.push_back(to_rational(row));
    return out;
}

bool in_span(std::span<const RationalVector> basis, std::span<const Rational> v, std::size_t dim) {
    check_length(v, dim);
    std::vector<RationalVector> with(basis.begin(), basis.end());
    const std::size_t before = rank(stack(with, dim));
    with.emplace_back(v.begin(), v.end());
    return rank(stack(with, dim)) == before;
}

bool same_subspace(std::span<const RationalVector> a, std::span<const RationalVector> b,
                   std::size_t dim) {
    for (const auto& v : b) {
        if (!in_span(a, v, dim)) return false;
    }
    for (const auto& v : a) {
        if (!in_span(b, v, dim)) return false;
    }
    return true;
}

std::vector<RationalVector> intersect_subspaces(std::span<const RationalVector> a,
                                                std::span<const RationalVector> b,
                                                std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    RationalMatrix joined(dim, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        check_length(a[i], dim);
        for (std::size_t r = 0; r < dim; ++r) joined(r, i) = a[i][r];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        check_length(b[i], dim);
        for (std::size_t r = 0; r < dim; ++r) joined(r, a.size() + i) = -b[i][r];
    }
    std::vector<RationalVector> meet;
    for (const auto& coeffs : kernel_basis(joined)) {
        RationalVector v(dim);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t r = 0; r < dim; ++r) v[r] += coeffs[i] * a[i][r];
        }
        if (!is_zero(v)) meet.push_back(std::move(v));
    }
    if (meet.empty()) return {};
    return basis_of(meet, dim);
}

namespace reference {

RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
    RationalMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational factor = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

std::size_t rank(const RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    reduced_row_echelon(m, &pivots);
    return pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    const RationalMatrix rref = reduced_row_echelon(m, &pivots);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -rref(k, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace reference

}  // namespace singideal
