#pragma once

// Exact linear algebra over the rationals (GMP-backed). No floating point.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "singideal/parallel.hpp"

namespace singideal {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Throws Error{dimension_mismatch} when the rows differ in length from cols.
    static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Integer row echelon form from fraction-free (Bareiss) elimination. Row k
/// has its leading entry in pivot_columns[k]; zero rows are dropped.
struct EchelonForm {
    std::size_t cols = 0;
    std::vector<IntegerVector> rows;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const noexcept { return rows.size(); }
};

/// Denominators are cleared row by row, then Bareiss elimination runs with the
/// first non-zero entry of each column as pivot. Rows updated in one step are
/// independent, which is where the parallel path splits the work.
EchelonForm echelon_form(const RationalMatrix& m, Exec exec = Exec::parallel);

std::size_t rank(const RationalMatrix& m, Exec exec = Exec::parallel);

/// One vector per free column f (x_f = 1, other free variables 0), in
/// increasing order of f. Size is cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m, Exec exec = Exec::parallel);
std::vector<RationalVector> kernel_basis(const EchelonForm& e);

bool spans_full(std::span<const RationalVector> vectors, std::size_t dim);

/// Smallest integer vector on the same ray: gcd 1, leading non-zero entry
/// positive. Throws Error{zero_vector}.
IntegerVector integerize(std::span<const Rational> v);

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v);
RationalVector to_rational(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

RationalMatrix stack(std::span<const RationalVector> vectors, std::size_t dim);

/// Linearly independent vectors spanning the same subspace.
std::vector<RationalVector> basis_of(std::span<const RationalVector> vectors, std::size_t dim);
bool in_span(std::span<const RationalVector> basis, std::span<const Rational> v, std::size_t dim);
/// Mutual membership of every vector of each side in the span of the other.
bool same_subspace(std::span<const RationalVector> a, std::span<const RationalVector> b,
                   std::size_t dim);
/// Basis of span(a) ∩ span(b), from the kernel of [a | -b].
std::vector<RationalVector> intersect_subspaces(std::span<const RationalVector> a,
                                                std::span<const RationalVector> b,
                                                std::size_t dim);

namespace reference {

/// Textbook Gauss-Jordan over the rationals, serial.
RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace reference

}  // namespace singideal
