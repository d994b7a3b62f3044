#pragma once

// Operator norms of finite groupoid convolution algebras in double precision.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "singideal/groupoid.hpp"
#include "singideal/parallel.hpp"

namespace singideal {

inline constexpr double default_power_tol = 1e-10;
inline constexpr double default_acceptance_tol = 1e-8;
inline constexpr std::size_t power_iteration_limit = 10000;
inline constexpr std::uint64_t power_iteration_seed = 20250101;
/// Up to this dimension spectral_norm answers from the tridiagonal route.
inline constexpr std::size_t exact_eigen_dimension = 64;

struct FloatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;  // row-major

    FloatMatrix() = default;
    FloatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

std::vector<double> to_double(std::span<const Rational> values);

/// Left convolution by f on l2 of the arrows with source x (increasing arrow
/// order): entry (i, j) = f(x_i x_j^-1). Throws Error{unit_not_found}.
FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, std::span<const double> f, std::size_t unit,
                               Exec exec = Exec::parallel);
FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, const GroupoidFunction& f, std::size_t unit,
                               Exec exec = Exec::parallel);

FloatMatrix gram(const FloatMatrix& m, Exec exec = Exec::parallel);

struct PowerIterationResult {
    double norm = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Power iteration on M^T M from a fixed pseudo-random positive vector, stopping when
/// the Rayleigh quotient changes by less than tol relatively.
PowerIterationResult power_iteration_norm(const FloatMatrix& m, double tol = default_power_tol,
                                          Exec exec = Exec::parallel);

/// Largest eigenvalue of M^T M through Householder tridiagonalization and
/// Sturm-count bisection; returns its square root.
double tridiagonal_norm(const FloatMatrix& m);

/// Largest singular value. Throws Error{non_finite_entries} and
/// Error{invalid_argument} for tol <= 0.
double spectral_norm(const FloatMatrix& m, double tol = default_power_tol, Exec exec = Exec::parallel);

/// max over units x of the norm of lambda_x(f).
double reduced_norm(const FiniteGroupoid& g, const GroupoidFunction& f, double tol = default_power_tol,
                    Exec exec = Exec::parallel);

struct NormEquation {
    double restricted_norm = 0.0;   // || a restricted to G|_X ||_r in G|_X
    double compressed_norm = 0.0;   // || 1_X a 1_X ||_r in G
    double residual = 0.0;
};

/// Throws Error{empty_unit_set}.
NormEquation verify_norm_equation(const FiniteGroupoid& g, std::span<const std::size_t> units,
                                  const GroupoidFunction& a, double tol = default_power_tol);

namespace reference {

/// Column j is f * delta_{x_j} restricted to the arrows with source x, by the
/// pairwise convolution.
FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, const GroupoidFunction& f, std::size_t unit);

}  // namespace reference

}  // namespace singideal
