#include "singideal/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "singideal/error.hpp"

namespace singideal {

namespace {

void require_finite(const FloatMatrix& m) {
    for (double x : m.entries) {
        if (!std::isfinite(x)) throw Error(ErrorCode::non_finite_entries, "matrix has NaN or inf entries");
    }
}

void require_unit(const FiniteGroupoid& g, std::size_t unit) {
    if (unit >= g.unit_count()) throw Error(ErrorCode::unit_not_found, "unit " + std::to_string(unit));
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Number of eigenvalues of the tridiagonal (d, e) strictly below x.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double x) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - (i == 0 ? 0.0 : off / q);
        if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> to_double(std::span<const Rational> values) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].get_d();
    return out;
}

FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, std::span<const double> f, std::size_t unit,
                               Exec exec) {
    require_unit(g, unit);
    if (f.size() != g.arrow_count()) {
        throw Error(ErrorCode::mismatched_groupoid, "function length does not match the groupoid");
    }
    const auto basis = g.arrows_with_source(unit);
    const std::size_t k = basis.size();
    FloatMatrix m(k, k);
    const auto rows = static_cast<std::ptrdiff_t>(k);
    const bool par = exec == Exec::parallel && k * k >= parallel_grain;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < k; ++j) m(ui, j) = f[g.compose(basis[ui], g.inverse(basis[j]))];
    }
    return m;
}

FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, const GroupoidFunction& f, std::size_t unit,
                               Exec exec) {
    if (f.groupoid_id != g.id()) {
        throw Error(ErrorCode::mismatched_groupoid, "function is defined on a different groupoid");
    }
    const std::vector<double> values = to_double(f.values);
    return regular_rep_matrix(g, values, unit, exec);
}

FloatMatrix gram(const FloatMatrix& m, Exec exec) {
    FloatMatrix out(m.cols, m.cols);
    const auto n = static_cast<std::ptrdiff_t>(m.cols);
    const bool par = exec == Exec::parallel && m.cols * m.cols >= parallel_grain;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < m.cols; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m.rows; ++r) s += m(r, ui) * m(r, j);
            out(ui, j) = s;
        }
    }
    return out;
}

PowerIterationResult power_iteration_norm(const FloatMatrix& m, double tol, Exec exec) {
    PowerIterationResult result;
    const std::size_t n = m.cols;
    if (n == 0 || m.rows == 0) {
        result.converged = true;
        return result;
    }
    const FloatMatrix g = gram(m, exec);

    // Constant or index-affine seeds live in the trivial and standard
    // isotypic parts of group operators and can miss the top eigenvalue, so
    // the seed is a fixed pseudo-random positive vector.
    std::vector<double> v(n), w(n);
    std::mt19937_64 engine(power_iteration_seed);
    for (double& x : v) x = 0.5 + static_cast<double>(engine() >> 11) * 0x1.0p-53;
    double norm_v = std::sqrt(dot(v, v));
    for (double& x : v) x /= norm_v;

    const auto rows = static_cast<std::ptrdiff_t>(n);
    const bool par = exec == Exec::parallel && n * n >= parallel_grain;
    double lambda = 0.0;
    for (result.iterations = 1; result.iterations <= power_iteration_limit; ++result.iterations) {
#pragma omp parallel for schedule(static) if (par)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            w[ui] = dot({g.entries.data() + ui * n, n}, v);
        }
        const double next = dot(v, w);
        const double norm_w = std::sqrt(dot(w, w));
        if (norm_w == 0.0) {
            lambda = 0.0;
            result.converged = true;
            break;
        }
        for (std::size_t j = 0; j < n; ++j) v[j] = w[j] / norm_w;
        const bool settled = std::abs(next - lambda) <= tol * std::max(std::abs(next), 1e-300);
        lambda = next;
        if (settled) {
            result.converged = true;
            break;
        }
    }
    result.norm = std::sqrt(std::max(lambda, 0.0));
    return result;
}

double tridiagonal_norm(const FloatMatrix& m) {
    FloatMatrix a = gram(m, Exec::serial);
    const std::size_t n = a.rows;
    if (n == 0) return 0.0;

    // Householder reduction to tridiagonal form.
    std::vector<double> v(n), w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += a(i, k) * a(i, k);
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const double alpha = a(k + 1, k) > 0 ? -xnorm : xnorm;
        std::fill(v.begin(), v.end(), 0.0);
        for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm += v[i] * v[i];
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

        double kappa = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            w[i] = s;
            kappa += v[i] * s;
        }
        for (std::size_t i = k + 1; i < n; ++i) w[i] -= kappa * v[i];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= 2.0 * (v[i] * w[j] + w[i] * v[j]);
        }
        a(k + 1, k) = a(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = a(k, i) = 0.0;
    }

    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);

    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - radius);
        hi = std::max(hi, d[i] + radius);
    }
    hi += std::numeric_limits<double>::epsilon() * (std::abs(hi) + 1.0);
    // Invariant: fewer than n eigenvalues below lo, all n below hi.
    lo -= 1.0;
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(d, e, mid) == n) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return std::sqrt(std::max(0.5 * (lo + hi), 0.0));
}

double spectral_norm(const FloatMatrix& m, double tol, Exec exec) {
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    require_finite(m);
    if (m.cols <= exact_eigen_dimension) return tridiagonal_norm(m);
    return power_iteration_norm(m, tol, exec).norm;
}

double reduced_norm(const FiniteGroupoid& g, const GroupoidFunction& f, double tol, Exec exec) {
    if (f.groupoid_id != g.id()) {
        throw Error(ErrorCode::mismatched_groupoid, "function is defined on a different groupoid");
    }
    const std::vector<double> values = to_double(f.values);
    const auto units = static_cast<std::ptrdiff_t>(g.unit_count());
    std::vector<double> per_unit(g.unit_count(), 0.0);
    const bool par = exec == Exec::parallel && g.unit_count() > 1;
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::ptrdiff_t u = 0; u < units; ++u) {
        const auto uu = static_cast<std::size_t>(u);
        per_unit[uu] = spectral_norm(regular_rep_matrix(g, values, uu, Exec::serial), tol, Exec::serial);
    }
    return per_unit.empty() ? 0.0 : *std::max_element(per_unit.begin(), per_unit.end());
}

NormEquation verify_norm_equation(const FiniteGroupoid& g, std::span<const std::size_t> units,
                                  const GroupoidFunction& a, double tol) {
    if (units.empty()) throw Error(ErrorCode::empty_unit_set, "unit set X must be non-empty");
    const Reduction red = reduce(g, units);

    GroupoidFunction restricted = zero_function(red.groupoid);
    for (std::size_t i = 0; i < red.arrow_map.size(); ++i) restricted.values[i] = a.values.at(red.arrow_map[i]);

    const GroupoidFunction p = unit_indicator(g, red.unit_map);
    const GroupoidFunction compressed = convolve(g, convolve(g, p, a), p);

    NormEquation out;
    out.restricted_norm = reduced_norm(red.groupoid, restricted, tol);
    out.compressed_norm = reduced_norm(g, compressed, tol);
    out.residual = std::abs(out.restricted_norm - out.compressed_norm);
    return out;
}

namespace reference {

FloatMatrix regular_rep_matrix(const FiniteGroupoid& g, const GroupoidFunction& f, std::size_t unit) {
    require_unit(g, unit);
    const auto basis = g.arrows_with_source(unit);
    FloatMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const GroupoidFunction image = reference::convolve(g, f, arrow_indicator(g, basis[j]));
        for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = image.values[basis[i]].get_d();
    }
    return m;
}

}  // namespace reference

}  // namespace singideal
