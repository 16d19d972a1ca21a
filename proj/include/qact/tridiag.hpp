// tridiag.hpp — symmetric tridiagonal eigensolver: Sturm bisection for the
// lowest eigenvalues, shifted inverse iteration for eigenvectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qact {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag d, offdiag e)
// strictly below sigma, via the Sturm sequence of the LDL^T recurrence.
inline std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                               double sigma) {
    const std::size_t n = d.size();
    std::size_t count = 0;
    double q = d[0] - sigma;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        double denom = q;
        if (denom == 0.0) denom = 1e-300;
        q = d[i] - sigma - e[i - 1] * e[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

// Lowest k eigenvalues, ascending, by bisection on the Sturm count.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                              const std::vector<double>& e, std::size_t k) {
    const std::size_t n = d.size();
    if (e.size() + 1 != n) throw std::invalid_argument("lowest_eigenvalues: size mismatch");
    if (k == 0 || k > n) throw std::invalid_argument("lowest_eigenvalues: bad level count");

    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});

    std::vector<double> ev(k);
    for (std::size_t m = 0; m < k; ++m) {
        double a = lo, b = hi;
        while (b - a > 1e-15 * scale) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) > m)
                b = mid;
            else
                a = mid;
            if (mid == a || mid == b) break;  // binary floor reached
        }
        ev[m] = 0.5 * (a + b);
        lo = a;  // eigenvalues requested in ascending order
    }
    return ev;
}

// Solve (T - sigma I) x = b in place by Thomas elimination with pivot guarding.
inline void shifted_solve(const std::vector<double>& d, const std::vector<double>& e, double sigma,
                          std::vector<double>& x) {
    const std::size_t n = d.size();
    std::vector<double> diag(n), rhs = x;
    std::vector<double> cp(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = d[i] - sigma;

    double piv = diag[0];
    if (std::abs(piv) < 1e-280) piv = (piv >= 0 ? 1e-280 : -1e-280);
    cp[0] = (n > 1) ? e[0] / piv : 0.0;
    rhs[0] /= piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = diag[i] - e[i - 1] * cp[i - 1];
        if (std::abs(piv) < 1e-280) piv = (piv >= 0 ? 1e-280 : -1e-280);
        if (i + 1 < n) cp[i] = e[i] / piv;
        rhs[i] = (rhs[i] - e[i - 1] * rhs[i - 1]) / piv;
    }
    x[n - 1] = rhs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = rhs[i] - cp[i] * x[i + 1];
}

// Eigenvector for a converged eigenvalue by inverse iteration; orthogonalized
// against previously found vectors (guards near-degenerate doublets).
inline std::vector<double> inverse_iteration(const std::vector<double>& d,
                                             const std::vector<double>& e, double eigenvalue,
                                             const std::vector<std::vector<double>>& previous) {
    const std::size_t n = d.size();
    std::vector<double> v(n);
    // deterministic quasi-random start, nonzero everywhere
    double seed = 0.6180339887498949;
    for (std::size_t i = 0; i < n; ++i) {
        seed = std::fmod(seed + 0.6180339887498949, 1.0);
        v[i] = seed - 0.5;
    }
    const double shift = eigenvalue + 1e-12 * std::max(1.0, std::abs(eigenvalue));
    for (int pass = 0; pass < 5; ++pass) {
        shifted_solve(d, e, shift, v);
        for (const auto& u : previous) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
        }
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::runtime_error("inverse_iteration: vector collapsed");
        for (double& c : v) c /= norm;
    }
    return v;
}

}  // namespace qact
