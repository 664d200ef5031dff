#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mvop/errors.hpp"

namespace mvop {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// Eigenvalues/first-row eigenvector components of a symmetric tridiagonal
// matrix by the implicit-shift QL sweep. d = diagonal, e = subdiagonal
// (e[0..n-2]); z starts as e1 and ends as the first eigenvector components.
inline void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        for (;;) {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw std::runtime_error("tridiag_ql: no convergence");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : -r));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double fz = z[i + 1];
                z[i + 1] = s * z[i] + c * fz;
                z[i] = c * z[i] - s * fz;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        if (k != i) {
            std::swap(d[i], d[k]);
            std::swap(z[i], z[k]);
        }
    }
}

}  // namespace detail

/// Gauss rule with k nodes for the weight (y(1-y))^alpha on [0,1], built
/// from the symmetric-Jacobi three-term recurrence and the eigenvalues of
/// its Jacobi matrix. Exact for polynomial degree <= 2k-1.
inline QuadratureRule gauss_jacobi01(int k, double alpha) {
    if (k < 1) throw DomainError("gauss_jacobi01: need at least one node");
    if (alpha <= -1.0) throw DomainError("gauss_jacobi01: need alpha > -1");
    // On [-1,1] with weight (1-t^2)^alpha the recurrence diagonal vanishes;
    // the subdiagonal is b_j^2 = j^2 (j+2alpha)^2 / ((2j+2alpha)^2 ...) in
    // the standard Jacobi form with alpha = beta.
    std::vector<double> d(k, 0.0), e;
    for (int j = 1; j < k; ++j) {
        double num = 4.0 * j * (j + alpha) * (j + alpha) * (j + 2 * alpha);
        double den = (2.0 * j + 2 * alpha) * (2.0 * j + 2 * alpha) *
                     (2.0 * j + 2 * alpha + 1) * (2.0 * j + 2 * alpha - 1);
        e.push_back(std::sqrt(num / den));
    }
    std::vector<double> z(k, 0.0);
    z[0] = 1.0;
    detail::tridiag_ql(d, e, z);
    // mu0 = int_{-1}^{1} (1-t^2)^alpha dt = 2^{2 alpha + 1} B(alpha+1, alpha+1)
    double log_mu0 = (2 * alpha + 1) * std::log(2.0) + 2 * std::lgamma(alpha + 1) -
                     std::lgamma(2 * alpha + 2);
    double mu0 = std::exp(log_mu0);
    QuadratureRule rule;
    rule.nodes.resize(k);
    rule.weights.resize(k);
    // map t -> y = (1+t)/2; weight picks up (1/2)^{2 alpha + 1}
    double scale = std::pow(0.5, 2 * alpha + 1);
    for (int i = 0; i < k; ++i) {
        rule.nodes[i] = (1.0 + d[i]) / 2.0;
        rule.weights[i] = mu0 * z[i] * z[i] * scale;
    }
    return rule;
}

/// Node count used by the float cross-checks for integrands of the given
/// polynomial degree.
inline int quadrature_points(int degree) { return (degree + 2 + 1) / 2 + 1; }

}  // namespace mvop
