#pragma once

#include <optional>
#include <vector>

#include "mvop/matpoly.hpp"
#include "mvop/matrix.hpp"

namespace mvop {

/// Data (C, U, V) of the matrix hypergeometric operator
///   D P = y(1-y) P'' + (C - yU) P' - V P.
/// U is a scalar multiple of the identity and every C + j (j >= 0) is
/// invertible for the families built here.
struct HyperParams {
    int size = 0;
    Matrix<Rational> C, U, V;
};

/// The factor j(U + j - 1) + V + lambda whose singularity truncates the series.
inline Matrix<Rational> truncation_factor(const HyperParams& params, const Rational& lambda, long j) {
    Matrix<Rational> jf = params.U + Matrix<Rational>::identity(params.size) * Rational(j - 1);
    return jf * Rational(j) + params.V + Matrix<Rational>::identity(params.size) * lambda;
}

/// Coefficients [0..j_max] of the matrix hypergeometric series:
/// the 0th is the identity and each step multiplies by (C+j)^{-1} times
/// the truncation factor at j.
inline std::vector<Matrix<Rational>> hyper_coefficients(const HyperParams& params,
                                                        const Rational& lambda, long j_max) {
    std::vector<Matrix<Rational>> coeffs;
    coeffs.reserve(j_max + 1);
    coeffs.push_back(Matrix<Rational>::identity(params.size));
    for (long j = 0; j < j_max; ++j) {
        Matrix<Rational> cj = params.C + Matrix<Rational>::identity(params.size) * Rational(j);
        coeffs.push_back(inverse(cj) * (truncation_factor(params, lambda, j) * coeffs.back()));
    }
    return coeffs;
}

inline Matrix<Rational> huv_coefficient(const HyperParams& params, const Rational& lambda, long j) {
    return hyper_coefficients(params, lambda, j).back();
}

struct Truncation {
    long w = 0;
    std::vector<std::vector<Rational>> kernel_basis;
};

/// First j <= j_max at which the truncation factor is singular, with its
/// exact kernel; absent when no such j exists.
inline std::optional<Truncation> detect_truncation(const HyperParams& params,
                                                   const Rational& lambda, long j_max) {
    for (long j = 0; j <= j_max; ++j) {
        Matrix<Rational> f = truncation_factor(params, lambda, j);
        auto basis = kernel(f);
        if (!basis.empty()) return Truncation{j, std::move(basis)};
    }
    return std::nullopt;
}

/// Degree-w vector polynomial sum_j (y^j / j!) [C;U;V+lambda]_j p0.
/// Demands that the series genuinely truncates at w for this p0.
inline MatPoly<Rational> matrix_hyper_poly(const HyperParams& params, const Rational& lambda,
                                           const std::vector<Rational>& p0, long w) {
    if (static_cast<int>(p0.size()) != params.size)
        throw DomainError("matrix_hyper_poly: p0 length mismatch");
    auto coeffs = hyper_coefficients(params, lambda, w);
    std::vector<Rational> tail = truncation_factor(params, lambda, w) * (coeffs[w] * p0);
    for (const auto& x : tail)
        if (!x.is_zero()) throw NonTruncating("matrix_hyper_poly: series does not truncate at w");
    std::vector<Matrix<Rational>> c;
    c.reserve(w + 1);
    for (long j = 0; j <= w; ++j) {
        std::vector<Rational> col = coeffs[j] * p0;
        Matrix<Rational> m(params.size, 1);
        Rational inv_fact = Rational(1) / factorial(static_cast<unsigned long>(j));
        for (int i = 0; i < params.size; ++i) m(i, 0) = col[i] * inv_fact;
        c.push_back(std::move(m));
    }
    return MatPoly<Rational>(params.size, 1, std::move(c));
}

/// Applies D to a (vector- or matrix-valued) polynomial, exactly.
template <typename S>
MatPoly<S> apply_hyper_op(const Matrix<S>& C, const Matrix<S>& U, const Matrix<S>& V,
                          const MatPoly<S>& P) {
    MatPoly<S> d1 = P.derivative(1);
    MatPoly<S> d2 = P.derivative(2);
    MatPoly<S> out = d2.scale_by_poly({S(0), S(1), S(-1)});  // y(1-y) P''
    out = out + C * d1 - (U * d1).scale_by_poly({S(0), S(1)});
    return out - V * P;
}

inline MatPoly<Rational> apply_hyper_op(const HyperParams& params, const MatPoly<Rational>& P) {
    return apply_hyper_op(params.C, params.U, params.V, P);
}

/// Terminating Gauss series with a a nonpositive integer:
/// sum_{k=0}^{-a} (a)_k (b)_k / ((c)_k k!) y^k.
inline MatPoly<Rational> gauss_2f1_poly(long a, const Rational& b, const Rational& c) {
    if (a > 0) throw DomainError("gauss_2f1_poly: a must be a nonpositive integer");
    std::vector<Rational> coeffs;
    Rational term(1);
    coeffs.push_back(term);
    for (long k = 0; k < -a; ++k) {
        Rational ck = c + Rational(k);
        if (ck.is_zero()) throw DomainError("gauss_2f1_poly: c hits a nonpositive integer");
        term *= (Rational(a + k) * (b + Rational(k))) / (ck * Rational(k + 1));
        coeffs.push_back(term);
    }
    return scalar_poly(coeffs);
}

}  // namespace mvop
