#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mvop/hyper.hpp"
#include "mvop/matpoly.hpp"
#include "mvop/pi_rational.hpp"
#include "mvop/spectra.hpp"

namespace mvop {

enum class FamilyKind { TwoByTwo, ThreeByThree, Scalar };

using CVector = std::vector<std::complex<double>>;
using CMatrix = Matrix<std::complex<double>>;

inline CMatrix to_complex(const Matrix<Rational>& m) {
    CMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
    return r;
}

/// One assembled family of vector-valued polynomial eigenfunctions:
/// the data (C,U,V) of the regular operator D, the matrices (E,N) of the
/// singular radial operator it is conjugate to, the component dimensions
/// entering the weight, and the normalization in front of the inner product.
struct SphericalFamily {
    FamilyKind kind = FamilyKind::TwoByTwo;
    int n = 0;     // sphere dimension parameter; the pair is (SO(n+1), SO(n))
    int ell = 0;   // n = 2*ell or 2*ell + 1
    int p = 0;     // exterior-power index (TwoByTwo); equals ell for ThreeByThree
    long d = 0;    // Scalar kind only
    int sign = 1;  // Scalar kind only
    int size = 0;  // vector length m of the radial functions

    HyperParams params;  // TwoByTwo / ThreeByThree
    std::vector<long> dims;
    PiRational norm_const;
    Matrix<Rational> E, N;

    /// Exponent of y(1-y) in the weight density: n/2 - 1.
    Rational weight_exponent() const { return Rational(n - 2, 2); }
    bool half_integer_exponent() const { return n % 2 == 1; }

    std::string id() const {
        switch (kind) {
            case FamilyKind::TwoByTwo:
                return "2x2(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
            case FamilyKind::ThreeByThree:
                return "3x3(ell=" + std::to_string(ell) + ")";
            default:
                return "scalar(ell=" + std::to_string(ell) + ",d=" + std::to_string(d) +
                       (sign >= 0 ? ",+)" : ",-)");
        }
    }
};

namespace detail {

inline PiRational surface_ratio(int n) {
    // (n-1)!!/(n-2)!! * 2/omega, omega = pi (n even) or 2 (n odd)
    Rational r = double_factorial(n - 1) / double_factorial(n - 2);
    if (n % 2 == 0) return PiRational(r * Rational(2), -1);
    return PiRational(r);
}

}  // namespace detail

/// Size-2 family attached to the p-th exterior power, 1 <= p < floor(n/2).
inline SphericalFamily build_family(int n, int p) {
    if (n < 4) throw DomainError("build_family: need n >= 4");
    int ell = n / 2;
    if (p < 1 || p > ell - 1) throw DomainError("build_family: p out of range");
    SphericalFamily f;
    f.kind = FamilyKind::TwoByTwo;
    f.n = n;
    f.ell = ell;
    f.p = p;
    f.size = 2;
    Rational half_n(n, 2);
    f.params.size = 2;
    f.params.C = Matrix<Rational>{{half_n + 1, 1}, {1, half_n + 1}};
    f.params.U = Matrix<Rational>::identity(2) * Rational(n + 2);
    f.params.V = Matrix<Rational>::diagonal({Rational(p), Rational(n - p)});
    auto [d1, d2] = fundamental_dims(n, p);
    f.dims = {d1, d2};
    f.norm_const = detail::surface_ratio(n) * (factorial(n - 1) / (factorial(p) * factorial(n - p)));
    f.E = Matrix<Rational>{{0, Rational(p - n)}, {Rational(-p), 0}};
    f.N = Matrix<Rational>::diagonal({Rational(p - n), Rational(-p)});
    return f;
}

/// Size-3 family attached to the top exterior power for n = 2*ell + 1.
inline SphericalFamily build_family_top(int ell) {
    if (ell < 1) throw DomainError("build_family_top: need ell >= 1");
    SphericalFamily f;
    f.kind = FamilyKind::ThreeByThree;
    f.ell = ell;
    f.n = 2 * ell + 1;
    f.p = ell;
    f.size = 3;
    const int n = f.n;
    Rational c0(n + 2, 2);
    f.params.size = 3;
    f.params.C = Matrix<Rational>{{c0, Rational(1, 2), 0}, {1, c0, 1}, {0, Rational(1, 2), c0}};
    f.params.U = Matrix<Rational>::identity(3) * Rational(n + 2);
    f.params.V = Matrix<Rational>::diagonal({Rational(ell + 1), Rational(ell), Rational(ell + 1)});
    auto td = top_dims(ell);
    f.dims = {td[0], td[1], td[2]};
    f.norm_const = detail::surface_ratio(n);
    Rational half_lp1(ell + 1, 2);
    f.E = Matrix<Rational>{{0, Rational(-ell), 0}, {-half_lp1, 0, -half_lp1}, {0, Rational(-ell), 0}};
    f.N = Matrix<Rational>::diagonal({Rational(-ell), Rational(-ell - 1), Rational(-ell)});
    return f;
}

/// Scalar family for n = 2*ell and the type (d,...,d,+-d).
inline SphericalFamily build_scalar_family(int ell, long d, int sign = 1) {
    if (ell < 2) throw DomainError("build_scalar_family: need ell >= 2");
    if (d < 0) throw DomainError("build_scalar_family: need d >= 0");
    if (sign != 1 && sign != -1) throw DomainError("build_scalar_family: sign must be +-1");
    SphericalFamily f;
    f.kind = FamilyKind::Scalar;
    f.ell = ell;
    f.n = 2 * ell;
    f.d = d;
    f.sign = sign;
    f.size = 1;
    f.dims = {1};
    f.norm_const = detail::surface_ratio(f.n);
    return f;
}

inline std::vector<int> admissible_deltas(const SphericalFamily& f) {
    switch (f.kind) {
        case FamilyKind::TwoByTwo: return {0, 1};
        case FamilyKind::ThreeByThree: return {-1, 0, 1};
        default: return {0};
    }
}

/// Eigenvalue of D (or of the scalar radial equation) at the key.
inline Rational family_eigenvalue(const SphericalFamily& f, const EigKey& key) {
    switch (f.kind) {
        case FamilyKind::TwoByTwo: return delta_eigenvalue(f.n, f.p, key);
        case FamilyKind::ThreeByThree: return delta_eigenvalue(f.n, f.ell, key);
        default: {
            if (key.delta != 0) throw DomainError("family_eigenvalue: scalar family has delta = 0");
            if (key.w < f.d) throw DomainError("family_eigenvalue: scalar family needs w >= d");
            if (key.w > 1000000) throw DomainError("family_eigenvalue: w out of supported range");
            long l = f.ell;
            return Rational(-key.w * (key.w + 2 * l - 1) + f.d * (f.d + l - 1));
        }
    }
}

// ---------------------------------------------------------------------------
// The conjugating function Psi.
//
// Size 2: Psi(y) = [2y-1, 1; 1, 2y-1], exact polynomial.
// Size 3 (columns in delta-order -1, 0, +1, with cos s = 2y-1, t = sin s):
//   Psi = X(y) + i t(y) B,   t = 2 sqrt(y - y^2),
// where X is polynomial and B is the constant alternating corner pattern.
// ---------------------------------------------------------------------------

inline MatPoly<Rational> psi_poly_2x2() {
    std::vector<Matrix<Rational>> c;
    c.push_back(Matrix<Rational>{{-1, 1}, {1, -1}});
    c.push_back(Matrix<Rational>{{2, 0}, {0, 2}});
    return MatPoly<Rational>(2, 2, std::move(c));
}

/// Polynomial part X of the size-3 Psi.
inline MatPoly<Rational> psi3_poly_part() {
    std::vector<Matrix<Rational>> c;
    c.push_back(Matrix<Rational>{{-1, 1, -1}, {1, -1, 1}, {-1, 1, -1}});
    c.push_back(Matrix<Rational>{{2, 0, 2}, {0, 2, 0}, {2, 0, 2}});
    return MatPoly<Rational>(3, 3, std::move(c));
}

/// Coefficient B of i*t(y) in the size-3 Psi.
inline Matrix<Rational> psi3_it_part() {
    return Matrix<Rational>{{-1, 0, 1}, {0, 0, 0}, {1, 0, -1}};
}

struct PsiDerivatives {
    CMatrix psi, dpsi, ddpsi;
};

/// Psi and its first two y-derivatives at an interior point.
inline PsiDerivatives psi_derivatives(const SphericalFamily& f, double y) {
    if (f.kind == FamilyKind::Scalar) {
        PsiDerivatives out{CMatrix::identity(1), CMatrix(1, 1), CMatrix(1, 1)};
        return out;
    }
    if (f.kind == FamilyKind::TwoByTwo) {
        double x = 2 * y - 1;
        PsiDerivatives out{CMatrix{{x, 1}, {1, x}}, CMatrix{{2, 0}, {0, 2}}, CMatrix(2, 2)};
        return out;
    }
    double x = 2 * y - 1;
    double t = 2 * std::sqrt(y - y * y);
    double dt = 2 * (1 - 2 * y) / t;
    double ddt = -4 / (t * t * t);
    std::complex<double> i(0, 1);
    CMatrix X{{x, 1, x}, {1, x, 1}, {x, 1, x}};
    CMatrix dX{{2, 0, 2}, {0, 2, 0}, {2, 0, 2}};
    CMatrix B{{-1, 0, 1}, {0, 0, 0}, {1, 0, -1}};
    PsiDerivatives out{X + B * (i * t), dX + B * (i * dt), B * (i * ddt)};
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial eigenfunctions.
// ---------------------------------------------------------------------------

/// One vector polynomial P with D P = lambda P, pinned by the boundary data.
struct SolvedPolynomial {
    EigKey key;
    Rational lambda;
    std::vector<Rational> p0;
    MatPoly<Rational> P;  // size x 1
};

/// Normalized eigenfunction h_w of the scalar radial equation, degree w,
/// h_w(1) = 1.
inline MatPoly<Rational> scalar_h(const SphericalFamily& f, long w) {
    if (f.kind != FamilyKind::Scalar) throw DomainError("scalar_h: not a scalar family");
    if (w < f.d) throw DomainError("scalar_h: need w >= d");
    long l = f.ell;
    MatPoly<Rational> g = gauss_2f1_poly(f.d - w, Rational(2 * l + f.d + w - 1), Rational(2 * f.d + l));
    // multiply by y^d
    std::vector<Rational> shift(static_cast<size_t>(f.d) + 1, Rational(0));
    shift.back() = Rational(1);
    MatPoly<Rational> h = g.scale_by_poly(shift);
    Rational at_one = h.eval(Rational(1))(0, 0);
    if (at_one.is_zero()) throw NormalizationImpossible("scalar_h: value at 1 vanishes");
    return h * (Rational(1) / at_one);
}

/// Solves the boundary data P(0) and assembles P_{w,delta}. The linear
/// system stacks the truncation condition, the value-one normalization
/// Psi(1) P(1) = (1,...,1), and (size 3, delta = +-1) the derivative pin
/// p1(1) - p3(1) = -delta (w+ell+1)/(ell+1).
inline SolvedPolynomial construct_P(const SphericalFamily& f, const EigKey& key) {
    if (f.kind == FamilyKind::Scalar) {
        Rational lambda = family_eigenvalue(f, key);
        MatPoly<Rational> h = scalar_h(f, key.w);
        return SolvedPolynomial{key, lambda, {h.eval(Rational(0))(0, 0)}, h};
    }
    const int m = f.size;
    Rational lambda = family_eigenvalue(f, key);
    auto tr = detect_truncation(f.params, lambda, key.w + f.n + 4);
    if (!tr || tr->w != key.w)
        throw NonTruncating("construct_P: no truncation at the requested degree");
    auto coeffs = hyper_coefficients(f.params, lambda, key.w);
    Matrix<Rational> value_sum(m, m);  // sum_j coeffs[j]/j!, so P(1) = value_sum * P0
    for (long j = 0; j <= key.w; ++j)
        value_sum += coeffs[j] * (Rational(1) / factorial(static_cast<unsigned long>(j)));

    Matrix<Rational> top = truncation_factor(f.params, lambda, key.w) * coeffs[key.w];
    const bool pinned = (f.kind == FamilyKind::ThreeByThree && key.delta != 0);
    int rows = m + 1 + (pinned ? 1 : 0);
    Matrix<Rational> sys(rows, m);
    std::vector<Rational> rhs(rows, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sys(i, j) = top(i, j);
    for (int j = 0; j < m; ++j) {
        Rational colsum(0);
        for (int i = 0; i < m; ++i) colsum += value_sum(i, j);
        sys(m, j) = colsum;
    }
    rhs[m] = Rational(1);
    if (pinned) {
        for (int j = 0; j < m; ++j) sys(m + 1, j) = value_sum(0, j) - value_sum(2, j);
        rhs[m + 1] = Rational(-key.delta) * Rational(key.w + f.ell + 1) / Rational(f.ell + 1);
    }
    std::vector<Rational> p0 = solve_unique(sys, rhs);
    MatPoly<Rational> P = matrix_hyper_poly(f.params, lambda, p0, key.w);
    if (P.degree() != key.w)
        throw InconsistentSystem("construct_P: degree dropped below w");
    return SolvedPolynomial{key, lambda, std::move(p0), std::move(P)};
}

/// Columns construct_P over the family's deltas, assembled as one
/// size x size matrix polynomial.
inline MatPoly<Rational> polynomial_matrix(const SphericalFamily& f, long w) {
    auto deltas = admissible_deltas(f);
    MatPoly<Rational> out(f.size, static_cast<int>(deltas.size()));
    for (size_t c = 0; c < deltas.size(); ++c) {
        SolvedPolynomial sol = construct_P(f, EigKey{w, deltas[c]});
        for (int k = 0; k <= sol.P.degree(); ++k) {
            Matrix<Rational> coef = out.coeff(k);
            for (int i = 0; i < f.size; ++i) coef(i, static_cast<int>(c)) = sol.P.coeff(k)(i, 0);
            out.set_coeff(k, coef);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weight.
// ---------------------------------------------------------------------------

/// Polynomial part of the weight (the (y(1-y))^{n/2-1} density and the
/// norm_const prefactor are carried separately):
///   size 2:  Psi^T diag(p, n-p) Psi
///   size 3:  Re(Psi^* diag(d1,d2,d3) Psi); the imaginary part cancels
///            exactly because d1 = d3, and this is asserted.
///   size 1:  the constant 1.
inline MatPoly<Rational> weight_polypart(const SphericalFamily& f) {
    if (f.kind == FamilyKind::Scalar)
        return MatPoly<Rational>(Matrix<Rational>{{1}});
    if (f.kind == FamilyKind::TwoByTwo) {
        MatPoly<Rational> psi = psi_poly_2x2();
        Matrix<Rational> D = Matrix<Rational>::diagonal({Rational(f.p), Rational(f.n - f.p)});
        return psi.transpose() * (D * psi);
    }
    Matrix<Rational> D =
        Matrix<Rational>::diagonal({Rational(f.dims[0]), Rational(f.dims[1]), Rational(f.dims[2])});
    MatPoly<Rational> X = psi3_poly_part();
    Matrix<Rational> B = psi3_it_part();
    MatPoly<Rational> imag = X.transpose() * (D * B) - MatPoly<Rational>((B.transpose() * D)) * X;
    if (!imag.is_zero())
        throw InconsistentSystem("weight_polypart: imaginary part failed to cancel");
    // (i t)^2 = 4y^2 - 4y
    MatPoly<Rational> bt(B.transpose() * (D * B));
    return X.transpose() * (D * X) - bt.scale_by_poly({Rational(0), Rational(-4), Rational(4)});
}

// ---------------------------------------------------------------------------
// Radial operator (numeric path).
// ---------------------------------------------------------------------------

namespace detail {

// Exact evaluation at the (dyadic) point, rounded once at the end; binary64
// Horner on the raw coefficients is not accurate enough at higher degrees.
inline CVector eval_col(const MatPoly<Rational>& P, double y, int order) {
    Rational ry{mpq_class(y)};
    Matrix<Rational> m = P.derivative(order).eval(ry);
    CVector v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, 0).to_double();
    return v;
}

inline CVector mat_vec(const CMatrix& m, const CVector& v) {
    CVector r(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

inline CVector axpy(const std::complex<double>& a, const CVector& x, CVector y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
    return y;
}

}  // namespace detail

/// Applies the singular radial operator to H = Psi P at an interior point:
///   y(1-y) H'' + (n/2)(1-2y) H' + ((1-2y)^2+1)/(4y(1-y)) N H
///                              + (1-2y)/(2y(1-y)) E H
/// (scalar kind: y(1-y)h'' + ell(1-2y)h' - d(d+ell-1)(1-y)/y h).
inline CVector radial_apply(const SphericalFamily& f, const SolvedPolynomial& sol, double y,
                            double tau = 1e-3) {
    if (!(y >= tau && y <= 1.0 - tau))
        throw DomainError("radial_apply: y outside the interior margin");
    if (f.kind == FamilyKind::Scalar) {
        double h = detail::eval_col(sol.P, y, 0)[0].real();
        double dh = detail::eval_col(sol.P, y, 1)[0].real();
        double ddh = detail::eval_col(sol.P, y, 2)[0].real();
        double val = y * (1 - y) * ddh + f.ell * (1 - 2 * y) * dh -
                     static_cast<double>(f.d) * (f.d + f.ell - 1) * (1 - y) / y * h;
        return CVector{val};
    }
    PsiDerivatives psi = psi_derivatives(f, y);
    CVector P = detail::eval_col(sol.P, y, 0);
    CVector dP = detail::eval_col(sol.P, y, 1);
    CVector ddP = detail::eval_col(sol.P, y, 2);
    CVector H = detail::mat_vec(psi.psi, P);
    CVector dH = detail::axpy(1.0, detail::mat_vec(psi.dpsi, P), detail::mat_vec(psi.psi, dP));
    CVector ddH = detail::mat_vec(psi.ddpsi, P);
    ddH = detail::axpy(2.0, detail::mat_vec(psi.dpsi, dP), ddH);
    ddH = detail::axpy(1.0, detail::mat_vec(psi.psi, ddP), ddH);

    double omx = 1 - 2 * y;
    double yy = y * (1 - y);
    CMatrix N = to_complex(f.N), E = to_complex(f.E);
    CVector out = detail::axpy(yy, ddH, CVector(f.size, 0.0));
    out = detail::axpy(0.5 * f.n * omx, dH, out);
    out = detail::axpy((omx * omx + 1) / (4 * yy), detail::mat_vec(N, H), out);
    out = detail::axpy(omx / (2 * yy), detail::mat_vec(E, H), out);
    return out;
}

/// H(y) = (Psi P)(y); finite on all of [0,1] (Psi(1) is the all-ones matrix).
inline CVector eval_H(const SphericalFamily& f, const SolvedPolynomial& sol, double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("eval_H: y outside [0, 1]");
    if (f.kind == FamilyKind::Scalar) return detail::eval_col(sol.P, y, 0);
    PsiDerivatives psi = psi_derivatives(f, y);
    CVector P = detail::eval_col(sol.P, y, 0);
    return detail::mat_vec(psi.psi, P);
}

/// H(y(s)) = (Psi P)((1+cos s)/2), the diagonal restriction along the
/// one-parameter subgroup.
inline CVector restrict_arc(const SphericalFamily& f, const SolvedPolynomial& sol, double s) {
    if (!(s > 0.0 && s < M_PI)) throw DomainError("restrict_arc: s outside (0, pi)");
    return eval_H(f, sol, (1 + std::cos(s)) / 2);
}

}  // namespace mvop
