#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mvop/families.hpp"
#include "mvop/quadrature.hpp"

namespace mvop {

// ---------------------------------------------------------------------------
// Exact moments and inner products.
// ---------------------------------------------------------------------------

namespace detail {

// Gamma(j + 1/2) / sqrt(pi) = (2j)! / (4^j j!)
inline Rational gamma_half_ratio(long j) {
    Rational num = factorial(2 * j);
    Rational four_pow(1);
    for (long i = 0; i < j; ++i) four_pow *= Rational(4);
    return num / (four_pow * factorial(j));
}

}  // namespace detail

/// Exact Beta moment int_0^1 y^k (y(1-y))^{n/2-1} dy for the family's n.
/// Rational for even n; a rational multiple of pi for odd n.
inline PiRational moment(long k, const SphericalFamily& f) {
    if (k < 0) throw DomainError("moment: k must be nonnegative");
    const int n = f.n;
    if (n % 2 == 0) {
        long m = n / 2 - 1;
        Rational r = factorial(k + m) * factorial(m) / factorial(k + 2 * m + 1);
        return PiRational(r);
    }
    long m = (n - 3) / 2;  // exponent is m + 1/2
    Rational r = detail::gamma_half_ratio(k + m + 1) * detail::gamma_half_ratio(m + 1) /
                 factorial(k + 2 * m + 2);
    return PiRational(r, 1);
}

/// <A, B>_W = int_0^1 B^*(y) W(y) A(y) dy, exactly, by expanding
/// B^T * (weight polynomial part) * A into monomials and summing moments.
/// Result shape: B.cols() x A.cols().
inline Matrix<PiRational> inner_product(const SphericalFamily& f, const MatPoly<Rational>& A,
                                        const MatPoly<Rational>& B) {
    if (A.rows() != f.size || B.rows() != f.size)
        throw DomainError("inner_product: operand height must match the family size");
    MatPoly<Rational> Q = B.transpose() * (weight_polypart(f) * A);
    Matrix<PiRational> out(Q.rows(), Q.cols());
    for (int k = 0; k <= Q.degree(); ++k) {
        PiRational mk = moment(k, f);
        Matrix<Rational> c = Q.coeff(k);
        for (int i = 0; i < Q.rows(); ++i)
            for (int j = 0; j < Q.cols(); ++j)
                out(i, j) += mk * c(i, j);
    }
    for (int i = 0; i < Q.rows(); ++i)
        for (int j = 0; j < Q.cols(); ++j) out(i, j) = f.norm_const * out(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Gram matrices.
// ---------------------------------------------------------------------------

enum class GramStatus { Zero, DiagonalPositive, Violation };

struct GramReport {
    std::string family_id;
    long w_max = 0;
    // blocks[w][w'] with status[w][w']
    std::vector<std::vector<Matrix<PiRational>>> blocks;
    std::vector<std::vector<GramStatus>> status;
    bool pass = true;
};

/// All pairwise <P_w, P_w'> for w, w' <= w_max. Off the diagonal the blocks
/// must vanish identically; on it they must be diagonal with positive
/// entries.
inline GramReport gram_sequence(const SphericalFamily& f, long w_max) {
    if (w_max < 0) throw DomainError("gram_sequence: w_max must be nonnegative");
    GramReport rep;
    rep.family_id = f.id();
    rep.w_max = w_max;
    long w_lo = (f.kind == FamilyKind::Scalar) ? f.d : 0;
    std::vector<MatPoly<Rational>> polys;
    for (long w = w_lo; w <= w_max; ++w) {
        if (f.kind == FamilyKind::Scalar)
            polys.push_back(scalar_h(f, w));
        else
            polys.push_back(polynomial_matrix(f, w));
    }
    const size_t count = polys.size();
    rep.blocks.resize(count);
    rep.status.resize(count);
    for (size_t a = 0; a < count; ++a) {
        rep.blocks[a].resize(count, Matrix<PiRational>(0, 0));
        rep.status[a].resize(count, GramStatus::Zero);
        for (size_t b = 0; b < count; ++b) {
            Matrix<PiRational> g = inner_product(f, polys[a], polys[b]);
            GramStatus st;
            if (a != b) {
                st = g.is_zero() ? GramStatus::Zero : GramStatus::Violation;
            } else {
                st = GramStatus::DiagonalPositive;
                for (int i = 0; i < g.rows(); ++i)
                    for (int j = 0; j < g.cols(); ++j) {
                        if (i == j && g(i, j).sign() <= 0) st = GramStatus::Violation;
                        if (i != j && !g(i, j).is_zero()) st = GramStatus::Violation;
                    }
            }
            if ((a != b && st != GramStatus::Zero) ||
                (a == b && st != GramStatus::DiagonalPositive))
                rep.pass = false;
            rep.blocks[a][b] = std::move(g);
            rep.status[a][b] = st;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Symmetry, positivity, reduction.
// ---------------------------------------------------------------------------

/// <DA, B>_W - <A, DB>_W, exactly. Zero certifies symmetry on this pair.
inline Matrix<PiRational> check_symmetry(const SphericalFamily& f, const MatPoly<Rational>& A,
                                         const MatPoly<Rational>& B) {
    if (f.kind == FamilyKind::Scalar)
        throw DomainError("check_symmetry: matrix families only");
    MatPoly<Rational> DA = apply_hyper_op(f.params, A);
    MatPoly<Rational> DB = apply_hyper_op(f.params, B);
    return inner_product(f, DA, B) - inner_product(f, A, DB);
}

/// Seeded random vector polynomial with small rational entries.
inline MatPoly<Rational> random_vector_poly(int size, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Matrix<Rational>> c;
    for (int k = 0; k <= degree; ++k) {
        Matrix<Rational> m(size, 1);
        for (int i = 0; i < size; ++i) m(i, 0) = Rational(num(rng), den(rng));
        c.push_back(std::move(m));
    }
    return MatPoly<Rational>(size, 1, std::move(c));
}

/// Leading principal minors of the weight polynomial part at y, all positive.
inline bool check_positivity_at(const SphericalFamily& f, const Rational& y) {
    if (!(y > Rational(0) && y < Rational(1)))
        throw DomainError("check_positivity_at: sample must be interior");
    Matrix<Rational> w = weight_polypart(f).eval(y);
    // determinants of the leading blocks, sizes 1..m
    for (int k = 1; k <= w.rows(); ++k) {
        Matrix<Rational> blk(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) blk(i, j) = w(i, j);
        // exact determinant by elimination
        Rational det(1);
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (!blk(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return false;
            if (piv != col) {
                for (int j = 0; j < k; ++j) std::swap(blk(piv, j), blk(col, j));
                det = -det;
            }
            det *= blk(col, col);
            for (int r = col + 1; r < k; ++r) {
                Rational fac = blk(r, col) / blk(col, col);
                for (int j = col; j < k; ++j) blk(r, j) -= fac * blk(col, j);
            }
        }
        if (det.sign() <= 0) return false;
    }
    return true;
}

inline std::vector<bool> check_positivity(const SphericalFamily& f,
                                          const std::vector<Rational>& samples) {
    std::vector<bool> out;
    out.reserve(samples.size());
    for (const auto& y : samples) out.push_back(check_positivity_at(f, y));
    return out;
}

/// Size-3 block-reduction identities: conjugating the weight by the
/// mixing matrix [1,0,1; 0,sqrt2,0; -1,0,1] block-diagonalizes it exactly
/// iff W11 = W33, W12 = W32 and W13 = W31. Returns the largest deviation
/// over the samples (exact zero expected). Checked without leaving the
/// rationals.
inline Rational check_reduction3(int ell, const std::vector<Rational>& samples) {
    SphericalFamily f = build_family_top(ell);
    MatPoly<Rational> W = weight_polypart(f);
    Rational worst(0);
    auto update = [&worst](const Rational& r) {
        Rational a = abs(r);
        if (a > worst) worst = a;
    };
    for (const auto& y : samples) {
        Matrix<Rational> w = W.eval(y);
        update(w(0, 0) - w(2, 2));
        update(w(0, 1) - w(2, 1));
        update(w(0, 2) - w(2, 0));
    }
    return worst;
}

/// Evidence that the size-2 weight does not reduce: two exact ratios of
/// weight values must fail to commute.
inline bool check_irreducibility_heuristic(const SphericalFamily& f) {
    if (f.kind != FamilyKind::TwoByTwo)
        throw DomainError("check_irreducibility_heuristic: size-2 families only");
    MatPoly<Rational> W = weight_polypart(f);
    Matrix<Rational> r34 = inverse(W.eval(Rational(3, 4)));
    Matrix<Rational> a = W.eval(Rational(1, 4)) * r34;
    Matrix<Rational> b = W.eval(Rational(1, 3)) * r34;
    return !(a * b == b * a);
}

// ---------------------------------------------------------------------------
// Suite.
// ---------------------------------------------------------------------------

enum class Mode { Exact, Float };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string residual;  // exact value as string, or float residual
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::string family_id;
    long w_max = 0;
    Mode mode = Mode::Exact;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", x);
    return buf;
}

inline double max_abs(const CVector& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

inline std::vector<Rational> interior_samples(int count) {
    std::vector<Rational> s;
    for (int k = 1; k <= count; ++k) s.emplace_back(k, count + 1);
    return s;
}

inline double quad_block_residual(const SphericalFamily& f, const MatPoly<double>& A,
                                  const MatPoly<double>& B, const MatPoly<double>& Wp,
                                  double nc, bool off_diagonal) {
    int deg = A.degree() + B.degree() + Wp.degree();
    QuadratureRule rule = gauss_jacobi01(quadrature_points(deg), f.weight_exponent().to_double());
    Matrix<double> acc(B.cols(), A.cols());
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
        double y = rule.nodes[q];
        Matrix<double> g = B.eval(y).transpose() * (Wp.eval(y) * A.eval(y));
        acc += g * (rule.weights[q] * nc);
    }
    double worst = 0;
    for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j) {
            bool expect_zero = off_diagonal || i != j;
            if (expect_zero) worst = std::max(worst, std::abs(acc(i, j)));
        }
    return worst;
}

}  // namespace detail

/// Runs the family's whole certification battery and aggregates results.
/// Exact mode asserts identities over the rationals; float mode replays the
/// quadrature/eigen checks in binary64 against the tolerance.
inline VerifyReport run_suite(const SphericalFamily& f, long w_max, double tol = 1e-9,
                              Mode mode = Mode::Exact, std::uint64_t seed = 20140707) {
    if (tol <= 0) throw DomainError("run_suite: tolerance must be positive");
    VerifyReport rep;
    rep.family_id = f.id();
    rep.w_max = w_max;
    rep.mode = mode;
    rep.tol = tol;
    rep.seed = seed;

    auto push = [&rep](const std::string& name, bool pass, const std::string& residual,
                       const detail::Stopwatch& sw) {
        rep.checks.push_back(CheckResult{name, pass, residual, sw.ms()});
    };

    const long w_lo = (f.kind == FamilyKind::Scalar) ? f.d : 0;
    std::vector<SolvedPolynomial> sols;
    for (long w = w_lo; w <= w_max; ++w)
        for (int delta : admissible_deltas(f)) sols.push_back(construct_P(f, EigKey{w, delta}));

    if (f.kind == FamilyKind::Scalar) {
        {
            detail::Stopwatch sw;
            bool ok = true;
            for (const auto& sol : sols) {
                // y * (radial equation) as one exact polynomial identity
                MatPoly<Rational> h = sol.P;
                MatPoly<Rational> lhs =
                    h.derivative(2).scale_by_poly({Rational(0), Rational(0), Rational(1), Rational(-1)}) +
                    h.derivative(1).scale_by_poly({Rational(0), Rational(f.ell), Rational(-2 * f.ell)}) -
                    Rational(f.d * (f.d + f.ell - 1)) *
                        h.scale_by_poly({Rational(1), Rational(-1)}) -
                    sol.lambda * h.scale_by_poly({Rational(0), Rational(1)});
                ok = ok && lhs.is_zero();
            }
            push("scalar_ode_identity", ok, ok ? "0" : "nonzero", sw);
        }
        {
            detail::Stopwatch sw;
            bool ok = true;
            for (const auto& sol : sols) ok = ok && sol.P.eval(Rational(1))(0, 0) == Rational(1);
            push("scalar_value_at_one", ok, ok ? "0" : "nonzero", sw);
        }
        {
            detail::Stopwatch sw;
            GramReport g = gram_sequence(f, w_max);
            push("scalar_orthogonality", g.pass, g.pass ? "0" : "nonzero", sw);
        }
        return rep;
    }

    {
        detail::Stopwatch sw;
        bool ok = true;
        if (mode == Mode::Exact) {
            for (const auto& sol : sols)
                ok = ok && (apply_hyper_op(f.params, sol.P) - sol.lambda * sol.P).is_zero();
            push("eigen_identity", ok, ok ? "0" : "nonzero", sw);
        } else {
            double worst = 0;
            Matrix<double> C = to_double(f.params.C), U = to_double(f.params.U),
                           V = to_double(f.params.V);
            for (const auto& sol : sols) {
                MatPoly<double> P = to_double(sol.P);
                MatPoly<double> r = apply_hyper_op(C, U, V, P) - P * sol.lambda.to_double();
                double scale = 0, res = 0;
                for (int k = 0; k <= P.degree(); ++k)
                    for (int i = 0; i < P.rows(); ++i)
                        scale = std::max(scale, std::abs(P.coeff(k)(i, 0)));
                for (int k = 0; k <= r.degree(); ++k)
                    for (int i = 0; i < r.rows(); ++i)
                        res = std::max(res, std::abs(r.coeff(k)(i, 0)));
                worst = std::max(worst, res / std::max(scale, 1.0));
            }
            ok = worst < tol;
            push("eigen_identity", ok, detail::fmt(worst), sw);
        }
    }
    {
        detail::Stopwatch sw;
        bool ok = true;
        for (const auto& sol : sols) {
            Matrix<Rational> p1 = sol.P.eval(Rational(1));
            Rational total(0);
            for (int i = 0; i < f.size; ++i) total += p1(i, 0);
            ok = ok && total == Rational(1);
        }
        push("normalization_at_one", ok, ok ? "0" : "nonzero", sw);
    }
    {
        detail::Stopwatch sw;
        bool ok = true;
        for (const auto& sol : sols) {
            auto tr = detect_truncation(f.params, sol.lambda, sol.key.w + f.n + 4);
            ok = ok && tr && tr->w == sol.key.w;
            if (!ok) break;
            // leading coefficient sits inside the predicted kernel
            Matrix<Rational> lead = sol.P.leading_coeff();
            if (f.kind == FamilyKind::TwoByTwo) {
                int zero_comp = (sol.key.delta == 0) ? 1 : 0;
                ok = ok && lead(zero_comp, 0).is_zero();
            } else {
                if (sol.key.delta == 0)
                    ok = ok && lead(0, 0).is_zero() && lead(2, 0).is_zero();
                else
                    ok = ok && lead(1, 0).is_zero();
            }
        }
        push("truncation_kernel", ok, ok ? "0" : "nonzero", sw);
    }
    {
        detail::Stopwatch sw;
        if (mode == Mode::Exact) {
            GramReport g = gram_sequence(f, w_max);
            push("gram_orthogonality", g.pass, g.pass ? "0" : "nonzero", sw);
        } else {
            MatPoly<double> Wp = to_double(weight_polypart(f));
            double nc = f.norm_const.to_double();
            double worst = 0;
            std::vector<MatPoly<double>> polys;
            for (long w = 0; w <= w_max; ++w) polys.push_back(to_double(polynomial_matrix(f, w)));
            for (size_t a = 0; a < polys.size(); ++a)
                for (size_t b = 0; b <= a; ++b)
                    worst = std::max(worst, detail::quad_block_residual(f, polys[a], polys[b], Wp,
                                                                        nc, a != b));
            bool ok = worst < tol;
            push("gram_orthogonality", ok, detail::fmt(worst), sw);
        }
    }
    {
        detail::Stopwatch sw;
        std::mt19937_64 rng(seed);
        bool ok = true;
        if (mode == Mode::Exact) {
            for (int trial = 0; trial < 50 && ok; ++trial) {
                MatPoly<Rational> A = random_vector_poly(f.size, 6, rng);
                MatPoly<Rational> B = random_vector_poly(f.size, 6, rng);
                ok = check_symmetry(f, A, B).is_zero();
            }
            push("operator_symmetry", ok, ok ? "0" : "nonzero", sw);
        } else {
            MatPoly<double> Wp = to_double(weight_polypart(f));
            double nc = f.norm_const.to_double();
            Matrix<double> C = to_double(f.params.C), U = to_double(f.params.U),
                           V = to_double(f.params.V);
            double worst = 0;
            for (int trial = 0; trial < 50; ++trial) {
                MatPoly<double> A = to_double(random_vector_poly(f.size, 6, rng));
                MatPoly<double> B = to_double(random_vector_poly(f.size, 6, rng));
                MatPoly<double> DA = apply_hyper_op(C, U, V, A);
                MatPoly<double> DB = apply_hyper_op(C, U, V, B);
                int deg = std::max(DA.degree() + B.degree(), A.degree() + DB.degree()) + Wp.degree();
                QuadratureRule rule =
                    gauss_jacobi01(quadrature_points(deg), f.weight_exponent().to_double());
                double acc = 0;
                for (size_t q = 0; q < rule.nodes.size(); ++q) {
                    double y = rule.nodes[q];
                    Matrix<double> g1 = B.eval(y).transpose() * (Wp.eval(y) * DA.eval(y));
                    Matrix<double> g2 = DB.eval(y).transpose() * (Wp.eval(y) * A.eval(y));
                    acc += rule.weights[q] * nc * (g1(0, 0) - g2(0, 0));
                }
                worst = std::max(worst, std::abs(acc));
            }
            ok = worst < tol;
            push("operator_symmetry", ok, detail::fmt(worst), sw);
        }
    }
    {
        detail::Stopwatch sw;
        double worst = 0;
        for (const auto& sol : sols) {
            double lambda = sol.lambda.to_double();
            for (int k = 1; k <= 20; ++k) {
                double y = static_cast<double>(k) / 21.0;
                CVector lhs = radial_apply(f, sol, y);
                CVector h = restrict_arc(f, sol, std::acos(2 * y - 1));
                double scale = std::max(detail::max_abs(h), 1e-300);
                CVector diff(h.size());
                for (size_t i = 0; i < h.size(); ++i) diff[i] = lhs[i] - lambda * h[i];
                worst = std::max(worst, detail::max_abs(diff) / scale);
            }
        }
        bool ok = worst < tol;
        push("radial_conjugation", ok, detail::fmt(worst), sw);
    }
    {
        detail::Stopwatch sw;
        auto samples = detail::interior_samples(25);
        auto res = check_positivity(f, samples);
        bool ok = std::all_of(res.begin(), res.end(), [](bool b) { return b; });
        push("weight_positivity", ok, ok ? "0" : "nonzero", sw);
    }
    if (f.kind == FamilyKind::ThreeByThree) {
        {
            detail::Stopwatch sw;
            Rational worst = check_reduction3(f.ell, detail::interior_samples(10));
            bool ok = worst.is_zero();
            push("weight_reduction", ok, worst.str(), sw);
        }
        {
            detail::Stopwatch sw;
            bool ok = true;
            for (long w = 0; w <= w_max && ok; ++w) {
                SolvedPolynomial plus = construct_P(f, EigKey{w, 1});
                SolvedPolynomial minus = construct_P(f, EigKey{w, -1});
                // delta pinning at y = 1
                Matrix<Rational> v1 = plus.P.eval(Rational(1));
                Rational want = Rational(-(w + f.ell + 1), f.ell + 1);
                ok = ok && (v1(0, 0) - v1(2, 0)) == want;
                // component swap symmetry
                for (int k = 0; k <= plus.P.degree() && ok; ++k) {
                    Matrix<Rational> a = plus.P.coeff(k), b = minus.P.coeff(k);
                    ok = ok && a(0, 0) == b(2, 0) && a(1, 0) == b(1, 0) && a(2, 0) == b(0, 0);
                }
            }
            push("delta_swap_and_pinning", ok, ok ? "0" : "nonzero", sw);
        }
    }
    if (f.kind == FamilyKind::TwoByTwo) {
        detail::Stopwatch sw;
        bool ok = check_irreducibility_heuristic(f);
        push("weight_nonreduction_evidence", ok, ok ? "commutator nonzero" : "commutes", sw);
    }
    {
        detail::Stopwatch sw;
        bool ok = true;
        const int p_eff = (f.kind == FamilyKind::TwoByTwo) ? f.p : f.ell;
        for (long w = 0; w <= std::min<long>(w_max, 20) && ok; ++w) {
            for (int delta : admissible_deltas(f)) {
                std::vector<long> mt;
                mt.push_back(w + 1);
                for (int i = 0; i < p_eff - 1; ++i) mt.push_back(1);
                mt.push_back(delta);
                while (static_cast<int>(mt.size()) < (f.n + 1) / 2) mt.push_back(0);
                std::vector<long> mk(p_eff, 1);
                while (static_cast<int>(mk.size()) < f.n / 2) mk.push_back(0);
                Rational via = delta_eigenvalue_via_casimir(
                    f.n, HighestWeight::for_so(f.n + 1, mt), HighestWeight::for_so(f.n, mk));
                ok = ok && via == family_eigenvalue(f, EigKey{w, delta});
            }
        }
        push("casimir_cross_check", ok, ok ? "0" : "nonzero", sw);
    }
    return rep;
}

}  // namespace mvop
