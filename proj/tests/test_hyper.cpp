#include <catch2/catch.hpp>

#include "mvop/families.hpp"
#include "mvop/hyper.hpp"

using namespace mvop;
using RMat = Matrix<Rational>;

namespace {

HyperParams params_41() { return build_family(4, 1).params; }

}  // namespace

TEST_CASE("series coefficient fixtures", "[hyper]") {
    HyperParams hp = params_41();
    CHECK(huv_coefficient(hp, Rational(-7), 0) == RMat::identity(2));
    CHECK(huv_coefficient(hp, Rational(-7), 1) ==
          RMat{{Rational(-9, 4), Rational(1, 2)}, {Rational(3, 4), Rational(-3, 2)}});
    CHECK(huv_coefficient(hp, Rational(-1), 1) ==
          RMat{{0, Rational(-1, 4)}, {0, Rational(3, 4)}});
}

TEST_CASE("truncation factor fixtures", "[hyper]") {
    HyperParams hp = params_41();
    CHECK(truncation_factor(hp, Rational(-7), 1) == RMat::diagonal({Rational(0), Rational(2)}));
    CHECK(truncation_factor(hp, Rational(-1), 0) == RMat::diagonal({Rational(0), Rational(2)}));

    HyperParams top = build_family_top(1).params;  // n = 3
    for (long w = 0; w <= 6; ++w) {
        Rational lambda(-w * (w + 4) - 1);
        CHECK(truncation_factor(top, lambda, w) ==
              RMat::diagonal({Rational(1), Rational(0), Rational(1)}));
    }
}

TEST_CASE("truncation detection fixtures", "[hyper]") {
    HyperParams hp = params_41();
    auto t0 = detect_truncation(hp, Rational(-7), 30);
    REQUIRE(t0);
    CHECK(t0->w == 1);
    REQUIRE(t0->kernel_basis.size() == 1);
    CHECK(t0->kernel_basis[0] == std::vector<Rational>{1, 0});

    auto t1 = detect_truncation(hp, Rational(-3), 30);
    REQUIRE(t1);
    CHECK(t1->w == 0);
    CHECK(t1->kernel_basis[0] == std::vector<Rational>{0, 1});

    CHECK_FALSE(detect_truncation(hp, Rational(-5), 30));
}

TEST_CASE("truncation degree and kernel pattern across the family grid", "[hyper]") {
    for (int n = 4; n <= 9; ++n) {
        for (int p = 1; p <= n / 2 - 1; ++p) {
            HyperParams hp = build_family(n, p).params;
            for (long w = 0; w <= 12; ++w)
                for (int delta : {0, 1}) {
                    auto tr = detect_truncation(hp, delta_eigenvalue(n, p, {w, delta}), w + n + 4);
                    REQUIRE(tr);
                    CHECK(tr->w == w);
                    REQUIRE(tr->kernel_basis.size() == 1);
                    std::vector<Rational> expect(2, Rational(0));
                    expect[delta] = Rational(1);
                    CHECK(tr->kernel_basis[0] == expect);
                }
        }
    }
    for (int ell : {1, 2, 3, 4}) {
        SphericalFamily f = build_family_top(ell);
        for (long w = 0; w <= 12; ++w) {
            auto t0 = detect_truncation(f.params, delta_eigenvalue(f.n, ell, {w, 0}), w + f.n + 4);
            REQUIRE(t0);
            CHECK(t0->w == w);
            REQUIRE(t0->kernel_basis.size() == 1);
            CHECK(t0->kernel_basis[0] == std::vector<Rational>{0, 1, 0});
            auto t1 = detect_truncation(f.params, delta_eigenvalue(f.n, ell, {w, 1}), w + f.n + 4);
            REQUIRE(t1);
            CHECK(t1->w == w);
            REQUIRE(t1->kernel_basis.size() == 2);
            CHECK(t1->kernel_basis[0] == std::vector<Rational>{1, 0, 0});
            CHECK(t1->kernel_basis[1] == std::vector<Rational>{0, 0, 1});
        }
    }
}

TEST_CASE("recursion re-verified by multiplication, not inversion", "[hyper]") {
    for (const HyperParams& hp : {params_41(), build_family_top(2).params}) {
        Rational lambda(-57);  // arbitrary
        auto coeffs = hyper_coefficients(hp, lambda, 8);
        for (long j = 0; j < 8; ++j) {
            RMat cj = hp.C + RMat::identity(hp.size) * Rational(j);
            CHECK(cj * coeffs[j + 1] == truncation_factor(hp, lambda, j) * coeffs[j]);
        }
    }
}

TEST_CASE("series assembly fixtures", "[hyper]") {
    HyperParams hp = params_41();
    auto p0 = matrix_hyper_poly(hp, Rational(-1), {Rational(1), Rational(0)}, 0);
    CHECK(p0 == MatPoly<Rational>(RMat{{1}, {0}}));

    auto p1 = matrix_hyper_poly(hp, Rational(-7), {Rational(-2), Rational(-1)}, 1);
    CHECK(p1.coeff(0) == RMat{{-2}, {-1}});
    CHECK(p1.coeff(1) == RMat{{4}, {0}});

    CHECK_THROWS_AS(matrix_hyper_poly(hp, Rational(-7), {Rational(1), Rational(0)}, 1),
                    NonTruncating);
}

TEST_CASE("assembled series satisfies the operator identity exactly", "[hyper]") {
    for (int n : {4, 5, 7}) {
        SphericalFamily f = build_family(n, 1);
        for (long w = 0; w <= 6; ++w)
            for (int delta : {0, 1}) {
                SolvedPolynomial sol = construct_P(f, {w, delta});
                CHECK((apply_hyper_op(f.params, sol.P) - sol.lambda * sol.P).is_zero());
            }
    }
}

TEST_CASE("terminating gauss series fixtures", "[hyper]") {
    CHECK(gauss_2f1_poly(0, Rational(9), Rational(4)) == scalar_poly<Rational>({Rational(1)}));
    CHECK(gauss_2f1_poly(-1, Rational(6), Rational(4)) ==
          scalar_poly<Rational>({Rational(1), Rational(-3, 2)}));
    CHECK(gauss_2f1_poly(-1, Rational(7, 3), Rational(7, 3)) ==
          scalar_poly<Rational>({Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(gauss_2f1_poly(-3, Rational(1), Rational(-2)), DomainError);
    CHECK_THROWS_AS(gauss_2f1_poly(2, Rational(1), Rational(5)), DomainError);
}

TEST_CASE("terminating gauss series has degree -a when b stays off the poles", "[hyper]") {
    for (long w = 0; w <= 9; ++w) {
        auto f = gauss_2f1_poly(-w, Rational(2 * w + 5), Rational(7, 2));
        CHECK(f.degree() == w);
    }
}
