#include <catch2/catch.hpp>

#include <cmath>

#include "mvop/quadrature.hpp"
#include "mvop/verify.hpp"

using namespace mvop;

TEST_CASE("nodes interior, weights positive, total mass exact", "[quadrature]") {
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.5}) {
        for (int k = 1; k <= 14; ++k) {
            QuadratureRule r = gauss_jacobi01(k, alpha);
            REQUIRE(r.nodes.size() == static_cast<size_t>(k));
            double mass = 0;
            for (int i = 0; i < k; ++i) {
                CHECK(r.nodes[i] > 0.0);
                CHECK(r.nodes[i] < 1.0);
                if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
                CHECK(r.weights[i] > 0.0);
                mass += r.weights[i];
            }
            double expect = std::exp(2 * std::lgamma(alpha + 1) - std::lgamma(2 * alpha + 2));
            CHECK(mass == Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("rule reproduces exact beta moments to quadrature accuracy", "[quadrature]") {
    for (int n : {3, 4, 5, 6, 7, 8, 9}) {
        SphericalFamily f = (n % 2 == 1) ? build_family_top(n / 2) : build_family(n, 1);
        double alpha = f.weight_exponent().to_double();
        for (long k = 0; k <= 18; ++k) {
            QuadratureRule r = gauss_jacobi01(quadrature_points(static_cast<int>(k)), alpha);
            double acc = 0;
            for (size_t q = 0; q < r.nodes.size(); ++q)
                acc += r.weights[q] * std::pow(r.nodes[q], static_cast<double>(k));
            double expect = moment(k, f).to_double();
            CHECK(acc == Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("exactness degree is 2k-1", "[quadrature]") {
    // with k nodes the rule must integrate y^(2k-1) exactly, and the point
    // count chosen for degree d covers it
    for (int d = 0; d <= 20; ++d) {
        int k = quadrature_points(d);
        CHECK(2 * k - 1 >= d);
    }
}

TEST_CASE("quadrature gram agrees with the exact gram", "[quadrature]") {
    SphericalFamily f = build_family(4, 1);
    MatPoly<double> wp = to_double(weight_polypart(f));
    double nc = f.norm_const.to_double();
    GramReport exact = gram_sequence(f, 3);
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
            MatPoly<double> pa = to_double(polynomial_matrix(f, a));
            MatPoly<double> pb = to_double(polynomial_matrix(f, b));
            int deg = pa.degree() + pb.degree() + wp.degree();
            QuadratureRule r = gauss_jacobi01(quadrature_points(deg), 1.0);
            Matrix<double> acc(2, 2);
            for (size_t q = 0; q < r.nodes.size(); ++q) {
                double y = r.nodes[q];
                acc += pb.eval(y).transpose() * (wp.eval(y) * pa.eval(y)) * (r.weights[q] * nc);
            }
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(acc(i, j) ==
                          Approx(exact.blocks[a][b](i, j).to_double()).margin(1e-11));
        }
}
