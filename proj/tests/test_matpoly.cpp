#include <catch2/catch.hpp>

#include <random>

#include "mvop/matpoly.hpp"

using namespace mvop;
using RMat = Matrix<Rational>;
using RPoly = MatPoly<Rational>;

namespace {

RPoly example_vector_poly() {
    // (4y - 2, -1)^t
    return RPoly(2, 1, {RMat{{-2}, {-1}}, RMat{{4}, {0}}});
}

}  // namespace

TEST_CASE("evaluation fixtures", "[matpoly]") {
    RPoly c(RMat::identity(2));
    CHECK(c.eval(Rational(1, 2)) == RMat::identity(2));

    RPoly p = example_vector_poly();
    CHECK(p.eval(Rational(1)) == RMat{{2}, {-1}});
    CHECK(p.eval(Rational(1, 2)) == RMat{{0}, {-1}});
}

TEST_CASE("derivative fixtures", "[matpoly]") {
    RPoly c(RMat{{5}});
    CHECK(c.derivative().is_zero());

    RMat a0{{1}, {2}}, a1{{3}, {4}}, a2{{5}, {6}};
    RPoly p(2, 1, {a0, a1});
    CHECK(p.derivative() == RPoly(a1));

    RPoly q(2, 1, {a0, a1, a2});
    CHECK(q.derivative(2) == RPoly(a2 * Rational(2)));
}

TEST_CASE("degree bookkeeping and canonical trailing coefficient", "[matpoly]") {
    RPoly p(2, 2);
    CHECK(p.is_zero());
    CHECK(p.degree() == 0);
    p.set_coeff(3, RMat::identity(2));
    CHECK(p.degree() == 3);
    p.set_coeff(3, RMat(2, 2));  // zero again -> trailing trimmed
    CHECK(p.degree() == 0);
    CHECK(p.is_zero());
    CHECK(example_vector_poly().leading_coeff() == RMat{{4}, {0}});
}

TEST_CASE("product, transpose and scalar scaling", "[matpoly]") {
    RPoly psi(2, 2, {RMat{{-1, 1}, {1, -1}}, RMat{{2, 0}, {0, 2}}});
    RPoly p = example_vector_poly();
    RPoly h = psi * p;  // (2(2y-1)^2 - 1, 2y-1)^t
    CHECK(h.coeff(0) == RMat{{1}, {-1}});
    CHECK(h.coeff(1) == RMat{{-8}, {2}});
    CHECK(h.coeff(2) == RMat{{8}, {0}});

    CHECK(psi.transpose() == psi);
    CHECK((p * Rational(1, 2)).coeff(1) == RMat{{2}, {0}});

    // y(1-y) * p
    RPoly yp = p.scale_by_poly({Rational(0), Rational(1), Rational(-1)});
    CHECK(yp.degree() == 3);
    CHECK(yp.coeff(1) == RMat{{-2}, {-1}});
    CHECK(yp.coeff(2) == RMat{{6}, {1}});
    CHECK(yp.coeff(3) == RMat{{-4}, {0}});
}

TEST_CASE("evaluation distributes over products at sample points", "[matpoly]") {
    RPoly psi(2, 2, {RMat{{-1, 1}, {1, -1}}, RMat{{2, 0}, {0, 2}}});
    RPoly p = example_vector_poly();
    for (long k = 1; k <= 7; ++k) {
        Rational y(k, 8);
        CHECK((psi * p).eval(y) == psi.eval(y) * p.eval(y));
    }
}

TEST_CASE("float and rational evaluation agree to 1e-12", "[matpoly]") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RMat> c;
        for (int k = 0; k <= 6; ++k) {
            RMat m(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) m(i, j) = Rational(num(rng), den(rng));
            c.push_back(std::move(m));
        }
        RPoly p(2, 2, std::move(c));
        MatPoly<double> pd = to_double(p);
        // relative to the coefficient scale; the value itself may cancel
        double scale = 1.0;
        for (int k = 0; k <= p.degree(); ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    scale = std::max(scale, std::abs(p.coeff(k)(i, j).to_double()));
        for (long k = 1; k <= 5; ++k) {
            Rational y(k, 6);
            RMat vr = p.eval(y);
            Matrix<double> vd = pd.eval(y.to_double());
            Matrix<double> dr = to_double(p.derivative().eval(y));
            Matrix<double> dd = pd.derivative().eval(y.to_double());
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    CHECK(std::abs(vd(i, j) - vr(i, j).to_double()) <= 1e-12 * scale);
                    CHECK(std::abs(dd(i, j) - dr(i, j)) <= 1e-12 * scale);
                }
        }
    }
}

TEST_CASE("scalar poly helpers", "[matpoly]") {
    auto s = scalar_poly<Rational>({Rational(1), Rational(0), Rational(-3)});
    CHECK(s.degree() == 2);
    CHECK(scalar_coeffs(s) == std::vector<Rational>{1, 0, -3});
    CHECK_THROWS_AS(scalar_coeffs(example_vector_poly()), DomainError);
}
