#include <catch2/catch.hpp>

#include "mvop/verify.hpp"

using namespace mvop;
using RMat = Matrix<Rational>;
using RPoly = MatPoly<Rational>;

namespace {

RPoly unit_poly(int size, int at) {
    RMat e(size, 1);
    e(at, 0) = 1;
    return RPoly(e);
}

// Independent moment oracle, even n: expand (1-y)^m binomially and integrate
// monomials. Shares nothing with the Gamma-ratio implementation.
Rational moment_oracle_even(long k, int n) {
    long m = n / 2 - 1;
    Rational acc(0);
    Rational sign(1);
    for (long i = 0; i <= m; ++i) {
        acc += sign * binomial(m, i) / Rational(k + m + i + 1);
        sign = -sign;
    }
    return acc;
}

}  // namespace

TEST_CASE("moment fixtures", "[verify]") {
    CHECK(moment(0, build_family(4, 1)) == PiRational(Rational(1, 6)));
    CHECK(moment(0, build_family_top(1)) == PiRational(Rational(1, 8), 1));  // pi/8
    // odd symmetry about 1/2: int (2y-1) (y(1-y))^{n/2-1} dy = 0
    for (int n = 3; n <= 9; ++n) {
        SphericalFamily f = (n % 2 == 1) ? build_family_top(n / 2) : build_family(n, 1);
        CHECK(moment(1, f) * Rational(2) == moment(0, f));
    }
}

TEST_CASE("moments match an independent binomial-expansion oracle", "[verify]") {
    for (int n : {4, 6, 8}) {
        SphericalFamily f = build_family(n, 1);
        for (long k = 0; k <= 25; ++k)
            CHECK(moment(k, f) == PiRational(moment_oracle_even(k, n)));
    }
}

TEST_CASE("odd moments match the half-integer Beta recurrence", "[verify]") {
    // hand-computed bases B(m+3/2, m+3/2) and the ratio
    // moment(k)/moment(k-1) = (k + m + 1/2)/(k + 2m + 2)
    struct Base {
        int ell;
        Rational b0;
    };
    for (const auto& [ell, b0] : {Base{1, Rational(1, 8)}, Base{2, Rational(3, 128)},
                                  Base{3, Rational(5, 1024)}, Base{4, Rational(35, 32768)}}) {
        SphericalFamily f = build_family_top(ell);
        long m = (f.n - 3) / 2;
        PiRational expect(b0, 1);
        CHECK(moment(0, f) == expect);
        for (long k = 1; k <= 25; ++k) {
            expect = expect * (Rational(2 * k + 2 * m + 1) / Rational(2 * (k + 2 * m + 2)));
            CHECK(moment(k, f) == expect);
        }
    }
}

TEST_CASE("moment pi-grade equals the parity of n", "[verify]") {
    for (int n = 3; n <= 9; ++n) {
        SphericalFamily f = (n % 2 == 1) ? build_family_top(n / 2) : build_family(n, 1);
        for (long k = 0; k <= 40; ++k) CHECK(moment(k, f).pi_power() == n % 2);
    }
}

TEST_CASE("inner product fixtures", "[verify]") {
    SphericalFamily f = build_family(4, 1);
    RPoly e1 = unit_poly(2, 0), e2 = unit_poly(2, 1);
    CHECK(inner_product(f, e1, e2).is_zero());
    Matrix<PiRational> g11 = inner_product(f, e1, e1);
    CHECK(g11(0, 0) == PiRational(Rational(8, 5), -1));  // 8/(5 pi)

    SolvedPolynomial p00 = construct_P(f, {0, 0});
    SolvedPolynomial p10 = construct_P(f, {1, 0});
    CHECK(inner_product(f, p10.P, p00.P).is_zero());
}

TEST_CASE("gram fixtures", "[verify]") {
    SphericalFamily f = build_family(4, 1);
    GramReport g0 = gram_sequence(f, 0);
    REQUIRE(g0.pass);
    CHECK(g0.blocks[0][0](0, 0) == PiRational(Rational(8, 5), -1));
    CHECK(g0.blocks[0][0](1, 1) == PiRational(Rational(4, 5), -1));
    CHECK(g0.blocks[0][0](0, 1).is_zero());

    CHECK(gram_sequence(build_family(5, 1), 3).pass);
    CHECK(gram_sequence(build_family_top(1), 2).pass);
}

TEST_CASE("diagonal gram entries are positive with the family pi-grade", "[verify]") {
    for (const auto& f : {build_family(4, 1), build_family(5, 1), build_family_top(1)}) {
        GramReport g = gram_sequence(f, 3);
        REQUIRE(g.pass);
        int grade = (f.n % 2 == 1) ? 1 : -1;
        for (size_t w = 0; w < g.blocks.size(); ++w)
            for (int i = 0; i < f.size; ++i) {
                CHECK(g.blocks[w][w](i, i).sign() > 0);
                CHECK(g.blocks[w][w](i, i).pi_power() == grade);
            }
    }
}

TEST_CASE("operator symmetry fixtures", "[verify]") {
    SphericalFamily f = build_family(4, 1);
    RPoly e1 = unit_poly(2, 0);
    RPoly ye2(2, 1, {RMat(2, 1), RMat{{0}, {1}}});
    CHECK(check_symmetry(f, e1, e1).is_zero());
    CHECK(check_symmetry(f, e1, ye2).is_zero());

    std::mt19937_64 rng(20140707);
    for (const auto& fam : {build_family(4, 1), build_family(6, 2), build_family_top(2)}) {
        for (int trial = 0; trial < 50; ++trial) {
            RPoly a = random_vector_poly(fam.size, 6, rng);
            RPoly b = random_vector_poly(fam.size, 6, rng);
            REQUIRE(check_symmetry(fam, a, b).is_zero());
        }
    }
}

TEST_CASE("weight positivity fixtures", "[verify]") {
    SphericalFamily f = build_family(4, 1);
    CHECK(check_positivity_at(f, Rational(1, 2)));
    CHECK(check_positivity_at(f, Rational(1, 4)));
    CHECK_THROWS_AS(check_positivity_at(f, Rational(1)), DomainError);

    SphericalFamily t = build_family_top(1);
    for (auto y : {Rational(1, 10), Rational(1, 2), Rational(9, 10)})
        CHECK(check_positivity_at(t, y));

    auto many = check_positivity(f, {Rational(1, 26), Rational(13, 26), Rational(25, 26)});
    CHECK(std::all_of(many.begin(), many.end(), [](bool b) { return b; }));
}

TEST_CASE("size-3 reduction identities hold exactly", "[verify]") {
    CHECK(check_reduction3(1, {Rational(1, 3)}).is_zero());
    CHECK(check_reduction3(2, {Rational(1, 2)}).is_zero());
    for (int ell : {1, 2, 3}) CHECK(check_reduction3(ell, {Rational(1)}).is_zero());
}

TEST_CASE("size-2 weights show no simultaneous reduction", "[verify]") {
    CHECK(check_irreducibility_heuristic(build_family(4, 1)));
    CHECK(check_irreducibility_heuristic(build_family(5, 1)));
    CHECK_THROWS_AS(check_irreducibility_heuristic(build_family_top(1)), DomainError);
}

TEST_CASE("full suite passes in exact mode", "[verify]") {
    auto failures = [](const VerifyReport& rep) {
        std::string s;
        for (const auto& c : rep.checks)
            if (!c.pass) s += c.name + "(" + c.residual + ") ";
        return s;
    };
    for (const auto& f : {build_family(4, 1), build_family(6, 2)}) {
        VerifyReport rep = run_suite(f, 8);
        INFO(failures(rep));
        CHECK(rep.pass());
    }
    VerifyReport t = run_suite(build_family_top(1), 6);
    INFO(failures(t));
    CHECK(t.pass());
    VerifyReport s = run_suite(build_scalar_family(2, 1), 8);
    INFO(failures(s));
    CHECK(s.pass());
}

TEST_CASE("float suite honors the tolerance", "[verify]") {
    VerifyReport ok = run_suite(build_family(4, 1), 4, 1e-9, Mode::Float);
    CHECK(ok.pass());
    VerifyReport tight = run_suite(build_family(4, 1), 4, 1e-300, Mode::Float);
    CHECK_FALSE(tight.pass());
    CHECK_THROWS_AS(run_suite(build_family(4, 1), 4, 0.0), DomainError);
}
