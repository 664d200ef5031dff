// Builds the smallest size-2 family, prints its eigenfunctions up to w = 3,
// and spot-checks the radial conjugation at a few points.

#include <cstdio>

#include "mvop/mvop.hpp"

int main() {
    using namespace mvop;
    SphericalFamily f = build_family(4, 1);
    std::printf("family %s, dims (%ld, %ld), norm const %s\n", f.id().c_str(), f.dims[0],
                f.dims[1], f.norm_const.str().c_str());
    for (long w = 0; w <= 3; ++w) {
        for (int delta : admissible_deltas(f)) {
            SolvedPolynomial sol = construct_P(f, EigKey{w, delta});
            std::printf("w=%ld delta=%d lambda=%s  P = [", w, delta, sol.lambda.str().c_str());
            for (int k = 0; k <= sol.P.degree(); ++k)
                std::printf("%s(%s, %s)", k ? " + y^k " : "", sol.P.coeff(k)(0, 0).str().c_str(),
                            sol.P.coeff(k)(1, 0).str().c_str());
            std::printf("]\n");
        }
    }
    SolvedPolynomial sol = construct_P(f, EigKey{2, 0});
    for (double y : {0.2, 0.5, 0.8}) {
        CVector lhs = radial_apply(f, sol, y);
        CVector h = eval_H(f, sol, y);
        std::printf("y=%.1f  |D~H - lambda H| = %.3e\n", y,
                    std::abs(lhs[0] - sol.lambda.to_double() * h[0]));
    }
    return 0;
}
