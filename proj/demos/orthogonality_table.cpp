// Prints exact Gram diagonals for the size-3 family with ell = 1.

#include <cstdio>

#include "mvop/mvop.hpp"

int main() {
    using namespace mvop;
    SphericalFamily f = build_family_top(1);
    GramReport rep = gram_sequence(f, 4);
    std::printf("family %s, off-diagonal blocks all zero: %s\n", f.id().c_str(),
                rep.pass ? "yes" : "NO");
    for (size_t w = 0; w < rep.blocks.size(); ++w) {
        std::printf("w=%zu diag:", w);
        const auto& g = rep.blocks[w][w];
        for (int i = 0; i < g.rows(); ++i) std::printf(" %s", g(i, i).str().c_str());
        std::printf("\n");
    }
    return 0;
}
