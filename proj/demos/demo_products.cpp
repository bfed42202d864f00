// Worked example: structure constants on the full flag variety of type B2
// and their behavior under the two degenerations of the cup product.
//
// Build and run:
//   cmake --build build --target demo_products && ./build/demos/demo_products

#include <iostream>

#include "schub/deform.hpp"
#include "schub/notation.hpp"

using namespace schub;

int main() {
    RootSystem rs(parse_cartan_type("B2"));
    FlagContext fc(rs, ParabolicData::full_flag(rs));
    DeformTable dt(fc);
    const WeylGroup& W = fc.group();

    std::cout << "Full flag variety of type B2: " << fc.num_classes() << " Schubert classes, dimension " << fc.dim()
              << "\n\n";

    // Every pairwise product, with each class shown both as a reduced word
    // and as a signed window, and each constant tagged by which limits of
    // the deformed product keep it.
    for (int pu = 0; pu < fc.num_classes(); ++pu) {
        for (int pv = pu; pv < fc.num_classes(); ++pv) {
            auto expansion = fc.product(pu, pv);
            if (expansion.empty()) continue;
            std::cout << "sigma[" << format_word(W, fc.rep(pu)) << "] * sigma[" << format_word(W, fc.rep(pv))
                      << "] =\n";
            for (const auto& [pw, c] : expansion) {
                std::cout << "    " << c.str() << " * sigma[" << format_word(W, fc.rep(pw)) << "]   (window "
                          << format_window(W, fc.rep(pw)) << ")";
                bool bk = dt.bk_survives(pu, pv, pw);
                bool s0 = dt.star0_survives(pu, pv, pw);
                if (bk)
                    std::cout << "   kept by both degenerate products";
                else if (s0)
                    std::cout << "   kept by the star-0 product only";
                else
                    std::cout << "   killed by both degenerate products";
                std::cout << "\n";
            }
        }
    }

    // One coefficient in full detail: the exponent ledger records, for each
    // associated simple root, how the inversion-set multiplicities of w
    // compare with those of u and v combined.
    int pu = fc.pos_of(parse_element(W, "s1", Notation::word));
    int pv = fc.pos_of(parse_element(W, "s2 s1", Notation::word));
    std::cout << "\nLedger for sigma[s1] * sigma[s2 s1]:\n";
    for (const auto& [pw, c] : fc.product(pu, pv)) {
        DeformedCoefficient dc = dt.star_ts_coefficient(pu, pv, pw);
        std::cout << "  w = " << format_word(W, fc.rep(pw)) << ": c = " << c.str() << ", per-root (s1-degree diff, "
                  << "s0-degree diff):";
        for (std::size_t a = 0; a < dc.assoc.size(); ++a)
            std::cout << "  alpha" << dc.assoc[a] + 1 << " -> (" << dc.s1_degree_diff[a] << ", "
                      << dc.s0_degree_diff[a] << ")";
        std::cout << "\n";
    }
    return 0;
}
