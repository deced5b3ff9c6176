// Compute the K-groups of G(8,3) end to end and print the pieces the library
// exposes along the way: the presentation, the eliminated form, both engines'
// answers, and the ring structure on the monomial generators.

#include <iostream>

#include "gkt/ktheory.hpp"

using namespace gkt;

int main() {
    KPresentation pres = build_presentation(8, 3);
    std::cout << "presentation of K0(G(8,3)) in " << pres.vars.size() << " variables:\n";
    for (auto& g : pres.ideal_I) std::cout << "  " << to_text(g) << "\n";

    ReducedPresentation red = eliminate_mu(pres);
    std::cout << "\nafter eliminating the mu variables:\n";
    for (auto& g : red.ideal_I) std::cout << "  " << to_text(g) << "\n";

    GBEngine gb = gb_engine(red);
    SchurEngine schur = schur_fast_path(red);
    std::cout << "\nK0 via strong Groebner basis: " << gb.q_full.group.to_string() << "\n";
    std::cout << "K0 via the structured basis:  " << schur.K0.to_string() << "\n";
    std::cout << "K1:                           "
              << compute_K1(GrassmannParams::exact_of(8, 3)).to_string() << "\n";
    std::cout << "order of [theta] - 1:         2^"
              << hopf_class_order(GrassmannParams::exact_of(8, 3)) << "\n";

    std::cout << "\nmonomial generators:";
    for (auto& m : gb.q_full.monomial_generators)
        std::cout << " " << to_text(PolyZ::term(m, Int(1), true));
    std::cout << "\n\nmultiplication table:\n";
    for (auto& [key, value] : structure_table(gb))
        std::cout << "  " << key << " = " << value << "\n";
    return 0;
}
