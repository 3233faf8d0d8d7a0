// Geometry side of the library: ramification profiles of polynomial
// coverings, the uniformity tests (abelian and symmetric-group), and the
// containment lattice of cyclic invariant algebras.

#include <iostream>
#include <vector>

#include <da1/covering.hpp>
#include <da1/expr.hpp>
#include <da1/invariants.hpp>
#include <da1/permutation.hpp>
#include <da1/subalgebra.hpp>

using namespace da1;

static void show_profile(const Poly& q) {
    std::cout << "q = " << to_string(q, "x") << "\n";
    RamificationProfile pr = ramification_profile(q);
    std::cout << "  degree " << pr.degree << ", index " << pr.infinity_index
              << " at infinity\n";
    for (const auto& f : pr.fibers) {
        std::cout << "  branch value " << to_string(f.branch_value) << ": indices {";
        for (std::size_t t = 0; t < f.indices.size(); ++t)
            std::cout << (t ? ", " : "") << f.indices[t];
        std::cout << "}";
        if (f.unramified) std::cout << " plus " << f.unramified << " unramified";
        std::cout << "\n";
    }
    std::cout << "  uniformly ramified: " << (uniform_ramified(pr) ? "yes" : "no")
              << ", degree accounting: " << (hurwitz_check(pr) ? "ok" : "BROKEN")
              << "\n\n";
}

int main() {
    // the cuspidal cubic branches over two points; neither fiber is uniform
    show_profile(parse_poly("x^3 - x^2"));

    // a shifted pure power has a single totally ramified fiber
    Poly pure = parse_poly("2 x^4 - 24 x^3 + 108 x^2 - 216 x + 167");
    show_profile(pure);
    if (auto sp = shifted_pure_power(pure))
        std::cout << "recognized as lead (x - " << to_string(sp->first) << ")^"
                  << sp->second << " plus a constant\n\n";

    // symmetric-group uniformity is a transposition search in the monodromy
    std::cout << "<(1 2 3)> in S_3 uniform: "
              << (sn_uniform({"(1 2 3)"}, 3) ? "yes" : "no") << "\n";
    std::cout << "<(1 2), (1 2 3 4)> in S_4 uniform: "
              << (sn_uniform({"(1 2)", "(1 2 3 4)"}, 4) ? "yes" : "no") << "\n\n";

    // invariants of the finer cyclic group sit inside the coarser ones, with
    // explicit certificates; the reverse inclusions die on a weight count
    FilteredGenSet g3(std::vector<WeylOp>{WeylOp::monomial(3, 0),
                                          WeylOp::monomial(1, 1),
                                          WeylOp::monomial(0, 3)});
    WordSpan span3(g3, SearchBounds{4, 24, 24});
    WeylOp x6 = WeylOp::monomial(6, 0);
    if (auto cert = span3.member(x6))
        std::cout << to_string(x6) << " inside the mu_3 invariants: "
                  << cert->to_string() << "\n";
    WeylOp x3 = WeylOp::monomial(3, 0);
    auto w = pure_weight(x3, 6);
    std::cout << to_string(x3) << " has weight " << (w ? *w : -1)
              << " mod 6, so it cannot lie in the mu_6 invariants\n";
    return 0;
}
