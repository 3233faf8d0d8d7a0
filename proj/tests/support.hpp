#pragma once

#include <random>

#include <da1/graded_poly.hpp>
#include <da1/poly.hpp>
#include <da1/rational.hpp>
#include <da1/weyl_op.hpp>

namespace da1::testing {

// All generators take the engine by reference so each test owns a fixed seed
// and stays reproducible in isolation.
using Rng = std::mt19937;

inline Rational rand_rational(Rng& g, int range = 6) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    return Rational(num(g), den(g));
}

inline Rational rand_nonzero_rational(Rng& g, int range = 6) {
    for (;;) {
        Rational q = rand_rational(g, range);
        if (q != 0) return q;
    }
}

inline Poly rand_poly(Rng& g, int max_deg = 5, int terms = 3) {
    std::uniform_int_distribution<int> exp(0, max_deg);
    Poly p;
    for (int t = 0; t < terms; ++t) p.add_term(exp(g), rand_rational(g));
    return p;
}

inline Poly rand_nonzero_poly(Rng& g, int max_deg = 5, int terms = 3) {
    for (;;) {
        Poly p = rand_poly(g, max_deg, terms);
        if (!p.is_zero()) return p;
    }
}

inline WeylOp rand_weyl(Rng& g, int max_x = 4, int max_d = 4, int terms = 3) {
    std::uniform_int_distribution<int> xe(0, max_x);
    std::uniform_int_distribution<int> de(0, max_d);
    WeylOp p;
    for (int t = 0; t < terms; ++t) p.add_term(xe(g), de(g), rand_rational(g));
    return p;
}

inline WeylOp rand_nonzero_weyl(Rng& g, int max_x = 4, int max_d = 4, int terms = 3) {
    for (;;) {
        WeylOp p = rand_weyl(g, max_x, max_d, terms);
        if (!p.is_zero()) return p;
    }
}

inline GradedPoly rand_graded(Rng& g, int max_x = 4, int max_xi = 4, int terms = 3) {
    std::uniform_int_distribution<int> xe(0, max_x);
    std::uniform_int_distribution<int> ke(0, max_xi);
    GradedPoly p;
    for (int t = 0; t < terms; ++t) p.add_term(xe(g), ke(g), rand_rational(g));
    return p;
}

} // namespace da1::testing
