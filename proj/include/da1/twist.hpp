#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"
#include "weyl_op.hpp"

namespace da1 {

/// The automorphism that fixes multiplication operators and sends
/// d -> d + p(x).  It preserves order and principal symbol, and twisting
/// by p then by q equals twisting by p + q.
inline WeylOp twist(const WeylOp& D, const Poly& p) {
    if (p.is_zero()) return D;
    WeylOp eta = WeylOp::d() + WeylOp::from_poly(p);
    std::vector<WeylOp> pows{WeylOp::constant(1)};
    WeylOp r;
    for (const auto& [k, c] : D.terms()) {
        while ((int)pows.size() <= k.second) pows.push_back(pows.back() * eta);
        r += WeylOp::monomial(k.first, 0, c) * pows[k.second];
    }
    return r;
}

inline WeylOp untwist(const WeylOp& D, const Poly& p) { return twist(D, -p); }

/// Trace of the degree-m cyclic covering centered at a: the multiplication
/// operator by f on the covering side is sent to multiplication by
///
///     tr(u^e) = m u^e   if m | e,   0 otherwise,      u = x - a,
///
/// extended linearly.  The result is again returned in the x coordinate.
inline Poly trace_poly(const Poly& f, int m, const Rational& a = Rational(0)) {
    if (m <= 0) throw std::invalid_argument("trace_poly: m must be positive");
    Poly in_u = f.shifted(a);
    Poly out;
    for (const auto& [e, c] : in_u.terms())
        if (e % m == 0) out.add_term(e, Rational(m) * c);
    return out.shifted(-a);
}

/// Twists by p and by p + m u^{m-1} r(u^m) give the same subalgebra once
/// intersected with the degree-m covering; the second summand is the part
/// that can be absorbed.  A twist datum is canonical when that part is
/// absent, i.e. p has no u-exponent congruent to m - 1 mod m.
inline bool is_canonical_twist(const Poly& p, int m, const Rational& a = Rational(0)) {
    if (m <= 0) throw std::invalid_argument("is_canonical_twist: m must be positive");
    Poly in_u = p.shifted(a);
    for (const auto& [e, c] : in_u.terms())
        if (e % m == m - 1) return false;
    return true;
}

struct CanonicalTwist {
    Poly p; // canonical part, in the x coordinate
    Poly r; // absorbed part, as a polynomial in its own variable t = u^m
};

/// Splits p = p_canon + m u^{m-1} r(u^m) along u-exponents mod m.
inline CanonicalTwist canonicalize_p(const Poly& p, int m, const Rational& a = Rational(0)) {
    if (m <= 0) throw std::invalid_argument("canonicalize_p: m must be positive");
    Poly in_u = p.shifted(a);
    Poly keep, r;
    for (const auto& [e, c] : in_u.terms()) {
        if (e % m == m - 1) {
            r.add_term((e - (m - 1)) / m, c / Rational(m));
        } else {
            keep.add_term(e, c);
        }
    }
    return CanonicalTwist{keep.shifted(-a), r};
}

} // namespace da1
