#pragma once

#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"
#include "weyl_op.hpp"

namespace da1 {

/// Covering of the line given by t = (x - center)^exponent.  Operators can
/// be tested for preserving C[t] exactly in this case.
struct PurePower {
    Rational center;
    int exponent = 1;
};

/// Covering given by an arbitrary nonconstant polynomial t = q(x).  The
/// membership test is then a bounded heuristic.
struct GeneralPoly {
    Poly q;
    int bound = 0; // powers checked; <= 0 picks a default
};

using Covering = std::variant<PurePower, GeneralPoly>;

struct DxyResult {
    bool member = false;
    bool exact = false;                // complete test (pure-power coverings)
    std::optional<int> failing_power;  // smallest k with D(t^k) outside C[t]
    Poly residue;                      // the part of D(t^k) outside C[t]
    std::optional<int> bound_used;     // for heuristic coverings
};

namespace detail {

/// Split f into its C[(x-a)^m] part and the rest; returns the rest.
inline Poly pure_power_residue(const Poly& f, const Rational& a, int m) {
    Poly in_u = f.shifted(a);
    Poly bad;
    for (const auto& [e, c] : in_u.terms())
        if (e % m != 0) bad.add_term(e, c);
    return bad.shifted(-a);
}

/// Split f into its C[q] part and the rest by repeated leading-term
/// elimination; complete for membership since the q^s have distinct degrees.
inline Poly general_residue(const Poly& f, const Poly& q) {
    const int dq = q.degree();
    Poly r = f;
    while (!r.is_zero() && r.degree() > 0) {
        int dr = r.degree();
        if (dr % dq != 0) return r;
        int s = dr / dq;
        Poly qs = q.pow(s);
        r -= (r.leading_coeff() / qs.leading_coeff()) * qs;
    }
    return Poly(); // a remaining constant lies in C[q]
}

} // namespace detail

/// Does D map C[t] into C[t] for the covering t?  Pure-power coverings are
/// decided exactly: an operator of order r preserves C[(x-a)^m] as soon as
/// it maps the powers t^0, ..., t^r into it, because the discrepancy in
/// each u-degree is a polynomial of degree at most r in the exponent and
/// r+1 vanishing values force it to vanish identically.  For general
/// coverings the powers t^0, ..., t^K are checked for a finite K.
inline DxyResult dxy_member(const WeylOp& D, const Covering& cov) {
    DxyResult res;
    const int order = D.order().value_or(0);

    if (const auto* pp = std::get_if<PurePower>(&cov)) {
        if (pp->exponent <= 0)
            throw std::invalid_argument("dxy_member: exponent must be positive");
        res.exact = true;
        Poly u = Poly::variable() - Poly::constant(pp->center);
        Poly t = u.pow(pp->exponent);
        for (int k = 0; k <= order; ++k) {
            Poly bad = detail::pure_power_residue(D.apply(t.pow(k)), pp->center,
                                                  pp->exponent);
            if (!bad.is_zero()) {
                res.member = false;
                res.failing_power = k;
                res.residue = bad;
                return res;
            }
        }
        res.member = true;
        return res;
    }

    const auto& gp = std::get<GeneralPoly>(cov);
    if (gp.q.degree() < 1)
        throw std::invalid_argument("dxy_member: covering polynomial must be nonconstant");
    const int bound = gp.bound > 0 ? gp.bound : order + gp.q.degree() + 4;
    res.exact = false;
    res.bound_used = bound;
    for (int k = 0; k <= bound; ++k) {
        Poly bad = detail::general_residue(D.apply(gp.q.pow(k)), gp.q);
        if (!bad.is_zero()) {
            res.member = false;
            res.failing_power = k;
            res.residue = bad;
            return res;
        }
    }
    res.member = true;
    return res;
}

/// Sanity check that the members found among gens really behave like a
/// subalgebra: random products of them must again be members.  Uses a fixed
/// seed, so runs are reproducible.
inline bool dxy_closure_check(const std::vector<WeylOp>& gens, const Covering& cov,
                              int samples = 25) {
    std::vector<WeylOp> members;
    for (const auto& g : gens)
        if (dxy_member(g, cov).member) members.push_back(g);
    if (members.empty()) return true;

    std::mt19937 rng(0xda1u);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    std::uniform_int_distribution<int> len(2, 4);
    for (int s = 0; s < samples; ++s) {
        WeylOp prod = WeylOp::constant(1);
        int L = len(rng);
        for (int t = 0; t < L; ++t) prod = prod * members[pick(rng)];
        if (!dxy_member(prod, cov).member) return false;
    }
    return true;
}

} // namespace da1
