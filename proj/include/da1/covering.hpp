#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace da1 {

/// One branch fiber of a polynomial covering q : A^1 -> A^1: the critical
/// value, the local indices e >= 2 of the ramified preimages (descending),
/// and the number of unramified sheets completing the fiber to deg q.
struct Fiber {
    Rational branch_value;
    std::vector<int> indices;
    int unramified = 0;
};

struct RamificationProfile {
    int degree = 0;
    int infinity_index = 0; // a polynomial is totally ramified at infinity
    std::vector<Fiber> fibers; // sorted by branch value
};

/// Ramification data of the covering given by q.  A root of q' of
/// multiplicity mu is a point of local index mu + 1 in the fiber over its
/// critical value, so only q' needs to split over the rationals; the
/// remaining sheets of each fiber are unramified and just counted.
inline RamificationProfile ramification_profile(const Poly& q) {
    int d = q.degree();
    if (d < 1)
        throw std::invalid_argument("ramification_profile: q must be nonconstant");
    RamificationProfile prof;
    prof.degree = d;
    prof.infinity_index = d;
    if (d == 1) return prof;

    auto crit = split_completely(q.derivative());
    if (!crit)
        throw unsupported_factorization(
            "ramification_profile: q' has irrational roots");

    std::map<Rational, std::vector<int>> fibers;
    for (const auto& [x0, mu] : *crit) fibers[q.eval(x0)].push_back(mu + 1);
    for (auto& [c, indices] : fibers) {
        std::sort(indices.begin(), indices.end(), std::greater<int>());
        int covered = 0;
        for (int e : indices) covered += e;
        prof.fibers.push_back(Fiber{c, std::move(indices), d - covered});
    }
    return prof;
}

/// True when every branch fiber consists of equal indices and nothing
/// else: no unramified sheet sits over a critical value.
inline bool uniform_ramified(const RamificationProfile& prof) {
    for (const auto& f : prof.fibers) {
        if (f.unramified != 0) return false;
        for (int e : f.indices)
            if (e != f.indices.front()) return false;
    }
    return true;
}

inline bool uniform_ramified(const Poly& q) {
    return uniform_ramified(ramification_profile(q));
}

/// Euler-count identity for the covering compactified with one totally
/// ramified point at infinity:
///
///     -2 = -2 d + sum_fibers sum (e - 1) + (d - 1)
///
/// i.e. the affine ramification contributes exactly d - 1.  This holds
/// for every polynomial, so a false return flags a profile bug.
inline bool hurwitz_check(const RamificationProfile& prof) {
    int affine = 0;
    for (const auto& f : prof.fibers)
        for (int e : f.indices) affine += e - 1;
    return affine == prof.degree - 1;
}

inline bool hurwitz_check(const Poly& q) {
    return hurwitz_check(ramification_profile(q));
}

/// Detects q = lead (x - a)^d + const, returning (a, d).
inline std::optional<std::pair<Rational, int>> shifted_pure_power(const Poly& q) {
    int d = q.degree();
    if (d < 1) return std::nullopt;
    Rational a = -(q.coeff(d - 1) / q.leading_coeff()) / d;
    Poly model =
        Poly::constant(q.leading_coeff()) *
            (Poly::monomial(1) - Poly::constant(a)).pow(d) +
        Poly::constant(q.eval(a));
    if (!(model == q)) return std::nullopt;
    return std::make_pair(a, d);
}

} // namespace da1
