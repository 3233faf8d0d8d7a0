#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "expr.hpp"
#include "graded_poly.hpp"
#include "weyl_op.hpp"

namespace da1 {

// The cyclic group of order n acts on the line with x -> z^{-1} x for a
// primitive root z, hence d -> z d and xi -> z xi.  A monomial x^i d^j is
// scaled by z^{j-i}, so its weight is (j - i) mod n and the invariants are
// exactly the weight-zero span.  Averaging over the group is therefore a
// termwise projection and needs no cyclotomic arithmetic.

/// Weight of x^i d^j (or x^i xi^j) under the order-n action, in [0, n).
inline int weight(int i, int j, int n) {
    if (n <= 0) throw std::invalid_argument("weight: n must be positive");
    int w = (j - i) % n;
    return w < 0 ? w + n : w;
}

/// Projection onto the invariants: keeps the weight-zero terms.
inline WeylOp reynolds(const WeylOp& D, int n) {
    WeylOp r;
    for (const auto& [k, c] : D.terms())
        if (weight(k.first, k.second, n) == 0) r.add_term(k.first, k.second, c);
    return r;
}

inline GradedPoly reynolds(const GradedPoly& p, int n) {
    GradedPoly r;
    for (const auto& [k, c] : p.terms())
        if (weight(k.first, k.second, n) == 0) r.add_term(k.first, k.second, c);
    return r;
}

inline bool is_invariant(const WeylOp& D, int n) { return reynolds(D, n) == D; }
inline bool is_invariant(const GradedPoly& p, int n) { return reynolds(p, n) == p; }

/// The common weight of all terms, when there is one.  The zero element is
/// reported as pure of weight 0.
inline std::optional<int> pure_weight(const WeylOp& D, int n) {
    std::optional<int> w;
    for (const auto& [k, c] : D.terms()) {
        int t = weight(k.first, k.second, n);
        if (!w) {
            w = t;
        } else if (*w != t) {
            return std::nullopt;
        }
    }
    return w ? w : std::optional<int>(0);
}

/// Monomial basis of the invariant operators with i + j <= max_total,
/// listed in ascending (i + j, i) order.
inline std::vector<WeylOp> invariant_basis(int n, int max_total) {
    if (max_total < 0) throw std::invalid_argument("invariant_basis: negative cap");
    std::vector<WeylOp> out;
    for (int total = 0; total <= max_total; ++total)
        for (int i = 0; i <= total; ++i) {
            int j = total - i;
            if (weight(i, j, n) == 0) out.push_back(WeylOp::monomial(i, j));
        }
    return out;
}

/// Checks the retraction identity: averaging commutes with multiplication
/// by invariant flanks, i.e. reynolds(A D B) = A reynolds(D) B.
inline bool retraction_check(const WeylOp& A, const WeylOp& B, const WeylOp& D, int n) {
    if (!is_invariant(A, n))
        throw non_invariant_flank("left flank is not invariant: " + to_string(A));
    if (!is_invariant(B, n))
        throw non_invariant_flank("right flank is not invariant: " + to_string(B));
    return reynolds(A * D * B, n) == A * reynolds(D, n) * B;
}

} // namespace da1
