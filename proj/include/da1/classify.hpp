#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "subalgebra.hpp"
#include "twist.hpp"
#include "weyl_op.hpp"

namespace da1 {

/// Classification datum of a filtered subalgebra: center a, covering
/// degree m, and twist p.  The attached algebra is generated by u^m and
/// eta^m where u = x - a and eta = d + p.
struct Triple {
    Rational a;
    int m = 1;
    Poly p;
};

inline bool operator==(const Triple& s, const Triple& t) {
    return s.m == t.m && s.a == t.a && s.p == t.p;
}

/// Normal form of a datum.  For m = 1 the algebra is all of D(A^1)
/// whatever a and p are, so both are dropped; otherwise p is replaced by
/// its canonical representative about a (no u-exponent = m - 1 mod m).
inline Triple make_triple(const Rational& a, int m, const Poly& p) {
    if (m < 1) throw std::invalid_argument("make_triple: m must be positive");
    if (m == 1) return Triple{Rational(0), 1, Poly()};
    return Triple{a, m, canonicalize_p(p, m, a).p};
}

/// The two generators attached to a triple, named um and etam.
inline FilteredGenSet forward(const Triple& t) {
    Poly u = Poly::monomial(1) - Poly::constant(t.a);
    WeylOp eta = WeylOp::d() + WeylOp::from_poly(t.p);
    return FilteredGenSet({NamedOp{"um", WeylOp::from_poly(u).pow(t.m)},
                           NamedOp{"etam", eta.pow(t.m)}});
}

enum class Verdict { Holds, Fails, Unknown };

/// Proof that an operator lies outside an algebra: after untwisting by
/// twist_p and recentering at center, every generator of the algebra is
/// concentrated in weight 0 mod modulus while the operator is not.
/// Weights add along products, so the whole algebra stays in weight 0.
struct Obstruction {
    WeylOp target;
    Rational center;
    int modulus = 0;
    Poly twist_p;
};

struct NamedCert {
    std::string name;
    Certificate cert;
};

struct VerifyResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<NamedCert> forward_certs; // triple generators inside the given algebra
    std::vector<NamedCert> reverse_certs; // given generators inside the triple algebra
    std::optional<Obstruction> obstruction;
};

namespace detail {

struct TwistStructure {
    Rational a;
    int m = 1;
    Poly p;
};

inline std::optional<int> structure_weight(const WeylOp& D, const TwistStructure& s) {
    return pure_weight(untwist(D, s.p).translated(s.a), s.m);
}

inline std::optional<Obstruction> find_obstruction(
    const WeylOp& target, const std::vector<WeylOp>& ambient_gens,
    const std::vector<TwistStructure>& structures) {
    for (const auto& s : structures) {
        if (s.m < 2) continue;
        bool all_pure = true;
        for (const auto& g : ambient_gens)
            if (structure_weight(g, s) != std::optional<int>(0)) {
                all_pure = false;
                break;
            }
        if (!all_pure) continue;
        if (structure_weight(target, s) != std::optional<int>(0))
            return Obstruction{target, s.a, s.m, s.p};
    }
    return std::nullopt;
}

inline VerifyResult verify_impl(const Triple& t, const FilteredGenSet& gens,
                                const WordSpan& span_g, const SearchBounds& bounds) {
    VerifyResult res;
    FilteredGenSet fwd = forward(t);
    WordSpan span_f(fwd, bounds);

    std::vector<TwistStructure> structures{{t.a, t.m, t.p},
                                           {Rational(0), t.m, Poly()},
                                           {t.a, t.m, Poly()},
                                           {Rational(0), t.m, t.p}};
    std::vector<WeylOp> gen_ops, fwd_ops;
    for (const auto& g : gens.gens()) gen_ops.push_back(g.op);
    for (const auto& g : fwd.gens()) fwd_ops.push_back(g.op);

    bool unknown = false;
    for (const auto& g : fwd.gens()) {
        if (auto c = span_g.member(g.op)) {
            res.forward_certs.push_back({g.name, *c});
        } else if (auto ob = find_obstruction(g.op, gen_ops, structures)) {
            res.verdict = Verdict::Fails;
            res.obstruction = ob;
            return res;
        } else {
            unknown = true;
        }
    }
    for (const auto& g : gens.gens()) {
        if (auto c = span_f.member(g.op)) {
            res.reverse_certs.push_back({g.name, *c});
        } else if (auto ob = find_obstruction(g.op, fwd_ops, structures)) {
            res.verdict = Verdict::Fails;
            res.obstruction = ob;
            return res;
        } else {
            unknown = true;
        }
    }
    res.verdict = unknown ? Verdict::Unknown : Verdict::Holds;
    return res;
}

} // namespace detail

/// Decides, within the search bounds, whether the algebra generated by
/// gens equals the algebra of the triple.  Holds comes with membership
/// certificates both ways; Fails comes with a weight obstruction and is
/// unconditional; otherwise Unknown.
inline VerifyResult verify_triple(const Triple& t, const FilteredGenSet& gens,
                                  const SearchBounds& bounds = {}) {
    WordSpan span_g(gens, bounds);
    return detail::verify_impl(t, gens, span_g, bounds);
}

struct Classification {
    Triple triple;
    VerifyResult verification; // always Holds when returned by classify
};

/// Recovers the triple of the algebra generated by gens, when the search
/// bounds allow it.
///
/// The base of the span pins down m and a: its smallest nonconstant
/// element must be (x - a)^m + const, and every other base element a
/// polynomial in (x - a)^m, else InconsistentBase.  The twist is read off
/// a first-order element (x - a) d + q(x) found by solving for the d-part
/// alone; q determines p up to exactly the ambiguity that canonicalization
/// removes.  The candidate triple is accepted only if verify_triple holds.
inline std::optional<Classification> classify(const FilteredGenSet& gens,
                                              const SearchBounds& bounds = {}) {
    WordSpan span(gens, bounds);

    std::vector<Poly> base = span.base();
    const Poly* b = nullptr;
    for (const auto& q : base)
        if (q.degree() >= 1) {
            b = &q;
            break;
        }
    if (!b) return std::nullopt;
    int m = b->degree();

    if (m == 1) {
        Triple t = make_triple(Rational(0), 1, Poly());
        VerifyResult v = detail::verify_impl(t, gens, span, bounds);
        if (v.verdict != Verdict::Holds) return std::nullopt;
        return Classification{t, std::move(v)};
    }

    Rational a = -b->coeff(m - 1) / m;
    for (const auto& q : base) {
        if (q.degree() < 1) continue;
        Poly in_u = q.shifted(a);
        for (const auto& [e, c] : in_u.terms())
            if (e % m != 0)
                throw inconsistent_base(
                    q, "classify: base element is not a polynomial in (x - a)^m");
    }

    // Look for E = (x - a) d + q(x) in the span by solving on the d-part.
    using Span = WordSpan::Span;
    Span filtered;
    const auto& rows = span.span().rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Span::Vec v;
        for (const auto& [k, c] : rows[r].vec)
            if (k.second >= 1) v.emplace(k, c);
        if (!v.empty()) filtered.insert(std::move(v), (int)r);
    }
    Span::Vec target;
    target.emplace(std::make_pair(1, 1), Rational(1));
    if (a != 0) target.emplace(std::make_pair(0, 1), -a);
    auto beta = filtered.solve(std::move(target));
    if (!beta) return std::nullopt;

    WeylOp E;
    for (const auto& [r, c] : *beta)
        for (const auto& [k, rc] : rows[r].vec) E.add_term(k.first, k.second, c * rc);

    Poly q = E.d_coefficient(0);
    // Inside the model algebra q = (x - a) p + g((x - a)^m); the g-part
    // lands in the absorbable congruence class, so canonicalizing kills it.
    Poly p_raw = (q - Poly::constant(q.eval(a))).div_linear(a);
    Triple t = make_triple(a, m, p_raw);

    VerifyResult v = detail::verify_impl(t, gens, span, bounds);
    if (v.verdict != Verdict::Holds) return std::nullopt;
    return Classification{t, std::move(v)};
}

} // namespace da1
