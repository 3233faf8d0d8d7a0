#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "graded_poly.hpp"
#include "linalg.hpp"
#include "roots.hpp"
#include "subalgebra.hpp"

namespace da1 {

struct NamedGraded {
    std::string name;
    GradedPoly p;
};

/// Finite generating set of a graded (bihomogeneous by usage) subalgebra
/// of C[x, xi].  Generators stay as given; the algorithms work with their
/// constant-stripped parts, and certificates substitute "name - c" for a
/// generator with constant term c, so they evaluate correctly against the
/// original generators.
class GradedGenSet {
public:
    GradedGenSet() = default;

    explicit GradedGenSet(const std::vector<GradedPoly>& ps) {
        std::vector<NamedGraded> named;
        for (std::size_t t = 0; t < ps.size(); ++t)
            named.push_back({"g" + std::to_string(t + 1), ps[t]});
        assign(std::move(named));
    }

    explicit GradedGenSet(std::vector<NamedGraded> named) { assign(std::move(named)); }

    const std::vector<NamedGraded>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    std::map<std::string, GradedPoly> env() const {
        std::map<std::string, GradedPoly> e;
        for (const auto& g : gens_) e.emplace(g.name, g.p);
        return e;
    }

    struct Working {
        GradedPoly p;     // constant-stripped, nonzero
        Certificate atom; // evaluates to p against the original generators
    };

    /// The constant-stripped nonconstant generators, with certificates.
    std::vector<Working> working() const {
        std::vector<Working> out;
        for (const auto& g : gens_) {
            GradedPoly p = g.p.without_constant();
            if (p.is_zero()) continue;
            Rational c = g.p.coeff(0, 0);
            Certificate atom =
                c == 0 ? Certificate::gen(g.name)
                       : Certificate::sum({Certificate::gen(g.name),
                                           Certificate::scalar(-c)});
            out.push_back({std::move(p), std::move(atom)});
        }
        return out;
    }

private:
    void assign(std::vector<NamedGraded> named) {
        std::map<std::string, int> seen;
        for (const auto& g : named) {
            if (g.p.is_zero())
                throw std::invalid_argument("GradedGenSet: zero generator '" + g.name +
                                            "'");
            if (g.name.empty())
                throw std::invalid_argument("GradedGenSet: empty generator name");
            if (++seen[g.name] > 1)
                throw std::invalid_argument("GradedGenSet: duplicate name '" + g.name +
                                            "'");
        }
        gens_ = std::move(named);
    }

    std::vector<NamedGraded> gens_;
};

/// Leading-term order for C[x, xi]: highest xi-exponent first, ties by
/// x-exponent.
struct GradedLeadGreater {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    }
};

namespace detail {

using GradedSpan = LinearSpan<std::pair<int, int>, GradedLeadGreater>;

inline GradedSpan::Vec graded_vec(const GradedPoly& p) {
    GradedSpan::Vec v;
    for (const auto& [k, c] : p.terms()) v.emplace(k, c);
    return v;
}

struct GradedProduct {
    std::vector<std::pair<int, int>> factors; // (generator index, multiplicity)
    GradedPoly value;
};

/// All products of stripped generators with total xi-degree at most d and
/// at most e xi-free factors, as nondecreasing index multisets.  Any
/// combination equal to a target of xi-degree d and x-degree e can only
/// involve such products when the generators are monomials, and the family
/// is a safe superset to search in general.
inline void enumerate_products(const std::vector<GradedGenSet::Working>& gens,
                               int d, int e, std::size_t start,
                               GradedProduct current,
                               std::vector<GradedProduct>& out) {
    out.push_back(current);
    for (std::size_t gi = start; gi < gens.size(); ++gi) {
        int xd = gens[gi].p.xi_degree();
        int used_xi = current.value.xi_degree() < 0 ? 0 : current.value.xi_degree();
        if (xd > 0 && used_xi + xd > d) continue;
        if (xd == 0) {
            int free_count = 0;
            for (const auto& [idx, mult] : current.factors)
                if (gens[idx].p.xi_degree() == 0) free_count += mult;
            if (free_count + 1 > e) continue;
        }
        GradedProduct next = current;
        if (!next.factors.empty() && next.factors.back().first == (int)gi) {
            next.factors.back().second += 1;
        } else {
            next.factors.push_back({(int)gi, 1});
        }
        next.value = current.value * gens[gi].p;
        enumerate_products(gens, d, e, gi, std::move(next), out);
    }
}

} // namespace detail

/// Membership of h in the unital subalgebra generated by the given graded
/// elements.  The search solves an exact linear system over all products
/// fitting the bidegree box of h; for monomial generators this decides
/// membership, in general a positive answer is always certified and a
/// negative answer means no combination exists within that product family.
/// pre: h is nonzero.
inline std::optional<Certificate> graded_member(const GradedPoly& h,
                                                const GradedGenSet& gens) {
    if (h.is_zero())
        throw std::invalid_argument("graded_member: zero target has no meaningful query");

    const int d = std::max(h.xi_degree(), 0);
    const int e = std::max(h.x_degree(), 0);
    auto working = gens.working();

    std::vector<detail::GradedProduct> products;
    detail::GradedProduct unit;
    unit.value = GradedPoly::constant(1);
    detail::enumerate_products(working, d, e, 0, std::move(unit), products);

    detail::GradedSpan span;
    for (std::size_t t = 0; t < products.size(); ++t)
        span.insert(detail::graded_vec(products[t].value), (int)t);

    auto combo = span.solve(detail::graded_vec(h));
    if (!combo) return std::nullopt;

    std::vector<Certificate> terms;
    for (const auto& [id, c] : *combo) {
        const auto& prod = products[id];
        std::vector<Certificate> factors;
        if (c != 1 || prod.factors.empty()) factors.push_back(Certificate::scalar(c));
        for (const auto& [idx, mult] : prod.factors)
            factors.push_back(Certificate::pow(working[idx].atom, mult));
        terms.push_back(Certificate::prod(std::move(factors)));
    }
    return Certificate::sum(std::move(terms));
}

enum class Cofiniteness { Cofinite, NotCofinite, Unknown };

struct CofinitenessVerdict {
    Cofiniteness status = Cofiniteness::Unknown;
    std::optional<int> nullstellensatz_degree;              // Cofinite: x^N, xi^N certified
    std::optional<std::pair<Rational, Rational>> witness;   // NotCofinite: common zero != origin
};

namespace detail {

/// x^N and xi^N membership in the ideal generated by the stripped parts,
/// truncated at total degree N.
inline bool pure_powers_in_ideal(const std::vector<GradedGenSet::Working>& gens,
                                 int N) {
    GradedSpan span;
    int id = 0;
    for (const auto& g : gens) {
        int dg = g.p.total_degree();
        for (int a = 0; a + dg <= N; ++a)
            for (int b = 0; a + b + dg <= N; ++b)
                span.insert(graded_vec(GradedPoly::monomial(a, b) * g.p), id++);
    }
    return span.contains(graded_vec(GradedPoly::monomial(N, 0))) &&
           span.contains(graded_vec(GradedPoly::monomial(0, N)));
}

inline bool vanishes_at(const std::vector<GradedGenSet::Working>& gens,
                        const Rational& x0, const Rational& xi0) {
    for (const auto& g : gens)
        if (g.p.eval(x0, xi0) != 0) return false;
    return true;
}

/// Best-effort search for a common zero away from the origin: candidate
/// x-coordinates come from pure-x generators, pairwise resultants in xi,
/// and a small integer scan; each fiber is then solved exactly.
inline std::optional<std::pair<Rational, Rational>> common_zero(
    const std::vector<GradedGenSet::Working>& gens) {
    std::vector<Rational> candidates;
    for (int t = -3; t <= 3; ++t) candidates.push_back(Rational(t));

    for (const auto& g : gens)
        if (g.p.xi_degree() == 0)
            for (const auto& [r, m] : rational_roots(g.p.at_xi(Rational(0))))
                candidates.push_back(r);

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].p.xi_degree() <= 0 || gens[j].p.xi_degree() <= 0) continue;
            Poly res = resultant_xi(gens[i].p, gens[j].p);
            if (res.is_zero()) continue;
            if (res.degree() < 1) continue;
            for (const auto& [r, m] : rational_roots(res)) candidates.push_back(r);
        }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (const auto& x0 : candidates) {
        // the fiber over x0: each generator becomes a polynomial in xi
        bool all_zero = true;
        std::optional<Poly> pivot;
        for (const auto& g : gens) {
            Poly f = g.p.at_x(x0);
            if (f.is_zero()) continue;
            all_zero = false;
            if (!pivot || f.degree() < pivot->degree()) pivot = f;
        }
        if (all_zero) {
            Rational xi0 = (x0 == 0) ? Rational(1) : Rational(0);
            return std::make_pair(x0, xi0);
        }
        if (pivot->degree() < 1) continue; // a nonzero constant: empty fiber
        for (const auto& [xi0, m] : rational_roots(*pivot)) {
            if (x0 == 0 && xi0 == 0) continue;
            if (vanishes_at(gens, x0, xi0)) return std::make_pair(x0, xi0);
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Does the graded subalgebra sit inside C[x, xi] with finite codimension?
/// Cofinite answers carry the first degree N whose pure powers x^N, xi^N
/// lie in the ideal of the generators; NotCofinite answers carry a common
/// zero of the generators away from the origin, which blocks every N.
/// The criterion itself is not effective, so failing both searches up to
/// max_degree leaves the verdict unknown.
/// pre: max_degree at least the largest generator degree, and >= 1.
inline CofinitenessVerdict cofinite_check(const GradedGenSet& gens, int max_degree = 16) {
    auto working = gens.working();
    if (max_degree < 1)
        throw std::invalid_argument("cofinite_check: max_degree must be positive");
    for (const auto& g : working)
        if (g.p.total_degree() > max_degree)
            throw std::invalid_argument(
                "cofinite_check: max_degree below a generator degree");

    CofinitenessVerdict verdict;
    if (!working.empty()) {
        for (int N = 1; N <= max_degree; ++N) {
            if (detail::pure_powers_in_ideal(working, N)) {
                verdict.status = Cofiniteness::Cofinite;
                verdict.nullstellensatz_degree = N;
                return verdict;
            }
        }
    }

    auto witness = detail::common_zero(working);
    if (witness) {
        verdict.status = Cofiniteness::NotCofinite;
        verdict.witness = witness;
        return verdict;
    }

    verdict.status = Cofiniteness::Unknown;
    return verdict;
}

/// Symbols spanning the associated graded of the subalgebra generated by
/// the given operators, from words of length at most L: one symbol per
/// echelon row, in ascending (order, degree) of the leading term.
inline std::vector<GradedPoly> graded_generators(const std::vector<WeylOp>& ops,
                                                 int L) {
    if (L < 0) throw std::invalid_argument("graded_generators: negative length");
    int mx = 0, mo = 0;
    for (const auto& op : ops) {
        mx = std::max(mx, op.x_degree());
        mo = std::max(mo, op.order().value_or(0));
    }
    SearchBounds bounds{L, L * mx, L * mo};
    WordSpan span(FilteredGenSet(ops), bounds);

    std::vector<std::pair<std::pair<int, int>, GradedPoly>> rows;
    for (const auto& row : span.span().rows()) {
        auto lead = row.vec.begin()->first; // (i, j)
        if (lead == std::pair<int, int>{0, 0}) continue;
        WeylOp op;
        for (const auto& [k, c] : row.vec) op.add_term(k.first, k.second, c);
        rows.push_back({{lead.second, lead.first}, op.symbol()});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<GradedPoly> out;
    for (auto& [lead, sym] : rows) out.push_back(std::move(sym));
    return out;
}

} // namespace da1
