#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graded_poly.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace da1 {

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    if (n == 0) return out;
    Integer i = 1;
    int steps = 0;
    while (i * i <= n) {
        if (++steps > 20000000)
            throw unsupported_factorization("coefficient too large to factor");
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
        ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Clear denominators and content: a primitive integer-coefficient scalar
/// multiple of f.
inline Poly primitive_integer_form(const Poly& f) {
    Integer lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        Integer d = denom(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    Integer content = 0;
    for (const auto& [e, c] : f.terms())
        content = boost::multiprecision::gcd(content, numer(c * Rational(lcm)));
    Poly out;
    for (const auto& [e, c] : f.terms())
        out.add_term(e, c * Rational(lcm) / Rational(content));
    return out;
}

} // namespace detail

/// All rational roots with multiplicities, sorted increasingly, found via
/// the rational root theorem on a primitive integer form.
/// pre: f is nonzero.
inline std::vector<std::pair<Rational, int>> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> out;

    Poly g = f;
    int val = g.valuation();
    if (val > 0) {
        Poly shifted_down;
        for (const auto& [e, c] : g.terms()) shifted_down.add_term(e - val, c);
        g = shifted_down;
    }
    if (g.degree() == 0) {
        if (val > 0) out.push_back({Rational(0), val});
        return out;
    }

    Poly z = detail::primitive_integer_form(g);
    auto ps = detail::positive_divisors(numer(z.coeff(0)));
    auto qs = detail::positive_divisors(numer(z.leading_coeff()));

    std::vector<Rational> candidates;
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Rational r(p, q);
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (const auto& r : candidates) {
        int mult = 0;
        while (!g.is_constant() && g.eval(r) == 0) {
            g = g.div_linear(r);
            ++mult;
        }
        if (mult > 0) out.push_back({r, mult});
    }

    if (val > 0) out.push_back({Rational(0), val});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// The multiset of linear factors when f splits completely over the
/// rationals; empty optional when an irrational factor remains.
inline std::optional<std::vector<std::pair<Rational, int>>> split_completely(
    const Poly& f) {
    auto roots = rational_roots(f);
    int total = 0;
    for (const auto& [r, m] : roots) total += m;
    if (total != f.degree()) return std::nullopt;
    return roots;
}

namespace detail {

inline Poly poly_mod(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.leading_coeff() / b.leading_coeff();
        a -= Poly::monomial(a.degree() - b.degree(), f) * b;
    }
    return a;
}

} // namespace detail

/// Resultant of two univariate polynomials over the rationals, by the
/// Euclidean remainder sequence.
inline Rational resultant(Poly f, Poly g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (f.degree() == 0 && g.degree() == 0) return Rational(1);

    Rational acc = 1;
    bool negate = false;
    while (g.degree() > 0) {
        Poly r = detail::poly_mod(f, g);
        if (r.is_zero()) return Rational(0);
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        if ((df % 2) == 1 && (dg % 2) == 1) negate = !negate;
        Rational lc = g.leading_coeff();
        Rational scale = 1;
        for (int t = 0; t < df - dr; ++t) scale *= lc;
        acc *= scale;
        f = g;
        g = r;
    }
    // g is a nonzero constant now
    Rational c = g.coeff(0);
    Rational tail = 1;
    for (int t = 0; t < f.degree(); ++t) tail *= c;
    Rational res = acc * tail;
    return negate ? -res : res;
}

/// Resultant in xi of two elements of C[x, xi], as a polynomial in x,
/// computed by evaluation at integer points and Lagrange interpolation.
/// Points where a leading coefficient collapses are skipped, so each
/// sample is a genuine specialization of the resultant.
inline Poly resultant_xi(const GradedPoly& a, const GradedPoly& b) {
    int da = a.xi_degree(), db = b.xi_degree();
    if (da < 0 || db < 0) return Poly(); // zero input
    if (da == 0 && db == 0) return Poly::constant(1);
    if (da == 0) return a.at_xi(Rational(0)).pow(db);
    if (db == 0) return b.at_xi(Rational(0)).pow(da);

    auto lead_a = a.xi_coefficients().rbegin()->second;
    auto lead_b = b.xi_coefficients().rbegin()->second;

    int degree_bound = da * b.x_degree() + db * a.x_degree();
    if (degree_bound < 0) degree_bound = 0;

    std::vector<Rational> xs, ys;
    for (Integer t = 0; (int)xs.size() <= degree_bound; ++t) {
        Rational x0(t);
        if (lead_a.eval(x0) == 0 || lead_b.eval(x0) == 0) continue;
        xs.push_back(x0);
        ys.push_back(resultant(a.at_x(x0), b.at_x(x0)));
    }

    // Lagrange interpolation through (xs, ys)
    Poly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(1);
        Rational denom_acc = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * (Poly::variable() - Poly::constant(xs[j]));
            denom_acc *= xs[i] - xs[j];
        }
        out += (ys[i] / denom_acc) * basis;
    }
    return out;
}

} // namespace da1
