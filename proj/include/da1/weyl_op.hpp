#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graded_poly.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace da1 {

/// Differential operator on the affine line with polynomial coefficients,
/// i.e. an element of the algebra generated by x and d = d/dx subject to
/// d x - x d = 1.  Operators are kept in normal form
///
///     sum c_{ij} x^i d^j
///
/// stored sparsely as (i, j) -> nonzero coefficient and iterated in
/// ascending lexicographic order of (i, j).
///
/// Multiplication reorders via d^j x^k = sum_t binom(j, t) k(k-1)...(k-t+1)
/// x^{k-t} d^{j-t}, which is exact over the rationals.
class WeylOp {
public:
    using Key = std::pair<int, int>; // (i, j): x^i d^j

    WeylOp() = default;

    static WeylOp constant(Rational c) {
        WeylOp p;
        if (c != 0) p.coef_[{0, 0}] = std::move(c);
        return p;
    }

    static WeylOp monomial(int i, int j, Rational c = Rational(1)) {
        if (i < 0 || j < 0) throw std::invalid_argument("WeylOp: negative exponent");
        WeylOp p;
        if (c != 0) p.coef_[{i, j}] = std::move(c);
        return p;
    }

    static WeylOp x() { return monomial(1, 0); }
    static WeylOp d() { return monomial(0, 1); }

    /// Multiplication operator by a polynomial in x.
    static WeylOp from_poly(const Poly& f) {
        WeylOp p;
        for (const auto& [e, c] : f.terms()) p.coef_[{e, 0}] = c;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }

    bool is_constant() const {
        return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == Key{0, 0});
    }

    /// Order as a differential operator: the largest d-exponent.
    /// Empty for the zero operator, which has no order.
    std::optional<int> order() const {
        if (coef_.empty()) return std::nullopt;
        int j = 0;
        for (const auto& [k, c] : coef_) j = std::max(j, k.second);
        return j;
    }

    /// Largest x-exponent present, -1 when zero.
    int x_degree() const {
        int d = -1;
        for (const auto& [k, c] : coef_) d = std::max(d, k.first);
        return d;
    }

    Rational coeff(int i, int j) const {
        auto it = coef_.find({i, j});
        return it == coef_.end() ? Rational(0) : it->second;
    }

    const std::map<Key, Rational>& terms() const { return coef_; }

    /// Coefficient of d^j as a polynomial in x.
    Poly d_coefficient(int j) const {
        Poly r;
        for (const auto& [k, c] : coef_)
            if (k.second == j) r.add_term(k.first, c);
        return r;
    }

    /// The multiplication-operator part, defined when the order is 0.
    /// pre: order() <= 0, i.e. zero or a polynomial in x.
    Poly as_poly() const {
        Poly r;
        for (const auto& [k, c] : coef_) {
            if (k.second != 0) throw std::domain_error("WeylOp: not a polynomial in x");
            r.add_term(k.first, c);
        }
        return r;
    }

    void add_term(int i, int j, const Rational& c) {
        if (c == 0) return;
        if (i < 0 || j < 0) throw std::invalid_argument("WeylOp: negative exponent");
        auto it = coef_.find({i, j});
        if (it == coef_.end()) {
            coef_.emplace(Key{i, j}, c);
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    WeylOp& operator+=(const WeylOp& o) {
        for (const auto& [k, c] : o.coef_) add_term(k.first, k.second, c);
        return *this;
    }

    WeylOp& operator-=(const WeylOp& o) {
        for (const auto& [k, c] : o.coef_) add_term(k.first, k.second, -c);
        return *this;
    }

    friend WeylOp operator+(WeylOp a, const WeylOp& b) { a += b; return a; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { a -= b; return a; }

    friend WeylOp operator-(const WeylOp& a) {
        WeylOp r;
        for (const auto& [k, c] : a.coef_) r.coef_[k] = -c;
        return r;
    }

    friend WeylOp operator*(const Rational& s, const WeylOp& a) {
        WeylOp r;
        if (s == 0) return r;
        for (const auto& [k, c] : a.coef_) r.coef_[k] = s * c;
        return r;
    }

    friend WeylOp operator*(const WeylOp& a, const Rational& s) { return s * a; }

    friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
        WeylOp r;
        for (const auto& [ka, ca] : a.coef_) {
            for (const auto& [kb, cb] : b.coef_) {
                // x^{i1} d^{j1} x^{i2} d^{j2}
                const int j1 = ka.second, i2 = kb.first;
                const int tmax = std::min(j1, i2);
                const Rational c = ca * cb;
                for (int t = 0; t <= tmax; ++t) {
                    Rational w = c * Rational(binomial(j1, t) * falling(i2, t));
                    r.add_term(ka.first + i2 - t, j1 + kb.second - t, w);
                }
            }
        }
        return r;
    }

    friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.coef_ == b.coef_; }

    WeylOp pow(int k) const {
        if (k < 0) throw std::invalid_argument("WeylOp: negative power");
        WeylOp r = constant(1);
        WeylOp base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Action on a polynomial: x acts by multiplication, d by d/dx.
    Poly apply(const Poly& f) const {
        std::vector<Poly> derivs{f};
        Poly r;
        for (const auto& [k, c] : coef_) {
            while ((int)derivs.size() <= k.second)
                derivs.push_back(derivs.back().derivative());
            r += Poly::monomial(k.first, c) * derivs[k.second];
        }
        return r;
    }

    /// Principal symbol: the top-order part with d replaced by xi.
    /// The zero operator has zero symbol.
    GradedPoly symbol() const {
        GradedPoly s;
        auto j = order();
        if (!j) return s;
        for (const auto& [k, c] : coef_)
            if (k.second == *j) s.add_term(k.first, k.second, c);
        return s;
    }

    /// Substitute x -> x + a, leaving d alone.
    WeylOp translated(const Rational& a) const {
        if (a == 0) return *this;
        WeylOp r;
        Poly lin = Poly::monomial(1) + Poly::constant(a);
        std::vector<Poly> pows{Poly::constant(1)};
        for (const auto& [k, c] : coef_) {
            while ((int)pows.size() <= k.first) pows.push_back(pows.back() * lin);
            for (const auto& [e, pc] : pows[k.first].terms())
                r.add_term(e, k.second, c * pc);
        }
        return r;
    }

private:
    std::map<Key, Rational> coef_;
};

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) {
    return a * b - b * a;
}

/// k-fold iterated commutator [b, [b, ... [b, D] ...]].
inline WeylOp ad_power(const WeylOp& b, WeylOp D, int k) {
    if (k < 0) throw std::invalid_argument("ad_power: negative count");
    for (int t = 0; t < k; ++t) D = commutator(b, D);
    return D;
}

} // namespace da1
