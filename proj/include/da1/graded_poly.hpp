#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "poly.hpp"
#include "rational.hpp"

namespace da1 {

/// Element of the commutative ring C[x, xi], stored sparsely as
/// (x-exponent, xi-exponent) -> nonzero coefficient, iterated in
/// ascending lexicographic order.  These arise as symbols of operators
/// and as generators of graded subalgebras.
class GradedPoly {
public:
    using Key = std::pair<int, int>; // (i, k): x^i xi^k

    GradedPoly() = default;

    static GradedPoly constant(Rational c) {
        GradedPoly p;
        if (c != 0) p.coef_[{0, 0}] = std::move(c);
        return p;
    }

    static GradedPoly monomial(int i, int k, Rational c = Rational(1)) {
        if (i < 0 || k < 0) throw std::invalid_argument("GradedPoly: negative exponent");
        GradedPoly p;
        if (c != 0) p.coef_[{i, k}] = std::move(c);
        return p;
    }

    static GradedPoly x() { return monomial(1, 0); }
    static GradedPoly xi() { return monomial(0, 1); }

    static GradedPoly from_poly(const Poly& f) {
        GradedPoly p;
        for (const auto& [e, c] : f.terms()) p.coef_[{e, 0}] = c;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }

    bool is_constant() const {
        return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == Key{0, 0});
    }

    /// Largest x-exponent present, -1 when zero.
    int x_degree() const {
        int d = -1;
        for (const auto& [k, c] : coef_) d = std::max(d, k.first);
        return d;
    }

    /// Largest xi-exponent present, -1 when zero.
    int xi_degree() const {
        int d = -1;
        for (const auto& [k, c] : coef_) d = std::max(d, k.second);
        return d;
    }

    /// Total degree, -1 when zero.
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : coef_) d = std::max(d, k.first + k.second);
        return d;
    }

    /// Smallest x-exponent present, -1 when zero.
    int x_valuation() const {
        int v = -1;
        for (const auto& [k, c] : coef_)
            v = (v < 0) ? k.first : std::min(v, k.first);
        return v;
    }

    Rational coeff(int i, int k) const {
        auto it = coef_.find({i, k});
        return it == coef_.end() ? Rational(0) : it->second;
    }

    const std::map<Key, Rational>& terms() const { return coef_; }

    void add_term(int i, int k, const Rational& c) {
        if (c == 0) return;
        if (i < 0 || k < 0) throw std::invalid_argument("GradedPoly: negative exponent");
        auto it = coef_.find({i, k});
        if (it == coef_.end()) {
            coef_.emplace(Key{i, k}, c);
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [k, c] : o.coef_) add_term(k.first, k.second, c);
        return *this;
    }

    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [k, c] : o.coef_) add_term(k.first, k.second, -c);
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { a += b; return a; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { a -= b; return a; }

    friend GradedPoly operator-(const GradedPoly& a) {
        GradedPoly r;
        for (const auto& [k, c] : a.coef_) r.coef_[k] = -c;
        return r;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly r;
        for (const auto& [ka, ca] : a.coef_)
            for (const auto& [kb, cb] : b.coef_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    friend GradedPoly operator*(const Rational& s, const GradedPoly& a) {
        GradedPoly r;
        if (s == 0) return r;
        for (const auto& [k, c] : a.coef_) r.coef_[k] = s * c;
        return r;
    }

    friend GradedPoly operator*(const GradedPoly& a, const Rational& s) { return s * a; }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.coef_ == b.coef_;
    }

    GradedPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("GradedPoly: negative power");
        GradedPoly r = constant(1);
        GradedPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& x0, const Rational& xi0) const {
        Rational acc = 0;
        for (const auto& [k, c] : coef_) {
            Rational t = c;
            for (int e = 0; e < k.first; ++e) t *= x0;
            for (int e = 0; e < k.second; ++e) t *= xi0;
            acc += t;
        }
        return acc;
    }

    /// Substitute x = x0, leaving a polynomial in xi.
    Poly at_x(const Rational& x0) const {
        Poly r;
        for (const auto& [k, c] : coef_) {
            Rational t = c;
            for (int e = 0; e < k.first; ++e) t *= x0;
            r.add_term(k.second, t);
        }
        return r;
    }

    /// Substitute xi = xi0, leaving a polynomial in x.
    Poly at_xi(const Rational& xi0) const {
        Poly r;
        for (const auto& [k, c] : coef_) {
            Rational t = c;
            for (int e = 0; e < k.second; ++e) t *= xi0;
            r.add_term(k.first, t);
        }
        return r;
    }

    /// View as a polynomial in xi with coefficients in C[x].
    std::map<int, Poly> xi_coefficients() const {
        std::map<int, Poly> out;
        for (const auto& [k, c] : coef_) out[k.second].add_term(k.first, c);
        return out;
    }

    /// Drop the constant term.
    GradedPoly without_constant() const {
        GradedPoly r = *this;
        r.coef_.erase(Key{0, 0});
        return r;
    }

private:
    std::map<Key, Rational> coef_;
};

} // namespace da1
