#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace da1 {

/// Univariate polynomial over Rational, stored sparsely as
/// exponent -> nonzero coefficient.  Iteration is ascending in the
/// exponent, so every traversal below is deterministic.
class Poly {
public:
    Poly() = default;

    static Poly constant(Rational c) {
        Poly p;
        if (c != 0) p.coef_[0] = std::move(c);
        return p;
    }

    static Poly monomial(int exp, Rational c = Rational(1)) {
        if (exp < 0) throw std::invalid_argument("Poly: negative exponent");
        Poly p;
        if (c != 0) p.coef_[exp] = std::move(c);
        return p;
    }

    static Poly variable() { return monomial(1); }

    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }

    /// Smallest exponent present, -1 for the zero polynomial.
    int valuation() const { return coef_.empty() ? -1 : coef_.begin()->first; }

    Rational coeff(int exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Rational(0) : it->second;
    }

    Rational leading_coeff() const {
        return coef_.empty() ? Rational(0) : coef_.rbegin()->second;
    }

    const std::map<int, Rational>& terms() const { return coef_; }

    void add_term(int exp, const Rational& c) {
        if (c == 0) return;
        if (exp < 0) throw std::invalid_argument("Poly: negative exponent");
        auto it = coef_.find(exp);
        if (it == coef_.end()) {
            coef_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.coef_) add_term(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.coef_) add_term(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [e, c] : a.coef_) r.coef_[e] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend Poly operator*(const Rational& s, const Poly& a) {
        Poly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.coef_) r.coef_[e] = s * c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Rational& s) { return s * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly: negative power");
        Poly r = constant(1);
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        Poly r;
        for (const auto& [e, c] : coef_)
            if (e > 0) r.coef_[e - 1] = Rational(e) * c;
        return r;
    }

    Rational eval(const Rational& v) const {
        Rational acc = 0;
        int last = degree();
        if (last < 0) return acc;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            for (int e = last; e > it->first; --e) acc *= v;
            acc += it->second;
            last = it->first;
        }
        for (int e = last; e > 0; --e) acc *= v;
        return acc;
    }

    /// p(x + c): Taylor shift.  shifted(a) rewrites p in powers of u = x - a,
    /// and shifted(-a) undoes it.
    Poly shifted(const Rational& c) const {
        Poly acc;
        Poly lin;
        lin.coef_[1] = 1;
        if (c != 0) lin.coef_[0] = c;
        int last = degree();
        if (last < 0) return acc;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            for (int e = last; e > it->first; --e) acc = acc * lin;
            acc.add_term(0, it->second);
            last = it->first;
        }
        for (int e = last; e > 0; --e) acc = acc * lin;
        return acc;
    }

    /// p(q(x)).
    Poly compose(const Poly& q) const {
        Poly acc;
        int last = degree();
        if (last < 0) return acc;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            for (int e = last; e > it->first; --e) acc = acc * q;
            acc.add_term(0, it->second);
            last = it->first;
        }
        for (int e = last; e > 0; --e) acc = acc * q;
        return acc;
    }

    /// Exact division by (x - a); throws if the remainder is nonzero.
    Poly div_linear(const Rational& a) const {
        if (is_zero()) return Poly();
        Poly q;
        Rational carry = 0;
        int last = degree();
        for (int e = last; e >= 0; --e) {
            Rational c = carry + coeff(e);
            if (e == 0) {
                if (c != 0) throw std::domain_error("Poly: division by (x - a) is not exact");
            } else {
                q.add_term(e - 1, c);
                carry = c * a;
            }
        }
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading_coeff()) * *this;
    }

private:
    std::map<int, Rational> coef_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        // a mod b by repeated leading-term elimination.
        while (!a.is_zero() && a.degree() >= b.degree()) {
            Rational f = a.leading_coeff() / b.leading_coeff();
            a -= Poly::monomial(a.degree() - b.degree(), f) * b;
        }
        std::swap(a, b);
    }
    return a.monic();
}

} // namespace da1
