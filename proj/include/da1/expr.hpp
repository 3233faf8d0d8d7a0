#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graded_poly.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "weyl_op.hpp"

namespace da1 {

// Expression grammar shared by every ring with named generators:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*          juxtaposition multiplies
//   factor := atom ('^' integer)*
//   atom   := rational | variable | '(' expr ')'
//
// Rationals are single tokens "a" or "a/b".  '^' binds tighter than '*',
// which binds tighter than '+'/'-'.  Errors report the byte offset and the
// token set that would have been accepted.

namespace detail {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind = End;
    std::size_t offset = 0;
    Rational num;
    bool is_plain_int = false;
    long long int_value = 0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
        Token t;
        t.offset = pos_;
        if (pos_ >= src_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit((unsigned char)c)) {
            Integer num = read_digits();
            t.kind = Token::Num;
            if (pos_ < src_.size() && src_[pos_] == '/') {
                std::size_t slash = pos_;
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit((unsigned char)src_[pos_]))
                    throw parse_error(pos_, {"digit"},
                                      "expected digits after '/' in rational");
                Integer den = read_digits();
                if (den == 0)
                    throw parse_error(slash + 1, {"nonzero denominator"},
                                      "rational with zero denominator");
                t.num = Rational(num, den);
            } else {
                t.num = Rational(num);
                t.is_plain_int = true;
                t.int_value = num.convert_to<long long>();
            }
            return t;
        }
        if (std::isalpha((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha((unsigned char)src_[pos_])) ++pos_;
            t.kind = Token::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        ++pos_;
        switch (c) {
            case '+': t.kind = Token::Plus; return t;
            case '-': t.kind = Token::Minus; return t;
            case '*': t.kind = Token::Star; return t;
            case '^': t.kind = Token::Caret; return t;
            case '(': t.kind = Token::LParen; return t;
            case ')': t.kind = Token::RParen; return t;
        }
        throw parse_error(t.offset, {"rational", "variable", "operator"},
                          std::string("unexpected character '") + c + "'");
    }

private:
    Integer read_digits() {
        Integer v = 0;
        while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

template <class T>
class ExprParser {
public:
    ExprParser(std::string_view src, std::vector<std::pair<std::string, T>> vars)
        : lex_(src), vars_(std::move(vars)) {
        cur_ = lex_.next();
    }

    T parse() {
        T value = parse_expr();
        if (cur_.kind != Token::End)
            throw parse_error(cur_.offset, {"'+'", "'-'", "end of input"},
                              "trailing input after expression");
        return value;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool starts_factor() const {
        return cur_.kind == Token::Num || cur_.kind == Token::Ident ||
               cur_.kind == Token::LParen;
    }

    T parse_expr() {
        bool negate = false;
        if (cur_.kind == Token::Minus) {
            negate = true;
            advance();
        }
        T acc = parse_term();
        if (negate) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            T rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    T parse_term() {
        T acc = parse_factor();
        for (;;) {
            if (cur_.kind == Token::Star) {
                advance();
                acc = acc * parse_factor();
            } else if (starts_factor()) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    T parse_factor() {
        T base = parse_atom();
        while (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Num || !cur_.is_plain_int || cur_.int_value < 0)
                throw parse_error(cur_.offset, {"nonnegative integer"},
                                  "exponent must be a nonnegative integer");
            base = base.pow((int)cur_.int_value);
            advance();
        }
        return base;
    }

    T parse_atom() {
        if (cur_.kind == Token::Num) {
            T v = T::constant(cur_.num);
            advance();
            return v;
        }
        if (cur_.kind == Token::Ident) {
            for (const auto& [name, value] : vars_) {
                if (cur_.text == name) {
                    advance();
                    return value;
                }
            }
            std::vector<std::string> expected;
            for (const auto& [name, value] : vars_) expected.push_back("'" + name + "'");
            throw parse_error(cur_.offset, expected,
                              "unknown variable '" + cur_.text + "'");
        }
        if (cur_.kind == Token::LParen) {
            std::size_t open = cur_.offset;
            advance();
            T v = parse_expr();
            if (cur_.kind != Token::RParen)
                throw parse_error(cur_.offset, {"')'"},
                                  "unbalanced parenthesis opened at offset " +
                                      std::to_string(open));
            advance();
            return v;
        }
        std::vector<std::string> expected{"rational", "'('"};
        for (const auto& [name, value] : vars_) expected.push_back("'" + name + "'");
        throw parse_error(cur_.offset, expected, "expected an atom");
    }

    Lexer lex_;
    Token cur_;
    std::vector<std::pair<std::string, T>> vars_;
};

inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += da1::to_string(a);
    } else {
        if (a != 1) {
            out += da1::to_string(a);
            out += " ";
        }
        out += mono;
    }
}

inline std::string power_string(const std::string& var, int e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace detail

inline Poly parse_poly(std::string_view src, const std::string& var = "x") {
    return detail::ExprParser<Poly>(src, {{var, Poly::variable()}}).parse();
}

inline WeylOp parse_weyl(std::string_view src) {
    return detail::ExprParser<WeylOp>(src, {{"x", WeylOp::x()}, {"d", WeylOp::d()}})
        .parse();
}

inline GradedPoly parse_graded(std::string_view src) {
    return detail::ExprParser<GradedPoly>(
               src, {{"x", GradedPoly::x()}, {"xi", GradedPoly::xi()}})
        .parse();
}

/// Parse a constant expression such as "-3/2".
inline Rational parse_rational(std::string_view src) {
    Poly p = detail::ExprParser<Poly>(src, {}).parse();
    return p.coeff(0);
}

/// Canonical form: terms in descending exponent, "a/b x^e" pieces.
inline std::string to_string(const Poly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string mono = it->first == 0 ? "" : detail::power_string(var, it->first);
        detail::append_term(out, it->second, mono);
    }
    return out;
}

/// Canonical form: terms in descending (i, j), monomials "x^i d^j".
inline std::string to_string(const WeylOp& D) {
    if (D.is_zero()) return "0";
    std::string out;
    const auto& terms = D.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [i, j] = it->first;
        std::string mono;
        if (i > 0) mono = detail::power_string("x", i);
        if (j > 0) {
            if (!mono.empty()) mono += " ";
            mono += detail::power_string("d", j);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

/// Canonical form: terms in descending (i, k), monomials "x^i xi^k".
inline std::string to_string(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [i, k] = it->first;
        std::string mono;
        if (i > 0) mono = detail::power_string("x", i);
        if (k > 0) {
            if (!mono.empty()) mono += " ";
            mono += detail::power_string("xi", k);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

} // namespace da1
