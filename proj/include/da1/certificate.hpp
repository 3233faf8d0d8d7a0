#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace da1 {

/// Certificate for a membership claim: an expression tree over named
/// generators whose evaluation in the ambient algebra must reproduce the
/// target exactly.  Trees are immutable values; evaluation works in any
/// ring that provides constant(), operator+, operator* and pow().
class Certificate {
public:
    enum class Kind { Scalar, Gen, Sum, Prod, Pow };

    static Certificate scalar(Rational v) {
        Certificate c(Kind::Scalar);
        c.value_ = std::move(v);
        return c;
    }

    static Certificate gen(std::string name) {
        Certificate c(Kind::Gen);
        c.name_ = std::move(name);
        return c;
    }

    static Certificate sum(std::vector<Certificate> parts) {
        if (parts.empty()) return scalar(Rational(0));
        if (parts.size() == 1) return std::move(parts[0]);
        Certificate c(Kind::Sum);
        c.kids_ = std::move(parts);
        return c;
    }

    static Certificate prod(std::vector<Certificate> parts) {
        if (parts.empty()) return scalar(Rational(1));
        if (parts.size() == 1) return std::move(parts[0]);
        Certificate c(Kind::Prod);
        c.kids_ = std::move(parts);
        return c;
    }

    static Certificate pow(Certificate base, int e) {
        if (e < 0) throw std::invalid_argument("Certificate: negative power");
        if (e == 1) return base;
        Certificate c(Kind::Pow);
        c.kids_.push_back(std::move(base));
        c.exp_ = e;
        return c;
    }

    Kind kind() const { return kind_; }

    template <class T>
    T eval(const std::map<std::string, T>& env) const {
        switch (kind_) {
            case Kind::Scalar:
                return T::constant(value_);
            case Kind::Gen: {
                auto it = env.find(name_);
                if (it == env.end())
                    throw std::invalid_argument("Certificate: unknown generator '" +
                                                name_ + "'");
                return it->second;
            }
            case Kind::Sum: {
                T acc = kids_[0].eval(env);
                for (std::size_t t = 1; t < kids_.size(); ++t)
                    acc = acc + kids_[t].eval(env);
                return acc;
            }
            case Kind::Prod: {
                T acc = kids_[0].eval(env);
                for (std::size_t t = 1; t < kids_.size(); ++t)
                    acc = acc * kids_[t].eval(env);
                return acc;
            }
            case Kind::Pow:
                return kids_[0].eval(env).pow(exp_);
        }
        throw std::logic_error("Certificate: corrupt node");
    }

    std::string to_string() const { return render(0); }

private:
    explicit Certificate(Kind k) : kind_(k) {}

    // precedence levels: 0 sum, 1 product, 2 power/atom
    std::string render(int level) const {
        std::string out;
        switch (kind_) {
            case Kind::Scalar:
                out = da1::to_string(value_);
                if (level >= 1 && value_ < 0) out = "(" + out + ")";
                return out;
            case Kind::Gen:
                return name_;
            case Kind::Sum: {
                for (std::size_t t = 0; t < kids_.size(); ++t) {
                    if (t > 0) out += " + ";
                    out += kids_[t].render(1);
                }
                if (level >= 1) out = "(" + out + ")";
                return out;
            }
            case Kind::Prod: {
                for (std::size_t t = 0; t < kids_.size(); ++t) {
                    if (t > 0) out += " * ";
                    out += kids_[t].render(2);
                }
                if (level >= 2) out = "(" + out + ")";
                return out;
            }
            case Kind::Pow: {
                out = kids_[0].render(2) + "^" + std::to_string(exp_);
                return out;
            }
        }
        return out;
    }

    Kind kind_;
    Rational value_;
    std::string name_;
    std::vector<Certificate> kids_;
    int exp_ = 0;
};

} // namespace da1
