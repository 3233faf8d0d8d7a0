#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "weyl_op.hpp"

namespace da1 {

/// Truncation bounds for subalgebra searches.  Within these bounds answers
/// are exact; outside them the search reports unknown rather than guess.
struct SearchBounds {
    int word_length = 5;  // number of generator factors in a product
    int x_degree_cap = 24;
    int order_cap = 24;
};

struct NamedOp {
    std::string name;
    WeylOp op;
};

/// Finite generating set of a filtered subalgebra: nonzero operators with
/// unique nonempty names (names appear in certificates).
class FilteredGenSet {
public:
    FilteredGenSet() = default;

    explicit FilteredGenSet(const std::vector<WeylOp>& ops) {
        std::vector<NamedOp> named;
        named.reserve(ops.size());
        for (std::size_t t = 0; t < ops.size(); ++t)
            named.push_back({"g" + std::to_string(t + 1), ops[t]});
        assign(std::move(named));
    }

    explicit FilteredGenSet(std::vector<NamedOp> named) { assign(std::move(named)); }

    const std::vector<NamedOp>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    std::map<std::string, WeylOp> env() const {
        std::map<std::string, WeylOp> e;
        for (const auto& g : gens_) e.emplace(g.name, g.op);
        return e;
    }

private:
    void assign(std::vector<NamedOp> named) {
        std::map<std::string, int> seen;
        for (const auto& g : named) {
            if (g.op.is_zero())
                throw std::invalid_argument("FilteredGenSet: zero generator '" +
                                            g.name + "'");
            if (g.name.empty())
                throw std::invalid_argument("FilteredGenSet: empty generator name");
            if (++seen[g.name] > 1)
                throw std::invalid_argument("FilteredGenSet: duplicate name '" +
                                            g.name + "'");
        }
        gens_ = std::move(named);
    }

    std::vector<NamedOp> gens_;
};

/// Leading-term order for operator vectors: highest d-exponent first, ties
/// by x-exponent.  Under this order the lead of a product is the sum of
/// the leads of the factors, which keeps the word search prunable.
struct WeylLeadGreater {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    }
};

/// Finite-dimensional snapshot of the subalgebra generated by a set of
/// operators: every product of at most word_length generators (that stays
/// under the degree caps) is echeloned, with bookkeeping that lets any
/// member of the snapshot be written as an explicit combination of words.
///
/// Dropping a product that exceeds the caps is safe for its extensions
/// too, because x-degree and order are both additive along products.
class WordSpan {
public:
    using Span = LinearSpan<std::pair<int, int>, WeylLeadGreater>;
    using Vec = Span::Vec;

    struct Word {
        std::vector<int> seq; // generator indices, in product order
        WeylOp op;
    };

    WordSpan(FilteredGenSet gens, SearchBounds bounds)
        : gens_(std::move(gens)), bounds_(bounds) {
        words_.push_back({{}, WeylOp::constant(1)});
        span_.insert(to_vec(words_[0].op), 0);
        std::size_t level_begin = 0, level_end = 1;
        for (int len = 1; len <= bounds_.word_length; ++len) {
            for (std::size_t w = level_begin; w < level_end; ++w) {
                for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                    WeylOp op = words_[w].op * gens_.gens()[gi].op;
                    if (op.x_degree() > bounds_.x_degree_cap) continue;
                    if (op.order().value_or(0) > bounds_.order_cap) continue;
                    std::vector<int> seq = words_[w].seq;
                    seq.push_back((int)gi);
                    int id = (int)words_.size();
                    words_.push_back({std::move(seq), op});
                    span_.insert(to_vec(words_.back().op), id);
                }
            }
            level_begin = level_end;
            level_end = words_.size();
        }
    }

    /// Membership in the snapshot; empty means not found within bounds.
    /// pre: target is nonzero.
    std::optional<Certificate> member(const WeylOp& target) const {
        if (target.is_zero())
            throw std::invalid_argument("member: zero operator has no meaningful query");
        auto combo = span_.solve(to_vec(target));
        if (!combo) return std::nullopt;
        return combo_certificate(*combo);
    }

    /// Triangular (by degree, monic) basis of the polynomials among the
    /// echelon rows; these are exactly the snapshot's multiplication
    /// operators, since every row's leading term has maximal d-exponent.
    std::vector<Poly> base() const {
        std::vector<std::pair<int, Poly>> found;
        for (const auto& row : span_.rows()) {
            auto lead = row.vec.begin()->first;
            if (lead.second != 0) continue;
            Poly p;
            for (const auto& [k, c] : row.vec) p.add_term(k.first, c);
            found.push_back({lead.first, p});
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Poly> out;
        for (auto& [deg, p] : found) out.push_back(std::move(p));
        return out;
    }

    Certificate combo_certificate(const Span::Combo& combo) const {
        std::vector<Certificate> terms;
        for (const auto& [id, c] : combo) {
            const Word& w = words_[id];
            std::vector<Certificate> factors;
            if (c != 1 || w.seq.empty()) factors.push_back(Certificate::scalar(c));
            // group equal neighbours into powers
            std::size_t t = 0;
            while (t < w.seq.size()) {
                std::size_t run = t;
                while (run < w.seq.size() && w.seq[run] == w.seq[t]) ++run;
                Certificate g = Certificate::gen(gens_.gens()[w.seq[t]].name);
                factors.push_back(Certificate::pow(g, (int)(run - t)));
                t = run;
            }
            terms.push_back(Certificate::prod(std::move(factors)));
        }
        return Certificate::sum(std::move(terms));
    }

    static Vec to_vec(const WeylOp& op) {
        Vec v;
        for (const auto& [k, c] : op.terms()) v.emplace(k, c);
        return v;
    }

    const std::vector<Word>& words() const { return words_; }
    const Span& span() const { return span_; }
    const FilteredGenSet& generators() const { return gens_; }
    const SearchBounds& bounds() const { return bounds_; }

private:
    FilteredGenSet gens_;
    SearchBounds bounds_;
    std::vector<Word> words_;
    Span span_;
};

inline std::optional<Certificate> member(const WeylOp& D, const FilteredGenSet& gens,
                                         const SearchBounds& bounds = {}) {
    return WordSpan(gens, bounds).member(D);
}

inline std::vector<Poly> subalgebra_base(const FilteredGenSet& gens,
                                         const SearchBounds& bounds = {}) {
    return WordSpan(gens, bounds).base();
}

} // namespace da1
