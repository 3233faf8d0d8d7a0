#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace da1 {

/// Incremental row echelon over the rationals for sparse vectors indexed by
/// an ordered key type.  LeadGreater must be a strict weak order putting
/// the leading coordinate first; vectors are stored with that order so the
/// leading entry is always begin().
///
/// Every stored row remembers how it was combined from the vectors handed
/// to insert(), identified by caller-chosen ids, so solve() can report an
/// exact linear combination of the original vectors.
template <class Key, class LeadGreater>
class LinearSpan {
public:
    using Vec = std::map<Key, Rational, LeadGreater>;
    using Combo = std::map<int, Rational>;

    struct Row {
        Vec vec;     // monic: leading coefficient 1
        Combo combo; // vec == sum combo[id] * original vector(id)
    };

    /// Returns true when v was independent and became a new row.
    bool insert(Vec v, int id) {
        Combo combo{{id, Rational(1)}};
        reduce(v, combo);
        if (v.empty()) return false;
        normalize(v, combo);
        Key lead = v.begin()->first;
        std::size_t idx = rows_.size();
        rows_.push_back(Row{std::move(v), std::move(combo)});
        by_lead_.emplace(lead, idx);
        return true;
    }

    /// Expresses target as a combination of inserted vectors, if possible.
    std::optional<Combo> solve(Vec target) const {
        Combo combo;
        reduce(target, combo);
        if (!target.empty()) return std::nullopt;
        for (auto& [id, c] : combo) c = -c;
        // reduce() treats the target like "target - sum(...) = 0", so the
        // accumulated coefficients come out negated; flip and drop zeros.
        for (auto it = combo.begin(); it != combo.end();)
            it = (it->second == 0) ? combo.erase(it) : std::next(it);
        return combo;
    }

    bool contains(Vec target) const { return solve(std::move(target)).has_value(); }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

private:
    // Eliminate leading coordinates of v against the rows.  The combo picks
    // up +c * row.combo for each subtraction of c * row, i.e. it tracks
    // v_original = v_remaining + sum combo[id] * vec(id) ... with the sign
    // convention that combo accumulates what was removed.
    void reduce(Vec& v, Combo& combo) const {
        while (!v.empty()) {
            auto it = by_lead_.find(v.begin()->first);
            if (it == by_lead_.end()) return;
            const Row& row = rows_[it->second];
            Rational c = v.begin()->second; // row is monic
            subtract(v, row.vec, c);
            for (const auto& [id, rc] : row.combo) add_combo(combo, id, -c * rc);
        }
    }

    static void subtract(Vec& v, const Vec& w, const Rational& c) {
        for (const auto& [k, wc] : w) {
            auto it = v.find(k);
            if (it == v.end()) {
                v.emplace(k, -c * wc);
            } else {
                it->second -= c * wc;
                if (it->second == 0) v.erase(it);
            }
        }
    }

    static void add_combo(Combo& combo, int id, const Rational& c) {
        if (c == 0) return;
        auto it = combo.find(id);
        if (it == combo.end()) {
            combo.emplace(id, c);
        } else {
            it->second += c;
            if (it->second == 0) combo.erase(it);
        }
    }

    static void normalize(Vec& v, Combo& combo) {
        Rational lead = v.begin()->second;
        if (lead == 1) return;
        for (auto& [k, c] : v) c /= lead;
        for (auto& [id, c] : combo) c /= lead;
    }

    std::vector<Row> rows_;
    std::map<Key, std::size_t, LeadGreater> by_lead_;
};

} // namespace da1
