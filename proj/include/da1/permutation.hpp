#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace da1 {

/// Permutation of {1, ..., n} stored as 0-based images.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline Perm compose(const Perm& f, const Perm& g) {
    Perm r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
}

/// Parse cycle notation over {1, ..., n}: "(1 2 3)(4 5)", commas optional,
/// "()" or "id" for the identity.  Elements must be in range and pairwise
/// distinct across all cycles.
inline Perm parse_cycles(const std::string& text, int n) {
    if (n < 1 || n > 9)
        throw invalid_permutation("degree must be between 1 and 9, got " +
                                  std::to_string(n));
    Perm p = identity_perm(n);
    std::vector<bool> seen(n, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               (std::isspace((unsigned char)text[i]) || text[i] == ','))
            ++i;
    };

    skip_ws();
    if (text.compare(i, 2, "id") == 0) {
        i += 2;
        skip_ws();
        if (i != text.size()) throw invalid_permutation("trailing input after 'id'");
        return p;
    }

    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw invalid_permutation("expected '(' at offset " + std::to_string(i));
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
                throw invalid_permutation("expected an element or ')' at offset " +
                                          std::to_string(i));
            int v = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > n)
                throw invalid_permutation("element " + std::to_string(v) +
                                          " outside 1.." + std::to_string(n));
            if (seen[v - 1])
                throw invalid_permutation("element " + std::to_string(v) +
                                          " appears twice");
            seen[v - 1] = true;
            cycle.push_back(v - 1);
        }
        any = true;
        for (std::size_t t = 0; t < cycle.size(); ++t)
            p[cycle[t]] = cycle[(t + 1) % cycle.size()];
    }
    if (!any) throw invalid_permutation("empty permutation text");
    return p;
}

/// The subgroup generated by the given permutations, as a sorted list.
inline std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n) {
    std::set<Perm> seen;
    std::vector<Perm> frontier{identity_perm(n)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                Perm h = compose(g, f);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

inline bool is_transposition(const Perm& p) {
    int moved = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int)i) ++moved;
    return moved == 2;
}

struct SubgroupReport {
    std::size_t order = 0;
    bool has_transposition = false;
};

/// Closure of the given cycle words inside the symmetric group on n
/// letters, reporting the order and whether any member is a transposition.
/// Subgroups without transpositions are the ones that leave room for an
/// averaging retraction on fixed hyperplanes.
inline SubgroupReport subgroup_report(const std::vector<std::string>& words, int n) {
    std::vector<Perm> gens;
    for (const auto& w : words) gens.push_back(parse_cycles(w, n));
    auto group = group_closure(gens, n);
    SubgroupReport rep;
    rep.order = group.size();
    for (const auto& p : group)
        if (is_transposition(p)) {
            rep.has_transposition = true;
            break;
        }
    return rep;
}

/// A subgroup acts uniformly on the branch divisors of A^n -> A^n/S_n
/// exactly when it avoids every divisorial inertia group, i.e. contains no
/// transposition.
inline bool sn_uniform(const std::vector<std::string>& words, int n) {
    return !subgroup_report(words, n).has_transposition;
}

} // namespace da1
