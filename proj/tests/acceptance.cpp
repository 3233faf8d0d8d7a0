// Acceptance gate: one self-contained check per shipped capability, run as a
// single binary.  Every comparison is exact rational equality; no tolerances.
// Prints one PASS/FAIL line per criterion plus wall time, exits nonzero if
// anything failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <da1/classify.hpp>
#include <da1/covering.hpp>
#include <da1/dxy.hpp>
#include <da1/graded_algebra.hpp>
#include <da1/invariants.hpp>
#include <da1/permutation.hpp>
#include <da1/poly.hpp>
#include <da1/rational.hpp>
#include <da1/subalgebra.hpp>
#include <da1/twist.hpp>
#include <da1/weyl_op.hpp>

#include "support.hpp"

using namespace da1;
using da1::testing::Rng;

namespace {

struct Gate {
    int passed = 0;
    int failed = 0;

    void run(const char* name, const std::function<bool(std::string&)>& body) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::printf("%-4s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        (ok ? passed : failed)++;
    }
};

bool fail(std::string& note, std::string msg) {
    note = std::move(msg);
    return false;
}

// --- criterion 1: operator arithmetic -------------------------------------

bool c1_arithmetic(std::string& note) {
    Rng g(101);
    for (int it = 0; it < 500; ++it) {
        WeylOp D = testing::rand_weyl(g, 6, 6, 4);
        WeylOp E = testing::rand_weyl(g, 6, 6, 4);
        WeylOp F = testing::rand_weyl(g, 6, 6, 4);
        if ((D * E) * F != D * (E * F))
            return fail(note, "associativity broke at iteration " + std::to_string(it));
        if (D * (E + F) != D * E + D * F || (D + E) * F != D * F + E * F)
            return fail(note, "distributivity broke at iteration " + std::to_string(it));
    }
    for (int it = 0; it < 200; ++it) {
        Poly f = testing::rand_poly(g, 6, 3);
        WeylOp D = testing::rand_weyl(g, 6, 6, 3);
        int r = D.order().value_or(0);
        if (!ad_power(WeylOp::from_poly(f), D, r + 1).is_zero())
            return fail(note, "iterated bracket with a multiplication operator "
                              "did not vanish at order+1");
    }
    return true;
}

// --- criterion 2: cyclic invariants vs. pure-power membership --------------

bool c2_invariant_monomials(std::string& note) {
    for (int n = 2; n <= 4; ++n) {
        FilteredGenSet gens(std::vector<WeylOp>{
            WeylOp::monomial(n, 0), WeylOp::monomial(1, 1), WeylOp::monomial(0, n)});
        WordSpan span(gens, SearchBounds{6, 24, 24});
        auto env = gens.env();
        for (int i = 0; i <= 10; ++i) {
            for (int j = 0; i + j <= 10; ++j) {
                WeylOp mono = WeylOp::monomial(i, j);
                bool invariant = weight(i, j, n) == 0;
                DxyResult r = dxy_member(mono, PurePower{Rational(0), n});
                if (!r.exact)
                    return fail(note, "pure-power membership was not exact");
                if (r.member != invariant)
                    return fail(note, "membership disagreed with the weight test at n=" +
                                          std::to_string(n) + " x^" + std::to_string(i) +
                                          " d^" + std::to_string(j));
                if (!invariant) continue;
                auto cert = span.member(mono);
                if (!cert)
                    return fail(note, "no certificate for invariant monomial x^" +
                                          std::to_string(i) + " d^" + std::to_string(j) +
                                          " at n=" + std::to_string(n));
                if (cert->eval(env) != mono)
                    return fail(note, "certificate did not evaluate back to the monomial");
            }
        }
    }
    return true;
}

// --- criterion 3: graded cofiniteness --------------------------------------

bool c3_cofinite(std::string& note) {
    for (int n = 1; n <= 5; ++n) {
        GradedGenSet full(std::vector<GradedPoly>{GradedPoly::monomial(n, 0),
                                                  GradedPoly::monomial(1, 1),
                                                  GradedPoly::monomial(0, n)});
        CofinitenessVerdict v = cofinite_check(full);
        if (v.status != Cofiniteness::Cofinite)
            return fail(note, "full generator set not recognized as cofinite at n=" +
                                  std::to_string(n));
        if (!v.nullstellensatz_degree || *v.nullstellensatz_degree > n)
            return fail(note, "nullstellensatz degree exceeded n at n=" + std::to_string(n));

        GradedGenSet thin(std::vector<GradedPoly>{GradedPoly::monomial(n, 0),
                                                  GradedPoly::monomial(1, 1)});
        CofinitenessVerdict w = cofinite_check(thin);
        if (w.status != Cofiniteness::NotCofinite)
            return fail(note, "dropped generator set not flagged at n=" + std::to_string(n));
        if (!w.witness || w.witness->first != 0 || w.witness->second != 1)
            return fail(note, "expected common zero (0, 1) as the witness");
    }
    return true;
}

// --- criterion 4: euler operator inside pure-power images ------------------

bool c4_euler(std::string& note) {
    WeylOp euler = WeylOp::monomial(1, 1);
    {
        FilteredGenSet gens(std::vector<WeylOp>{WeylOp::monomial(2, 0),
                                                WeylOp::monomial(0, 2)});
        WordSpan span(gens, SearchBounds{2, 24, 24});
        auto cert = span.member(euler);
        if (!cert) return fail(note, "x d not reached from {x^2, d^2} with words of length 2");
        if (cert->eval(gens.env()) != euler)
            return fail(note, "certificate over {x^2, d^2} did not evaluate back");
    }
    {
        FilteredGenSet gens(std::vector<WeylOp>{WeylOp::monomial(3, 0),
                                                WeylOp::monomial(0, 3)});
        WordSpan span(gens, SearchBounds{6, 24, 24});
        auto cert = span.member(euler);
        if (!cert) return fail(note, "x d not reached from {x^3, d^3} with words of length 6");
        if (cert->eval(gens.env()) != euler)
            return fail(note, "certificate over {x^3, d^3} did not evaluate back");
    }
    for (int n = 2; n <= 3; ++n) {
        FilteredGenSet gens(std::vector<WeylOp>{
            WeylOp::monomial(n, 0), euler, WeylOp::monomial(0, n)});
        VerifyResult v = verify_triple(make_triple(Rational(0), n, Poly()), gens);
        if (v.verdict != Verdict::Holds)
            return fail(note, "triple (0, " + std::to_string(n) +
                                  ", 0) did not verify against its standard generators");
    }
    return true;
}

// --- criterion 5: twisting and traces --------------------------------------

Poly covering_derivative(const Poly& f, int m) {
    // (1/m) u^{1-m} df/du, defined whenever every exponent is >= m
    Poly out;
    for (const auto& [e, c] : f.terms()) {
        if (e < m) throw std::invalid_argument("covering_derivative: valuation too small");
        out.add_term(e - m, Rational(e) * c / Rational(m));
    }
    return out;
}

std::optional<Poly> compress(const Poly& f, int m) {
    // rewrite f(u) as a polynomial in t = u^m
    Poly out;
    for (const auto& [e, c] : f.terms()) {
        if (e % m != 0) return std::nullopt;
        out.add_term(e / m, c);
    }
    return out;
}

bool c5_twist_trace(std::string& note) {
    Rng g(505);
    for (int it = 0; it < 200; ++it) {
        WeylOp D = testing::rand_weyl(g, 5, 5, 3);
        WeylOp E = testing::rand_weyl(g, 5, 5, 3);
        Poly p = testing::rand_poly(g, 4, 3);
        if (twist(D * E, p) != twist(D, p) * twist(E, p))
            return fail(note, "twisting failed to be multiplicative");
        if (twist(D, p).symbol() != D.symbol())
            return fail(note, "twisting changed a symbol");
        if (untwist(twist(D, p), p) != D)
            return fail(note, "untwist did not invert twist");
    }
    for (int m = 1; m <= 4; ++m) {
        for (int d = 0; d <= 12; ++d) {
            Poly expect;
            if (d % m == 0) expect = Poly::monomial(d, Rational(m));
            if (trace_poly(Poly::monomial(d), m) != expect)
                return fail(note, "trace of u^" + std::to_string(d) + " under m=" +
                                      std::to_string(m) + " came out wrong");
        }
    }
    for (int it = 0; it < 100; ++it) {
        int m = 2 + (it % 3);
        Poly f = Poly::monomial(m) * testing::rand_poly(g, 6, 4);
        auto lhs = compress(trace_poly(covering_derivative(f, m), m), m);
        auto rhs = compress(trace_poly(f, m), m);
        if (!lhs || !rhs)
            return fail(note, "trace landed outside the downstairs coordinate ring");
        if (*lhs != rhs->derivative())
            return fail(note, "trace did not intertwine the covering derivations");
    }
    return true;
}

// --- criterion 6: classification round trip --------------------------------

bool c6_classify_roundtrip(std::string& note) {
    std::vector<Triple> grid;
    grid.push_back(make_triple(Rational(0), 1, Poly()));
    const Rational centers[] = {Rational(0), Rational(1), Rational(-1), Rational(2)};
    for (int m = 2; m <= 3; ++m) {
        for (const Rational& a : centers) {
            // p written in u = x - a so the canonical class is easy to hit:
            // exponents congruent to m-1 mod m get absorbed by make_triple.
            Poly small_u, dense_u;
            if (m == 2) {
                small_u.add_term(2, Rational(1));
                dense_u.add_term(4, Rational(1));
                dense_u.add_term(2, Rational(1, 2));
                dense_u.add_term(0, Rational(3));
            } else {
                small_u.add_term(1, Rational(1));
                dense_u.add_term(4, Rational(1));
                dense_u.add_term(3, Rational(2));
                dense_u.add_term(1, Rational(-1));
                dense_u.add_term(0, Rational(1, 2));
            }
            grid.push_back(make_triple(a, m, Poly()));
            grid.push_back(make_triple(a, m, small_u.shifted(-a)));
            grid.push_back(make_triple(a, m, dense_u.shifted(-a)));
        }
    }
    if (grid.size() != 25) return fail(note, "grid size drifted");

    SearchBounds bounds{4, 56, 24};
    for (const Triple& t : grid) {
        auto cl = classify(forward(t), bounds);
        if (!cl)
            return fail(note, "classification came back empty for a=" + to_string(t.a) +
                                  " m=" + std::to_string(t.m));
        if (!(cl->triple == t))
            return fail(note, "recovered triple differed for a=" + to_string(t.a) +
                                  " m=" + std::to_string(t.m) + " p=" + to_string(t.p, "x"));
        if (cl->verification.verdict != Verdict::Holds)
            return fail(note, "round-tripped triple did not verify");
    }
    return true;
}

// --- criterion 7: ramification profiles ------------------------------------

Poly antiderivative(const Poly& f) {
    Poly out;
    for (const auto& [e, c] : f.terms()) out.add_term(e + 1, c / Rational(e + 1));
    return out;
}

bool c7_ramification(std::string& note) {
    Rng g(707);
    std::uniform_int_distribution<int> pick_root(-3, 3);
    std::uniform_int_distribution<int> pick_mult(1, 3);
    std::uniform_int_distribution<int> pick_lead(1, 4);
    for (int it = 0; it < 50; ++it) {
        Poly q;
        if (it % 5 == 4) {
            // exact shifted pure power: lead (x - a)^d + constant
            int d = 2 + (it % 7);
            Rational a(pick_root(g));
            Poly lin = Poly::monomial(1) - Poly::constant(a);
            q = lin.pow(d) * Poly::constant(Rational(pick_lead(g))) +
                Poly::constant(Rational(pick_root(g)));
        } else {
            // integrate a product of rational linear factors, so the
            // derivative splits over Q by construction
            Poly dq = Poly::constant(Rational(pick_lead(g)));
            int total = 0;
            std::vector<Rational> used;
            while (total < 7) {
                Rational r(pick_root(g));
                if (std::find(used.begin(), used.end(), r) != used.end()) break;
                used.push_back(r);
                int e = std::min(pick_mult(g), 7 - total);
                total += e;
                dq = dq * (Poly::monomial(1) - Poly::constant(r)).pow(e);
                if (g() % 3 == 0) break;
            }
            q = antiderivative(dq) + Poly::constant(Rational(pick_root(g)));
        }
        if (!hurwitz_check(q))
            return fail(note, "degree accounting failed for " + to_string(q, "x"));
        if (uniform_ramified(q) != shifted_pure_power(q).has_value())
            return fail(note, "uniformity disagreed with the shifted-pure-power test for " +
                                  to_string(q, "x"));
    }

    Poly cusp = Poly::monomial(3) - Poly::monomial(2);
    if (uniform_ramified(cusp)) return fail(note, "x^3 - x^2 misreported as uniform");
    RamificationProfile pr = ramification_profile(cusp);
    bool found = false;
    for (const auto& fb : pr.fibers) {
        if (fb.branch_value != 0) continue;
        found = fb.indices == std::vector<int>{2} && fb.unramified == 1;
    }
    if (!found)
        return fail(note, "fiber of x^3 - x^2 over 0 should split as indices {2, 1}");
    return true;
}

// --- criterion 8: symmetric-group uniformity -------------------------------

std::string cycle_word(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == (int)s) continue;
        out += "(";
        std::size_t c = s;
        bool first = true;
        while (!seen[c]) {
            seen[c] = true;
            if (!first) out += " ";
            out += std::to_string(c + 1);
            first = false;
            c = (std::size_t)p[c];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

bool c8_sn_uniform(std::string& note) {
    Rng g(808);
    for (int it = 0; it < 100; ++it) {
        int count = 1 + (int)(g() % 2);
        std::vector<Perm> gens;
        std::vector<std::string> words;
        for (int t = 0; t < count; ++t) {
            Perm p(4);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), g);
            words.push_back(cycle_word(p));
            gens.push_back(std::move(p));
        }
        std::vector<Perm> closure = group_closure(gens, 4);
        bool direct = false;
        for (const Perm& p : closure) direct = direct || is_transposition(p);
        SubgroupReport rep = subgroup_report(words, 4);
        if (rep.order != closure.size())
            return fail(note, "closure sizes disagreed on trial " + std::to_string(it));
        if (sn_uniform(words, 4) != !direct)
            return fail(note, "uniformity disagreed with the direct transposition "
                              "search on trial " + std::to_string(it));
    }
    if (!sn_uniform({"(1 2 3)"}, 3))
        return fail(note, "the 3-cycle subgroup of S_3 must be uniform");
    return true;
}

// --- criterion 9: containments between cyclic invariant algebras -----------

bool c9_galois(std::string& note) {
    auto standard = [](int n) {
        return FilteredGenSet(std::vector<WeylOp>{
            WeylOp::monomial(n, 0), WeylOp::monomial(1, 1), WeylOp::monomial(0, n)});
    };
    FilteredGenSet g6 = standard(6), g3 = standard(3), g2 = standard(2);
    SearchBounds bounds{5, 24, 24};
    WordSpan span3(g3, bounds), span2(g2, bounds), span6(g6, bounds);

    for (const auto& sub : {std::make_pair(&span3, &g3), std::make_pair(&span2, &g2)}) {
        for (const auto& gen : g6.gens()) {
            auto cert = sub.first->member(gen.op);
            if (!cert)
                return fail(note, "generator " + to_string(gen.op) +
                                      " missed inside the coarser invariant algebra");
            if (cert->eval(sub.second->env()) != gen.op)
                return fail(note, "containment certificate did not evaluate back");
        }
    }

    for (const auto& g : g6.gens())
        if (pure_weight(g.op, 6) != std::optional<int>(0))
            return fail(note, "expected weight-homogeneous degree-6 generators");
    for (const WeylOp& target : {WeylOp::monomial(3, 0), WeylOp::monomial(0, 3),
                                 WeylOp::monomial(2, 0), WeylOp::monomial(0, 2)}) {
        auto w = pure_weight(target, 6);
        if (!w || *w == 0)
            return fail(note, "reverse containment lacks a weight obstruction for " +
                                  to_string(target));
        if (span6.member(target))
            return fail(note, to_string(target) +
                                  " must stay outside the degree-6 invariant algebra");
    }
    return true;
}

} // namespace

int main() {
    Gate gate;
    gate.run("operator arithmetic: associativity, distributivity, bracket collapse",
             c1_arithmetic);
    gate.run("invariant monomials: weight test matches membership, certificates check out",
             c2_invariant_monomials);
    gate.run("graded cofiniteness: full sets certify, thin sets yield the witness (0, 1)",
             c3_cofinite);
    gate.run("euler operator: reached from pure powers, standard triples verify",
             c4_euler);
    gate.run("twists and traces: automorphism laws, trace formula, derivation transport",
             c5_twist_trace);
    gate.run("classification: 25-triple grid round-trips exactly",
             c6_classify_roundtrip);
    gate.run("ramification: split derivatives audit cleanly, uniformity = shifted pure power",
             c7_ramification);
    gate.run("group uniformity: transposition search agrees, 3-cycle subgroup uniform",
             c8_sn_uniform);
    gate.run("invariant algebra containments: coarse covers fine, never conversely",
             c9_galois);
    std::printf("acceptance: %d/%d criteria passed\n", gate.passed,
                gate.passed + gate.failed);
    return gate.failed == 0 ? 0 : 1;
}
