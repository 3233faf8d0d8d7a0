#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <da1/classify.hpp>
#include <da1/covering.hpp>
#include <da1/dxy.hpp>
#include <da1/errors.hpp>
#include <da1/expr.hpp>
#include <da1/graded_algebra.hpp>
#include <da1/invariants.hpp>
#include <da1/permutation.hpp>
#include <da1/subalgebra.hpp>
#include <da1/twist.hpp>

#include "genset_file.hpp"

// Exit codes: 0 answered, 2 unknown within bounds, 1 error, 64 usage.
// Output is a single JSON object on stdout; identical inputs produce
// byte-identical output.

namespace {

using ojson = nlohmann::ordered_json;
using namespace da1;

ojson bounds_json(const SearchBounds& b) {
    return ojson{{"word_length", b.word_length},
                 {"x_degree_cap", b.x_degree_cap},
                 {"order_cap", b.order_cap}};
}

ojson triple_json(const Triple& t) {
    return ojson{{"a", to_string(t.a)}, {"m", t.m}, {"p", to_string(t.p, "x")}};
}

ojson certs_json(const std::vector<NamedCert>& certs) {
    ojson j = ojson::object();
    for (const auto& c : certs) j[c.name] = c.cert.to_string();
    return j;
}

/// Flags shared by the word-search commands; -1 means "not given".
struct BoundsFlags {
    int word_length = -1;
    int x_degree_cap = -1;
    int order_cap = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--word-length", word_length, "max factors per word");
        cmd->add_option("--x-cap", x_degree_cap, "max x-degree kept in the span");
        cmd->add_option("--order-cap", order_cap, "max operator order kept in the span");
    }

    SearchBounds resolve(SearchBounds base) const {
        if (word_length > 0) base.word_length = word_length;
        if (x_degree_cap > 0) base.x_degree_cap = x_degree_cap;
        if (order_cap > 0) base.order_cap = order_cap;
        return base;
    }
};

struct Emitted {
    ojson json;
    int code = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with differential operators on the affine line"};
    app.require_subcommand(1);

    std::optional<Emitted> out;
    auto ok = [&](ojson result) {
        out = Emitted{ojson{{"status", "ok"}, {"result", std::move(result)}}, 0};
        return &out->json;
    };
    auto unknown = [&]() {
        out = Emitted{ojson{{"status", "unknown"}, {"result", nullptr}}, 2};
        return &out->json;
    };

    // ----- operator arithmetic -------------------------------------------
    auto* mul = app.add_subcommand("mul", "normal form of a product of operators");
    std::vector<std::string> mul_args;
    mul->add_option("expr", mul_args, "operator expressions, multiplied left to right")
        ->required()
        ->expected(1, -1);
    mul->callback([&] {
        WeylOp prod = WeylOp::constant(1);
        for (const auto& s : mul_args) prod = prod * parse_weyl(s);
        ok(to_string(prod));
    });

    auto* apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    std::string apply_op, apply_poly;
    apply->add_option("operator", apply_op)->required();
    apply->add_option("poly", apply_poly)->required();
    apply->callback([&] {
        ok(to_string(parse_weyl(apply_op).apply(parse_poly(apply_poly)), "x"));
    });

    auto* symbol = app.add_subcommand("symbol", "principal symbol of an operator");
    std::string symbol_op;
    symbol->add_option("operator", symbol_op)->required();
    symbol->callback([&] { ok(to_string(parse_weyl(symbol_op).symbol())); });

    // ----- cyclic invariants ---------------------------------------------
    auto* rey = app.add_subcommand("reynolds", "weight-0 projection for the cyclic action");
    std::string rey_expr;
    int rey_n = 0;
    bool rey_graded = false;
    rey->add_option("expr", rey_expr)->required();
    rey->add_option("--modulus", rey_n, "order of the cyclic action")->required();
    rey->add_flag("--graded", rey_graded, "treat the input as a polynomial in x, xi");
    rey->callback([&] {
        if (rey_graded)
            ok(to_string(reynolds(parse_graded(rey_expr), rey_n)));
        else
            ok(to_string(reynolds(parse_weyl(rey_expr), rey_n)));
    });

    auto* ibasis = app.add_subcommand("invariant-basis", "monomial basis of the invariants");
    int ibasis_n = 0, ibasis_total = 0;
    ibasis->add_option("--modulus", ibasis_n)->required();
    ibasis->add_option("--max-total", ibasis_total, "max x-degree + order")->required();
    ibasis->callback([&] {
        ojson arr = ojson::array();
        for (const auto& op : invariant_basis(ibasis_n, ibasis_total))
            arr.push_back(to_string(op));
        ok(std::move(arr));
    });

    // ----- filtered subalgebra searches ----------------------------------
    auto* mem = app.add_subcommand("member", "certified membership in a generated subalgebra");
    std::string mem_expr, mem_file;
    BoundsFlags mem_bounds;
    mem->add_option("expr", mem_expr)->required();
    mem->add_option("--gens-file", mem_file, "generator-set JSON file")->required();
    mem_bounds.attach(mem);
    mem->callback([&] {
        auto file = da1_cli::load_weyl_gens(mem_file);
        SearchBounds b = mem_bounds.resolve(file.bounds);
        auto cert = member(parse_weyl(mem_expr), file.gens, b);
        ojson* j = cert ? ok(true) : unknown();
        if (cert) (*j)["certificate"] = cert->to_string();
        (*j)["bounds_used"] = bounds_json(b);
    });

    auto* base_cmd = app.add_subcommand("base", "polynomials found inside the subalgebra");
    std::string base_file;
    BoundsFlags base_bounds;
    base_cmd->add_option("--gens-file", base_file)->required();
    base_bounds.attach(base_cmd);
    base_cmd->callback([&] {
        auto file = da1_cli::load_weyl_gens(base_file);
        SearchBounds b = base_bounds.resolve(file.bounds);
        ojson arr = ojson::array();
        for (const auto& p : subalgebra_base(file.gens, b)) arr.push_back(to_string(p, "x"));
        ojson* j = ok(std::move(arr));
        (*j)["bounds_used"] = bounds_json(b);
    });

    // ----- graded algebra ------------------------------------------------
    auto* gmem = app.add_subcommand("graded-member",
                                    "membership in a graded subalgebra of C[x, xi]");
    std::string gmem_expr, gmem_file;
    gmem->add_option("expr", gmem_expr)->required();
    gmem->add_option("--gens-file", gmem_file)->required();
    gmem->callback([&] {
        GradedGenSet gens = da1_cli::load_graded_gens(gmem_file);
        auto cert = graded_member(parse_graded(gmem_expr), gens);
        if (cert) {
            (*ok(true))["certificate"] = cert->to_string();
            return;
        }
        // absence is only a proof when the working generators are monomials
        bool monomial = true;
        for (const auto& w : gens.working())
            if (w.p.terms().size() != 1) monomial = false;
        if (monomial)
            ok(false);
        else
            unknown();
    });

    auto* cof = app.add_subcommand("cofinite", "graded cofiniteness of an ideal-like set");
    std::string cof_file;
    int cof_max = 16;
    cof->add_option("--gens-file", cof_file)->required();
    cof->add_option("--max-degree", cof_max, "largest pure-power degree tried");
    cof->callback([&] {
        GradedGenSet gens = da1_cli::load_graded_gens(cof_file);
        auto verdict = cofinite_check(gens, cof_max);
        ojson* j = nullptr;
        switch (verdict.status) {
            case Cofiniteness::Cofinite:
                j = ok(true);
                (*j)["nullstellensatz_degree"] = *verdict.nullstellensatz_degree;
                break;
            case Cofiniteness::NotCofinite:
                j = ok(false);
                (*j)["witness"] = ojson{{"x", to_string(verdict.witness->first)},
                                        {"xi", to_string(verdict.witness->second)}};
                break;
            default:
                j = unknown();
        }
        (*j)["bounds_used"] = ojson{{"max_degree", cof_max}};
    });

    auto* ggen = app.add_subcommand("graded-gens",
                                    "graded generators obtained from operator words");
    std::string ggen_file;
    int ggen_len = 3;
    ggen->add_option("--gens-file", ggen_file)->required();
    ggen->add_option("--word-length", ggen_len, "max factors per word");
    ggen->callback([&] {
        auto file = da1_cli::load_weyl_gens(ggen_file);
        std::vector<WeylOp> ops;
        for (const auto& g : file.gens.gens()) ops.push_back(g.op);
        ojson arr = ojson::array();
        for (const auto& p : graded_generators(ops, ggen_len)) arr.push_back(to_string(p));
        ojson* j = ok(std::move(arr));
        (*j)["bounds_used"] = ojson{{"word_length", ggen_len}};
    });

    // ----- coverings of the line -----------------------------------------
    auto* dxy_cmd = app.add_subcommand("dxy", "does the operator preserve C[t]?");
    std::string dxy_expr, dxy_poly;
    int dxy_power = 0, dxy_bound = 0;
    std::string dxy_center = "0";
    dxy_cmd->add_option("expr", dxy_expr)->required();
    auto* dxy_pow_opt =
        dxy_cmd->add_option("--power", dxy_power, "t = (x - center)^power, decided exactly");
    dxy_cmd->add_option("--center", dxy_center, "center of the pure power")
        ->needs(dxy_pow_opt);
    auto* dxy_poly_opt =
        dxy_cmd->add_option("--poly", dxy_poly, "t = q(x), checked up to a power bound");
    dxy_cmd->add_option("--bound", dxy_bound, "powers of t to check")->needs(dxy_poly_opt);
    dxy_pow_opt->excludes(dxy_poly_opt);
    dxy_cmd->callback([&] {
        WeylOp D = parse_weyl(dxy_expr);
        Covering cov;
        if (dxy_pow_opt->count()) {
            cov = PurePower{parse_rational(dxy_center), dxy_power};
        } else if (dxy_poly_opt->count()) {
            cov = GeneralPoly{parse_poly(dxy_poly), dxy_bound};
        } else {
            throw CLI::RequiredError("--power or --poly");
        }
        DxyResult r = dxy_member(D, cov);
        ojson* j = ok(r.member);
        (*j)["exact"] = r.exact;
        if (!r.member)
            (*j)["witness"] =
                ojson{{"k", *r.failing_power}, {"residue", to_string(r.residue, "x")}};
        if (r.bound_used) (*j)["bounds_used"] = ojson{{"power_bound", *r.bound_used}};
    });

    // ----- twists ---------------------------------------------------------
    auto* tw = app.add_subcommand("twist", "apply the automorphism d -> d + p");
    std::string tw_expr, tw_p;
    tw->add_option("expr", tw_expr)->required();
    tw->add_option("p", tw_p, "twisting polynomial in x")->required();
    tw->callback([&] { ok(to_string(twist(parse_weyl(tw_expr), parse_poly(tw_p)))); });

    auto* utw = app.add_subcommand("untwist", "apply the inverse twist d -> d - p");
    std::string utw_expr, utw_p;
    utw->add_option("expr", utw_expr)->required();
    utw->add_option("p", utw_p)->required();
    utw->callback([&] { ok(to_string(untwist(parse_weyl(utw_expr), parse_poly(utw_p)))); });

    auto* tr = app.add_subcommand("trace", "trace of a multiplication operator downstairs");
    std::string tr_expr, tr_center = "0";
    int tr_m = 0;
    tr->add_option("poly", tr_expr)->required();
    tr->add_option("--modulus", tr_m, "degree of the covering")->required();
    tr->add_option("--center", tr_center);
    tr->callback([&] {
        ok(to_string(trace_poly(parse_poly(tr_expr), tr_m, parse_rational(tr_center)), "x"));
    });

    auto* canon = app.add_subcommand("canonicalize", "canonical twist datum");
    std::string canon_expr, canon_center = "0";
    int canon_m = 0;
    canon->add_option("p", canon_expr)->required();
    canon->add_option("--modulus", canon_m)->required();
    canon->add_option("--center", canon_center);
    canon->callback([&] {
        CanonicalTwist ct =
            canonicalize_p(parse_poly(canon_expr), canon_m, parse_rational(canon_center));
        ok(ojson{{"p", to_string(ct.p, "x")}, {"r", to_string(ct.r, "t")}});
    });

    // ----- classification -------------------------------------------------
    auto* fwd = app.add_subcommand("forward", "generators attached to a triple (a, m, p)");
    std::string fwd_a = "0", fwd_p = "0";
    int fwd_m = 0;
    fwd->add_option("--a", fwd_a, "center");
    fwd->add_option("--m", fwd_m, "covering degree")->required();
    fwd->add_option("--p", fwd_p, "twist polynomial in x");
    fwd->callback([&] {
        Triple t = make_triple(parse_rational(fwd_a), fwd_m, parse_poly(fwd_p));
        FilteredGenSet gens = forward(t);
        ojson* j = ok(ojson{{"um", to_string(gens.gens()[0].op)},
                            {"etam", to_string(gens.gens()[1].op)}});
        (*j)["triple"] = triple_json(t);
    });

    auto* cls = app.add_subcommand("classify", "recover the triple of a generated subalgebra");
    std::string cls_file;
    BoundsFlags cls_bounds;
    cls->add_option("--gens-file", cls_file)->required();
    cls_bounds.attach(cls);
    cls->callback([&] {
        auto file = da1_cli::load_weyl_gens(cls_file);
        SearchBounds b = cls_bounds.resolve(file.bounds);
        auto r = classify(file.gens, b);
        ojson* j = nullptr;
        if (r) {
            j = ok(triple_json(r->triple));
            (*j)["certificates"] = certs_json(r->verification.forward_certs);
            (*j)["reverse_certificates"] = certs_json(r->verification.reverse_certs);
        } else {
            j = unknown();
        }
        (*j)["bounds_used"] = bounds_json(b);
    });

    auto* vt = app.add_subcommand("verify-triple",
                                  "does the triple generate the same subalgebra?");
    std::string vt_a = "0", vt_p = "0", vt_file;
    int vt_m = 0;
    BoundsFlags vt_bounds;
    vt->add_option("--a", vt_a);
    vt->add_option("--m", vt_m)->required();
    vt->add_option("--p", vt_p);
    vt->add_option("--gens-file", vt_file)->required();
    vt_bounds.attach(vt);
    vt->callback([&] {
        auto file = da1_cli::load_weyl_gens(vt_file);
        SearchBounds b = vt_bounds.resolve(file.bounds);
        Triple t = make_triple(parse_rational(vt_a), vt_m, parse_poly(vt_p));
        VerifyResult r = verify_triple(t, file.gens, b);
        ojson* j = nullptr;
        switch (r.verdict) {
            case Verdict::Holds:
                j = ok(true);
                (*j)["certificates"] = certs_json(r.forward_certs);
                (*j)["reverse_certificates"] = certs_json(r.reverse_certs);
                break;
            case Verdict::Fails:
                j = ok(false);
                (*j)["obstruction"] =
                    ojson{{"target", to_string(r.obstruction->target)},
                          {"modulus", r.obstruction->modulus},
                          {"center", to_string(r.obstruction->center)},
                          {"twist", to_string(r.obstruction->twist_p, "x")}};
                break;
            default:
                j = unknown();
        }
        (*j)["bounds_used"] = bounds_json(b);
    });

    // ----- ramification ---------------------------------------------------
    auto* ram = app.add_subcommand("ramify", "ramification profile of a polynomial covering");
    std::string ram_poly;
    ram->add_option("poly", ram_poly)->required();
    ram->callback([&] {
        RamificationProfile prof = ramification_profile(parse_poly(ram_poly));
        ojson fibers = ojson::array();
        for (const auto& f : prof.fibers) {
            ojson fj{{"branch_value", to_string(f.branch_value)},
                     {"indices", f.indices},
                     {"unramified", f.unramified}};
            fibers.push_back(std::move(fj));
        }
        ok(ojson{{"degree", prof.degree},
                 {"infinity_index", prof.infinity_index},
                 {"fibers", std::move(fibers)}});
    });

    auto* uni = app.add_subcommand("uniform", "is the covering uniformly ramified?");
    std::string uni_poly;
    uni->add_option("poly", uni_poly)->required();
    uni->callback([&] { ok(uniform_ramified(parse_poly(uni_poly))); });

    auto* hur = app.add_subcommand("hurwitz", "Euler-count audit of the profile");
    std::string hur_poly;
    hur->add_option("poly", hur_poly)->required();
    hur->callback([&] { ok(hurwitz_check(parse_poly(hur_poly))); });

    auto* snu = app.add_subcommand("sn-uniform",
                                   "does the subgroup avoid every transposition?");
    int snu_n = 0;
    std::vector<std::string> snu_perms;
    snu->add_option("--n", snu_n, "degree of the symmetric group")->required();
    snu->add_option("perm", snu_perms, "generators in cycle notation");
    snu->callback([&] {
        SubgroupReport rep = subgroup_report(snu_perms, snu_n);
        ojson* j = ok(!rep.has_transposition);
        (*j)["order"] = rep.order;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    } catch (const parse_error& e) {
        ojson expected = ojson::array();
        for (const auto& s : e.expected()) expected.push_back(s);
        ojson err{{"kind", e.kind()},
                  {"what", e.what()},
                  {"offset", e.offset()},
                  {"expected", std::move(expected)}};
        std::cout << ojson{{"status", "error"}, {"result", nullptr}, {"error", err}}.dump()
                  << "\n";
        return 1;
    } catch (const inconsistent_base& e) {
        ojson err{{"kind", e.kind()},
                  {"what", e.what()},
                  {"witness", to_string(e.witness(), "x")}};
        std::cout << ojson{{"status", "error"}, {"result", nullptr}, {"error", err}}.dump()
                  << "\n";
        return 1;
    } catch (const error& e) {
        ojson err{{"kind", e.kind()}, {"what", e.what()}};
        std::cout << ojson{{"status", "error"}, {"result", nullptr}, {"error", err}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        ojson err{{"kind", "Error"}, {"what", e.what()}};
        std::cout << ojson{{"status", "error"}, {"result", nullptr}, {"error", err}}.dump()
                  << "\n";
        return 1;
    }

    if (!out) return 64; // no subcommand ran
    std::cout << out->json.dump() << "\n";
    return out->code;
}
