// Command-line front end: exact normal forms in the cyclotomic rational
// Cherednik algebra, actions on the polynomial representation, relation
// suites and the residue/loading combinatorics.
//
// Exit codes: 0 success, 1 residual failure, 2 usage or parse error.

#include "cherednik/checks.hpp"
#include "cherednik/diagram.hpp"
#include "cherednik/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cherednik;

namespace {

struct Session {
    unsigned ell = 1;
    unsigned n = 1;
    std::string set;
    std::string format = "text";
    std::string kmode = "transcendental";
    std::string svals;
};

ParamAssignment parse_set(const std::string& set, unsigned ell) {
    ParamAssignment asg;
    if (set.empty()) return asg;
    std::stringstream ss(set);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("--set expects name=value pairs", 0);
        std::string name = item.substr(0, eq);
        CycScalar v = parse_scalar(item.substr(eq + 1), ell);
        if (!v.is_constant())
            throw ParseError("assigned value must be constant: " + item, 0);
        unsigned slot;
        if (name == "hbar") slot = 0;
        else if (name == "k") slot = 1;
        else if (name.size() >= 2 && name[0] == 'h') slot = 2 + std::stoul(name.substr(1));
        else throw ParseError("unknown parameter '" + name + "'", 0);
        if (slot >= 2 + ell) throw ParseError("parameter out of range: " + name, 0);
        asg.set(slot, v.constant_value());
    }
    return asg;
}

KMode parse_kmode(const std::string& spec) {
    if (spec == "transcendental") return KMode::make_transcendental();
    const std::string prefix = "rational:";
    if (spec.rfind(prefix, 0) == 0)
        return KMode::make_rational(rat_from_string(spec.substr(prefix.size())));
    if (spec.rfind("transcendental:", 0) == 0)
        return KMode::make_transcendental(rat_from_string(spec.substr(15)));
    throw ParseError("--k-mode expects rational:a/e or transcendental[:up]", 0);
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    return out;
}

ParamNumber parse_param_number(const std::string& tok) {
    // forms: "3/2", "2k", "-k", "3/2+2k", "1-1/2k"
    auto kpos = tok.find('k');
    if (kpos == std::string::npos) return ParamNumber::of(rat_from_string(tok));
    std::string kcoef = tok.substr(0, kpos);
    std::string rest = tok.substr(kpos + 1);
    if (!rest.empty()) throw ParseError("bad number '" + tok + "'", 0);
    // split the k coefficient from an optional leading rational part
    size_t split = std::string::npos;
    for (size_t i = 1; i < kcoef.size(); ++i)
        if (kcoef[i] == '+' || kcoef[i] == '-') split = i;
    Rat q0(0), q1;
    std::string q1s = kcoef;
    if (split != std::string::npos) {
        q0 = rat_from_string(kcoef.substr(0, split));
        q1s = kcoef.substr(split);
        if (q1s == "+") q1s = "1";
        if (q1s == "-") q1s = "-1";
    }
    if (q1s.empty() || q1s == "+") q1 = 1;
    else if (q1s == "-") q1 = -1;
    else q1 = rat_from_string(q1s);
    return ParamNumber{q0, q1};
}

std::vector<ParamNumber> parse_param_list(const std::string& s) {
    std::vector<ParamNumber> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_param_number(item));
    return out;
}

std::vector<unsigned> parse_uint_list(const std::string& s) {
    std::vector<unsigned> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    return out;
}

KlrContext make_context(const Session& cfg) {
    KlrContext ctx;
    ctx.ell = cfg.ell;
    ctx.k = parse_kmode(cfg.kmode);
    auto s = parse_rat_list(cfg.svals);
    if (s.empty()) s.assign(cfg.ell, Rat(0));
    ctx.s = std::move(s);
    ctx.validate();
    return ctx;
}

Multipartition parse_multipartition(const std::string& spec, unsigned ell) {
    json j = json::parse(spec);
    Multipartition xi;
    for (const auto& comp : j) {
        std::vector<unsigned> rows;
        for (const auto& r : comp) rows.push_back(r.get<unsigned>());
        xi.parts.push_back(std::move(rows));
    }
    while (xi.parts.size() < ell) xi.parts.push_back({});
    xi.validate(ell);
    return xi;
}

void emit(const Session& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

int run_check(const Session& cfg, const std::string& suite) {
    ParamAssignment asg = parse_set(cfg.set, cfg.ell);
    bool has_asg = !cfg.set.empty();
    std::vector<SuiteResult> results;
    if (suite == "relations") {
        results.push_back(suite_relations(cfg.ell, cfg.n, Convention::selected(),
                                          has_asg ? &asg : nullptr));
    } else if (suite == "operators") {
        results.push_back(suite_operators(cfg.ell, cfg.n));
    } else if (suite == "euler") {
        auto rep = suite_euler(cfg.ell, cfg.n);
        results.push_back(rep.suite);
        std::cerr << "euler orientation: [eu,x_i] = "
                  << (rep.x_sign >= 0 ? "+" : "-") << "hbar*x_i\n";
    } else if (suite == "push1") {
        auto rep = push1_check(cfg.ell);
        SuiteResult s;
        s.name = "push1(" + std::to_string(cfg.ell) + ")";
        s.record("vieta", rep.vieta_ok);
        s.record("operator", rep.operator_ok);
        s.record("bridge", rep.bridge_ok);
        results.push_back(s);
    } else if (suite == "roundtrip") {
        results.push_back(suite_roundtrip(cfg.ell, cfg.n));
    } else {
        throw ParseError("unknown suite '" + suite + "'", 0);
    }
    json out = json::array();
    bool ok = true;
    std::ostringstream text;
    for (const auto& s : results) {
        out.push_back(to_json(s));
        ok = ok && s.ok;
        text << s.name << ": " << (s.ok ? "pass" : "FAIL") << " (" << (s.checked - s.failed)
             << "/" << s.checked << ")";
        for (const auto& f : s.failures) text << "\n  failed: " << f;
        text << "\n";
    }
    emit(cfg, out, text.str());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the cyclotomic rational Cherednik algebra"};
    app.require_subcommand(1);

    Session cfg;
    app.add_option("--ell", cfg.ell, "cyclotomic order l >= 1");
    app.add_option("--n", cfg.n, "rank n >= 1");
    app.add_option("--set", cfg.set, "parameter assignment, e.g. hbar=1,k=0,h0=1/2");
    app.add_option("--format", cfg.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--k-mode", cfg.kmode, "rational:a/e or transcendental[:upsilon]");
    app.add_option("--s", cfg.svals, "comma list of s_0..s_{l-1} (default all 0)");

    std::string expr, poly, suite, a_list, z_list, d_list, xi_spec, sign = "+";
    std::string quantifier = "all";
    std::string residues;

    auto* nf = app.add_subcommand("normal-form", "PBW normal form of an expression");
    nf->add_option("expr", expr)->required();

    auto* act = app.add_subcommand("act-poly", "act by a word on a polynomial");
    act->add_option("word", expr)->required();
    act->add_option("poly", poly)->required();

    auto* chk = app.add_subcommand("check", "run a verification suite");
    chk->add_option("suite", suite, "relations|operators|euler|push1|roundtrip")->required();

    auto* qv = app.add_subcommand("quiver", "residue quiver of the parameters");
    qv->add_option("--residues", residues, "explicit vertex list (else category-O set)");

    auto* ld = app.add_subcommand("loading", "loading of an eigenvalue pair");
    ld->add_option("--a", a_list, "comma list of eigenvalues, entries like 3/2 or 1+2k");
    ld->add_option("--z", z_list, "comma list of torsion exponents");
    ld->add_option("--xi", xi_spec, "multipartition as JSON, e.g. [[2,1],[1]]");

    auto* st = app.add_subcommand("steady", "unsteadiness of a loading");
    st->add_option("--a", a_list)->required();
    st->add_option("--z", z_list)->required();
    st->add_option("--sign", sign, "+ or -");
    st->add_option("--quantifier", quantifier, "all|some")
        ->check(CLI::IsMember({"all", "some"}));

    auto* kz = app.add_subcommand("kz-weights", "widely spaced weight tuples");
    kz->add_option("--d", d_list, "comma list of residues")->required();
    kz->add_option("--sign", sign, "+ or -");

    auto* rd = app.add_subcommand("render-diagram", "ASCII cylinder diagram (debug)");
    rd->add_option("expr", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (nf->parsed()) {
            AWord w = parse_aword(expr, cfg.ell, cfg.n);
            APresentation ap(cfg.ell, cfg.n);
            HElem h = ap.to_h(w);
            if (!cfg.set.empty()) h = specialize_h(h, parse_set(cfg.set, cfg.ell));
            emit(cfg, to_json(h), h.to_string());
            return 0;
        }
        if (act->parsed()) {
            AWord w = parse_aword(expr, cfg.ell, cfg.n);
            PolyUT f = parse_poly(poly, cfg.ell, cfg.n);
            PolyRep rep(cfg.ell, cfg.n);
            PolyUT out = rep.act_word(w, f);
            emit(cfg, to_json(out), out.to_string());
            return 0;
        }
        if (chk->parsed()) return run_check(cfg, suite);
        if (qv->parsed()) {
            KlrContext ctx = make_context(cfg);
            std::vector<Residue> verts;
            if (!residues.empty()) {
                for (const auto& p : parse_param_list(residues))
                    verts.push_back(Residue::of(ctx, p));
            } else {
                verts = category_O_residues(ctx, cfg.n);
            }
            QuiverD q = build_quiver(ctx, verts);
            std::ostringstream text;
            text << "vertices:";
            for (const auto& v : q.vertices) text << " " << v.to_string();
            text << "\narrows:";
            for (auto [a, b] : q.arrows)
                text << " " << q.vertices[a].to_string() << "->" << q.vertices[b].to_string();
            emit(cfg, to_json(q, ctx), text.str());
            return 0;
        }
        if (ld->parsed()) {
            KlrContext ctx = make_context(cfg);
            Loading L;
            json extra;
            if (!xi_spec.empty()) {
                Multipartition xi = parse_multipartition(xi_spec, ctx.ell);
                auto [a, z] = multipartition_pair(ctx, canonical_boxes(xi));
                L = loading_from_pair(ctx, a, z);
                json ja = json::array(), jz = json::array();
                for (const auto& p : a) ja.push_back(p.to_string());
                for (auto v : z) jz.push_back(v);
                extra = json{{"a", ja}, {"z", jz}};
            } else {
                L = loading_from_pair(ctx, parse_param_list(a_list), parse_uint_list(z_list));
            }
            json out = to_json(L);
            if (!extra.is_null()) out["pair"] = extra;
            std::ostringstream text;
            for (const auto& p : L.points)
                text << "point " << p.index << ": pos=" << rat_to_string(p.pos)
                     << " label=" << p.label.to_string() << "\n";
            for (const auto& r : L.red)
                text << "red " << r.i << ": pos=" << rat_to_string(r.pos)
                     << " label=" << r.label.to_string() << "\n";
            emit(cfg, out, text.str());
            return 0;
        }
        if (st->parsed()) {
            KlrContext ctx = make_context(cfg);
            Loading L = loading_from_pair(ctx, parse_param_list(a_list),
                                          parse_uint_list(z_list));
            auto v = is_unsteady(ctx, L, sign == "-" ? -1 : +1, quantifier == "all");
            json out{{"unsteady", v.unsteady}};
            if (v.witness) out["witness"] = rat_to_string(*v.witness);
            std::ostringstream text;
            text << (v.unsteady ? "unsteady" : "steady");
            if (v.witness) text << " (witness delta = " << rat_to_string(*v.witness) << ")";
            emit(cfg, out, text.str());
            return 0;
        }
        if (kz->parsed()) {
            KlrContext ctx = make_context(cfg);
            std::vector<Residue> d;
            for (const auto& p : parse_param_list(d_list)) d.push_back(Residue::of(ctx, p));
            KzWeights w = kz_weight_tuples(ctx, d, sign == "-" ? -1 : +1);
            std::ostringstream text;
            text << "N=" << w.N.str() << " a=(";
            for (size_t i = 0; i < w.a.size(); ++i)
                text << (i ? "," : "") << w.a[i].to_string();
            text << ") z=all-ones";
            emit(cfg, to_json(w), text.str());
            return 0;
        }
        if (rd->parsed()) {
            AWord w = parse_aword(expr, cfg.ell, cfg.n);
            std::cout << render_diagram(w, cfg.n);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
