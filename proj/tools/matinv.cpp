#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "matinv/errors.hpp"
#include "matinv/exprlang.hpp"
#include "matinv/genmat.hpp"
#include "matinv/invariants.hpp"
#include "matinv/schur.hpp"
#include "matinv/series.hpp"
#include "matinv/tableaux.hpp"
#include "matinv/words.hpp"

using namespace matinv;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string mode = "modular";
    std::uint64_t prime1 = kDefaultPrime1;
    std::uint64_t prime2 = kDefaultPrime2;
    std::uint64_t seed = kDefaultSeed;
    int degree = 10;
    std::string format = "text";

    PipelineConfig pipeline() const {
        PipelineConfig c;
        c.mode = mode == "symbolic" ? Mode::Symbolic : Mode::Modular;
        c.prime1 = prime1;
        c.prime2 = prime2;
        c.seed = seed;
        c.validate();
        return c;
    }
    bool tree() const { return format == "tree"; }
};

// Thrown for bad user input that CLI11 cannot see (bad shapes, bad polynomials).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json header(const RunConfig& rc, const std::string& command) {
    return {{"command", command}, {"mode", rc.mode}, {"prime1", rc.prime1}, {"prime2", rc.prime2}, {"seed", rc.seed}};
}

void print_header(const RunConfig& rc, const std::string& command) {
    std::cout << "# matinv " << command << "  mode=" << rc.mode << "  seed=" << rc.seed << "  prime1=" << rc.prime1
              << "  prime2=" << rc.prime2 << "\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Partition shape_arg(int l1, int l2) {
    try {
        return Partition::make(l1, l2);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

json decomp_json(const SchurDecomp& d) {
    json out = json::array();
    for (const auto& [l, m] : d.terms) out.push_back({{"shape", l.to_string()}, {"multiplicity", m}});
    return out;
}

json modules_json(const ModuleDecomp& d) {
    json out = json::array();
    for (const auto& [l, m] : d.terms) out.push_back({{"shape", l.to_string()}, {"multiplicity", m}});
    return out;
}

// ------------------------------------------------------------------ commands

int cmd_hilbert(const RunConfig& rc, const std::string& series) {
    if (rc.degree < 0 || rc.degree > 20) throw UsageError("--degree must be in 0..20");
    SeriesReport r;
    if (series == "c0")
        r = hilbert_c0(rc.degree);
    else if (series == "c42")
        r = hilbert_c42(rc.degree);
    else if (series == "un")
        r = hilbert_un_sum(rc.degree);
    else {
        std::vector<Partition> m;
        for (auto s : theorem_modules())
            if (s.degree() >= 2) m.push_back(s);
        r = hilbert_km(m, rc.degree);
    }
    if (rc.tree()) {
        json j = header(rc, "hilbert");
        j["series"] = to_string(r.id);
        j["degree"] = rc.degree;
        json comps = json::array();
        for (int n = 0; n <= rc.degree; ++n)
            comps.push_back({{"n", n}, {"polynomial", r.series.component(n).to_string()}, {"schur", decomp_json(r.components[n])}});
        j["components"] = comps;
        emit(j);
        return 0;
    }
    print_header(rc, "hilbert");
    std::cout << "series " << to_string(r.id) << " through degree " << rc.degree << "\n";
    for (int n = 0; n <= rc.degree; ++n) std::cout << "h" << n << " = " << r.components[n].to_string() << "\n";
    return 0;
}

int cmd_decompose(const RunConfig& rc, const std::string& text) {
    QPoly p;
    try {
        p = parse_qpoly(text, tu_vars());
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    SchurDecomp d;
    try {
        d = schur_decompose(p);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (rc.tree())
        emit({{"command", "decompose"}, {"input", p.to_string()}, {"schur", decomp_json(d)}});
    else
        std::cout << d.to_string() << "\n";
    return 0;
}

int cmd_basis(const RunConfig& rc, int p, int q) {
    if (p < 0 || q < 0 || p + q == 0) throw UsageError("basis needs p, q >= 0 with p + q >= 1");
    auto words = enumerate_basis({p, q});
    if (rc.tree()) {
        json list = json::array();
        for (const auto& w : words) list.push_back(render_word(w.word()));
        emit({{"command", "basis"}, {"bidegree", {p, q}}, {"size", words.size()}, {"words", list}});
        return 0;
    }
    std::string sep;
    for (const auto& w : words) {
        std::cout << sep << render_word(w.word());
        sep = ", ";
    }
    std::cout << "\n";
    return 0;
}

int cmd_hwv(const RunConfig& rc, int l1, int l2) {
    Partition s = shape_arg(l1, l2);
    const std::vector<CatalogueEntry>* entries = nullptr;
    try {
        entries = &catalogue_entries(s);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    std::vector<TracePoly> vs;
    for (const auto& e : *entries) vs.push_back(e.value);
    std::size_t rk = independence_rank(vs);
    if (rc.tree()) {
        json list = json::array();
        for (std::size_t i = 0; i < entries->size(); ++i) {
            const auto& e = (*entries)[i];
            list.push_back({{"name", "w" + std::to_string(i + 1)},
                            {"tableau", e.tableau.to_string()},
                            {"scale", to_string(e.scale)},
                            {"value", e.value.to_string()}});
        }
        emit({{"command", "hwv"}, {"shape", s.to_string()}, {"rank", rk}, {"entries", list}});
        return 0;
    }
    std::cout << "shape " << s.to_string() << ": " << entries->size() << " vectors, rank " << rk << "\n";
    for (std::size_t i = 0; i < entries->size(); ++i) {
        const auto& e = (*entries)[i];
        std::cout << "w" << i + 1 << "  " << e.tableau.to_string() << "  scale " << to_string(e.scale) << "\n    "
                  << e.value.to_string() << "\n";
    }
    return 0;
}

int cmd_eval(const RunConfig& rc, const std::string& expr, bool symbolic, std::size_t points) {
    ExprPtr e;
    try {
        e = parse_expr(expr);
    } catch (const ParseError& err) {
        throw UsageError(err.what());
    }
    auto f = expand_formal(*e);
    if (symbolic || rc.mode == "symbolic") {
        QPoly v = shared_symbolic_evaluator().eval(f);
        if (rc.tree())
            emit({{"command", "eval"}, {"expr", print_expr(*e)}, {"symbolic", true}, {"value", v.to_string()}});
        else
            std::cout << v.to_string() << "\n";
        return 0;
    }
    auto cfg = rc.pipeline();
    const std::uint64_t primes[2] = {cfg.prime1, cfg.prime2};
    json j = header(rc, "eval");
    j["expr"] = print_expr(*e);
    if (!rc.tree()) {
        print_header(rc, "eval");
        std::cout << "expr " << print_expr(*e) << "\n";
    }
    bool all_zero = true;
    for (std::size_t k = 0; k < 2; ++k) {
        auto vals = eval_at_points(f, make_points(cfg.seed, k, primes[k], points));
        json arr = json::array();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            all_zero &= vals[i].v == 0;
            arr.push_back(vals[i].v);
            if (!rc.tree()) std::cout << "prime" << k + 1 << " point " << i << ": " << vals[i].v << "\n";
        }
        j["prime" + std::to_string(k + 1) + "_values"] = arr;
    }
    j["all_zero"] = all_zero;
    if (rc.tree())
        emit(j);
    else
        std::cout << (all_zero ? "zero at all points" : "nonzero") << "\n";
    return 0;
}

int cmd_verify_lemmas(const RunConfig& rc, std::size_t points) {
    auto cfg = rc.pipeline();
    auto corpus = load_corpus();
    auto checks = verify_corpus(corpus, cfg, points);
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass;
    if (rc.tree()) {
        json j = header(rc, "verify-lemmas");
        j["corpus"] = default_corpus_path();
        json list = json::array();
        for (const auto& c : checks)
            list.push_back({{"id", c.id}, {"shape", c.shape.to_string()}, {"pass", c.pass}, {"points", c.points_checked}, {"witness", c.witness}});
        j["records"] = list;
        j["passed"] = passed;
        j["total"] = checks.size();
        emit(j);
    } else {
        print_header(rc, "verify-lemmas");
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id;
            if (cfg.mode == Mode::Modular) std::cout << "  points=" << c.points_checked;
            if (!c.pass) std::cout << "  " << c.witness;
            std::cout << "\n";
        }
        std::cout << passed << "/" << checks.size() << " records pass\n";
    }
    return passed == checks.size() ? 0 : 1;
}

json relation_json(const RelationReport& r) {
    json rows = json::array();
    for (const auto& row : r.corpus_nullspace) {
        json a = json::array();
        for (const auto& x : row) a.push_back(to_string(x));
        rows.push_back(a);
    }
    return {{"shape", r.shape.to_string()},
            {"q", r.q},
            {"p", r.p},
            {"old_candidates", r.old_candidates},
            {"nullspace_dim", r.nullspace_dim},
            {"w_rank", r.w_rank},
            {"new_multiplicity", r.new_multiplicity},
            {"consistent_with_decomp", r.consistent_with_decomp},
            {"has_corpus", r.has_corpus},
            {"columns", r.columns},
            {"corpus_nullspace", rows},
            {"corpus_w_rank", r.corpus_w_rank},
            {"matched", r.matched_ids},
            {"unmatched", r.unmatched_ids},
            {"corpus_vs_in_old_span", r.corpus_vs_in_old_span}};
}

void print_relation(const RelationReport& r) {
    std::cout << "shape " << r.shape.to_string() << "\n"
              << "  q (multiplicity in U_n)     " << r.q << "\n"
              << "  p (multiplicity in old part) " << r.p << "\n"
              << "  old product candidates       " << r.old_candidates << "\n"
              << "  nullspace dimension          " << r.nullspace_dim << "\n"
              << "  rank on w coordinates        " << r.w_rank << "\n"
              << "  new generator multiplicity   " << r.new_multiplicity << "\n"
              << "  consistent with G_n          " << (r.consistent_with_decomp ? "yes" : "no") << "\n";
    if (!r.has_corpus) return;
    std::cout << "  corpus columns: ";
    for (const auto& c : r.columns) std::cout << c << " ";
    std::cout << "\n  corpus nullspace (reduced):\n";
    for (const auto& row : r.corpus_nullspace) {
        std::cout << "   ";
        for (const auto& x : row) std::cout << " " << to_string(x);
        std::cout << "\n";
    }
    std::cout << "  matched records:";
    for (const auto& id : r.matched_ids) std::cout << " " << id;
    std::cout << "\n  unmatched records:";
    for (const auto& id : r.unmatched_ids) std::cout << " " << id;
    std::cout << "\n  corpus products lie in the old span: " << (r.corpus_vs_in_old_span ? "yes" : "no") << "\n";
}

int cmd_discover(const RunConfig& rc, int l1, int l2) {
    Partition s = shape_arg(l1, l2);
    if (s.degree() > 10 || s.degree() < 2) throw UsageError("discover needs a shape of degree 2..10");
    auto cfg = rc.pipeline();
    auto corpus = load_corpus();
    bool in_corpus = false;
    for (const auto& d : corpus.shapes) in_corpus |= d.shape == s;
    Pipeline pl(cfg);
    auto r = pl.discover(s, in_corpus ? &corpus : nullptr);
    bool ok = r.consistent_with_decomp && r.unmatched_ids.empty() && (!r.has_corpus || r.corpus_vs_in_old_span);
    if (rc.tree()) {
        json j = header(rc, "discover");
        j["report"] = relation_json(r);
        j["pass"] = ok;
        emit(j);
    } else {
        print_header(rc, "discover");
        print_relation(r);
    }
    return ok ? 0 : 1;
}

int cmd_verify_theorem(const RunConfig& rc, int certify_through) {
    auto cfg = rc.pipeline();
    auto s = verify_theorem(cfg, certify_through);
    if (rc.tree()) {
        json j = header(rc, "verify-theorem");
        json degs = json::array();
        for (const auto& d : s.degrees)
            degs.push_back({{"n", d.n}, {"old", modules_json(d.old_modules)}, {"new", modules_json(d.new_modules)}});
        j["degrees"] = degs;
        json mods = json::array();
        for (auto m : s.modules) mods.push_back(m.to_string());
        j["modules"] = mods;
        j["modules_match"] = s.modules_match;
        json gens = json::array();
        for (const auto& [shape, ok] : s.generators_new) gens.push_back({{"shape", shape.to_string()}, {"outside_old_span", ok}});
        j["generators"] = gens;
        j["series_match"] = s.series_match;
        j["series_mismatch_degrees"] = s.series_mismatch_degrees;
        j["dims_consistent"] = s.dims_consistent;
        j["certified_through"] = s.certified_through;
        j["certified_match"] = s.certified_match;
        j["pass"] = s.pass;
        emit(j);
    } else {
        print_header(rc, "verify-theorem");
        for (const auto& d : s.degrees) std::cout << "G" << d.n << " = " << d.new_modules.to_string() << "\n";
        std::cout << "modules:";
        for (auto m : s.modules) std::cout << " W" << m.to_string();
        std::cout << "\nmodule list matches: " << (s.modules_match ? "yes" : "no") << "\n";
        for (const auto& [shape, ok] : s.generators_new)
            std::cout << "generator " << shape.to_string() << " outside the old span: " << (ok ? "yes" : "no") << "\n";
        std::cout << "H(K[M]) = H(C0) through degree 10: " << (s.series_match ? "yes" : "no") << "\n";
        std::cout << "component dimensions match the series: " << (s.dims_consistent ? "yes" : "no") << "\n";
        if (s.certified_through > 0)
            std::cout << "symbolic re-run through degree " << s.certified_through << ": " << (s.certified_match ? "agrees" : "DISAGREES") << "\n";
        std::cout << (s.pass ? "PASS" : "FAIL") << "\n";
    }
    return s.pass ? 0 : 1;
}

int cmd_remarks(const RunConfig& rc, int dmax) {
    if (dmax < 13 || dmax > 20) throw UsageError("--dmax must be in 13..20");
    auto cfg = rc.pipeline();
    auto r = remark_checks(dmax, cfg);
    if (rc.tree()) {
        json j = header(rc, "remarks");
        j["trace_commutator5_zero"] = r.trace_commutator5_zero;
        j["trace_commutator5_points"] = r.trace_commutator5_points;
        if (r.trace_commutator5_symbolic) j["trace_commutator5_symbolic"] = *r.trace_commutator5_symbolic;
        json diffs = json::array();
        for (const auto& [n, d] : r.differences) diffs.push_back({{"n", n}, {"schur", d.to_string()}});
        j["differences"] = diffs;
        j["jacobian_seed"] = r.jacobian_seed;
        j["jacobian_rank"] = r.jacobian_rank;
        j["jacobian_columns"] = r.jacobian_columns;
        j["pass"] = r.pass;
        emit(j);
    } else {
        print_header(rc, "remarks");
        std::cout << "tr([x,y]^5) - 5/6 tr([x,y]^2) tr([x,y]^3): "
                  << (r.trace_commutator5_zero ? "zero" : "NONZERO") << " at " << r.trace_commutator5_points << " points";
        if (r.trace_commutator5_symbolic) std::cout << ", symbolic " << (*r.trace_commutator5_symbolic ? "zero" : "NONZERO");
        std::cout << "\n";
        for (const auto& [n, d] : r.differences) std::cout << "H(K[M]) - H(C0) in degree " << n << ": " << d.to_string() << "\n";
        std::cout << "Jacobian rank at seed " << r.jacobian_seed << ": " << r.jacobian_rank << "  columns:";
        for (const auto& c : r.jacobian_columns) std::cout << " " << c;
        std::cout << "\n" << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace invariants of two generic traceless 4x4 matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    RunConfig rc;
    app.add_option("--mode", rc.mode, "modular (random points mod two primes) or symbolic (exact)")
        ->check(CLI::IsMember({"modular", "symbolic"}))
        ->capture_default_str();
    app.add_option("--prime1", rc.prime1, "first modulus")->capture_default_str();
    app.add_option("--prime2", rc.prime2, "second modulus")->capture_default_str();
    app.add_option("--seed", rc.seed, "seed for evaluation points")->capture_default_str();
    app.add_option("--degree", rc.degree, "degree bound for series")->capture_default_str();
    app.add_option("--format", rc.format, "text or tree (JSON)")->check(CLI::IsMember({"text", "tree"}))->capture_default_str();

    std::string series = "c0";
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series components, Schur-decomposed");
    hilbert->add_option("--series", series, "c0, c42, km or un")->check(CLI::IsMember({"c0", "c42", "km", "un"}))->capture_default_str();

    std::string poly;
    auto* decompose = app.add_subcommand("decompose", "Schur decomposition of a symmetric polynomial in t, u");
    decompose->add_option("poly", poly, "e.g. \"t^2 + t*u + u^2\"")->required();

    int a = 0, b = 0;
    auto* basis = app.add_subcommand("basis", "cyclic word basis of bidegree (p, q)");
    basis->add_option("p", a)->required();
    basis->add_option("q", b)->required();

    auto* hwv = app.add_subcommand("hwv", "catalogued highest weight vectors of a shape");
    hwv->add_option("l1", a)->required();
    hwv->add_option("l2", b)->required();

    std::string expr;
    bool symbolic = false;
    std::size_t points = 40;
    auto* eval = app.add_subcommand("eval", "evaluate a trace expression");
    eval->add_option("--expr", expr, "e.g. \"tr(x^5) - 5/6*tr(x^2)*tr(x^3)\"")->required();
    eval->add_flag("--symbolic", symbolic, "expand over the generic matrices");
    eval->add_option("--points", points, "points per prime in modular mode")->capture_default_str();

    std::size_t lemma_points = 40;
    auto* lemmas = app.add_subcommand("verify-lemmas", "check every corpus relation");
    lemmas->add_option("--points", lemma_points, "points per prime in modular mode")->capture_default_str();

    auto* discover = app.add_subcommand("discover", "relations and new generators at a shape");
    discover->add_option("l1", a)->required();
    discover->add_option("l2", b)->required();

    int certify = 8;
    auto* theorem = app.add_subcommand("verify-theorem", "minimal generating module and series comparison");
    theorem->add_option("--certify-through", certify, "degrees re-run symbolically after a modular run")->capture_default_str();

    int dmax = 13;
    auto* remarks = app.add_subcommand("remarks", "trace identity, series differences, Jacobian rank");
    remarks->add_option("--dmax", dmax, "last degree of the series difference")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hilbert) return cmd_hilbert(rc, series);
        if (*decompose) return cmd_decompose(rc, poly);
        if (*basis) return cmd_basis(rc, a, b);
        if (*hwv) return cmd_hwv(rc, a, b);
        if (*eval) return cmd_eval(rc, expr, symbolic, points);
        if (*lemmas) return cmd_verify_lemmas(rc, lemma_points);
        if (*discover) return cmd_discover(rc, a, b);
        if (*theorem) return cmd_verify_theorem(rc, certify);
        if (*remarks) return cmd_remarks(rc, dmax);
    } catch (const UsageError& e) {
        std::cerr << "matinv: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "matinv: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "matinv: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
