#include "doctest.h"

#include <algorithm>

#include "matinv/errors.hpp"
#include "matinv/invariants.hpp"

using namespace matinv;

namespace {

Partition P(int a, int b) { return Partition::make(a, b); }

const Corpus& corpus() {
    static const Corpus c = load_corpus();
    return c;
}

Pipeline& modular_pipeline() {
    static Pipeline pl;
    return pl;
}

GeneratorSet low_gens() {
    GeneratorSet g;
    for (auto s : {P(2, 0), P(3, 0), P(4, 0), P(2, 2)}) g.add(s, theorem_generator(s));
    return g;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("C0 Hilbert series components") {
    auto h = hilbert_c0(10);
    REQUIRE(h.components.size() == 11);
    CHECK(h.components[0].to_string() == "S(0,0)");
    CHECK(h.components[1].to_string() == "0");
    CHECK(h.components[4].to_string() == "2*S(4,0) + 2*S(2,2)");
    CHECK(h.components[8].to_string() == "4*S(8,0) + 2*S(7,1) + 10*S(6,2) + 6*S(5,3) + 8*S(4,4)");
    CHECK(h.components[10].multiplicity(P(5, 5)) == 5);
    for (int n = 0; n <= 10; ++n) CHECK(schur_sum(h.components[n]) == h.series.component(n));
    CHECK_THROWS_AS(hilbert_c0(21), std::invalid_argument);
}

TEST_CASE("C42 is C0 times the degree-one factor") {
    auto c42 = hilbert_c42(6);
    auto c0 = hilbert_c0(6);
    // Coefficient of t^p u^q in C42 is the sum of C0 coefficients below it.
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q) {
            Rat s = 0;
            for (int a = 0; a <= p; ++a)
                for (int b = 0; b <= q; ++b) s += c0.series.coefficient(a, b);
            CHECK(c42.series.coefficient(p, q) == s);
        }
}

TEST_CASE("K[M] series") {
    auto one = hilbert_km({}, 6);
    CHECK(one.series.coefficient(0, 0) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(one.series.component(n).is_zero());

    // 1/((1-t^2)(1-tu)(1-u^2)) at t^2 u^2: (tu)^2 and t^2 * u^2.
    auto single = hilbert_km({P(2, 0)}, 4);
    CHECK(single.series.coefficient(2, 2) == 2);
    CHECK(single.series.coefficient(4, 0) == 1);
    CHECK(single.series.coefficient(3, 1) == 1);

    std::vector<Partition> m;
    for (auto s : theorem_modules())
        if (s.degree() >= 2) m.push_back(s);
    REQUIRE(m.size() == 12);
    auto km = hilbert_km(m, 10);
    auto c0 = hilbert_c0(10);
    for (int n = 0; n <= 10; ++n) CHECK(km.series.component(n) == c0.series.component(n));
}

TEST_CASE("sum of U_n series matches the cyclic word count") {
    auto un = hilbert_un_sum(6);
    for (int n = 1; n <= 6; ++n) CHECK(un.series.component(n) == u_n_hilbert(n));
}

TEST_CASE("generator modules have one weight vector per bidegree") {
    for (auto s : theorem_modules()) {
        if (s.degree() < 2) continue;
        CAPTURE(s.to_string());
        auto m = GeneratorSet::make_module(s, theorem_generator(s));
        REQUIRE(m.weight_basis.size() == static_cast<std::size_t>(s.l1 - s.l2 + 1));
        QPoly ch;
        for (const auto& w : m.weight_basis) {
            auto b = w.bidegree();
            ch += tu_monomial(b.p, b.q);
        }
        CHECK(ch == schur_poly(s));
    }
    CHECK_THROWS_AS(GeneratorSet::make_module(P(2, 0), TracePoly::trace("xy")), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSet::make_module(P(3, 0), TracePoly::trace("xx")), std::invalid_argument);
}

TEST_CASE("theorem generators") {
    auto mods = theorem_modules();
    CHECK(mods.size() == 13);
    CHECK(mods.front() == P(1, 0));
    CHECK(theorem_generator(P(6, 3)) == (NCPoly::commutator().pow(3) * NCPoly::word("xxx")).trace());
    CHECK(theorem_generator(P(2, 0)) == TracePoly::trace("xx"));
}

TEST_CASE("subalgebra dimensions") {
    PipelineConfig cfg;
    auto g = low_gens();
    CHECK(subalgebra_dim(g, {5, 0}, cfg) == 1);
    CHECK(subalgebra_dim(g, {1, 0}, cfg) == 0);
    CHECK(subalgebra_dim(GeneratorSet{}, {4, 2}, cfg) == 0);
    // Old part at (4,2) plus the one new generator fills the component.
    auto& pl = modular_pipeline();
    std::size_t old = subalgebra_dim(pl.generators_below(6), {4, 2}, cfg);
    CHECK(old + 1 == static_cast<std::size_t>(hilbert_c0(6).series.coefficient(4, 2).get_num().get_si()));

    PipelineConfig sym = cfg;
    sym.mode = Mode::Symbolic;
    CHECK(subalgebra_dim(g, {5, 0}, sym) == 1);
    CHECK(subalgebra_dim(pl.generators_below(6), {4, 2}, sym) == old);
}

TEST_CASE("new generator modules by degree") {
    auto& pl = modular_pipeline();
    const std::map<int, std::string> expected = {
        {2, "W(2,0)"},          {3, "W(3,0)"}, {4, "W(4,0) + W(2,2)"}, {5, "W(3,2)"}, {6, "W(4,2) + W(3,3)"},
        {7, "W(4,3)"},          {8, "W(5,3) + W(4,4)"}, {9, "W(6,3)"}, {10, "W(5,5)"}};
    for (const auto& [n, s] : expected) {
        CAPTURE(n);
        CHECK(pl.degree(n).new_modules.to_string() == s);
    }
    CHECK(new_generator_decomp(pl.generators_below(5), 5, PipelineConfig{}).to_string() == "W(3,2)");
}

TEST_CASE("degree dimensions reconcile with the series") {
    auto& pl = modular_pipeline();
    auto c0 = hilbert_c0(10);
    for (int n = 2; n <= 10; ++n) {
        const auto& d = pl.degree(n);
        for (const auto& [b, dim] : d.full_dims) CHECK(Rat(static_cast<long>(dim)) == c0.series.coefficient(b.p, b.q));
    }
}

TEST_CASE("rescaling a generator leaves the decomposition alone") {
    PipelineConfig cfg;
    auto& pl = modular_pipeline();
    GeneratorSet scaled;
    Rat s = make_rat(-7, 3);
    for (const auto& e : pl.generators_below(8).entries) {
        scaled.add(e.shape, s * e.generator);
        s += 2;
    }
    CHECK(new_generator_decomp(scaled, 8, cfg).to_string() == pl.degree(8).new_modules.to_string());
}

TEST_CASE("seeds and primes do not change ranks") {
    PipelineConfig a;
    PipelineConfig b;
    b.seed = 99;
    b.prime1 = 1000000007ULL;
    b.prime2 = 998244353ULL;
    auto g = modular_pipeline().generators_below(7);
    for (Bidegree bd : {Bidegree{4, 3}, Bidegree{5, 2}, Bidegree{7, 0}}) CHECK(subalgebra_dim(g, bd, a) == subalgebra_dim(g, bd, b));
    CHECK(compute_degree(g, 7, a).new_modules.to_string() == compute_degree(g, 7, b).new_modules.to_string());

    PipelineConfig bad;
    bad.prime2 = bad.prime1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.prime2 = 1000000008ULL;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("relation discovery") {
    auto& pl = modular_pipeline();

    auto r42 = pl.discover(P(4, 2), &corpus());
    CHECK(r42.q == 2);
    CHECK(r42.new_multiplicity == 1);
    CHECK(r42.consistent_with_decomp);
    CHECK(has(r42.matched_ids, "(4,2)-1"));
    REQUIRE(r42.corpus_nullspace.size() == 1);
    // Proportional to (6, -12 | 6, 2, -3, -5).
    std::vector<Rat> expect = {6, -12, 6, 2, -3, -5};
    std::vector<Rat> row = r42.corpus_nullspace[0];
    REQUIRE(row.size() == expect.size());
    Rat scale = expect[0] / row[0];
    for (auto& x : row) x *= scale;
    CHECK(row == expect);
    CHECK(r42.columns == std::vector<std::string>{"w1", "w2", "v1", "v2", "v3", "v4"});

    auto r53 = pl.discover(P(5, 3), &corpus());
    CHECK(r53.q == 3);
    CHECK(r53.w_rank == 2);
    CHECK(r53.new_multiplicity == 1);
    CHECK(r53.unmatched_ids.empty());

    auto r33 = pl.discover(P(3, 3));
    CHECK(r33.q == 1);
    CHECK(r33.w_rank == 0);
    CHECK(r33.new_multiplicity == 1);
    CHECK_FALSE(r33.has_corpus);

    for (auto s : {P(5, 2), P(6, 2), P(7, 2)}) {
        auto r = pl.discover(s, &corpus());
        CHECK(r.new_multiplicity == 0);
        CHECK(r.unmatched_ids.empty());
        CHECK(r.corpus_vs_in_old_span);
    }
}

TEST_CASE("discovery agrees between modes") {
    PipelineConfig sym;
    sym.mode = Mode::Symbolic;
    auto a = discover_relations(P(4, 3), sym, &corpus());
    auto b = modular_pipeline().discover(P(4, 3), &corpus());
    CHECK(a.new_multiplicity == b.new_multiplicity);
    CHECK(a.corpus_nullspace == b.corpus_nullspace);
    CHECK(a.matched_ids == b.matched_ids);
}

TEST_CASE("corpus verification") {
    PipelineConfig cfg;
    auto r = verify_record(corpus(), corpus().record("(5,5)-1"), cfg);
    CHECK(r.pass);
    CHECK(r.points_checked == 80);

    RelationRecord bad = corpus().record("(5,5)-1");
    for (auto& t : bad.terms)
        if (t.name == "v2") t.coefficient = -4;
    auto f = verify_record(corpus(), bad, cfg, 5);
    CHECK_FALSE(f.pass);
    CHECK(f.witness.find("point") != std::string::npos);

    PipelineConfig sym;
    sym.mode = Mode::Symbolic;
    CHECK(verify_record(corpus(), corpus().record("(5,3)-2"), sym).pass);
    RelationRecord bad53 = corpus().record("(5,3)-2");
    bad53.terms[0].coefficient += 1;
    auto g = verify_record(corpus(), bad53, sym);
    CHECK_FALSE(g.pass);
    CHECK_FALSE(g.witness.empty());
}

TEST_CASE("runs are deterministic") {
    PipelineConfig cfg;
    auto a = verify_record(corpus(), corpus().record("(6,3)-1"), cfg, 8);
    auto b = verify_record(corpus(), corpus().record("(6,3)-1"), cfg, 8);
    CHECK(a.pass == b.pass);
    CHECK(a.witness == b.witness);
    Pipeline p1, p2;
    CHECK(p1.degree(6).chosen == p2.degree(6).chosen);
}

TEST_CASE("remarks") {
    auto r = remark_checks(13, PipelineConfig{});
    CHECK(r.trace_commutator5_zero);
    CHECK(r.trace_commutator5_points == 80);
    REQUIRE(r.differences.size() == 3);
    CHECK(r.differences[0].second.to_string() == "0");
    CHECK(r.differences[1].second.to_string() == "S(7,5) + 2*S(6,6)");
    CHECK(r.differences[2].second.to_string() == "S(8,5) + 2*S(7,6)");
    CHECK(r.jacobian_rank == 17);
    CHECK(r.jacobian_columns.size() == 17);
    CHECK(r.pass);
    CHECK_THROWS_AS(remark_checks(12, PipelineConfig{}), std::invalid_argument);
}
