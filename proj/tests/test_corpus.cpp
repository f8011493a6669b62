#include "doctest.h"

#include <map>
#include <string>

#include "matinv/errors.hpp"
#include "matinv/exprlang.hpp"
#include "matinv/genmat.hpp"

using namespace matinv;

namespace {

constexpr std::uint64_t kP1 = 2305843009213693951ULL;
constexpr std::uint64_t kP2 = 2305843009213693921ULL;

const Corpus& corpus() {
    static const Corpus c = load_corpus();
    return c;
}

bool vanishes(const FormalTracePoly& f, std::uint64_t seed) {
    for (auto [idx, p] : {std::pair{0UL, kP1}, std::pair{1UL, kP2}})
        for (const auto& v : eval_at_points(f, make_points(seed, idx, p, 5)))
            if (v.v != 0) return false;
    return true;
}

std::string corpus_error(const std::string& text) {
    try {
        parse_corpus(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("corpus record counts") {
    const auto& c = corpus();
    CHECK(c.records.size() == 47);
    std::map<Partition, int> per_shape;
    for (const auto& r : c.records) ++per_shape[r.shape];
    std::map<Partition, int> expected = {
        {Partition::make(4, 2), 1}, {Partition::make(5, 2), 2}, {Partition::make(4, 3), 1},
        {Partition::make(6, 2), 3}, {Partition::make(5, 3), 2}, {Partition::make(4, 4), 2},
        {Partition::make(7, 2), 3}, {Partition::make(6, 3), 5}, {Partition::make(5, 4), 4},
        {Partition::make(8, 2), 4}, {Partition::make(7, 3), 7}, {Partition::make(6, 4), 10},
        {Partition::make(5, 5), 3}};
    CHECK(per_shape == expected);
    CHECK(c.definitions(Partition::make(6, 4)).vs.size() == 24);
    CHECK_THROWS_AS(c.record("(9,1)-1"), std::out_of_range);
}

TEST_CASE("family instances carry the beta coefficients") {
    const auto& r = corpus().record("(6,4)-1");
    REQUIRE(r.terms.size() >= 2);
    CHECK(r.terms[0].name == "w1");
    CHECK(r.terms[0].coefficient == 1);
    Rat beta2 = 0;
    for (const auto& t : r.terms)
        if (t.name == "v2") beta2 = t.coefficient;
    CHECK(beta2 == make_rat(-1, 4));
    CHECK(corpus().record("(6,4)-10").terms[0].name == "w10");
}

TEST_CASE("every v is a homogeneous, delta-killed, nonzero invariant") {
    auto pts = make_points(7, 0, kP1, 2);
    for (const auto& s : corpus().shapes)
        for (const auto& [name, e] : s.vs) {
            CAPTURE(s.shape.to_string());
            CAPTURE(name);
            auto f = expand_formal(*e);
            CHECK(f.bidegree() == Bidegree{s.shape.l1, s.shape.l2});
            CHECK(delta(f).is_zero());
            CHECK(eval_at_points(f, pts)[0].v != 0);
            CHECK(equal(*parse_expr(print_expr(*e)), *e));
        }
}

TEST_CASE("every record is homogeneous and vanishes at random points") {
    for (const auto& r : corpus().records) {
        CAPTURE(r.id);
        auto f = corpus().assemble(r);
        CHECK_FALSE(f.is_zero());
        for (const auto& t : r.terms) CHECK(corpus().named(r.shape, t.name).bidegree() == Bidegree{r.shape.l1, r.shape.l2});
        CHECK(vanishes(f, 42));
    }
}

TEST_CASE("small records vanish symbolically") {
    for (const char* id : {"(4,2)-1", "(5,2)-1", "(5,2)-2", "(4,3)-1"}) {
        CAPTURE(id);
        CHECK(shared_symbolic_evaluator().eval(corpus().assemble(corpus().record(id))).is_zero());
    }
}

TEST_CASE("perturbed relations fail") {
    const auto& c = corpus();
    RelationRecord r = c.record("(5,5)-1");
    REQUIRE(r.terms[1].name == "v2");
    r.terms[1].coefficient = -4;
    CHECK_FALSE(vanishes(c.assemble(r), 42));

    // With 24 w3 (fits the unscaled tableau vector) the (4,4) relation fails.
    RelationRecord unscaled = c.record("(4,4)-2");
    for (auto& t : unscaled.terms)
        if (t.name == "w3") {
            CHECK(t.coefficient == 48);
            t.coefficient = 24;
        }
    CHECK_FALSE(vanishes(c.assemble(unscaled), 42));
}

TEST_CASE("corpus parse errors name the block") {
    CHECK(corpus_error("[shape (2,2)]\nv1 = tr(x^2\n").find("(2,2)") != std::string::npos);
    CHECK(corpus_error("[record a]\nshape = (2,2)\nterms = 2w1 + v1\n").find("'a'") != std::string::npos);
    CHECK(corpus_error("[record a]\nshape = (2,2)\nterms = w1 w2\n").find("'a'") != std::string::npos);
    CHECK(corpus_error("[record a]\nshape = (2,2)\nterms = w1\n[record a]\nshape = (2,2)\nterms = w1\n")
              .find("duplicate") != std::string::npos);
    CHECK(corpus_error("[thing b]\n").find("unknown block") != std::string::npos);

    auto c = parse_corpus("[shape (2,2)]\nv1 = tr(x^2)*tr(y^2)\n  - tr(x*y)^2\nnote = hi\n"
                          "[record r]\nshape = (2,2)\nterms = -1/2 * v1 + 3w1\n");
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].terms[0].coefficient == make_rat(-1, 2));
    CHECK(c.records[0].terms[1].name == "w1");
    CHECK(c.records[0].notes == std::vector<std::string>{"hi"});
    CHECK(print_expr(*c.definitions(Partition::make(2, 2)).vs[0].second) == "tr(x^2)*tr(y^2) - tr(x*y)^2");
}
