#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "matinv/errors.hpp"
#include "matinv/exprlang.hpp"
#include "random_gen.hpp"

using namespace matinv;
using testgen::random_expr;

namespace {

std::size_t error_position(const std::string& s) {
    try {
        parse_expr(s);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << s);
    return 0;
}

}  // namespace

TEST_CASE("parse simple expressions") {
    auto e = parse_expr("tr(x^2*y^2)");
    REQUIRE(e->kind() == TraceExpr::Kind::Trace);
    CHECK(e->word().size() == 2);
    CHECK(e->word()[0] == TraceAtom{TraceAtom::Kind::X, 2});

    auto s = parse_expr("6*tr(x^4y^2) - 1/2*tr([x,y]^2x)tr(x)");
    REQUIRE(s->kind() == TraceExpr::Kind::Sum);
    CHECK(s->terms().size() == 2);
    CHECK(s->terms()[0].first == 6);
    CHECK(s->terms()[1].first == make_rat(-1, 2));
    CHECK(s->terms()[1].second->kind() == TraceExpr::Kind::Product);

    CHECK(parse_expr("3/4")->kind() == TraceExpr::Kind::Const);
    CHECK(parse_expr("-tr(x)")->kind() == TraceExpr::Kind::Sum);
    CHECK(parse_expr("tr(x)^2")->kind() == TraceExpr::Kind::Power);
    CHECK(print_expr(*parse_expr("tr(x^3)tr(x*y^2)")) == "tr(x^3)*tr(x*y^2)");
    CHECK(print_expr(*parse_expr("  2 tr( [x,y]^3 x )  ")) == "2*tr([x,y]^3*x)");
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_position("tr(x*z)") == 5);
    CHECK(error_position("tr(x") == 4);
    CHECK(error_position("tr(x^0)") == 5);
    CHECK(error_position("tr(x)^0") == 6);
    CHECK(error_position("2*") == 2);
    CHECK(error_position("(tr(x)") == 0);
    CHECK(error_position("tr(x))") == 5);
    CHECK(error_position("tr()") == 3);
    CHECK(error_position("tr([x,y)") == 3);
    CHECK(error_position("tr(x) + ") == 8);
    CHECK(error_position("") == 0);
    CHECK_THROWS_AS(parse_expr("1/0*tr(x)"), ParseError);
}

TEST_CASE("print then parse is the identity on corpus-like expressions") {
    for (const char* s : {"6*tr(x^4*y^2) - 12*tr(x^2*y*x^2*y) + 1/2*tr([x,y]^2)*tr(x^2)",
                          "(tr(x^2)*tr(y^2) - tr(x*y)^2)*tr(x^3)", "-tr([x,y]^2*x)^2 + 3",
                          "tr(x^4)^2*tr(y^2)", "5*tr(x^3)^2*(tr(y^2)*tr(x^2) + 2*tr(x*y)^2)"}) {
        auto e = parse_expr(s);
        CHECK(print_expr(*e) == s);
        CHECK(equal(*parse_expr(print_expr(*e)), *e));
    }
}

TEST_CASE("print then parse is the identity on random trees") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 300; ++i) {
        auto e = random_expr(rng, 3);
        std::string text = print_expr(*e);
        CAPTURE(text);
        auto back = parse_expr(text);
        CHECK(equal(*back, *e));
        CHECK(print_expr(*back) == text);
    }
}

TEST_CASE("word expansion") {
    auto p = expand_word({{TraceAtom::Kind::Bracket, 2}});
    auto expected = NCPoly::word("xyxy") - NCPoly::word("xyyx") - NCPoly::word("yxxy") + NCPoly::word("yxyx");
    CHECK(p.terms() == expected.terms());
    CHECK(expand_formal(*parse_expr("tr([x,y]^2)")).to_trace_poly() ==
          TracePoly::trace("xyxy", Rat(2)) - TracePoly::trace("xxyy", Rat(2)));
}

TEST_CASE("formal trace polynomials") {
    auto f = expand_formal(*parse_expr("(tr(x) + tr(y))^2"));
    auto g = expand_formal(*parse_expr("tr(x)^2 + 2*tr(x)*tr(y) + tr(y)^2"));
    CHECK(f == g);
    CHECK(expand_formal(*parse_expr("tr(x*y) - tr(y*x)")).is_zero());
    CHECK(expand_formal(*parse_expr("tr(x^2)tr(y)")).bidegree() == Bidegree{2, 1});
    CHECK_THROWS_AS(expand_formal(*parse_expr("tr(x) + tr(y^2)")).bidegree(), NotHomogeneous);
    CHECK_THROWS_AS(expand_formal(*parse_expr("tr(x)*tr(y)")).to_trace_poly(), std::invalid_argument);
    CHECK(expand_formal(*parse_expr("3")) == FormalTracePoly::constant(Rat(3)));
    CHECK(expand_formal(*parse_expr("tr(x)*tr(y)")).words().size() == 2);
}

TEST_CASE("formal delta follows the Leibniz rule") {
    auto d = delta(expand_formal(*parse_expr("tr(y)^2")));
    CHECK(d == expand_formal(*parse_expr("2*tr(x)*tr(y)")));
    auto d2 = delta(expand_formal(*parse_expr("tr(x*y)*tr(y)")));
    CHECK(d2 == expand_formal(*parse_expr("tr(x^2)*tr(y) + tr(x*y)*tr(x)")));
    for (const char* s : {"tr(x^2*y^2) - tr(x*y*x*y)", "tr([x,y]^2*y)", "tr(x^3*y*x*y^2)"}) {
        auto f = expand_formal(*parse_expr(s));
        CHECK(delta(f).to_trace_poly() == delta(f.to_trace_poly()));
    }
    CHECK(delta(expand_formal(*parse_expr("tr([x,y]^2)*tr(x^3) - 1/2*tr([x,y]^2*x)*tr(x^2)"))).is_zero());
}
