#include "doctest.h"

#include <random>

#include "matinv/errors.hpp"
#include "matinv/linalg.hpp"
#include "matinv/modp.hpp"
#include "matinv/multipoly.hpp"
#include "matinv/series.hpp"

using namespace matinv;

namespace {

QPoly tu(const char* s) { return parse_qpoly(s, tu_vars()); }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK(parse_rat("-6/4") == make_rat(-3, 2));
    CHECK(to_string(parse_rat("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/x"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("prime field arithmetic") {
    const std::uint64_t p = 7;
    CHECK(to_zp(make_rat(5, 6), p).v == 2);
    CHECK_THROWS_AS(to_zp(make_rat(1, 7), p), DenominatorDivisibleByP);
    CHECK(to_zp(make_rat(-1), p).v == 6);
    Zp a(3, p);
    CHECK((a * inverse(a)).v == 1);
    CHECK_THROWS(inverse(Zp(0, p)));
    CHECK(is_prime_u64(2305843009213693951ULL));
    CHECK(is_prime_u64(2305843009213693921ULL));
    CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
    // Large modulus products go through 128-bit arithmetic.
    const std::uint64_t big = 2305843009213693951ULL;
    Zp x(big - 1, big);
    CHECK((x * x).v == 1);
}

TEST_CASE("polynomial arithmetic") {
    CHECK((tu("t + u") * tu("t - u")).to_string() == "t^2 - u^2");
    CHECK(tu("t*u*(t+u)") == tu("t^2*u + t*u^2"));
    CHECK(tu("(t+u)*0 + 1") == QPoly::constant(tu_vars(), Rat(1)));
    CHECK(tu("t + u").pow(3) == tu("t^3 + 3*t^2*u + 3*t*u^2 + u^3"));
    CHECK(tu("3/2*t - t - 1/2*t").is_zero());
    CHECK(tu("0").to_string() == "0");
    CHECK_THROWS_AS(tu("t + v"), ParseError);
    CHECK_THROWS_AS(tu("t + (u"), ParseError);
    try {
        tu("t + (u + ?)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(11);
    auto random_poly = [&]() {
        std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 3);
        QPoly p(tu_vars());
        for (int k = 0; k < 4; ++k) p += tu_monomial(expo(rng), expo(rng), Rat(coeff(rng)));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        QPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("series expansion") {
    std::vector<SeriesFactor> one{{1, 0, 1}};
    CHECK(series_expand_product(one, 3).coeffs() == tu("1 + t + t^2 + t^3"));

    std::vector<SeriesFactor> f{{2, 0, 1}, {3, 0, 1}, {4, 0, 1}, {5, 0, 1}};
    // Partitions into parts 2..5: 5 = 5 = 2+3, 6 = 2+2+2 = 3+3 = 2+4.
    CHECK(series_expand_product(f, 6).coefficient(5, 0) == 2);
    CHECK(series_expand_product(f, 6).coefficient(6, 0) == 3);

    std::vector<SeriesFactor> bad{{0, 0, 1}};
    CHECK_THROWS_AS(series_expand_product(bad, 3), std::invalid_argument);
    std::vector<SeriesFactor> zero_mult{{1, 0, 0}};
    CHECK_THROWS_AS(series_expand_product(zero_mult, 3), std::invalid_argument);
    CHECK_THROWS_AS(series_expand_product(one, -1), std::invalid_argument);

    // Dividing a product by its own factors gives back 1.
    std::vector<SeriesFactor> g{{1, 1, 2}, {2, 1, 1}};
    QPoly den = expand_denominator(g, 12);
    CHECK(series_divide(den, g, 12).coeffs() == tu("1"));
}

TEST_CASE("exact and modular rank") {
    auto q = [](std::vector<std::vector<long>> rows) {
        std::vector<std::vector<Rat>> r;
        for (auto& row : rows) {
            r.emplace_back();
            for (long v : row) r.back().push_back(Rat(v));
        }
        return QMatrix::from_rows(r, Rat(0));
    };
    auto ones = q({{1, 1}, {1, 1}});
    auto rn = rank_nullspace(ones);
    CHECK(rn.rank == 1);
    REQUIRE(rn.nullspace.size() == 1);
    CHECK(rn.nullspace[0] == std::vector<Rat>{Rat(-1), Rat(1)});

    auto six = q({{0, 0, 1, 0, 1, 0},
                  {1, 1, -1, -1, -1, 2},
                  {-1, -1, -1, 0, -1, -2},
                  {-1, 0, 1, 0, 1, 0},
                  {1, 1, -1, 2, 0, 0},
                  {-1, 1, 0, 0, 0, -1}});
    CHECK(rank(six) == 6);
    CHECK(rank(to_zp(six, 10007)) == 6);
    CHECK(rank_nullspace(six).nullspace.empty());

    // Nullspace vectors are annihilated exactly.
    auto m = QMatrix::from_rows({{Rat(1), Rat(2), Rat(3), make_rat(1, 2)},
                                 {Rat(2), Rat(4), Rat(6), Rat(1)},
                                 {Rat(0), Rat(1), make_rat(-1, 3), Rat(0)}},
                                Rat(0));
    auto mn = rank_nullspace(m);
    CHECK(mn.rank == 2);
    CHECK(mn.nullspace.size() == 2);
    for (const auto& v : mn.nullspace)
        for (const auto& x : apply(m, std::span<const Rat>(v), Rat(0))) CHECK(x == 0);
    auto zn = rank_nullspace(to_zp(m, 101));
    CHECK(zn.rank == 2);
    for (const auto& v : zn.nullspace)
        for (const auto& x : apply(to_zp(m, 101), std::span<const Zp>(v), Zp(0, 101))) CHECK(x.v == 0);
}

TEST_CASE("polynomial span finds relations") {
    PolySpan<Rat> span(Rat(1));
    CHECK(span.add(tu("t^2 + u")));
    CHECK(span.add(tu("t*u")));
    CHECK_FALSE(span.add(tu("2*t^2 + 2*u - 3*t*u")));
    CHECK(span.rank() == 2);
    auto rel = span.relations();
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == std::vector<Rat>{Rat(-2), Rat(3), Rat(1)});
}
