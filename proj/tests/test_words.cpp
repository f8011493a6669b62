#include "doctest.h"

#include <random>

#include "matinv/series.hpp"
#include "matinv/words.hpp"

using namespace matinv;

namespace {

std::vector<std::string> rendered(const std::vector<CyclicWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(render_word(w.word()));
    return out;
}

// Independent necklace count by Burnside over rotations.
long necklaces(int p, int q) {
    const int n = p + q;
    auto binom = [](long a, long b) {
        long r = 1;
        for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    long total = 0;
    for (int r = 0; r < n; ++r) {
        int g = std::gcd(r, n);
        int cycle = n / g;
        if (p % cycle || q % cycle) continue;
        total += binom(g, p / cycle);
    }
    return total / n;
}

}  // namespace

TEST_CASE("cyclic canonical form") {
    CHECK(cyclic_canonicalize("yxx").word() == "xxy");
    CHECK(cyclic_canonicalize("xyxy").word() == "xyxy");
    CHECK(cyclic_canonicalize("yxxy").word() == "xxyy");
    CHECK(cyclic_canonicalize("yyy").word() == "yyy");
    CHECK(cyclic_canonicalize("xxx").word() == "xxx");
    // Run-key order: x^2y^2x^2y is preferred over its rotation x^2yx^2y^2.
    CHECK(cyclic_canonicalize("xxyxxyy").word() == "xxyyxxy");
    CHECK_THROWS_AS(cyclic_canonicalize(""), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_canonicalize("xz"), std::invalid_argument);
    CHECK(render_word("xxyxyy") == "x^2*y*x*y^2");
}

TEST_CASE("canonical form is rotation invariant for all words up to length 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string w;
            for (int i = 0; i < n; ++i) w += (mask >> i & 1) ? 'y' : 'x';
            CyclicWord c(w);
            for (int r = 1; r < n; ++r) {
                std::string rot = w.substr(r) + w.substr(0, r);
                REQUIRE(CyclicWord(rot) == c);
            }
            // The representative is itself a rotation of w.
            std::string ww = w + w;
            CHECK(ww.find(c.word()) != std::string::npos);
        }
    }
}

TEST_CASE("cyclic word bases") {
    CHECK(rendered(enumerate_basis({2, 2})) == std::vector<std::string>{"x^2*y^2", "x*y*x*y"});
    CHECK(rendered(enumerate_basis({4, 3})) ==
          std::vector<std::string>{"x^4*y^3", "x^3*y^2*x*y", "x^3*y*x*y^2", "x^2*y^2*x^2*y", "x^2*y*x*y*x*y"});
    CHECK(enumerate_basis({5, 3}).size() == 7);
    CHECK(enumerate_basis({4, 4}).size() == 10);
    CHECK(enumerate_basis({5, 5}).size() == 26);
    for (int n = 1; n <= 10; ++n)
        for (int p = 0; p <= n; ++p) {
            CHECK(static_cast<long>(enumerate_basis({p, n - p}).size()) == necklaces(p, n - p));
            CHECK(enumerate_basis({p, n - p}).size() == enumerate_basis({n - p, p}).size());
        }
    CHECK(u_n_hilbert(4) == parse_qpoly("t^4 + t^3*u + 2*t^2*u^2 + t*u^3 + u^4", tu_vars()));
    CHECK(u_n_hilbert(1) == parse_qpoly("t + u", tu_vars()));
}

TEST_CASE("delta derivation") {
    CHECK(delta(TracePoly::trace("yy")) == TracePoly::trace("xy", Rat(2)));
    CHECK(delta(TracePoly::trace("xxyy", Rat(-1)) + TracePoly::trace("xyxy")).is_zero());
    CHECK(delta(TracePoly::trace("xxxxx")).is_zero());
    CHECK(lower(TracePoly::trace("xx")) == TracePoly::trace("xy", Rat(2)));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-4, 4), bits(0, 255);
    auto random_tp = [&]() {
        TracePoly t;
        for (int k = 0; k < 5; ++k) {
            std::string w;
            int m = bits(rng);
            for (int i = 0; i < 8; ++i) w += (m >> i & 1) ? 'y' : 'x';
            t += TracePoly::trace(w, Rat(coeff(rng)));
        }
        return t;
    };
    for (int trial = 0; trial < 40; ++trial) {
        TracePoly f = random_tp(), g = random_tp();
        Rat a(coeff(rng)), b = make_rat(coeff(rng), 3);
        CHECK(delta(a * f + b * g) == a * delta(f) + b * delta(g));
    }
}

TEST_CASE("commutator power traces") {
    CHECK(expand_bracket_power(2, 0).to_string() == "-2*tr(x^2*y^2) + 2*tr(x*y*x*y)");
    CHECK(expand_bracket_power(0, 5) == TracePoly::trace("xxxxx"));
    CHECK(expand_bracket_power(2, 2) ==
          TracePoly::trace("xxxxyy", Rat(-1)) + TracePoly::trace("xxxyxy", Rat(2)) - TracePoly::trace("xxyxxy"));
    for (int s = 0; s <= 4; ++s)
        for (int r = 0; r <= 6 && s + r <= 10; ++r) {
            if (s + r == 0) continue;
            auto w = expand_bracket_power(s, r);
            CHECK(delta(w).is_zero());
            if (!w.is_zero()) CHECK(w.bidegree() == Bidegree{s + r, s});
        }
    auto g = expand_55_generator();
    CHECK_FALSE(g.is_zero());
    CHECK(g.bidegree() == Bidegree{5, 5});
    CHECK(delta(g).is_zero());
}
