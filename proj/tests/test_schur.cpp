#include "doctest.h"

#include <random>

#include "matinv/errors.hpp"
#include "matinv/schur.hpp"
#include "matinv/series.hpp"
#include "matinv/words.hpp"

using namespace matinv;

namespace {

QPoly tu(const char* s) { return parse_qpoly(s, tu_vars()); }

}  // namespace

TEST_CASE("schur polynomials") {
    CHECK(schur_poly({2, 0}) == tu("t^2 + t*u + u^2"));
    CHECK(schur_poly({1, 0}) == tu("t + u"));
    CHECK(schur_poly({3, 3}) == tu("t^3*u^3"));
    CHECK_THROWS_AS(schur_poly({1, 2}), std::invalid_argument);
    for (int n = 0; n <= 12; ++n)
        for (int l2 = 0; 2 * l2 <= n; ++l2) {
            QPoly s = schur_poly({n - l2, l2});
            CHECK(s.size() == static_cast<std::size_t>(n - 2 * l2 + 1));
            for (const auto& [e, c] : s.terms()) {
                Exponents f{};
                f[0] = e[1];
                f[1] = e[0];
                CHECK(s.find(f) != nullptr);
            }
        }
}

TEST_CASE("schur decomposition") {
    CHECK(schur_decompose(u_n_hilbert(6)).to_string() == "S(6,0) + 2*S(4,2) + S(3,3)");
    CHECK_THROWS_AS(schur_decompose(tu("t^2 - t*u + u^2")), NotSchurPositive);
    CHECK_THROWS_AS(schur_decompose(tu("t^2 + u")), NotHomogeneous);
    CHECK_THROWS_AS(schur_decompose(tu("t^2 + 2*t*u")), NotSymmetric);
    CHECK(schur_decompose(QPoly(tu_vars())).terms.empty());
}

TEST_CASE("schur decomposition round trip on random combinations") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 13);
        SchurDecomp d;
        for (int l1 = n; 2 * l1 >= n; --l1) {
            long m = static_cast<long>(rng() % 4);
            if (m) d.terms.push_back({{l1, n - l1}, m});
        }
        CHECK(schur_decompose(schur_sum(d)) == d);
    }
}

TEST_CASE("decompositions of the trace spaces") {
    const char* expected[] = {
        "S(1,0)",
        "S(2,0)",
        "S(3,0)",
        "S(4,0) + S(2,2)",
        "S(5,0) + S(3,2)",
        "S(6,0) + 2*S(4,2) + S(3,3)",
        "S(7,0) + 2*S(5,2) + 2*S(4,3)",
        "S(8,0) + 3*S(6,2) + 3*S(5,3) + 3*S(4,4)",
        "S(9,0) + 3*S(7,2) + 6*S(6,3) + 4*S(5,4)",
        "S(10,0) + 4*S(8,2) + 7*S(7,3) + 10*S(6,4) + 4*S(5,5)",
    };
    for (int n = 1; n <= 10; ++n) CHECK(schur_decompose(u_n_hilbert(n)).to_string() == expected[n - 1]);
}
