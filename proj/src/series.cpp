#include "matinv/series.hpp"

#include <stdexcept>

namespace matinv {

const VarSetPtr& tu_vars() {
    static const VarSetPtr vars = VarSet::intern({"t", "u"});
    return vars;
}

QPoly tu_monomial(int p, int q, const Rat& c) {
    Exponents e{};
    e[0] = static_cast<std::uint8_t>(p);
    e[1] = static_cast<std::uint8_t>(q);
    return QPoly::monomial(tu_vars(), e, c);
}

BiSeries::BiSeries(int bound, QPoly coeffs) : bound_(bound), coeffs_(coeffs.rebased(tu_vars()).truncated(bound)) {
    if (bound < 0) throw std::invalid_argument("series bound must be non-negative");
}

QPoly BiSeries::component(int n) const {
    if (n > bound_) throw std::out_of_range("component beyond series bound");
    return coeffs_.component(n);
}

Rat BiSeries::coefficient(int p, int q) const {
    if (p + q > bound_) throw std::out_of_range("coefficient beyond series bound");
    Exponents e{};
    e[0] = static_cast<std::uint8_t>(p);
    e[1] = static_cast<std::uint8_t>(q);
    const Rat* c = coeffs_.find(e);
    return c ? *c : Rat(0);
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    int d = std::min(a.bound_, b.bound_);
    return BiSeries(d, a.coeffs_.truncated(d) + b.coeffs_.truncated(d));
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    int d = std::min(a.bound_, b.bound_);
    return BiSeries(d, a.coeffs_.truncated(d) - b.coeffs_.truncated(d));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    int d = std::min(a.bound_, b.bound_);
    return BiSeries(d, mul_truncated(a.coeffs_, b.coeffs_, d));
}

namespace {

void check_factors(std::span<const SeriesFactor> factors, int D) {
    if (D < 0) throw std::invalid_argument("truncation degree must be non-negative");
    for (const auto& f : factors) {
        if (f.a < 0 || f.b < 0) throw std::invalid_argument("negative exponent in series factor");
        if (f.a == 0 && f.b == 0) throw std::invalid_argument("factor (1 - t^0 u^0) is not invertible");
        if (f.mult < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
    }
}

}  // namespace

BiSeries series_expand_product(std::span<const SeriesFactor> factors, int D) {
    check_factors(factors, D);
    // Dense triangular grid; dividing by (1 - t^a u^b) is the recurrence
    // g[p][q] += g[p-a][q-b] swept in increasing (p, q).
    const int n = D + 1;
    std::vector<BigInt> grid(static_cast<std::size_t>(n * n));
    auto at = [&](int p, int q) -> BigInt& { return grid[static_cast<std::size_t>(p * n + q)]; };
    at(0, 0) = 1;
    for (const auto& f : factors) {
        for (int m = 0; m < f.mult; ++m) {
            for (int p = f.a; p <= D; ++p)
                for (int q = f.b; p + q <= D; ++q) at(p, q) += at(p - f.a, q - f.b);
        }
    }
    std::vector<QPoly::Term> terms;
    for (int p = 0; p <= D; ++p)
        for (int q = 0; p + q <= D; ++q)
            if (at(p, q) != 0) {
                Exponents e{};
                e[0] = static_cast<std::uint8_t>(p);
                e[1] = static_cast<std::uint8_t>(q);
                terms.push_back({e, Rat(at(p, q))});
            }
    return BiSeries(D, QPoly::from_terms(tu_vars(), std::move(terms)));
}

QPoly expand_denominator(std::span<const SeriesFactor> factors, int D) {
    check_factors(factors, D);
    QPoly acc = QPoly::constant(tu_vars(), Rat(1));
    for (const auto& f : factors) {
        QPoly one_minus = QPoly::constant(tu_vars(), Rat(1)) - tu_monomial(f.a, f.b);
        for (int m = 0; m < f.mult; ++m) acc = mul_truncated(acc, one_minus, D);
    }
    return acc;
}

BiSeries series_divide(const QPoly& num, std::span<const SeriesFactor> factors, int D) {
    BiSeries inv = series_expand_product(factors, D);
    return BiSeries(D, mul_truncated(num.rebased(tu_vars()), inv.coeffs(), D));
}

}  // namespace matinv
