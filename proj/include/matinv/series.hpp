#pragma once

#include <span>
#include <vector>

#include "matinv/multipoly.hpp"

namespace matinv {

// The interned varset {t, u} used by every Hilbert series.
const VarSetPtr& tu_vars();

// t^p u^q with coefficient c.
QPoly tu_monomial(int p, int q, const Rat& c = Rat(1));

// One factor (1 - t^a u^b)^mult of a denominator.
struct SeriesFactor {
    int a = 0;
    int b = 0;
    int mult = 1;
};

// Bivariate power series in t, u truncated at total degree `bound`.
class BiSeries {
public:
    BiSeries(int bound, QPoly coeffs);

    int bound() const { return bound_; }
    const QPoly& coeffs() const { return coeffs_; }

    // Homogeneous component of degree n (n <= bound).
    QPoly component(int n) const;
    Rat coefficient(int p, int q) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
    }

private:
    int bound_;
    QPoly coeffs_;
};

// prod (1 - t^a u^b)^(-mult), exact through total degree D.
// Throws std::invalid_argument for a=b=0, mult < 1 or D < 0.
BiSeries series_expand_product(std::span<const SeriesFactor> factors, int D);

// prod (1 - t^a u^b)^mult, truncated at degree D.
QPoly expand_denominator(std::span<const SeriesFactor> factors, int D);

// num / prod (1 - t^a u^b)^mult, truncated at degree D.
BiSeries series_divide(const QPoly& num, std::span<const SeriesFactor> factors, int D);

}  // namespace matinv
