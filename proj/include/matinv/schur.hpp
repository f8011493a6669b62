#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "matinv/multipoly.hpp"

namespace matinv {

// Two-row shape (l1, l2) with l1 >= l2 >= 0.
struct Partition {
    int l1 = 0;
    int l2 = 0;

    // Throws std::invalid_argument unless l1 >= l2 >= 0.
    static Partition make(int l1, int l2);
    int degree() const { return l1 + l2; }
    auto operator<=>(const Partition&) const = default;
    std::string to_string() const;  // "(4,2)"
};

// Terms ordered by l1 descending.
struct SchurDecomp {
    std::vector<std::pair<Partition, long>> terms;

    long multiplicity(Partition l) const;
    friend bool operator==(const SchurDecomp&, const SchurDecomp&) = default;
    // "4*S(8,0) + 2*S(7,1)", multiplicity 1 printed bare; "0" when empty.
    std::string to_string() const;
};

// (tu)^l2 (t^(l1-l2) + t^(l1-l2-1) u + ... + u^(l1-l2)).
QPoly schur_poly(Partition shape);

// Decomposes a symmetric homogeneous polynomial in t, u into Schur
// polynomials. Throws NotSymmetric, NotHomogeneous or NotSchurPositive.
SchurDecomp schur_decompose(const QPoly& p);

QPoly schur_sum(const SchurDecomp& d);

}  // namespace matinv
