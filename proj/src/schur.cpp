#include "matinv/schur.hpp"

#include <stdexcept>

#include "matinv/errors.hpp"
#include "matinv/series.hpp"

namespace matinv {

Partition Partition::make(int l1, int l2) {
    if (l2 < 0 || l1 < l2) throw std::invalid_argument("invalid two-row partition (" + std::to_string(l1) + "," + std::to_string(l2) + ")");
    return {l1, l2};
}

std::string Partition::to_string() const { return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }

long SchurDecomp::multiplicity(Partition l) const {
    for (const auto& [p, m] : terms)
        if (p == l) return m;
    return 0;
}

std::string SchurDecomp::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [p, m] : terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += "S" + p.to_string();
    }
    return out;
}

QPoly schur_poly(Partition shape) {
    shape = Partition::make(shape.l1, shape.l2);
    QPoly s(tu_vars());
    for (int k = 0; k <= shape.l1 - shape.l2; ++k) s += tu_monomial(shape.l1 - k, shape.l2 + k);
    return s;
}

QPoly schur_sum(const SchurDecomp& d) {
    QPoly s(tu_vars());
    for (const auto& [p, m] : d.terms) s += Rat(m) * schur_poly(p);
    return s;
}

SchurDecomp schur_decompose(const QPoly& p0) {
    QPoly p = p0.rebased(VarSet::unite(p0.vars(), tu_vars()));
    if (p.vars() != tu_vars()) throw std::invalid_argument("schur_decompose expects a polynomial in t, u");
    SchurDecomp d;
    if (p.is_zero()) return d;
    const int n = p.total_degree();
    for (const auto& t : p.terms())
        if (exponent_degree(t.first) != n) throw NotHomogeneous("polynomial is not homogeneous: " + p0.to_string());
    for (const auto& [e, c] : p.terms()) {
        Exponents f{};
        f[0] = e[1];
        f[1] = e[0];
        const Rat* mirror = p.find(f);
        if (!mirror || *mirror != c) throw NotSymmetric("polynomial is not symmetric in t, u: " + p0.to_string());
    }
    // Terms are sorted with the t-exponent descending, so the leading term
    // always carries the largest remaining l1.
    while (!p.is_zero()) {
        const auto& [e, c] = p.terms().front();
        int a = e[0], b = e[1];
        if (a < b || sgn(c) < 0 || c.get_den() != 1)
            throw NotSchurPositive("negative or fractional Schur multiplicity while decomposing " + p0.to_string());
        Partition l{a, b};
        long m = c.get_num().get_si();
        d.terms.push_back({l, m});
        p -= Rat(m) * schur_poly(l);
    }
    return d;
}

}  // namespace matinv
