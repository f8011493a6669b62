#include "matinv/modp.hpp"

#include "matinv/errors.hpp"

namespace matinv {

namespace {

std::uint64_t reduce(const BigInt& z, std::uint64_t p) {
    BigInt m(std::to_string(p));
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return std::stoull(r.get_str());
}

}  // namespace

Zp to_zp(const Rat& r, std::uint64_t p) {
    std::uint64_t den = reduce(r.get_den(), p);
    if (den == 0) throw DenominatorDivisibleByP("denominator of " + r.get_str() + " is divisible by " + std::to_string(p));
    return Zp(reduce(r.get_num(), p), p) / Zp(den, p);
}

ZpPoly to_zp(const QPoly& poly, std::uint64_t p) {
    return poly.map_coefficients([p](const Rat& c) { return to_zp(c, p); });
}

ZpMatrix to_zp(const QMatrix& m, std::uint64_t p) {
    return m.map([p](const Rat& c) { return to_zp(c, p); });
}

}  // namespace matinv
