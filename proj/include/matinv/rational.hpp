#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace matinv {

// Arbitrary precision rationals. mpq_class keeps results of arithmetic in
// lowest terms with a positive denominator; values built from a raw
// numerator/denominator pair must go through make_rat().
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "-a", "a/b". Throws ParseError on malformed input or a zero
// denominator.
Rat parse_rat(std::string_view text);

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inverse(const Rat& r) { return Rat(1) / r; }

}  // namespace matinv
