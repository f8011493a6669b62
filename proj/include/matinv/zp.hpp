#pragma once

#include <cstdint>
#include <string>

namespace matinv {

// Element of the prime field F_p. The modulus travels with the value so
// that generic containers (polynomials, matrices) need no field object.
// Supports any odd prime below 2^63.
struct Zp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Zp() = default;
    Zp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    static Zp from_signed(std::int64_t value, std::uint64_t modulus) {
        if (value >= 0) return Zp(static_cast<std::uint64_t>(value), modulus);
        std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
        return Zp(modulus - mag % modulus, modulus);
    }

    friend bool operator==(const Zp& a, const Zp& b) { return a.v == b.v && a.p == b.p; }

    Zp& operator+=(const Zp& o) {
        v += o.v;
        if (v >= p) v -= p;
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        v = v >= o.v ? v - o.v : v + p - o.v;
        return *this;
    }
    Zp& operator*=(const Zp& o) {
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * o.v) % p);
        return *this;
    }
    Zp& operator/=(const Zp& o);

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    Zp operator-() const { return Zp(v == 0 ? 0 : p - v, p); }

    Zp pow(std::uint64_t e) const {
        Zp base = *this, acc(1, p);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
};

// Throws std::domain_error for zero.
Zp inverse(const Zp& a);

inline Zp& Zp::operator/=(const Zp& o) { return *this *= inverse(o); }

inline bool is_zero(const Zp& a) { return a.v == 0; }
inline Zp zero_like(const Zp& a) { return Zp(0, a.p); }
inline Zp one_like(const Zp& a) { return Zp(1, a.p); }
inline std::string to_string(const Zp& a) { return std::to_string(a.v); }

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace matinv
