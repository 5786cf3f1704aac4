#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "zinbiel/errors.hpp"
#include "zinbiel/rational.hpp"

namespace zinbiel {

namespace detail {
inline bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}
inline uint32_t pow_mod(uint64_t base, uint64_t exp, uint32_t p) {
    uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<uint32_t>(acc);
}
} // namespace detail

/// Element of a prime field F_p. Carries its modulus; mixing moduli is a
/// usage error.
struct Fp {
    uint32_t r = 0;
    uint32_t p = 0;

    static void check_same(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw usage_error("prime field modulus mismatch");
    }

    bool is_zero() const { return r == 0; }
    bool is_one() const { return r == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same(a, b);
        uint64_t s = uint64_t(a.r) + b.r;
        return {static_cast<uint32_t>(s >= a.p ? s - a.p : s), a.p};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same(a, b);
        return {a.r >= b.r ? a.r - b.r : a.r + a.p - b.r, a.p};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same(a, b);
        return {static_cast<uint32_t>(uint64_t(a.r) * b.r % a.p), a.p};
    }
    Fp operator-() const { return {r == 0 ? 0 : p - r, p}; }
    Fp inv() const {
        if (r == 0) throw division_by_zero();
        return {detail::pow_mod(r, p - 2, p), p};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    bool operator==(const Fp& o) const { return r == o.r && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.r; }
};

/// Element a + b*sqrt(d) of the quadratic extension F_{p^2}, p an odd prime
/// and d a quadratic non-residue mod p.
struct Fp2 {
    uint32_t a = 0, b = 0;
    uint32_t p = 0, d = 0;

    static void check_same(const Fp2& x, const Fp2& y) {
        if (x.p != y.p || x.d != y.d) throw usage_error("quadratic extension mismatch");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) {
        check_same(x, y);
        return {static_cast<uint32_t>((uint64_t(x.a) + y.a) % x.p),
                static_cast<uint32_t>((uint64_t(x.b) + y.b) % x.p), x.p, x.d};
    }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) {
        check_same(x, y);
        return {static_cast<uint32_t>((uint64_t(x.a) + x.p - y.a) % x.p),
                static_cast<uint32_t>((uint64_t(x.b) + x.p - y.b) % x.p), x.p, x.d};
    }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        check_same(x, y);
        uint64_t aa = (uint64_t(x.a) * y.a + uint64_t(x.b) * y.b % x.p * x.d) % x.p;
        uint64_t bb = (uint64_t(x.a) * y.b + uint64_t(x.b) * y.a) % x.p;
        return {static_cast<uint32_t>(aa), static_cast<uint32_t>(bb), x.p, x.d};
    }
    Fp2 operator-() const {
        return {a == 0 ? 0 : p - a, b == 0 ? 0 : p - b, p, d};
    }
    // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
    // nonzero for nonzero elements because d is a non-residue.
    Fp2 inv() const {
        if (is_zero()) throw division_by_zero();
        uint64_t norm = (uint64_t(a) * a % p + uint64_t(p) * p - uint64_t(d) * b % p * b % p) % p;
        uint32_t ni = detail::pow_mod(norm, p - 2, p);
        return {static_cast<uint32_t>(uint64_t(a) * ni % p),
                static_cast<uint32_t>(uint64_t(b == 0 ? 0 : p - b) * ni % p), p, d};
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inv(); }

    bool operator==(const Fp2& o) const { return a == o.a && b == o.b && p == o.p && d == o.d; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const Fp2& x) {
        return os << x.a << "+" << x.b << "*s" << x.d;
    }
};

/// Field descriptor for the rationals.
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long n) const { return Rational(n); }
    Elem from_rational(const Rational& r) const { return r; }
    // 0 = infinite field.
    uint64_t size() const { return 0; }
    Elem element_at(uint64_t) const { throw usage_error("rationals are not enumerable"); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
};

/// Field descriptor for F_p.
struct PrimeField {
    using Elem = Fp;
    uint32_t p;

    // Placeholder instance for default-constructed containers.
    PrimeField() : p(2) {}
    explicit PrimeField(uint32_t prime) : p(prime) {
        if (!detail::is_prime_u32(p)) throw usage_error("modulus " + std::to_string(p) + " is not prime");
    }

    Elem zero() const { return {0, p}; }
    Elem one() const { return {1 % p, p}; }
    Elem from_int(long n) const {
        long r = n % long(p);
        if (r < 0) r += p;
        return {static_cast<uint32_t>(r), p};
    }
    // Throws if the denominator vanishes mod p (bad prime for this value).
    Elem from_rational(const Rational& r) const {
        mpz_class num = r.num() % p;
        mpz_class den = r.den() % p;
        if (den == 0) throw usage_error("denominator divisible by " + std::to_string(p));
        mpz_class nn = (num + p) % p;
        uint32_t n = static_cast<uint32_t>(nn.get_ui());
        uint32_t d = static_cast<uint32_t>(den.get_ui());
        return Elem{n, p} * Elem{d, p}.inv();
    }
    uint64_t size() const { return p; }
    Elem element_at(uint64_t i) const { return {static_cast<uint32_t>(i % p), p}; }
    std::string name() const { return "F" + std::to_string(p); }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Field descriptor for F_{p^2} = F_p[sqrt(d)], d the smallest quadratic
/// non-residue mod p. Only odd primes admit this presentation: every
/// element of F_2 is a square, so construction rejects p = 2.
struct QuadExtField {
    using Elem = Fp2;
    uint32_t p;
    uint32_t d;

    QuadExtField() : p(3), d(2) {}
    explicit QuadExtField(uint32_t prime) : p(prime), d(0) {
        if (!detail::is_prime_u32(p)) throw usage_error("modulus " + std::to_string(p) + " is not prime");
        if (p == 2) throw usage_error("F_4 has no square-root presentation; use an odd prime");
        for (uint32_t q = 2; q < p; ++q) {
            if (detail::pow_mod(q, (p - 1) / 2, p) == p - 1) { d = q; break; }
        }
        if (d == 0) throw usage_error("no quadratic non-residue found mod " + std::to_string(p));
    }

    Elem zero() const { return {0, 0, p, d}; }
    Elem one() const { return {1, 0, p, d}; }
    Elem from_int(long n) const {
        long r = n % long(p);
        if (r < 0) r += p;
        return {static_cast<uint32_t>(r), 0, p, d};
    }
    Elem from_rational(const Rational& r) const {
        PrimeField base(p);
        Fp x = base.from_rational(r);
        return {x.r, 0, p, d};
    }
    Elem sqrt_d() const { return {0, 1, p, d}; }
    uint64_t size() const { return uint64_t(p) * p; }
    Elem element_at(uint64_t i) const {
        i %= size();
        return {static_cast<uint32_t>(i % p), static_cast<uint32_t>(i / p), p, d};
    }
    std::string name() const { return "F" + std::to_string(p) + "^2"; }
    bool operator==(const QuadExtField& o) const { return p == o.p && d == o.d; }
};

// Deterministic total order on elements, used for canonical output only.
inline bool elem_less(const Rational& a, const Rational& b) { return a < b; }
inline bool elem_less(const Fp& a, const Fp& b) { return a.r < b.r; }
inline bool elem_less(const Fp2& a, const Fp2& b) { return a.b != b.b ? a.b < b.b : a.a < b.a; }

inline std::string elem_str(const Rational& a) { return a.str(); }
inline std::string elem_str(const Fp& a) { return std::to_string(a.r); }
inline std::string elem_str(const Fp2& a) {
    if (a.b == 0) return std::to_string(a.a);
    return std::to_string(a.a) + "+" + std::to_string(a.b) + "*sqrt(" + std::to_string(a.d) + ")";
}

} // namespace zinbiel
