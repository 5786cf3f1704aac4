#pragma once

#include <cstdlib>
#include <random>

#include "zinbiel/algebra.hpp"

namespace zinbiel::testing {

// Fixed default seed; ZINBIEL_TEST_SEED overrides it for reruns.
inline uint64_t test_seed() {
    if (const char* s = std::getenv("ZINBIEL_TEST_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240711;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed = test_seed()) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long bound = 10) {
        long num = integer(-bound, bound);
        long den = integer(1, bound);
        return Rational(num, den);
    }
    Fp fp(const PrimeField& f) { return f.from_int(integer(0, f.p - 1)); }
    Fp2 fp2(const QuadExtField& f) {
        return {static_cast<uint32_t>(integer(0, f.p - 1)), static_cast<uint32_t>(integer(0, f.p - 1)),
                f.p, f.d};
    }

    Vec<RationalField> vec(const RationalField& f, int n, long bound = 5) {
        Vec<RationalField> v;
        for (int i = 0; i < n; ++i) v.push_back(rational(bound));
        (void)f;
        return v;
    }
    Vec<PrimeField> vec(const PrimeField& f, int n) {
        Vec<PrimeField> v;
        for (int i = 0; i < n; ++i) v.push_back(fp(f));
        return v;
    }
};

} // namespace zinbiel::testing
