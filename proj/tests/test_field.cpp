#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zinbiel/fields.hpp"

using namespace zinbiel;

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((-Rational(3, 6)).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
    CHECK_THROWS_AS(Rational(0).inv(), division_by_zero);
    CHECK_THROWS_AS(Rational::parse("x"), usage_error);
}

TEST_CASE("rationals stay reduced after every operation") {
    testing::Rng rng;
    for (int t = 0; t < 500; ++t) {
        Rational a = rng.rational(40), b = rng.rational(40);
        for (const Rational& r : {a + b, a - b, a * b}) {
            mpz_class g;
            mpz_class num = r.num(), den = r.den();
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            CHECK(g == 1);
            CHECK(r.den() > 0);
        }
        if (!b.is_zero()) {
            Rational q = a / b;
            mpz_class g, num = q.num(), den = q.den();
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("prime field basics") {
    PrimeField f5(5);
    CHECK((f5.from_int(3) * f5.from_int(4)).r == 2);
    PrimeField f7(7);
    CHECK(f7.from_int(3).inv().r == 5);
    CHECK_THROWS_AS(f5.zero().inv(), division_by_zero);
    CHECK_THROWS_AS(PrimeField(6), usage_error);
    // mixing moduli is rejected
    CHECK_THROWS_AS(f5.one() + f7.one(), usage_error);
    // from_rational respects the reduction map
    CHECK(f7.from_rational(Rational(1, 2)) == f7.from_int(4)); // 2*4 = 8 = 1 mod 7
    CHECK_THROWS_AS(f5.from_rational(Rational(1, 5)), usage_error);
}

TEST_CASE("quadratic extension: smallest non-residue and exhaustive inverse oracle") {
    QuadExtField f9(3);
    CHECK(f9.d == 2); // 2 is the least non-residue mod 3
    Fp2 x{1, 1, 3, 2}; // 1 + sqrt(2)
    Fp2 inv = x.inv();
    // oracle: search all 9 field elements for the inverse
    int found = 0;
    for (uint64_t i = 0; i < 9; ++i) {
        Fp2 y = f9.element_at(i);
        if ((x * y).is_one()) {
            ++found;
            CHECK(y == inv);
        }
    }
    CHECK(found == 1);
    CHECK_THROWS_AS(QuadExtField(2), usage_error);
    QuadExtField f25(5);
    CHECK(f25.d == 2); // 2 is the least non-residue mod 5
}

namespace {

template <class F, class Gen>
void check_field_axioms(const F& f, Gen gen, int rounds) {
    for (int t = 0; t < rounds; ++t) {
        auto a = gen(), b = gen(), c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + f.zero() == a);
        CHECK(a * f.one() == a);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

} // namespace

TEST_CASE("field axioms hold in every backing field") {
    testing::Rng rng;
    RationalField q;
    check_field_axioms(q, [&] { return rng.rational(20); }, 200);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField f(p);
        check_field_axioms(f, [&] { return rng.fp(f); }, 200);
    }
    for (uint32_t p : {3u, 5u}) {
        QuadExtField f(p);
        check_field_axioms(f, [&] { return rng.fp2(f); }, 200);
    }
}

TEST_CASE("reduction mod p commutes with + and * on p-regular rationals") {
    testing::Rng rng;
    for (uint32_t p : {3u, 5u, 7u}) {
        PrimeField f(p);
        int done = 0;
        while (done < 200) {
            Rational a = rng.rational(30), b = rng.rational(30);
            if (a.den() % p == 0 || b.den() % p == 0) continue;
            ++done;
            CHECK(f.from_rational(a + b) == f.from_rational(a) + f.from_rational(b));
            CHECK(f.from_rational(a * b) == f.from_rational(a) * f.from_rational(b));
        }
    }
}
