#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "test_util.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/expr.hpp"

using namespace zinbiel;

namespace {
const RationalField Q{};
}

TEST_CASE("parsing") {
    Expr e = parse_expr("[[a,b],c]");
    CHECK(to_string(e) == "[[a,b],c]");
    CHECK_FALSE(e->is_generator());
    CHECK(e->left->left->gen == "a");
    CHECK(e->right->gen == "c");

    CHECK(parse_expr("a")->gen == "a");
    CHECK(to_string(parse_expr(" [ a , [ b , c ] ] ")) == "[a,[b,c]]");

    try {
        parse_expr("[a,[b");
        FAIL("expected a parse error");
    } catch (const parse_error& err) {
        CHECK(err.offset == 5);
    }
    CHECK_THROWS_AS(parse_expr("[a b]"), parse_error);
    CHECK_THROWS_AS(parse_expr("a]"), parse_error);
}

TEST_CASE("left normalization shapes") {
    LinearCombo c = left_normalize(parse_expr("[[a,b],c]"));
    REQUIRE(c.size() == 2);
    CHECK(c[0].coeff == Rational(1));
    CHECK(c[0].word == LeftNormedWord{"a", "b", "c"});
    CHECK(c[1].coeff == Rational(1));
    CHECK(c[1].word == LeftNormedWord{"a", "c", "b"});
    CHECK(to_string(c) == "1*[a,[b,c]] + 1*[a,[c,b]]");

    LinearCombo fixed = left_normalize(parse_expr("[a,[b,c]]"));
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0].coeff == Rational(1));
    CHECK(fixed[0].word == LeftNormedWord{"a", "b", "c"});

    // [[[a,b],c],d] rewrites into six left-normed words: the inner pair
    // splits once, then each branch [.,d] splits again except where the
    // left factor is a single generator.
    LinearCombo six = left_normalize(parse_expr("[[[a,b],c],d]"));
    Rational total(0);
    for (const auto& t : six) total += t.coeff;
    CHECK(six.size() == 6);
    CHECK(total == Rational(6));
}

namespace {

// Structural mass oracle. Each rewrite [r,s] = [a,[t,s]] + [a,[s,t]]
// replaces one term by exactly two, and a single-generator left factor is
// already left-normed, so the mass of combining left-normed words of
// lengths k and m obeys M(1,m) = 1, M(k,m) = M(k-1,m) + M(m,k-1).
long combine_mass(int k, int m) {
    if (k == 1) return 1;
    return combine_mass(k - 1, m) + combine_mass(m, k - 1);
}

long leaf_count(const Expr& e) {
    if (e->is_generator()) return 1;
    return leaf_count(e->left) + leaf_count(e->right);
}

long expected_mass(const Expr& e) {
    if (e->is_generator()) return 1;
    return expected_mass(e->left) * expected_mass(e->right) *
           combine_mass(static_cast<int>(leaf_count(e->left)),
                        static_cast<int>(leaf_count(e->right)));
}

} // namespace

TEST_CASE("normalization preserves the generator multiset and coefficient mass") {
    for (int m = 3; m <= 5; ++m) {
        for (const Expr& e : enumerate_bracketings(m)) {
            LinearCombo c = left_normalize(e);
            Rational total(0);
            for (const auto& t : c) {
                CHECK(t.coeff.sign() > 0);
                CHECK(t.coeff.is_integer());
                total += t.coeff;
                LeftNormedWord sorted = t.word;
                std::sort(sorted.begin(), sorted.end());
                LeftNormedWord expect;
                for (int i = 1; i <= m; ++i) expect.push_back("g" + std::to_string(i));
                CHECK(sorted == expect);
            }
            CHECK(total == Rational(expected_mass(e)));
        }
    }
}

TEST_CASE("bracketing enumeration has Catalan counts") {
    CHECK(enumerate_bracketings(1).size() == 1);
    CHECK(enumerate_bracketings(2).size() == 1);
    CHECK(enumerate_bracketings(3).size() == 2);
    CHECK(enumerate_bracketings(4).size() == 5);
    CHECK(enumerate_bracketings(5).size() == 14);
    CHECK(enumerate_bracketings(6).size() == 42);
    CHECK(enumerate_bracketings(7).size() == 132);
    CHECK_THROWS_AS(enumerate_bracketings(0), usage_error);
    CHECK_THROWS_AS(enumerate_bracketings(8), usage_error);
}

TEST_CASE("evaluation") {
    auto z21 = Catalog::instance().get("Z2_1");
    ExprEnv<RationalField> env{{"e1", unit_vec(Q, 2, 0)}};
    CHECK(evaluate(parse_expr("[e1,e1]"), z21, env) == unit_vec(Q, 2, 1));
    CHECK(evaluate(LinearCombo{}, z21, env) == zero_vec(Q, 2));
    CHECK_THROWS_AS(evaluate(parse_expr("[e1,x]"), z21, env), usage_error);
}

TEST_CASE("normalization is sound under evaluation") {
    testing::Rng rng;
    auto z51 = Catalog::instance().get("Z5_1");
    auto ex31 = example_3_1();
    for (int m = 3; m <= 5; ++m) {
        auto bracketings = enumerate_bracketings(m);
        for (const Expr& e : bracketings) {
            LinearCombo c = left_normalize(e);
            for (int trial = 0; trial < 5; ++trial) {
                for (const Algebra<RationalField>* a : {&z51, &ex31}) {
                    ExprEnv<RationalField> env;
                    for (int g = 1; g <= m; ++g)
                        env["g" + std::to_string(g)] = rng.vec(Q, a->dim(), 3);
                    CHECK(evaluate(e, *a, env) == evaluate(c, *a, env));
                }
            }
        }
    }
}

TEST_CASE("in nilpotent algebras, products of (index) elements vanish under every bracketing") {
    // nilpotency index of Z4_1 is 5; of Z3_1 is 4
    struct Case {
        std::string id;
    };
    testing::Rng rng;
    for (const std::string& id : {std::string("Z3_1"), std::string("Z4_1"), std::string("Z4_12")}) {
        auto a = Catalog::instance().get(id);
        auto series = a.lower_central_series();
        REQUIRE(series.index.has_value());
        int m = *series.index;
        REQUIRE(m <= 5);
        for (const Expr& e : enumerate_bracketings(m)) {
            // exhaustive over basis tuples
            int n = a.dim();
            std::vector<int> tuple(static_cast<std::size_t>(m), 0);
            while (true) {
                ExprEnv<RationalField> env;
                for (int g = 0; g < m; ++g)
                    env["g" + std::to_string(g + 1)] = unit_vec(Q, n, tuple[static_cast<std::size_t>(g)]);
                CHECK(is_zero_vec<RationalField>(evaluate(e, a, env)));
                int i = 0;
                while (i < m && ++tuple[static_cast<std::size_t>(i)] == n) tuple[static_cast<std::size_t>(i++)] = 0;
                if (i == m) break;
            }
        }
    }
}
