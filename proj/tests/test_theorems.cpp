#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/theorems.hpp"

using namespace zinbiel;

namespace {
const RationalField Q{};

Algebra<RationalField> cat(const std::string& id, const Rational& param = Rational(0)) {
    const CatalogEntry* e = Catalog::instance().find(id);
    REQUIRE(e != nullptr);
    return Catalog::instance().make(*e, param);
}
} // namespace

TEST_CASE("codimension-one abelian subalgebras are ideals") {
    SUBCASE("dim-2 entry, alpha = n-1 = 1") {
        auto rep = check_codim1_theorem(cat("Z2_1"));
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("dim-4 entry with alpha = 3 forces beta = 3") {
        auto rep = check_codim1_theorem(cat("Z4_2"));
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("vacuous when alpha < n-1") {
        auto rep = check_codim1_theorem(cat("Z4_1")); // alpha = 2 in dim 4
        CHECK_FALSE(rep.hypotheses_satisfied);
    }
}

TEST_CASE("supersolvable with alpha = n-2: beta is n-2 or n-3") {
    SUBCASE("the dim-5 entry realizing n-2") {
        auto rep = check_codim2_theorem(cat("Z5_12"));
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("the codimension-two example realizes n-3") {
        SearchOptions opts;
        opts.use_groebner = true;
        auto rep = check_codim2_theorem(example_3_1(), opts);
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
        CHECK(rep.details.find("beta = 3") != std::string::npos);
    }
    SUBCASE("vacuous when alpha = n-1") {
        auto rep = check_codim2_theorem(cat("Z3_2"));
        CHECK_FALSE(rep.hypotheses_satisfied);
    }
}

TEST_CASE("maximal subalgebras have codimension one") {
    SUBCASE("dim-3 null-filiform entry over F_2 and F_3") {
        auto rep = check_maximal_subalgebra_lemma(cat("Z3_1"));
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("one-dimensional algebras are vacuous") {
        Algebra<RationalField> one(Q, 1, "dim1");
        one.finalize();
        auto rep = check_maximal_subalgebra_lemma(one);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("a dim-4 entry over three primes") {
        auto rep = check_maximal_subalgebra_lemma(cat("Z4_12"), {2, 3, 5});
        CHECK(rep.hypotheses_satisfied);
        CHECK(rep.conclusion_verified);
    }
    SUBCASE("rejects large dimensions") {
        CHECK_THROWS_AS(check_maximal_subalgebra_lemma(example_3_1()), usage_error);
    }
}

TEST_CASE("filiform family checks") {
    SUBCASE("null-filiform dim 4 equals the catalog entry and has value 2") {
        auto reps = check_filiform_props(4);
        REQUIRE(reps.size() == 4);
        CHECK(reps[0].theorem == "prop4.1");
        CHECK(reps[0].conclusion_verified);
        CHECK(reps[0].details.find("alpha=2 beta=2") != std::string::npos);
    }
    SUBCASE("null-filiform dim 5: unique ideal spanned by e3, e4, e5") {
        auto reps = check_filiform_props(5);
        REQUIRE(reps.size() == 4);
        CHECK(reps[0].conclusion_verified);
        CHECK(reps[0].details.find("alpha=3 beta=3") != std::string::npos);
        CHECK(reps[1].conclusion_verified);
        CHECK(reps[2].conclusion_verified);
        // Third variant: the stated ideal stops at e_{n-1}, with dimension
        // 2. The check correctly reports the claim false: with t^2 = -3,
        // span{e2 + t e5, e3, e4} is a 3-dimensional abelian ideal over
        // any field containing t (the internal square is (3 + t^2) e4),
        // so beta = 3 > 2 and the maximal ideal is not unique.
        CHECK(reps[3].details.find("stated-ideal-dim=2") != std::string::npos);
        CHECK_FALSE(reps[3].conclusion_verified);
        CHECK(reps[3].details.find("alpha=3 beta=3") != std::string::npos);
    }
    SUBCASE("n = 3 runs the null-filiform check only") {
        auto reps = check_filiform_props(3);
        REQUIRE(reps.size() == 1);
        CHECK(reps[0].conclusion_verified);
    }
}
