#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/json_io.hpp"

using namespace zinbiel;

TEST_CASE("scalar serialization") {
    CHECK(rational_to_json(Rational(3)) == nlohmann::json(3));
    CHECK(rational_to_json(Rational(1, 2)) == nlohmann::json("1/2"));
    CHECK(rational_from_json(nlohmann::json(-4)) == Rational(-4));
    CHECK(rational_from_json(nlohmann::json("7/3")) == Rational(7, 3));
    CHECK_THROWS_AS(rational_from_json(nlohmann::json(1.5)), usage_error);
}

TEST_CASE("every catalog entry round-trips through the JSON format bit-exactly") {
    for (const auto& entry : Catalog::instance().entries()) {
        for (const Rational& v : entry.samples) {
            Algebra<RationalField> a = Catalog::instance().make(entry, v);
            nlohmann::json j = algebra_to_json(a);
            AnyAlgebra back = algebra_from_json(j);
            auto* b = std::get_if<Algebra<RationalField>>(&back);
            REQUIRE(b != nullptr);
            REQUIRE(b->dim() == a.dim());
            for (int i = 1; i <= a.dim(); ++i)
                for (int jj = 1; jj <= a.dim(); ++jj)
                    for (int k = 1; k <= a.dim(); ++k)
                        CHECK(b->constant(i, jj, k) == a.constant(i, jj, k));
            CHECK(b->is_zinbiel());
        }
    }
}

TEST_CASE("prime-field algebras load from tagged JSON") {
    nlohmann::json j = {{"name", "f5test"},
                        {"dim", 2},
                        {"field", {{"Fp", 5}}},
                        {"products", {{{"i", 1}, {"j", 1}, {"coeffs", {{"2", 3}}}}}}};
    AnyAlgebra any = algebra_from_json(j);
    auto* a = std::get_if<Algebra<PrimeField>>(&any);
    REQUIRE(a != nullptr);
    CHECK(a->constant(1, 1, 2).r == 3);
    CHECK(a->is_zinbiel());
    nlohmann::json out = algebra_to_json(*a);
    CHECK(out["field"]["Fp"] == 5);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(algebra_from_json({{"dim", 2}}), nlohmann::json::exception);
    CHECK_THROWS_AS(algebra_from_json({{"dim", 0}, {"field", "Q"}, {"products", nlohmann::json::array()}}),
                    usage_error);
    nlohmann::json bad = {{"name", "bad"},
                          {"dim", 2},
                          {"field", "Q"},
                          {"products", {{{"i", 1}, {"j", 9}, {"coeffs", {{"2", 1}}}}}}};
    CHECK_THROWS_AS(algebra_from_json(bad), usage_error);
}

TEST_CASE("alpha-beta reports serialize with certificates") {
    auto a = Catalog::instance().get("Z4_2");
    AlphaBetaResult r = alpha_beta(a);
    nlohmann::json j = alpha_beta_to_json(r);
    CHECK(j["alpha"]["value"] == 3);
    CHECK(j["beta"]["value"] == 3);
    CHECK(j["fully_certified"] == true);
    CHECK(j["alpha"]["witness_field"] == "Q");
    CHECK(j["alpha"]["upper_bound_certificates"].is_array());
}
