#include <catch2/catch_amalgamated.hpp>

#include <gk/groth.hpp>
#include <gk/serialize.hpp>

using namespace gk;

TEST_CASE("canonical text form", "[cli-io]") {
    CHECK(pi_x(2).str() == "1 + b*x1 + b*x2 + b^2*x1*x2");
    CHECK(SparsePoly::var(av(-1)).str() == "a[-1]");
}

TEST_CASE("polynomial json round trip", "[cli-io]") {
    std::vector<SparsePoly> samples = {
        SparsePoly(),
        SparsePoly(Rational(1)),
        SparsePoly(Rational(-3, 7)),
        pi_x(3),
        groth_poly(Partition{2, 1}, 2, GrothKind::FactorialA),
        SparsePoly::var(av(-2)) * SparsePoly::var(yv(5)) -
            SparsePoly(Rational(22, 7)) * SparsePoly::var(beta(), 3),
    };
    for (auto& p : samples) {
        auto j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        // byte-level stability through a reprint
        CHECK(poly_to_json(poly_from_json(nlohmann::ordered_json::parse(j.dump()))) == j);
    }
}

TEST_CASE("polynomial json content", "[cli-io]") {
    SparsePoly p = SparsePoly(Rational(1)) +
                   SparsePoly(Rational(1, 2)) * SparsePoly::var(beta(), 2) * SparsePoly::var(xv(1));
    auto j = poly_to_json(p);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][0]["exps"].empty());
    CHECK(j["terms"][1]["coeff"] == "1/2");
    CHECK(j["terms"][1]["exps"]["b"] == 2);
    CHECK(j["terms"][1]["exps"]["x1"] == 1);
}

TEST_CASE("polynomial json rejects garbage", "[cli-io]") {
    CHECK_THROWS_AS(poly_from_json(nlohmann::ordered_json::parse("{}")), BadSerialization);
    CHECK_THROWS_AS(
        poly_from_json(nlohmann::ordered_json::parse(
            R"({"terms":[{"coeff":"1","exps":{"q3":1}}]})")),
        BadSerialization);
    CHECK_THROWS_AS(
        poly_from_json(nlohmann::ordered_json::parse(
            R"({"terms":[{"coeff":"one","exps":{}}]})")),
        BadSerialization);
}

TEST_CASE("tableau json round trip", "[cli-io]") {
    for (auto& T : enumerate_svt(SkewShape::parse("2,1/1"), 3)) {
        auto j = tableau_to_json(T);
        SetValuedTableau back = tableau_from_json(j);
        CHECK(back == T);
        CHECK(tableau_to_json(back) == j);
    }
}

TEST_CASE("tableau json content", "[cli-io]") {
    auto j = nlohmann::ordered_json::parse(
        R"({"shape":"2,1/1","n":3,"cells":[{"r":1,"c":2,"set":[2,3]},{"r":2,"c":1,"set":[1]}]})");
    SetValuedTableau T = tableau_from_json(j);
    CHECK(T.n() == 3);
    CHECK(T.shape() == SkewShape::parse("2,1/1"));
    CHECK(T.at({1, 2}) == std::vector<int>{2, 3});
    CHECK(T.valid());
}
