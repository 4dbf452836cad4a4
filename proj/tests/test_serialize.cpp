#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrook/golden.hpp"
#include "ferrook/serialize.hpp"

using namespace ferrook;

TEST_CASE("polynomial JSON round trip") {
    const IntPolynomial p{0, 0, 0, 6, -18};
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"3":"6","4":"-18"})");
    CHECK(polynomial_from_json(j) == p);
    CHECK(to_json(IntPolynomial{}).dump() == "{}");
}

TEST_CASE("verdict schema") {
    const Json v = verdict_json(FerrersDiagram({2, 3, 3, 3, 4, 5}), 4);
    std::vector<std::string> keys;
    for (const auto& [k, _] : v.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"diagram", "d", "kappa", "kappa_vector", "diag_sum_all", "diag_sum_first_m",
                                           "tau", "mds_constructible", "density_class_at"});
    CHECK(v["kappa"] == 3);
    CHECK(v["mds_constructible"] == true);
    CHECK(v["density_class_at"]["3"] == "DENSE");
    CHECK(verdict_json(FerrersDiagram({2, 3}), 2)["diag_sum_first_m"].is_null());
}

TEST_CASE("census and density schemas") {
    RankCensus c{2, FerrersDiagram({1, 2}), {1, 5, 2}};
    CHECK(to_json(c).dump() == R"({"q":2,"diagram":"[1,2]","counts":["1","5","2"]})");
    DensityReport r;
    r.trials = 10;
    const Json j = to_json(r);
    for (const char* key : {"estimate", "ci_low", "ci_high", "trials", "seed", "prng"}) CHECK(j.contains(key));
}

TEST_CASE("constructed spaces survive export and import") {
    const FieldTable field(4);
    const ConstructedSpace s = build_space(FerrersDiagram({2, 3, 3, 3, 4, 5}), 4, field);
    const Json j = to_json(s);
    CHECK(j["dimension"] == 3);
    CHECK(j["kappa"] == 3);
    CHECK(j["optimal"] == true);
    const ConstructedSpace back = space_from_json(Json::parse(j.dump()));
    CHECK(back.basis == s.basis);
    CHECK(back.d == 4);
    CHECK(back.q == 4);
    CHECK(verify_space(back, field, 1000).pass);

    Json bad = j;
    bad["basis"][0]["3,1"] = 1;  // (3,1) is not in the diagram
    CHECK_THROWS_AS(space_from_json(bad), std::invalid_argument);
    bad = j;
    bad["basis"][0]["2,1"] = 9;
    CHECK_THROWS_AS(space_from_json(bad), std::invalid_argument);
}

TEST_CASE("rounded scientific comparison") {
    CHECK(to_scientific(BigInt(123456), 3) == "1.23e5");
    CHECK(to_scientific(BigInt(125), 2) == "1.3e2");
    CHECK(to_scientific(BigInt(9996), 3) == "1.00e4");
    CHECK(to_scientific(BigInt(-42), 1) == "-4e1");
    CHECK(to_scientific(BigInt(7), 3) == "7.00e0");
    CHECK(matches_rounded(parse_bigint("1064999"), "1.06e6"));
    CHECK_FALSE(matches_rounded(parse_bigint("1065000"), "1.06e6"));
    CHECK_FALSE(matches_rounded(parse_bigint("1060000"), "1.06e7"));
    CHECK_FALSE(matches_rounded(parse_bigint("-1060000"), "1.06e6"));
    CHECK(matches_rounded(parse_bigint("110"), "1.1e2"));
    CHECK_THROWS_AS(matches_rounded(BigInt(1), "1.06"), std::invalid_argument);
}

TEST_CASE("golden entries report failures instead of throwing") {
    const GoldenResult r = run_golden_entry(Json::parse(R"({"label":"x","kind":"kappa","diagram":"[1,2]","d":9,"expected":1})"));
    CHECK_FALSE(r.pass);
    CHECK(r.actual.rfind("error:", 0) == 0);
    CHECK_FALSE(run_golden_entry(Json::parse(R"({"label":"y","kind":"nope"})")).pass);
}
