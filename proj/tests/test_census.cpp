#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrook/census.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/rook.hpp"
#include "oracles.hpp"

using namespace ferrook;

TEST_CASE("census polynomial of the 2 x 2 board") {
    const FerrersDiagram f({2, 2});
    CHECK(census_polynomial(f, 0) == IntPolynomial{1});
    CHECK(census_polynomial(f, 1) == IntPolynomial{-1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 1});
    CHECK(census_polynomial(f, 2) == IntPolynomial{0, 1, -1, -1, 1});
    CHECK(census_polynomial(f, 3).is_zero());
}

TEST_CASE("ball size of the worked example") {
    CHECK(ball_size(FerrersDiagram({2, 3, 3, 3, 4, 5}), 3, 3) == 243679185);
}

TEST_CASE("property: census matches a modular brute force") {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 40) {
        const FerrersDiagram f = oracle::random_diagram(rng, 4, 4);
        if (f.size() > 9) continue;
        ++checked;
        for (std::uint32_t p : {2u, 3u}) {
            const auto expect = oracle::census_mod_p(f, p);
            const RankCensus c = brute_force_census(f, FieldTable(p));
            REQUIRE(c.counts.size() == expect.size());
            for (std::size_t r = 0; r < expect.size(); ++r) {
                CHECK(c.counts[r] == BigInt(static_cast<unsigned long>(expect[r])));
                CHECK(census_polynomial(f, static_cast<int>(r)).evaluate(p) == c.counts[r]);
            }
        }
    }
}

TEST_CASE("property: serial and parallel census agree, counts sum to q^|F|") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const FerrersDiagram f = oracle::random_diagram(rng, 4, 4);
        for (std::uint32_t q : {2u, 3u, 4u}) {
            const FieldTable field(q);
            if (pow(BigInt(q), static_cast<unsigned long>(f.size())) > 200000) continue;
            const RankCensus a = brute_force_census(f, field, 200000);
            const RankCensus b = serial::brute_force_census(f, field, 200000);
            CHECK(a.counts == b.counts);
            BigInt total = 0;
            for (const auto& x : a.counts) total += x;
            CHECK(total == pow(BigInt(q), static_cast<unsigned long>(f.size())));
        }
    }
}

TEST_CASE("census over GF(4) matches the polynomial") {
    const FerrersDiagram f({1, 2, 3});
    const RankCensus c = brute_force_census(f, FieldTable(4));
    for (std::size_t r = 0; r < c.counts.size(); ++r) CHECK(census_polynomial(f, static_cast<int>(r)).evaluate(4) == c.counts[r]);
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(brute_force_census(FerrersDiagram::full(4, 4), FieldTable(3), 1000), BudgetExceeded);
    CHECK_THROWS_AS(serial::brute_force_census(FerrersDiagram::full(4, 4), FieldTable(3), 1000), BudgetExceeded);
}

TEST_CASE("property: degree recursion and deg P + tau = |F| on boards up to 4 x 4") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (const auto& f : enumerate_diagrams(n, m)) {
                for (int r = 0; r <= std::min(n, m); ++r) {
                    CAPTURE(f.to_string());
                    CAPTURE(r);
                    const DegreeRecursionReport rep = degree_recursion_check(f, r);
                    CHECK(rep.holds());
                    const IntPolynomial p = census_polynomial(f, r);
                    CHECK(census_degree_by_recursion(f, r) == p.degree());
                    if (r >= 1) {
                        const ExtendedInt tau = tau_via_polynomial(f, r);
                        if (!p.is_zero()) CHECK(p.degree().value() + tau.value() == f.size());
                        CHECK(ball_size_polynomial(f, r).degree() == max(p.degree(), ball_size_polynomial(f, r - 1).degree()));
                    }
                }
            }
        }
    }
}
