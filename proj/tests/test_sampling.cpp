#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrook/errors.hpp"
#include "ferrook/sampling.hpp"
#include "oracles.hpp"

#include <omp.h>

#include <set>

using namespace ferrook;

TEST_CASE("projective enumeration visits each line once") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (int k = 1; k <= 4; ++k) {
            const std::uint64_t total = projective_count(q, k, 1u << 20);
            std::uint64_t expect = 0, block = 1;
            for (int t = 0; t < k; ++t, block *= q) expect += block;
            CHECK(total == expect);
            std::set<std::vector<Elem>> seen;
            std::vector<Elem> v;
            for (std::uint64_t i = 0; i < total; ++i) {
                projective_vector(i, q, k, v);
                // normalized: the first nonzero coordinate is 1
                const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
                REQUIRE(lead != v.end());
                CHECK(*lead == 1);
                seen.insert(v);
            }
            CHECK(seen.size() == total);
            CHECK_THROWS_AS(projective_vector(total, q, k, v), std::out_of_range);
        }
    }
    CHECK_THROWS_AS(projective_count(4, 12, 1000), BudgetExceeded);
    CHECK(projective_count(4, 3, 21) == 21);
}

TEST_CASE("property: parallel scans match the serial reference") {
    std::mt19937_64 rng(61);
    omp_set_num_threads(3);
    for (int t = 0; t < 60; ++t) {
        const FerrersDiagram f = oracle::random_diagram(rng, 4, 5);
        const std::uint32_t q = t % 2 ? 3 : 2;
        const FieldTable field(q);
        const int k = std::min(f.size(), 1 + static_cast<int>(rng() % 4));
        const auto basis = sample_subspace(f, field, k, rng());
        CHECK(min_rank(basis, field, 1u << 20) == serial::min_rank(basis, field, 1u << 20));
        for (int d = 1; d <= 4; ++d) {
            CHECK(first_rank_below(basis, field, d, 1u << 20) == serial::first_rank_below(basis, field, d, 1u << 20));
        }
    }
}

TEST_CASE("sampled subspaces are reproducible and full rank") {
    const FerrersDiagram f({2, 3, 3, 3, 4, 5});
    const FieldTable field(9);
    const auto a = sample_subspace(f, field, 3, 99);
    const auto b = sample_subspace(f, field, 3, 99);
    CHECK(a == b);
    CHECK(a.size() == 3);
    std::vector<Elem> gen;
    for (const auto& m : a) gen.insert(gen.end(), m.entries.begin(), m.entries.end());
    CHECK(rank_in_place(gen, 3, f.size(), field) == 3);
    CHECK(sample_subspace(f, field, 0, 1).empty());
}

TEST_CASE("seed derivation") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(5, 7) == derive_seed(5, 7));
}

TEST_CASE("Wilson interval") {
    double lo = 0, hi = 0;
    wilson_interval(0, 0, lo, hi);
    CHECK(lo == 0);
    CHECK(hi == 1);
    wilson_interval(50, 100, lo, hi);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
    wilson_interval(0, 2000, lo, hi);
    CHECK(lo == 0);
    CHECK(hi < 0.002);
    for (std::uint64_t s = 0; s <= 40; ++s) {
        wilson_interval(s, 40, lo, hi);
        const double p = static_cast<double>(s) / 40;
        CHECK(lo <= p);
        CHECK(hi >= p);
    }
}

TEST_CASE("density estimates do not depend on the thread count") {
    const FerrersDiagram f({2, 3, 3, 3, 4, 5});
    const FieldTable field(4);
    omp_set_num_threads(1);
    const DensityReport a = estimate_density(f, 4, 3, field, 200, 7, 1u << 20);
    omp_set_num_threads(4);
    const DensityReport b = estimate_density(f, 4, 3, field, 200, 7, 1u << 20);
    CHECK(a.successes == b.successes);
    CHECK(a.prng == "mt19937_64");
    CHECK(a.trials == 200);
    CHECK(a.ci_low <= a.estimate);
    CHECK(a.ci_high >= a.estimate);
}
