#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrook/qcount.hpp"
#include "oracles.hpp"

using namespace ferrook;

TEST_CASE("binomials and Catalan numbers") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (unsigned n = 0; n < 8; ++n) CHECK(catalan(n) == cat[n]);
}

TEST_CASE("Gaussian binomials match brute-force subspace counts") {
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= a; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(q_binomial(static_cast<unsigned>(a), static_cast<unsigned>(b)).evaluate(2) == oracle::subspace_count(a, b, 2));
            CHECK(q_binomial_eval(static_cast<unsigned>(a), static_cast<unsigned>(b), 2) == oracle::subspace_count(a, b, 2));
        }
    }
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(q_binomial_eval(static_cast<unsigned>(a), static_cast<unsigned>(b), 3) == oracle::subspace_count(a, b, 3));
        }
    }
}

TEST_CASE("known Gaussian binomial values") {
    CHECK(q_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
    CHECK(q_binomial_eval(4, 1, 4) == 85);
    CHECK(q_binomial_eval(5, 2, 4) == 5797);
    CHECK(q_binomial_eval(20, 3, 3) == q_binomial(20, 3).evaluate(3));
}

TEST_CASE("Gaussian binomial preconditions") {
    CHECK_THROWS_AS(q_binomial(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_binomial_eval(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_binomial_eval(4, 2, 1), std::invalid_argument);
}

TEST_CASE("property: symmetry, q = 1 specialization and degree") {
    for (unsigned a = 0; a <= 14; ++a) {
        for (unsigned b = 0; b <= a; ++b) {
            const IntPolynomial p = q_binomial(a, b);
            CHECK(p == q_binomial(a, a - b));
            CHECK(p.coefficient_sum() == binomial(a, b));
            CHECK(p.degree() == ExtendedInt(static_cast<long>(b) * (a - b)));
            for (long q : {2L, 3L, 5L, 7L}) CHECK(p.evaluate(q) == q_binomial_eval(a, b, q));
            const auto& c = p.coefficients();
            CHECK(std::equal(c.begin(), c.end(), c.rbegin()));
        }
    }
}
