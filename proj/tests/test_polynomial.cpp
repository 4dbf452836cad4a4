#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrook/bigint.hpp"
#include "ferrook/ext_int.hpp"
#include "ferrook/polynomial.hpp"
#include "ferrook/qcount.hpp"

#include <random>

using namespace ferrook;

TEST_CASE("big integers parse and print in decimal") {
    CHECK(to_string(parse_bigint("-6510288900541266")) == "-6510288900541266");
    CHECK(to_string(parse_bigint("+42")) == "42");
    CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("-"), std::invalid_argument);
    CHECK(divide_exact(BigInt(91), BigInt(7)) == 13);
    CHECK_THROWS_AS(divide_exact(BigInt(10), BigInt(3)), std::logic_error);
    CHECK(pow(BigInt(3), 40) == parse_bigint("12157665459056928801"));
}

TEST_CASE("extended integers treat -inf as absorbing and smallest") {
    const ExtendedInt inf = ExtendedInt::neg_infinity();
    CHECK((inf + 5).is_neg_infinity());
    CHECK(ExtendedInt(2) + 3 == ExtendedInt(5));
    CHECK(inf < ExtendedInt(-1000000));
    CHECK(max(inf, ExtendedInt(-3)) == ExtendedInt(-3));
    CHECK(inf.to_string() == "-inf");
    CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("polynomial degree conventions") {
    const IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree().is_neg_infinity());
    CHECK(zero.trailing_degree().is_neg_infinity());
    CHECK(zero.to_string() == "0");

    const IntPolynomial p{0, 0, 0, 6, 18};
    CHECK(p.degree() == ExtendedInt(4));
    CHECK(p.trailing_degree() == ExtendedInt(3));
    CHECK(p.to_string() == "6*q^3 + 18*q^4");
    CHECK(IntPolynomial{-1, -1, 1, 1}.to_string() == "-1 - q + q^2 + q^3");
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
}

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial a{1, 1};   // 1 + q
    const IntPolynomial b{-1, 1};  // q - 1
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK((a - a).is_zero());
    CHECK(a.evaluate(10) == 11);
    CHECK(IntPolynomial{1, 2, 3}.coefficient_sum() == 6);
    CHECK(IntPolynomial::monomial(3, 7).coeff(3) == 7);
    CHECK(IntPolynomial::monomial(3, 7).coeff(9) == 0);
}

TEST_CASE("(q-1)^r has signed binomial coefficients") {
    for (unsigned r = 0; r <= 12; ++r) {
        const IntPolynomial p = q_minus_one_power(r);
        for (unsigned e = 0; e <= r; ++e) {
            const BigInt sign = (r - e) % 2 == 0 ? 1 : -1;
            CHECK(p.coeff(e) == sign * binomial(r, e));
        }
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<int> len(0, 8);
    const auto gen = [&] {
        std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
        for (auto& x : c) x = coef(rng);
        return IntPolynomial(c);
    };
    for (int trial = 0; trial < 300; ++trial) {
        const IntPolynomial p = gen(), q = gen();
        const BigInt x = coef(rng);
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
        CHECK((p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x));
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).degree() == p.degree() + q.degree());
            CHECK((p * q).trailing_degree() == p.trailing_degree() + q.trailing_degree());
        }
    }
}
