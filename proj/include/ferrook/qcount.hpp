#pragma once

#include "ferrook/bigint.hpp"
#include "ferrook/polynomial.hpp"

namespace ferrook {

/// Binomial coefficient C(a, b); zero when b > a.
BigInt binomial(unsigned a, unsigned b);

/// C(2n, n) / (n + 1).
BigInt catalan(unsigned n);

/// Gaussian binomial [a choose b]_q as a polynomial in q, built with the
/// q-Pascal rule [a,b] = [a-1,b-1] + q^b [a-1,b]. Throws when a < b.
IntPolynomial q_binomial(unsigned a, unsigned b);

/// Gaussian binomial evaluated at an integer q >= 2 with the product formula
/// prod_{i<b} (q^a - q^i) / (q^b - q^i).
BigInt q_binomial_eval(unsigned a, unsigned b, const BigInt& q);

}  // namespace ferrook
