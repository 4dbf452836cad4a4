#include "ferrook/qcount.hpp"

#include <stdexcept>
#include <vector>

namespace ferrook {

BigInt binomial(unsigned a, unsigned b) {
    if (b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

BigInt catalan(unsigned n) { return divide_exact(binomial(2 * n, n), BigInt(n + 1)); }

IntPolynomial q_binomial(unsigned a, unsigned b) {
    if (a < b) throw std::invalid_argument("q_binomial: need a >= b");
    // row[k] holds [i choose k]_q for the current i.
    std::vector<IntPolynomial> row(b + 1);
    row[0] = IntPolynomial{1};
    for (unsigned i = 1; i <= a; ++i) {
        unsigned top = std::min(i, b);
        for (unsigned k = top; k >= 1; --k) {
            row[k] = row[k - 1] + IntPolynomial::monomial(k) * row[k];
        }
    }
    return row[b];
}

BigInt q_binomial_eval(unsigned a, unsigned b, const BigInt& q) {
    if (a < b) throw std::invalid_argument("q_binomial_eval: need a >= b");
    if (q < 2) throw std::invalid_argument("q_binomial_eval: need q >= 2");
    BigInt num = 1, den = 1;
    const BigInt qa = pow(q, a), qb = pow(q, b);
    BigInt qi = 1;
    for (unsigned i = 0; i < b; ++i) {
        num *= qa - qi;
        den *= qb - qi;
        qi *= q;
    }
    return divide_exact(num, den);
}

}  // namespace ferrook
