#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ferrook {

/// Arbitrary-precision signed integer. All exact counts and bounds use it.
using BigInt = mpz_class;

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Exact division; throws when `den` does not divide `num`.
inline BigInt divide_exact(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw std::logic_error("non-exact division: " + to_string(num) + " / " + to_string(den));
    }
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

}  // namespace ferrook
