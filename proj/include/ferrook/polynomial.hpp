#pragma once

#include "ferrook/bigint.hpp"
#include "ferrook/ext_int.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ferrook {

/// Dense polynomial in the formal variable q with exact integer coefficients.
///
/// Coefficients are indexed by exponent and kept normalized: the last stored
/// coefficient is nonzero, so the zero polynomial has no coefficients at all.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    /// c * q^e
    static IntPolynomial monomial(std::size_t e, const BigInt& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    ExtendedInt degree() const;
    ExtendedInt trailing_degree() const;

    /// Coefficient of q^e (zero beyond the stored range).
    BigInt coeff(std::size_t e) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt coefficient_sum() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Text form "c0 + c1*q + c2*q^2 + ...", zero terms omitted.
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// (q - 1)^r expanded.
IntPolynomial q_minus_one_power(unsigned r);

}  // namespace ferrook
