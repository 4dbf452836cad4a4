#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ferrook {

using Elem = std::uint16_t;

/// Arithmetic tables for GF(q), q = p^k <= 2^16.
///
/// Elements are the integers 0..q-1, read as base-p digit vectors of
/// polynomials in x modulo a fixed monic primitive polynomial (x itself
/// generates the multiplicative group). Prime fields use the smallest
/// primitive root as generator. The modulus for q in {4, 8, 9, 16} is the
/// Conway polynomial; other extension degrees take the lexicographically
/// first primitive polynomial, so tables are reproducible.
class FieldTable {
public:
    /// Throws std::invalid_argument unless q is a prime power <= 65536.
    explicit FieldTable(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    /// Modulus coefficients, constant term first; {0, 1} for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// The primitive element used for log/exp tables.
    Elem generator() const { return exp_[1]; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return static_cast<Elem>(a ^ b);
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return digit_add(a, b, false);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        return neg_table_[a];
    }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    /// Multiplicative inverse; a must be nonzero.
    Elem inv(Elem a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
    /// generator^e
    Elem pow_generator(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    std::string describe() const;

private:
    Elem digit_add(Elem a, Elem b, bool negate_b) const;

    std::uint32_t q_ = 0, p_ = 0;
    unsigned k_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;            // length 2(q-1)
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<Elem> add_table_;      // q*q entries when q <= 256 and p odd
    std::vector<Elem> neg_table_;
};

/// Decomposes q = p^k; returns false when q is not a prime power.
bool prime_power_decompose(std::uint64_t q, std::uint32_t& p, unsigned& k);

}  // namespace ferrook
