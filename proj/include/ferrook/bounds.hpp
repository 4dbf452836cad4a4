#pragma once

#include "ferrook/bigint.hpp"
#include "ferrook/ext_int.hpp"
#include "ferrook/ferrers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ferrook {

/// kappa_j(F, d) for j = 0..d-1: the dots left after deleting the top j rows
/// and the rightmost d-1-j columns. `minimum` is kappa(F, d).
struct KappaReport {
    std::vector<long> values;
    long minimum = 0;
    std::vector<int> argmin;
};

/// Throws HypothesisViolation unless 1 <= d <= min(n, m).
KappaReport kappa(const FerrersDiagram& f, int d);

struct MdsVerdict {
    bool is_mds_constructible = false;
    long kappa = 0;
    /// sum over the first m diagonals of max(0, |D_i ∩ F| - d + 1); only when m >= n
    std::optional<long> diag_sum_first_m;
    /// the same sum over all m+n-1 diagonals
    long diag_sum_all = 0;
    /// tau(F, d-1) from the diagonal closed form; empty when kappa(F, d-1) = 0
    std::optional<long> tau;
};

/// MDS-constructibility measured against all m+n-1 diagonals.
MdsVerdict mds_constructible(const FerrersDiagram& f, int d);

/// The three characterizations side by side. Each one is only evaluated
/// when its hypotheses hold; otherwise the reason is listed in `violations`.
struct EquivalenceReport {
    std::optional<bool> first_m_equal;    // m >= n, 2 <= d <= n
    bool all_equal = false;               // always applicable
    std::optional<bool> tau_equal;        // kappa(F, d) >= 1, tau via the rook polynomial
    std::vector<std::string> violations;

    bool agree() const;
};

EquivalenceReport check_equivalences(const FerrersDiagram& f, int d);

enum class DensityClass { Dense, Sparse, NotDenseAtMostHalf };

std::string to_string(DensityClass c);

/// Asymptotic regime of k-dimensional [F, d]-spaces as q grows, decided by
/// the threshold tau(F, d-1). Throws HypothesisViolation unless
/// 2 <= d <= min(n, m), 1 <= k <= |F| and kappa(F, d) >= 1.
DensityClass classify_density(const FerrersDiagram& f, int d, int k);

/// Lower bound on the number of k-dimensional [F, d]_q-spaces:
/// [|F| k]_q - ((B_q(F, d-1) - 1) / (q - 1)) [|F|-1 k-1]_q.
/// A positive value certifies existence. May be negative.
BigInt existence_lower_bound(const FerrersDiagram& f, int d, int k, const BigInt& q);

/// Upper bound on the number of spaces produced by the diagonal MDS
/// construction: product over diagonals i <= m with n_i = |D_i ∩ F| >= d of
/// [n_i, n_i - d + 1]_q. Needs m >= n, 2 <= d <= n and an MDS-constructible pair.
BigInt mc_upper_bound(const FerrersDiagram& f, int d, const BigInt& q);

/// kappa * (|F| - kappa - d + 1), the decay exponent of the share of
/// optimal spaces that come from the diagonal construction.
long mc_density_exponent(const FerrersDiagram& f, int d);

/// q = p^k with p prime and k >= 1.
bool is_prime_power(const BigInt& q);

}  // namespace ferrook
