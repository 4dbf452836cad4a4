#pragma once

#include "ferrook/bigint.hpp"
#include "ferrook/ext_int.hpp"
#include "ferrook/ferrers.hpp"
#include "ferrook/field.hpp"
#include "ferrook/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace ferrook {

/// counts[r] = number of matrices in F_q[F] of rank exactly r, r = 0..min(n, m).
struct RankCensus {
    std::uint32_t q = 0;
    FerrersDiagram diagram;
    std::vector<BigInt> counts;
};

/// Default cap on q^|F| for exhaustive enumeration: 3^12, or the value of
/// the FERROOK_MAX_ENUM environment variable when set.
std::uint64_t default_enum_budget();

namespace serial {
/// Reference oracle: visits all q^|F| matrices one after another.
RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field, std::uint64_t budget);
}  // namespace serial

/// OpenMP kernel of the same enumeration. Matrices are base-q counters over
/// the column-major cells, split into contiguous shards; per-shard counts
/// are summed so results do not depend on the thread count.
/// Throws BudgetExceeded when q^|F| > budget.
RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field, std::uint64_t budget);
RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field);

/// P_q(F, r) = sum over NAR(F, r) of (q-1)^r q^(|F| - r - inv), from the rook enumeration.
IntPolynomial census_polynomial(const FerrersDiagram& f, int r);

/// B_q(F, r) = sum_{i <= r} P_q(F, i).
IntPolynomial ball_size_polynomial(const FerrersDiagram& f, int r);
BigInt ball_size(const FerrersDiagram& f, int r, const BigInt& q);

/// Degree of P_q(F, r) predicted by the column-deletion recursion
/// deg P(F, r) = max(n + deg P(F', r-1), r + deg P(F', r)), F' = F minus its last column.
ExtendedInt census_degree_by_recursion(const FerrersDiagram& f, int r);

struct DegreeRecursionReport {
    ExtendedInt census_degree = ExtendedInt::neg_infinity();
    ExtendedInt recursion_degree = ExtendedInt::neg_infinity();
    /// sum_i min(r, |D_i ∩ F|) when kappa(F, r) >= 1 (r >= 1), else -inf; r = 0 gives 0
    ExtendedInt diagonal_degree = ExtendedInt::neg_infinity();
    /// |F| - tau(F, r) with tau from the rook polynomial; -inf when R_q(F, r) = 0
    ExtendedInt complement_of_tau = ExtendedInt::neg_infinity();

    bool holds() const {
        return census_degree == recursion_degree && census_degree == diagonal_degree &&
               census_degree == complement_of_tau;
    }
};

DegreeRecursionReport degree_recursion_check(const FerrersDiagram& f, int r);

}  // namespace ferrook
