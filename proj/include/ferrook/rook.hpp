#pragma once

#include "ferrook/ext_int.hpp"
#include "ferrook/ferrers.hpp"
#include "ferrook/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ferrook {

/// Non-attacking rook placement: rooks sorted by column, no two sharing a row or column.
struct RookPlacement {
    std::vector<Cell> rooks;

    std::size_t size() const { return rooks.size(); }
    /// "{(i,j),(i,j),...}"
    std::string to_string() const;
};

/// Throws std::invalid_argument if rooks attack each other or leave F.
void validate_placement(const RookPlacement& c, const FerrersDiagram& f);

/// Garsia-Remmel statistic: dots of F left after crossing out every rook,
/// every dot above a rook in its column and every dot right of a rook in its row.
/// Rebuilds a crossed-out grid per call.
int inv(const RookPlacement& c, const FerrersDiagram& f);

/// Visits NAR(F, r) column by column: each column either holds no rook or a
/// rook in an unused row within the column height.
void for_each_placement(const FerrersDiagram& f, int r, const std::function<void(const RookPlacement&)>& visit);
std::vector<RookPlacement> enumerate_placements(const FerrersDiagram& f, int r);

/// hist[e] = number of placements in NAR(F, r) with inv = e, for e = 0..|F|.
using InvHistogram = std::vector<std::uint64_t>;

namespace serial {
/// Reference route: explicit enumeration plus the grid inv for every placement.
InvHistogram inv_histogram(const FerrersDiagram& f, int r);
IntPolynomial rook_polynomial(const FerrersDiagram& f, int r);
}  // namespace serial

/// OpenMP kernel: inv is accumulated column by column during the search,
/// shards are prefixes of the first columns' choices and merge in a fixed order.
InvHistogram inv_histogram(const FerrersDiagram& f, int r);

IntPolynomial histogram_to_polynomial(const InvHistogram& hist);

/// R_q(F, r) = sum over NAR(F, r) of q^inv.
IntPolynomial rook_polynomial(const FerrersDiagram& f, int r);

/// sum over all diagonals of max(0, |D_i ∩ F| - r), with no hypothesis check.
long diagonal_excess(const FerrersDiagram& f, int r);

/// Closed form for the trailing degree of R_q(F, r). Returns nullopt when
/// kappa(F, r) = 0, where the closed form is not claimed. Throws when r is
/// outside 1..min(n, m).
std::optional<long> tau_closed_form(const FerrersDiagram& f, int r);

/// Trailing degree of rook_polynomial(F, r); negative infinity when NAR(F, r) is empty.
ExtendedInt tau_via_polynomial(const FerrersDiagram& f, int r);

}  // namespace ferrook
