#pragma once

#include "ferrook/bigint.hpp"
#include "ferrook/ferrers.hpp"

#include <optional>
#include <vector>

namespace ferrook {

/// Profile vanishes beyond index m. Requires m >= n >= 2 (transpose first).
bool charmds2(const FerrersDiagram& f);

/// ((m - n + 1) / m) * C(m + n - 2, n - 1), divisibility asserted.
BigInt count_mds2_formula(int n, int m);
/// (1/n) C(2n - 2, n - 1) + (2/(n - 1)) C(2n - 4, n - 2), divisibility asserted.
BigInt count_mds3_square_formula(int n);

struct CountReport {
    int n = 0;
    int m = 0;
    int d = 0;
    BigInt formula;
    std::optional<BigInt> enumerated;  // absent when the board was too large to sweep
    std::vector<FerrersDiagram> members;

    bool agree() const { return !enumerated || *enumerated == formula; }
};

/// Largest number of diagrams swept exhaustively by the counting routines.
inline constexpr std::size_t kCountingSweepLimit = 2'000'000;

/// Formula next to an exhaustive sweep using mds_constructible(F, 2).
CountReport count_mds2(int n, int m);
/// Formula next to an exhaustive sweep of n x n diagrams using mds_constructible(F, 3).
CountReport count_mds3_square(int n);

struct ExtensionCase {
    FerrersDiagram diagram;
    int d_holds = 0;
    int d_fails = 0;
    bool lower_constructible = false;
    bool upper_constructible = false;

    /// (F, d_holds) constructible and (F, d_fails) not.
    bool as_expected() const { return lower_constructible && !upper_constructible; }
};

struct ChainReport {
    int n = 0;
    std::size_t checked = 0;
    /// square diagrams with (F,2) constructible but (F,3) not
    std::vector<FerrersDiagram> violations;
    /// the non-square and d = 4 extensions, expected to fail
    std::vector<ExtensionCase> extensions;

    bool holds() const;
};

/// For every n x n diagram, (F,2) constructible implies (F,3) constructible.
ChainReport chain_check(int n);

}  // namespace ferrook
