#pragma once

#include "ferrook/ferrers.hpp"
#include "ferrook/field.hpp"
#include "ferrook/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ferrook {

/// Linear [length, dimension] code over GF(q) given by a generator matrix.
struct RSCode {
    std::uint32_t q = 0;
    int length = 0;
    int dimension = 0;
    int designed_distance = 0;
    /// dimension rows of `length` symbols
    std::vector<std::vector<Elem>> generator;
};

/// Reed-Solomon generator evaluating 1, x, ..., x^(k-1) at 0, 1, g, g^2, ...
/// (g the field generator); for length q+1 the last coordinate is the point
/// at infinity (the x^(k-1) coefficient). Throws HypothesisViolation when
/// length > q+1 and std::invalid_argument unless 1 <= min_dist <= length.
RSCode rs_code(const FieldTable& field, int length, int min_dist);

/// Minimum Hamming weight over all nonzero codewords, by exhaustion.
int code_min_distance(const RSCode& code, const FieldTable& field, std::uint64_t budget);

struct DiagonalBlock {
    int diagonal = 0;  // index in the oriented (m >= n) board
    int length = 0;
    int dimension = 0;
};

/// Matrices obtained by laying codewords of MDS codes along the diagonals of F.
struct ConstructedSpace {
    FerrersDiagram diagram;
    int d = 0;
    std::uint32_t q = 0;
    std::vector<SupportedMatrix> basis;
    std::vector<DiagonalBlock> blocks;
    bool transposed = false;
    std::vector<std::string> warnings;

    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Entry (i, j) of M moves to (m+1-j, n+1-i) on the transposed diagram.
SupportedMatrix transpose(const SupportedMatrix& m);

/// Diagonal construction over diagonals i <= m carrying at least d cells.
/// Boards with m < n are transposed first and the basis transposed back.
/// Throws HypothesisViolation when d is outside 1..min(n, m) or, for d >= 2,
/// when q < max_{i <= m} |D_i ∩ F| - 1.
ConstructedSpace build_space(const FerrersDiagram& f, int d, const FieldTable& field);

struct SpaceVerdict {
    bool pass = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    int min_rank = 0;  // exhaustive mode only; 0 for the zero space
    std::optional<std::uint64_t> witness_index;
    std::vector<Elem> witness_coeffs;
    int witness_rank = 0;
};

struct SamplingOptions {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Checks that every nonzero element of the space has rank >= d.
/// Exhaustive over projective combinations when they fit the budget;
/// otherwise sampled when `sampling` is given, else BudgetExceeded.
SpaceVerdict verify_space(const ConstructedSpace& s, const FieldTable& field, std::uint64_t budget,
                          std::optional<SamplingOptions> sampling = std::nullopt);

/// dim(S) == kappa(F, d)
bool optimality_check(const ConstructedSpace& s);

}  // namespace ferrook
