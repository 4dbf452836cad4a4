#pragma once

#include "ferrook/ferrers.hpp"
#include "ferrook/field.hpp"
#include "ferrook/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ferrook {

/// Generator used for every stochastic routine; its name is recorded in reports.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Seed of trial `t` derived from a run seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t);
inline constexpr const char* kSeedRule = "splitmix64(seed + (trial + 1) * 0x9e3779b97f4a7c15)";

/// Cap on the number of projective combinations scanned: 2^24, or the
/// FERROOK_MAX_COMBOS environment variable.
std::uint64_t default_combination_budget();

/// (q^k - 1) / (q - 1); throws BudgetExceeded beyond `budget`.
std::uint64_t projective_count(std::uint32_t q, int k, std::uint64_t budget);

/// The index-th coefficient vector with leading nonzero entry 1, in
/// ascending lexicographic order of the vectors.
void projective_vector(std::uint64_t index, std::uint32_t q, int k, std::vector<Elem>& out);

namespace serial {
int min_rank(std::span<const SupportedMatrix> basis, const FieldTable& field, std::uint64_t budget);
std::optional<std::uint64_t> first_rank_below(std::span<const SupportedMatrix> basis, const FieldTable& field, int d,
                                              std::uint64_t budget);
}  // namespace serial

/// Minimum rank over all nonzero elements of span(basis), scanning one
/// representative per projective point. Empty basis gives 0.
int min_rank(std::span<const SupportedMatrix> basis, const FieldTable& field, std::uint64_t budget);

/// Lowest projective index whose combination has rank < d, if any.
std::optional<std::uint64_t> first_rank_below(std::span<const SupportedMatrix> basis, const FieldTable& field, int d,
                                              std::uint64_t budget);

/// Uniform k-dimensional subspace of F_q[F]: the row space of a uniformly
/// random full-rank k x |F| matrix, returned as k basis matrices.
std::vector<SupportedMatrix> sample_subspace(const FerrersDiagram& f, const FieldTable& field, int k, Rng& rng);
std::vector<SupportedMatrix> sample_subspace(const FerrersDiagram& f, const FieldTable& field, int k,
                                             std::uint64_t seed);

struct DensityReport {
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    std::string prng = kRngName;
    std::string seed_rule = kSeedRule;
};

/// Wilson score interval at 95%.
void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& low, double& high);

/// Fraction of sampled k-dimensional subspaces in which every nonzero matrix
/// has rank >= d. Trials run in parallel, each with its own derived seed.
DensityReport estimate_density(const FerrersDiagram& f, int d, int k, const FieldTable& field, std::uint64_t trials,
                               std::uint64_t seed, std::uint64_t budget);

}  // namespace ferrook
