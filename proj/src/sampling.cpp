#include "ferrook/sampling.hpp"

#include "ferrook/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace ferrook {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t t) {
    std::uint64_t z = seed + (t + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t default_combination_budget() {
    if (const char* env = std::getenv("FERROOK_MAX_COMBOS")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("FERROOK_MAX_COMBOS is not an integer: ") + env);
        }
    }
    return std::uint64_t{1} << 24;
}

std::uint64_t projective_count(std::uint32_t q, int k, std::uint64_t budget) {
    if (k < 0) throw std::invalid_argument("dimension must be nonnegative");
    std::uint64_t count = 0, block = 1;  // block = q^t
    for (int t = 0; t < k; ++t) {
        count += block;
        if (count > budget) {
            throw BudgetExceeded("span of dimension " + std::to_string(k) + " over GF(" + std::to_string(q) +
                                 ") has more than " + std::to_string(budget) + " projective points");
        }
        if (t + 1 < k) block *= q;
    }
    return count;
}

void projective_vector(std::uint64_t index, std::uint32_t q, int k, std::vector<Elem>& out) {
    out.assign(static_cast<std::size_t>(k), 0);
    // Ascending order: leading position k-1 (one vector), then k-2 (q vectors), ...
    std::uint64_t block = 1;
    for (int lead = k - 1; lead >= 0; --lead) {
        if (index < block) {
            out[static_cast<std::size_t>(lead)] = 1;
            for (int pos = k - 1; pos > lead; --pos) {
                out[static_cast<std::size_t>(pos)] = static_cast<Elem>(index % q);
                index /= q;
            }
            return;
        }
        index -= block;
        block *= q;
    }
    throw std::out_of_range("projective index out of range");
}

namespace {

struct ComboScanner {
    const FieldTable& field;
    int k, rows, cols;
    std::vector<std::vector<Elem>> dense_basis;
    std::vector<Elem> coeffs;
    std::vector<Elem> dense;

    ComboScanner(std::span<const SupportedMatrix> basis, const FieldTable& f)
        : field(f),
          k(static_cast<int>(basis.size())),
          rows(basis.front().diagram.rows()),
          cols(basis.front().diagram.cols()),
          dense(static_cast<std::size_t>(rows * cols)) {
        for (const auto& b : basis) dense_basis.push_back(b.dense());
    }

    int rank_at(std::uint64_t index) {
        projective_vector(index, field.q(), k, coeffs);
        std::fill(dense.begin(), dense.end(), Elem{0});
        for (int t = 0; t < k; ++t) {
            const Elem c = coeffs[static_cast<std::size_t>(t)];
            if (!c) continue;
            const auto& b = dense_basis[static_cast<std::size_t>(t)];
            for (std::size_t e = 0; e < dense.size(); ++e) {
                if (b[e]) dense[e] = field.add(dense[e], field.mul(c, b[e]));
            }
        }
        return rank_in_place(dense, rows, cols, field);
    }
};

}  // namespace

namespace serial {

int min_rank(std::span<const SupportedMatrix> basis, const FieldTable& field, std::uint64_t budget) {
    if (basis.empty()) return 0;
    const std::uint64_t total = projective_count(field.q(), static_cast<int>(basis.size()), budget);
    ComboScanner scan(basis, field);
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t i = 0; i < total; ++i) best = std::min(best, scan.rank_at(i));
    return best;
}

std::optional<std::uint64_t> first_rank_below(std::span<const SupportedMatrix> basis, const FieldTable& field, int d,
                                              std::uint64_t budget) {
    if (basis.empty()) return std::nullopt;
    const std::uint64_t total = projective_count(field.q(), static_cast<int>(basis.size()), budget);
    ComboScanner scan(basis, field);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (scan.rank_at(i) < d) return i;
    }
    return std::nullopt;
}

}  // namespace serial

int min_rank(std::span<const SupportedMatrix> basis, const FieldTable& field, std::uint64_t budget) {
    if (basis.empty()) return 0;
    const auto total = static_cast<long long>(projective_count(field.q(), static_cast<int>(basis.size()), budget));
    int best = std::numeric_limits<int>::max();
#pragma omp parallel reduction(min : best)
    {
        ComboScanner scan(basis, field);
#pragma omp for schedule(static)
        for (long long i = 0; i < total; ++i) best = std::min(best, scan.rank_at(static_cast<std::uint64_t>(i)));
    }
    return best;
}

std::optional<std::uint64_t> first_rank_below(std::span<const SupportedMatrix> basis, const FieldTable& field, int d,
                                              std::uint64_t budget) {
    if (basis.empty()) return std::nullopt;
    const std::uint64_t total = projective_count(field.q(), static_cast<int>(basis.size()), budget);
    constexpr std::uint64_t chunk = 1024;
    const auto chunks = static_cast<long long>((total + chunk - 1) / chunk);
    std::atomic<std::uint64_t> found{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel
    {
        ComboScanner scan(basis, field);
#pragma omp for schedule(dynamic)
        for (long long c = 0; c < chunks; ++c) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
            if (begin > found.load(std::memory_order_relaxed)) continue;
            const std::uint64_t end = std::min(total, begin + chunk);
            for (std::uint64_t i = begin; i < end; ++i) {
                if (scan.rank_at(i) < d) {
                    std::uint64_t prev = found.load();
                    while (i < prev && !found.compare_exchange_weak(prev, i)) {
                    }
                    break;
                }
            }
        }
    }
    const std::uint64_t hit = found.load();
    if (hit == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return hit;
}

std::vector<SupportedMatrix> sample_subspace(const FerrersDiagram& f, const FieldTable& field, int k, Rng& rng) {
    const int size = f.size();
    if (k < 0 || k > size) throw std::invalid_argument("need 0 <= k <= |F|");
    std::uniform_int_distribution<std::uint32_t> pick(0, field.q() - 1);
    std::vector<Elem> gen(static_cast<std::size_t>(k * size));
    for (;;) {
        for (auto& e : gen) e = static_cast<Elem>(pick(rng));
        std::vector<Elem> scratch = gen;
        if (rank_in_place(scratch, k, size, field) == k) break;
    }
    std::vector<SupportedMatrix> basis;
    basis.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        basis.emplace_back(f, std::vector<Elem>(gen.begin() + t * size, gen.begin() + (t + 1) * size));
    }
    return basis;
}

std::vector<SupportedMatrix> sample_subspace(const FerrersDiagram& f, const FieldTable& field, int k,
                                             std::uint64_t seed) {
    Rng rng(seed);
    return sample_subspace(f, field, k, rng);
}

void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& low, double& high) {
    if (trials == 0) {
        low = 0;
        high = 1;
        return;
    }
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double denom = 1 + z * z / n;
    const double center = (p + z * z / (2 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
    low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    high = successes == trials ? 1.0 : std::min(1.0, center + half);
}

DensityReport estimate_density(const FerrersDiagram& f, int d, int k, const FieldTable& field, std::uint64_t trials,
                               std::uint64_t seed, std::uint64_t budget) {
    if (k < 1 || k > f.size()) throw std::invalid_argument("need 1 <= k <= |F|");
    if (d < 1) throw std::invalid_argument("need d >= 1");
    projective_count(field.q(), k, budget);
    std::uint64_t successes = 0;
    const auto n = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic) reduction(+ : successes)
    for (long long t = 0; t < n; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const auto basis = sample_subspace(f, field, k, rng);
        if (!serial::first_rank_below(basis, field, d, budget)) ++successes;
    }
    DensityReport rep;
    rep.trials = trials;
    rep.successes = successes;
    rep.seed = seed;
    rep.estimate = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    wilson_interval(successes, trials, rep.ci_low, rep.ci_high);
    return rep;
}

}  // namespace ferrook
