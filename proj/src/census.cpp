#include "ferrook/census.hpp"

#include "ferrook/bounds.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/matrix.hpp"
#include "ferrook/rook.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ferrook {

std::uint64_t default_enum_budget() {
    if (const char* env = std::getenv("FERROOK_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("FERROOK_MAX_ENUM is not an integer: ") + env);
        }
    }
    return 531441;  // 3^12
}

namespace {

std::uint64_t checked_space_size(const FerrersDiagram& f, const FieldTable& field, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int c = 0; c < f.size(); ++c) {
        if (total > budget / field.q()) {
            throw BudgetExceeded("exhaustive census needs " + std::to_string(field.q()) + "^" +
                                 std::to_string(f.size()) + " matrices, budget is " + std::to_string(budget));
        }
        total *= field.q();
    }
    return total;
}

// Fills `digits` with the base-q expansion of `index`, least significant cell first.
void decode(std::uint64_t index, std::uint32_t q, std::vector<Elem>& digits) {
    for (auto& d : digits) {
        d = static_cast<Elem>(index % q);
        index /= q;
    }
}

bool increment(std::vector<Elem>& digits, std::uint32_t q) {
    for (auto& d : digits) {
        if (++d < q) return true;
        d = 0;
    }
    return false;
}

// Scatters the cell values into the dense row-major buffer.
void scatter(const std::vector<std::size_t>& offsets, const std::vector<Elem>& digits, std::vector<Elem>& dense) {
    std::fill(dense.begin(), dense.end(), Elem{0});
    for (std::size_t c = 0; c < offsets.size(); ++c) dense[offsets[c]] = digits[c];
}

std::vector<std::size_t> dense_offsets(const FerrersDiagram& f) {
    std::vector<std::size_t> off;
    for (const Cell& c : f.cells()) off.push_back(static_cast<std::size_t>((c.row - 1) * f.cols() + (c.col - 1)));
    return off;
}

RankCensus to_census(const FerrersDiagram& f, const FieldTable& field, const std::vector<std::uint64_t>& counts) {
    RankCensus out{field.q(), f, {}};
    for (auto c : counts) out.counts.emplace_back(static_cast<unsigned long>(c));
    return out;
}

}  // namespace

namespace serial {

RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field, std::uint64_t budget) {
    checked_space_size(f, field, budget);
    const int n = f.rows(), m = f.cols();
    const auto offsets = dense_offsets(f);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::min(n, m) + 1), 0);
    std::vector<Elem> digits(offsets.size(), 0), dense(static_cast<std::size_t>(n * m));
    do {
        scatter(offsets, digits, dense);
        counts[static_cast<std::size_t>(rank_in_place(dense, n, m, field))]++;
    } while (increment(digits, field.q()));
    return to_census(f, field, counts);
}

}  // namespace serial

RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field, std::uint64_t budget) {
    const std::uint64_t total = checked_space_size(f, field, budget);
    const int n = f.rows(), m = f.cols();
    const auto offsets = dense_offsets(f);
    const std::size_t ranks = static_cast<std::size_t>(std::min(n, m) + 1);

    const std::uint64_t shard_size = 4096;
    const auto shards = static_cast<long>((total + shard_size - 1) / shard_size);
    std::vector<std::uint64_t> counts(ranks, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(ranks, 0);
        std::vector<Elem> digits(offsets.size(), 0), dense(static_cast<std::size_t>(n * m));
#pragma omp for schedule(static)
        for (long s = 0; s < shards; ++s) {
            const std::uint64_t begin = static_cast<std::uint64_t>(s) * shard_size;
            const std::uint64_t end = std::min(total, begin + shard_size);
            decode(begin, field.q(), digits);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                scatter(offsets, digits, dense);
                local[static_cast<std::size_t>(rank_in_place(dense, n, m, field))]++;
                increment(digits, field.q());
            }
        }
#pragma omp critical
        for (std::size_t r = 0; r < ranks; ++r) counts[r] += local[r];
    }
    return to_census(f, field, counts);
}

RankCensus brute_force_census(const FerrersDiagram& f, const FieldTable& field) {
    return brute_force_census(f, field, default_enum_budget());
}

IntPolynomial census_polynomial(const FerrersDiagram& f, int r) {
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
    const InvHistogram hist = inv_histogram(f, r);
    const int size = f.size();
    // sum_e hist[e] q^(|F| - r - e); inv never exceeds |F| - r
    std::vector<BigInt> shifted(static_cast<std::size_t>(std::max(size - r + 1, 1)), BigInt(0));
    for (std::size_t e = 0; e < hist.size(); ++e) {
        if (!hist[e]) continue;
        const long exponent = size - r - static_cast<long>(e);
        if (exponent < 0) throw std::logic_error("inv exceeds |F| - r");
        shifted[static_cast<std::size_t>(exponent)] += static_cast<unsigned long>(hist[e]);
    }
    return q_minus_one_power(static_cast<unsigned>(r)) * IntPolynomial(std::move(shifted));
}

IntPolynomial ball_size_polynomial(const FerrersDiagram& f, int r) {
    if (r < 0) throw std::invalid_argument("radius must be nonnegative");
    IntPolynomial out;
    for (int i = 0; i <= std::min(r, std::min(f.rows(), f.cols())); ++i) out += census_polynomial(f, i);
    return out;
}

BigInt ball_size(const FerrersDiagram& f, int r, const BigInt& q) { return ball_size_polynomial(f, r).evaluate(q); }

ExtendedInt census_degree_by_recursion(const FerrersDiagram& f, int r) {
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
    if (r == 0) return 0;
    if (r > std::min(f.rows(), f.cols())) return ExtendedInt::neg_infinity();
    if (f.cols() == 1) return r == 1 ? ExtendedInt(f.height(1)) : ExtendedInt::neg_infinity();
    const FerrersDiagram rest = f.drop_last_column();
    return max(ExtendedInt(f.rows()) + census_degree_by_recursion(rest, r - 1),
               ExtendedInt(r) + census_degree_by_recursion(rest, r));
}

DegreeRecursionReport degree_recursion_check(const FerrersDiagram& f, int r) {
    DegreeRecursionReport rep;
    rep.census_degree = census_polynomial(f, r).degree();
    rep.recursion_degree = census_degree_by_recursion(f, r);
    if (r == 0) {
        rep.diagonal_degree = 0;
    } else if (r <= std::min(f.rows(), f.cols()) && kappa(f, r).minimum >= 1) {
        rep.diagonal_degree = diagonal_profile(f).capped_sum(r);
    }
    const ExtendedInt tau = tau_via_polynomial(f, r);
    if (tau.is_finite()) rep.complement_of_tau = f.size() - tau.value();
    return rep;
}

}  // namespace ferrook
