#include "ferrook/construct.hpp"

#include "ferrook/bounds.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrook {

RSCode rs_code(const FieldTable& field, int length, int min_dist) {
    const int q = static_cast<int>(field.q());
    if (length < 1) throw std::invalid_argument("code length must be positive");
    if (min_dist < 1 || min_dist > length) throw std::invalid_argument("need 1 <= min_dist <= length");
    if (length > q + 1) {
        throw HypothesisViolation("MDS length " + std::to_string(length) + " exceeds q + 1 = " + std::to_string(q + 1));
    }
    RSCode code;
    code.q = field.q();
    code.length = length;
    code.dimension = length - min_dist + 1;
    code.designed_distance = min_dist;

    const int finite = std::min(length, q);
    std::vector<Elem> points;
    for (int j = 0; j < finite; ++j) points.push_back(j == 0 ? Elem{0} : field.pow_generator(static_cast<std::uint64_t>(j - 1)));

    for (int row = 0; row < code.dimension; ++row) {
        std::vector<Elem> g(static_cast<std::size_t>(length), 0);
        for (int j = 0; j < finite; ++j) {
            Elem v = 1;
            for (int e = 0; e < row; ++e) v = field.mul(v, points[static_cast<std::size_t>(j)]);
            g[static_cast<std::size_t>(j)] = v;
        }
        if (length == q + 1) g.back() = row == code.dimension - 1 ? Elem{1} : Elem{0};
        code.generator.push_back(std::move(g));
    }
    return code;
}

int code_min_distance(const RSCode& code, const FieldTable& field, std::uint64_t budget) {
    const std::uint64_t total = projective_count(field.q(), code.dimension, budget);
    int best = code.length;
    std::vector<Elem> coeffs;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        projective_vector(idx, field.q(), code.dimension, coeffs);
        int weight = 0;
        for (int j = 0; j < code.length; ++j) {
            Elem v = 0;
            for (int t = 0; t < code.dimension; ++t) {
                v = field.add(v, field.mul(coeffs[static_cast<std::size_t>(t)],
                                           code.generator[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]));
            }
            weight += v ? 1 : 0;
        }
        best = std::min(best, weight);
    }
    return best;
}

SupportedMatrix transpose(const SupportedMatrix& m) {
    const FerrersDiagram& f = m.diagram;
    const int n = f.rows(), cols = f.cols();
    SupportedMatrix out(ferrook::transpose(f));
    for (const Cell& c : f.cells()) out.set(cols + 1 - c.col, n + 1 - c.row, m.at(c.row, c.col));
    return out;
}

namespace {

ConstructedSpace build_oriented(const FerrersDiagram& f, int d, const FieldTable& field) {
    const int m = f.cols();
    const DiagonalProfile prof = diagonal_profile(f);
    ConstructedSpace s{f, d, field.q(), {}, {}, false, {}};

    if (d >= 2) {
        int longest = 0;
        for (int i = 1; i <= m; ++i) longest = std::max(longest, prof.at(i));
        if (static_cast<long>(field.q()) < longest - 1) {
            throw HypothesisViolation("q = " + std::to_string(field.q()) + " is below max |D_i ∩ F| - 1 = " +
                                      std::to_string(longest - 1));
        }
    }

    for (int i = 1; i <= m; ++i) {
        const int len = prof.at(i);
        if (len < d) continue;
        const std::vector<Cell> cells = diagonal_cells(f, i);
        std::vector<std::vector<Elem>> gen;
        if (d == 1) {
            for (int t = 0; t < len; ++t) {
                std::vector<Elem> row(static_cast<std::size_t>(len), 0);
                row[static_cast<std::size_t>(t)] = 1;
                gen.push_back(std::move(row));
            }
        } else {
            gen = rs_code(field, len, d).generator;
        }
        for (const auto& word : gen) {
            SupportedMatrix mat(f);
            for (std::size_t t = 0; t < cells.size(); ++t) mat.set(cells[t].row, cells[t].col, word[t]);
            s.basis.push_back(std::move(mat));
        }
        s.blocks.push_back({i, len, static_cast<int>(gen.size())});
    }
    if (s.blocks.empty()) s.warnings.push_back("no diagonal carries at least d cells; the space is zero");
    return s;
}

}  // namespace

ConstructedSpace build_space(const FerrersDiagram& f, int d, const FieldTable& field) {
    const int low = std::min(f.rows(), f.cols());
    if (d < 1 || d > low) {
        throw HypothesisViolation("need 1 <= d <= min(n, m) = " + std::to_string(low) + ", got d = " + std::to_string(d));
    }
    if (f.cols() >= f.rows()) return build_oriented(f, d, field);
    ConstructedSpace s = build_oriented(transpose(f), d, field);
    for (auto& b : s.basis) b = transpose(b);
    s.diagram = f;
    s.transposed = true;
    return s;
}

SpaceVerdict verify_space(const ConstructedSpace& s, const FieldTable& field, std::uint64_t budget,
                          std::optional<SamplingOptions> sampling) {
    SpaceVerdict v;
    if (s.basis.empty()) return v;
    const int k = s.dimension();
    std::uint64_t total = 0;
    bool fits = true;
    try {
        total = projective_count(field.q(), k, budget);
    } catch (const BudgetExceeded&) {
        if (!sampling) throw;
        fits = false;
    }

    if (fits) {
        v.checked = total;
        const auto witness = first_rank_below(s.basis, field, s.d, budget);
        if (witness) {
            v.pass = false;
            v.witness_index = *witness;
            projective_vector(*witness, field.q(), k, v.witness_coeffs);
            v.witness_rank = matrix_rank(combine(s.basis, v.witness_coeffs, field), field);
        } else {
            v.min_rank = min_rank(s.basis, field, budget);
        }
        return v;
    }

    v.exhaustive = false;
    Rng rng(sampling->seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, field.q() - 1);
    std::vector<Elem> coeffs(static_cast<std::size_t>(k));
    for (std::uint64_t t = 0; t < sampling->samples; ++t) {
        do {
            for (auto& c : coeffs) c = static_cast<Elem>(pick(rng));
        } while (std::all_of(coeffs.begin(), coeffs.end(), [](Elem c) { return c == 0; }));
        ++v.checked;
        const int r = matrix_rank(combine(s.basis, coeffs, field), field);
        if (r < s.d) {
            v.pass = false;
            v.witness_coeffs = coeffs;
            v.witness_rank = r;
            break;
        }
    }
    return v;
}

bool optimality_check(const ConstructedSpace& s) { return s.dimension() == kappa(s.diagram, s.d).minimum; }

}  // namespace ferrook
