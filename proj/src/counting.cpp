#include "ferrook/counting.hpp"

#include "ferrook/bounds.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/qcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrook {

bool charmds2(const FerrersDiagram& f) {
    const int n = f.rows(), m = f.cols();
    if (n < 2) throw HypothesisViolation("charmds2 needs n >= 2, got n = " + std::to_string(n));
    if (m < n) throw HypothesisViolation("charmds2 needs m >= n; transpose " + f.to_string() + " first");
    const DiagonalProfile prof = diagonal_profile(f);
    for (int r = m + 1; r <= prof.diagonals(); ++r) {
        if (prof.at(r) != 0) return false;
    }
    return true;
}

BigInt count_mds2_formula(int n, int m) {
    if (n < 2 || m < n) throw HypothesisViolation("count_mds2 needs m >= n >= 2");
    return divide_exact(BigInt(m - n + 1) * binomial(m + n - 2, n - 1), BigInt(m));
}

BigInt count_mds3_square_formula(int n) {
    if (n < 3) throw HypothesisViolation("count_mds3_square needs n >= 3, got n = " + std::to_string(n));
    return divide_exact(binomial(2 * n - 2, n - 1), BigInt(n)) +
           divide_exact(BigInt(2) * binomial(2 * n - 4, n - 2), BigInt(n - 1));
}

namespace {

// Diagrams of the n x m board for which (F, d) is MDS-constructible, in lex order.
std::vector<FerrersDiagram> sweep(int n, int m, int d) {
    const std::vector<FerrersDiagram> all = enumerate_diagrams(n, m);
    std::vector<char> hit(all.size(), 0);
    const long total = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < total; ++i) {
        hit[static_cast<std::size_t>(i)] = mds_constructible(all[static_cast<std::size_t>(i)], d).is_mds_constructible;
    }
    std::vector<FerrersDiagram> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (hit[i]) out.push_back(all[i]);
    }
    return out;
}

CountReport finish(int n, int m, int d, BigInt formula) {
    CountReport rep{n, m, d, std::move(formula), std::nullopt, {}};
    if (diagram_count(n, m) <= kCountingSweepLimit) {
        rep.members = sweep(n, m, d);
        rep.enumerated = BigInt(static_cast<unsigned long>(rep.members.size()));
    }
    return rep;
}

}  // namespace

CountReport count_mds2(int n, int m) { return finish(n, m, 2, count_mds2_formula(n, m)); }

CountReport count_mds3_square(int n) { return finish(n, n, 3, count_mds3_square_formula(n)); }

bool ChainReport::holds() const {
    return violations.empty() &&
           std::all_of(extensions.begin(), extensions.end(), [](const ExtensionCase& e) { return e.as_expected(); });
}

ChainReport chain_check(int n) {
    if (n < 3) throw HypothesisViolation("chain_check needs n >= 3, got n = " + std::to_string(n));
    ChainReport rep;
    rep.n = n;
    const std::vector<FerrersDiagram> all = enumerate_diagrams(n, n);
    rep.checked = all.size();
    for (const FerrersDiagram& f : all) {
        if (mds_constructible(f, 2).is_mds_constructible && !mds_constructible(f, 3).is_mds_constructible) {
            rep.violations.push_back(f);
        }
    }
    const auto extension = [](std::vector<int> heights, int lo, int hi) {
        FerrersDiagram f(std::move(heights));
        return ExtensionCase{f, lo, hi, mds_constructible(f, lo).is_mds_constructible,
                             mds_constructible(f, hi).is_mds_constructible};
    };
    rep.extensions.push_back(extension({1, 1, 3, 3}, 2, 3));
    rep.extensions.push_back(extension({1, 1, 3, 3, 5}, 3, 4));
    return rep;
}

}  // namespace ferrook
