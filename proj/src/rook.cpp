#include "ferrook/rook.hpp"

#include "ferrook/bounds.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ferrook {

std::string RookPlacement::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < rooks.size(); ++k) {
        if (k) os << ',';
        os << '(' << rooks[k].row << ',' << rooks[k].col << ')';
    }
    os << '}';
    return os.str();
}

void validate_placement(const RookPlacement& c, const FerrersDiagram& f) {
    for (std::size_t a = 0; a < c.rooks.size(); ++a) {
        if (!f.contains(c.rooks[a])) throw std::invalid_argument("rook outside diagram: " + c.to_string());
        for (std::size_t b = a + 1; b < c.rooks.size(); ++b) {
            if (c.rooks[a].row == c.rooks[b].row || c.rooks[a].col == c.rooks[b].col) {
                throw std::invalid_argument("attacking rooks in placement " + c.to_string());
            }
        }
    }
}

int inv(const RookPlacement& c, const FerrersDiagram& f) {
    validate_placement(c, f);
    const int n = f.rows(), m = f.cols();
    std::vector<char> crossed(static_cast<std::size_t>(n * m), 0);
    auto at = [&](int i, int j) -> char& { return crossed[static_cast<std::size_t>((i - 1) * m + (j - 1))]; };
    for (const Cell& rk : c.rooks) {
        for (int i = 1; i <= rk.row; ++i) at(i, rk.col) = 1;
        for (int j = rk.col; j <= m; ++j) at(rk.row, j) = 1;
    }
    int survivors = 0;
    for (const Cell& cell : f.cells()) survivors += at(cell.row, cell.col) ? 0 : 1;
    return survivors;
}

namespace {

void place_from(const FerrersDiagram& f, int col, int remaining, std::uint64_t used, RookPlacement& cur,
                const std::function<void(const RookPlacement&)>& visit) {
    if (remaining == 0) {
        visit(cur);
        return;
    }
    const int m = f.cols();
    if (m - col + 1 < remaining) return;
    // no rook in this column
    place_from(f, col + 1, remaining, used, cur, visit);
    for (int i = 1; i <= f.height(col); ++i) {
        if (used & (std::uint64_t{1} << i)) continue;
        cur.rooks.push_back({i, col});
        place_from(f, col + 1, remaining - 1, used | (std::uint64_t{1} << i), cur, visit);
        cur.rooks.pop_back();
    }
}

void check_board(const FerrersDiagram& f) {
    if (f.rows() > 62) throw std::invalid_argument("rook enumeration supports at most 62 rows");
}

}  // namespace

void for_each_placement(const FerrersDiagram& f, int r, const std::function<void(const RookPlacement&)>& visit) {
    check_board(f);
    if (r < 0) throw std::invalid_argument("rook count must be nonnegative");
    RookPlacement cur;
    place_from(f, 1, r, 0, cur, visit);
}

std::vector<RookPlacement> enumerate_placements(const FerrersDiagram& f, int r) {
    std::vector<RookPlacement> out;
    for_each_placement(f, r, [&](const RookPlacement& c) { out.push_back(c); });
    return out;
}

namespace serial {

InvHistogram inv_histogram(const FerrersDiagram& f, int r) {
    InvHistogram hist(static_cast<std::size_t>(f.size() + 1), 0);
    for_each_placement(f, r, [&](const RookPlacement& c) { hist[static_cast<std::size_t>(inv(c, f))]++; });
    return hist;
}

IntPolynomial rook_polynomial(const FerrersDiagram& f, int r) { return histogram_to_polynomial(serial::inv_histogram(f, r)); }

}  // namespace serial

namespace {

// Search state after the columns left of `col` are decided. All used rows
// lie within the current column's height, so survivors of column j are
// c_j - |used| without a rook, or the unused rows strictly below a rook.
struct PartialPlacement {
    int col;
    int remaining;
    std::uint64_t used;
    int inv;
};

template <typename Emit>
void expand(const FerrersDiagram& f, const PartialPlacement& s, Emit&& emit) {
    const int c = f.height(s.col);
    const int k = std::popcount(s.used);
    emit(PartialPlacement{s.col + 1, s.remaining, s.used, s.inv + c - k});
    if (s.remaining == 0) return;
    for (int i = 1; i <= c; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (s.used & bit) continue;
        const int below_used = std::popcount(s.used >> (i + 1));
        emit(PartialPlacement{s.col + 1, s.remaining - 1, s.used | bit, s.inv + (c - i) - below_used});
    }
}

void search(const FerrersDiagram& f, const PartialPlacement& s, InvHistogram& hist) {
    if (s.remaining > f.cols() - s.col + 1) return;
    if (s.col > f.cols()) {
        hist[static_cast<std::size_t>(s.inv)]++;
        return;
    }
    expand(f, s, [&](const PartialPlacement& next) { search(f, next, hist); });
}

}  // namespace

InvHistogram inv_histogram(const FerrersDiagram& f, int r) {
    check_board(f);
    if (r < 0) throw std::invalid_argument("rook count must be nonnegative");
    InvHistogram total(static_cast<std::size_t>(f.size() + 1), 0);
    if (r > std::min(f.rows(), f.cols())) return total;

    // Split the first columns into shards until there is enough work to spread.
    std::vector<PartialPlacement> frontier{{1, r, 0, 0}};
    const std::size_t target = 64 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
    while (frontier.size() < target && frontier.front().col <= f.cols()) {
        std::vector<PartialPlacement> next;
        for (const auto& s : frontier) {
            expand(f, s, [&](const PartialPlacement& p) {
                if (p.remaining <= f.cols() - p.col + 1) next.push_back(p);
            });
        }
        frontier = std::move(next);
        if (frontier.empty()) return total;
    }

    const auto shards = static_cast<long>(frontier.size());
    std::vector<InvHistogram> partial(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < shards; ++s) {
        InvHistogram h(total.size(), 0);
        search(f, frontier[static_cast<std::size_t>(s)], h);
        partial[static_cast<std::size_t>(s)] = std::move(h);
    }
    for (const auto& h : partial) {
        for (std::size_t e = 0; e < total.size(); ++e) total[e] += h[e];
    }
    return total;
}

IntPolynomial histogram_to_polynomial(const InvHistogram& hist) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(hist.size());
    for (auto v : hist) coeffs.emplace_back(static_cast<unsigned long>(v));
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial rook_polynomial(const FerrersDiagram& f, int r) { return histogram_to_polynomial(inv_histogram(f, r)); }

long diagonal_excess(const FerrersDiagram& f, int r) { return diagonal_profile(f).excess_sum(r); }

std::optional<long> tau_closed_form(const FerrersDiagram& f, int r) {
    if (r < 1 || r > std::min(f.rows(), f.cols())) {
        throw std::invalid_argument("tau closed form needs 1 <= r <= min(n, m)");
    }
    if (kappa(f, r).minimum == 0) return std::nullopt;
    return diagonal_excess(f, r);
}

ExtendedInt tau_via_polynomial(const FerrersDiagram& f, int r) { return rook_polynomial(f, r).trailing_degree(); }

}  // namespace ferrook
