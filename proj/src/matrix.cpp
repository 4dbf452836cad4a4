#include "ferrook/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ferrook {

namespace {

// Offset of cell (i,j) in column-major cell order.
std::size_t cell_offset(const FerrersDiagram& f, int i, int j) {
    std::size_t off = 0;
    for (int c = 1; c < j; ++c) off += static_cast<std::size_t>(f.height(c));
    return off + static_cast<std::size_t>(i - 1);
}

}  // namespace

SupportedMatrix::SupportedMatrix(FerrersDiagram f, std::vector<Elem> values)
    : diagram(std::move(f)), entries(std::move(values)) {
    if (entries.size() != static_cast<std::size_t>(diagram.size())) {
        throw std::invalid_argument("entry count does not match the diagram size");
    }
}

std::vector<Elem> SupportedMatrix::dense() const {
    const int n = diagram.rows(), m = diagram.cols();
    std::vector<Elem> out(static_cast<std::size_t>(n * m), 0);
    std::size_t k = 0;
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= diagram.height(j); ++i) out[static_cast<std::size_t>((i - 1) * m + (j - 1))] = entries[k++];
    }
    return out;
}

Elem SupportedMatrix::at(int i, int j) const {
    if (!diagram.contains(i, j)) return 0;
    return entries[cell_offset(diagram, i, j)];
}

void SupportedMatrix::set(int i, int j, Elem v) {
    if (!diagram.contains(i, j)) throw std::out_of_range("cell outside the diagram");
    entries[cell_offset(diagram, i, j)] = v;
}

bool SupportedMatrix::is_zero() const {
    for (Elem e : entries) {
        if (e) return false;
    }
    return true;
}

int rank_in_place(std::span<Elem> a, int rows, int cols, const FieldTable& field) {
    auto at = [&](int i, int j) -> Elem& { return a[static_cast<std::size_t>(i * cols + j)]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (at(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const Elem pinv = field.inv(at(rank, c));
        for (int i = rank + 1; i < rows; ++i) {
            if (!at(i, c)) continue;
            const Elem factor = field.neg(field.mul(at(i, c), pinv));
            for (int j = c; j < cols; ++j) at(i, j) = field.add(at(i, j), field.mul(factor, at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(const SupportedMatrix& m, const FieldTable& field) {
    auto d = m.dense();
    return rank_in_place(d, m.diagram.rows(), m.diagram.cols(), field);
}

SupportedMatrix combine(std::span<const SupportedMatrix> basis, std::span<const Elem> coeffs, const FieldTable& field) {
    if (basis.empty()) throw std::invalid_argument("combine needs a nonempty basis");
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count mismatch");
    SupportedMatrix out(basis.front().diagram);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (!coeffs[t]) continue;
        for (std::size_t e = 0; e < out.entries.size(); ++e) {
            out.entries[e] = field.add(out.entries[e], field.mul(coeffs[t], basis[t].entries[e]));
        }
    }
    return out;
}

}  // namespace ferrook
