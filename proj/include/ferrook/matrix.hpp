#pragma once

#include "ferrook/ferrers.hpp"
#include "ferrook/field.hpp"

#include <span>
#include <vector>

namespace ferrook {

/// A matrix over GF(q) whose support lies in F. Entries follow the
/// column-major cell order of FerrersDiagram::cells(); cells outside F are zero.
struct SupportedMatrix {
    FerrersDiagram diagram;
    std::vector<Elem> entries;

    explicit SupportedMatrix(FerrersDiagram f)
        : diagram(std::move(f)), entries(static_cast<std::size_t>(diagram.size()), 0) {}
    SupportedMatrix(FerrersDiagram f, std::vector<Elem> values);

    /// Row-major n x m array.
    std::vector<Elem> dense() const;
    Elem at(int i, int j) const;
    void set(int i, int j, Elem v);
    bool is_zero() const;

    friend bool operator==(const SupportedMatrix&, const SupportedMatrix&) = default;
};

/// Rank of a row-major rows x cols matrix; the buffer is overwritten.
int rank_in_place(std::span<Elem> a, int rows, int cols, const FieldTable& field);

int matrix_rank(const SupportedMatrix& m, const FieldTable& field);

/// sum_t coeffs[t] * basis[t], entrywise.
SupportedMatrix combine(std::span<const SupportedMatrix> basis, std::span<const Elem> coeffs, const FieldTable& field);

}  // namespace ferrook
