#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ferrook {

/// A cell of the n x m board, 1-indexed, row counted from the top.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Top- and right-aligned diagram in an n x m board, stored as column
/// heights c_1 <= ... <= c_m with c_1 >= 1 and c_m = n.
class FerrersDiagram {
public:
    /// Throws std::invalid_argument unless the heights form a valid diagram.
    explicit FerrersDiagram(std::vector<int> column_heights);

    static FerrersDiagram full(int n, int m);

    int rows() const { return heights_.back(); }
    int cols() const { return static_cast<int>(heights_.size()); }
    /// c_j for 1 <= j <= m.
    int height(int j) const { return heights_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& heights() const { return heights_; }

    bool contains(int i, int j) const { return j >= 1 && j <= cols() && i >= 1 && i <= height(j); }
    bool contains(Cell c) const { return contains(c.row, c.col); }
    /// |F|
    int size() const { return size_; }

    /// Cells in column-major order (columns left to right, rows top down).
    std::vector<Cell> cells() const;

    /// Diagram without its rightmost column; requires m >= 2.
    FerrersDiagram drop_last_column() const;

    std::string to_string() const;

    friend bool operator==(const FerrersDiagram& a, const FerrersDiagram& b) { return a.heights_ == b.heights_; }
    friend auto operator<=>(const FerrersDiagram& a, const FerrersDiagram& b) { return a.heights_ <=> b.heights_; }

private:
    std::vector<int> heights_;
    int size_ = 0;
};

/// Parses "[c1,c2,...]" (brackets optional, whitespace ignored).
FerrersDiagram parse_diagram(std::string_view text);

/// counts[r-1] = |D_r ∩ F| for r = 1..m+n-1, where D_r = {(i,j) : j - i = m - r}.
struct DiagonalProfile {
    std::vector<int> counts;

    int at(int r) const { return counts[static_cast<std::size_t>(r - 1)]; }
    int diagonals() const { return static_cast<int>(counts.size()); }
    /// sum over diagonals r in [1, last] of max(0, |D_r ∩ F| - t)
    long excess_sum(int t, int last) const;
    long excess_sum(int t) const { return excess_sum(t, diagonals()); }
    /// sum over all diagonals of min(t, |D_r ∩ F|)
    long capped_sum(int t) const;
};

DiagonalProfile diagonal_profile(const FerrersDiagram& f);

/// Cells of D_r ∩ F ordered by row.
std::vector<Cell> diagonal_cells(const FerrersDiagram& f, int r);

/// The transposition T(F) = {(m+1-j, n+1-i)}, an m x n diagram.
FerrersDiagram transpose(const FerrersDiagram& f);

/// Number of n x m diagrams, C(m+n-2, n-1), as a machine integer.
std::size_t diagram_count(int n, int m);

/// Visits every n x m diagram once, in lexicographic order of the heights.
void for_each_diagram(int n, int m, const std::function<void(const FerrersDiagram&)>& visit);
std::vector<FerrersDiagram> enumerate_diagrams(int n, int m);

enum class Step : char { Right = 'R', Down = 'D' };

/// Down-and-right path through the (n-1) x (m-1) grid.
struct LatticePath {
    std::vector<Step> steps;

    std::string to_string() const;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

LatticePath parse_path(std::string_view text);

/// The path visits the lowest cell of each column: c_1 - 1 downs, then for
/// every column boundary one right followed by c_{j+1} - c_j downs.
LatticePath to_path(const FerrersDiagram& f);
FerrersDiagram from_path(const LatticePath& p, int n, int m);

/// Every prefix has at least as many R steps as D steps.
bool is_generalized_dyck(const LatticePath& p);

}  // namespace ferrook
