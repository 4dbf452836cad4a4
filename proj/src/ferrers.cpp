#include "ferrook/ferrers.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ferrook {

FerrersDiagram::FerrersDiagram(std::vector<int> column_heights) : heights_(std::move(column_heights)) {
    if (heights_.empty()) throw std::invalid_argument("Ferrers diagram needs at least one column");
    if (heights_.front() < 1) throw std::invalid_argument("column heights must be positive");
    for (std::size_t j = 1; j < heights_.size(); ++j) {
        if (heights_[j] < heights_[j - 1]) {
            throw std::invalid_argument("column heights must be weakly increasing: " + to_string());
        }
    }
    size_ = std::accumulate(heights_.begin(), heights_.end(), 0);
}

FerrersDiagram FerrersDiagram::full(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("board dimensions must be positive");
    return FerrersDiagram(std::vector<int>(static_cast<std::size_t>(m), n));
}

std::vector<Cell> FerrersDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int j = 1; j <= cols(); ++j) {
        for (int i = 1; i <= height(j); ++i) out.push_back({i, j});
    }
    return out;
}

FerrersDiagram FerrersDiagram::drop_last_column() const {
    if (cols() < 2) throw std::invalid_argument("cannot drop the only column");
    return FerrersDiagram(std::vector<int>(heights_.begin(), heights_.end() - 1));
}

std::string FerrersDiagram::to_string() const {
    std::string s = "[";
    for (std::size_t j = 0; j < heights_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(heights_[j]);
    }
    return s + "]";
}

FerrersDiagram parse_diagram(std::string_view text) {
    std::string body;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
    }
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in diagram: " + std::string(text));
        body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) throw std::invalid_argument("empty diagram");
    std::vector<int> heights;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        std::string_view tok(body.data() + pos, comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("bad column height '" + std::string(tok) + "' in " + std::string(text));
        }
        heights.push_back(v);
        pos = comma + 1;
    }
    return FerrersDiagram(std::move(heights));
}

long DiagonalProfile::excess_sum(int t, int last) const {
    long s = 0;
    for (int r = 1; r <= std::min(last, diagonals()); ++r) s += std::max(0, at(r) - t);
    return s;
}

long DiagonalProfile::capped_sum(int t) const {
    long s = 0;
    for (int c : counts) s += std::min(t, c);
    return s;
}

DiagonalProfile diagonal_profile(const FerrersDiagram& f) {
    const int n = f.rows(), m = f.cols();
    DiagonalProfile p{std::vector<int>(static_cast<std::size_t>(m + n - 1), 0)};
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= f.height(j); ++i) {
            // j - i = m - r
            p.counts[static_cast<std::size_t>(m - j + i - 1)]++;
        }
    }
    return p;
}

std::vector<Cell> diagonal_cells(const FerrersDiagram& f, int r) {
    const int m = f.cols();
    std::vector<Cell> out;
    for (int i = 1; i <= f.rows(); ++i) {
        int j = m - r + i;
        if (f.contains(i, j)) out.push_back({i, j});
    }
    return out;
}

FerrersDiagram transpose(const FerrersDiagram& f) {
    const int n = f.rows();
    // column j' of T(F) collects row n+1-j' of F, whose length is #{j : c_j >= n+1-j'}
    std::vector<int> heights(static_cast<std::size_t>(n));
    for (int jp = 1; jp <= n; ++jp) {
        int row = n + 1 - jp;
        heights[static_cast<std::size_t>(jp - 1)] =
            static_cast<int>(std::count_if(f.heights().begin(), f.heights().end(), [&](int c) { return c >= row; }));
    }
    return FerrersDiagram(std::move(heights));
}

std::size_t diagram_count(int n, int m) {
    // C(m+n-2, n-1) by the multiplicative formula, exact at every step
    std::size_t k = static_cast<std::size_t>(n - 1), total = static_cast<std::size_t>(m + n - 2);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (total - k + i) / i;
    return r;
}

namespace {

void extend(std::vector<int>& h, int n, int m, const std::function<void(const FerrersDiagram&)>& visit) {
    const int j = static_cast<int>(h.size());
    if (j == m - 1) {
        h.push_back(n);
        visit(FerrersDiagram(h));
        h.pop_back();
        return;
    }
    const int lo = h.empty() ? 1 : h.back();
    for (int c = lo; c <= n; ++c) {
        h.push_back(c);
        extend(h, n, m, visit);
        h.pop_back();
    }
}

}  // namespace

void for_each_diagram(int n, int m, const std::function<void(const FerrersDiagram&)>& visit) {
    if (n < 1 || m < 1) throw std::invalid_argument("board dimensions must be positive");
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(m));
    extend(h, n, m, visit);
}

std::vector<FerrersDiagram> enumerate_diagrams(int n, int m) {
    std::vector<FerrersDiagram> out;
    out.reserve(diagram_count(n, m));
    for_each_diagram(n, m, [&](const FerrersDiagram& f) { out.push_back(f); });
    return out;
}

std::string LatticePath::to_string() const {
    std::string s;
    for (Step st : steps) s += static_cast<char>(st);
    return s;
}

LatticePath parse_path(std::string_view text) {
    LatticePath p;
    for (char ch : text) {
        if (ch == 'R' || ch == 'r') p.steps.push_back(Step::Right);
        else if (ch == 'D' || ch == 'd') p.steps.push_back(Step::Down);
        else throw std::invalid_argument("path steps must be R or D: " + std::string(text));
    }
    return p;
}

LatticePath to_path(const FerrersDiagram& f) {
    LatticePath p;
    p.steps.assign(static_cast<std::size_t>(f.height(1) - 1), Step::Down);
    for (int j = 1; j < f.cols(); ++j) {
        p.steps.push_back(Step::Right);
        p.steps.insert(p.steps.end(), static_cast<std::size_t>(f.height(j + 1) - f.height(j)), Step::Down);
    }
    return p;
}

FerrersDiagram from_path(const LatticePath& p, int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("board dimensions must be positive");
    const auto rights = std::count(p.steps.begin(), p.steps.end(), Step::Right);
    const auto downs = static_cast<long>(p.steps.size()) - rights;
    if (rights != m - 1 || downs != n - 1) {
        throw std::invalid_argument("path " + p.to_string() + " does not have " + std::to_string(m - 1) + " R and " +
                                    std::to_string(n - 1) + " D steps");
    }
    std::vector<int> heights;
    int h = 1;
    for (Step st : p.steps) {
        if (st == Step::Down) {
            ++h;
        } else {
            heights.push_back(h);
        }
    }
    heights.push_back(h);
    return FerrersDiagram(std::move(heights));
}

bool is_generalized_dyck(const LatticePath& p) {
    int balance = 0;
    for (Step st : p.steps) {
        balance += st == Step::Right ? 1 : -1;
        if (balance < 0) return false;
    }
    return true;
}

}  // namespace ferrook
