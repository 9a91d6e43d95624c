#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincactus/config.hpp"
#include "spincactus/decomp.hpp"
#include "spincactus/weights.hpp"

namespace spincactus {

/// Two-sided row diagram: row i holds r_i cells right of a vertical axis and
/// l_i cells left of it, rows numbered top to bottom.  Regularity demands
/// r_i + l_i = N, weakly decreasing r, and r_{n-1} >= l_n.
struct CellDiagram {
    int n = 0;
    int N = 0;
    std::vector<int> l, r;

    CellDiagram() = default;

    CellDiagram(int rank, int length, std::vector<int> left, std::vector<int> right)
        : n(rank), N(length), l(std::move(left)), r(std::move(right)) {
        validate();
    }

    void validate() const {
        if (n < 2) throw std::invalid_argument("CellDiagram: rank must be at least 2");
        if (N < 0) throw std::invalid_argument("CellDiagram: negative length");
        if (static_cast<int>(l.size()) != n || static_cast<int>(r.size()) != n)
            throw std::invalid_argument("CellDiagram: row count does not match rank");
        for (int i = 0; i < n; ++i) {
            if (l[i] < 0 || r[i] < 0) throw std::invalid_argument("CellDiagram: negative cell count");
            if (l[i] + r[i] != N)
                throw std::invalid_argument("CellDiagram: row does not have N cells");
        }
        for (int i = 0; i + 1 < n; ++i)
            if (r[i] < r[i + 1])
                throw std::invalid_argument("CellDiagram: right side must be weakly decreasing");
        if (r[n - 2] < l[n - 1])
            throw std::invalid_argument("CellDiagram: last-row constraint r_{n-1} >= l_n violated");
    }

    /// Componentwise containment in both l and r.
    bool contains(const CellDiagram& other) const {
        if (n != other.n) return false;
        for (int i = 0; i < n; ++i)
            if (l[i] < other.l[i] || r[i] < other.r[i]) return false;
        return true;
    }

    friend bool operator==(const CellDiagram&, const CellDiagram&) = default;
};

/// Nested chain of regular diagrams, one per step; step i has row sum i.
struct CellTableau {
    std::vector<CellDiagram> steps;

    CellTableau() = default;

    explicit CellTableau(std::vector<CellDiagram> chain) : steps(std::move(chain)) {
        if (steps.empty()) throw std::invalid_argument("CellTableau: need at least one step");
        int n = steps.front().n;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            steps[i].validate();
            if (steps[i].n != n) throw std::invalid_argument("CellTableau: rank mismatch");
            if (steps[i].N != static_cast<int>(i) + 1)
                throw std::invalid_argument("CellTableau: step lengths must be 1..N");
            if (i > 0 && !steps[i].contains(steps[i - 1]))
                throw std::invalid_argument("CellTableau: steps must be nested");
        }
    }

    int n() const { return steps.front().n; }
    int N() const { return static_cast<int>(steps.size()); }

    friend bool operator==(const CellTableau&, const CellTableau&) = default;
};

/// Young diagram stored by column lengths (weakly decreasing, trailing zero
/// columns trimmed), with at most n columns and first two columns totalling
/// at most N.
struct ShortYoungDiagram {
    int n = 0;
    int N = 0;
    std::vector<int> cols;

    ShortYoungDiagram() = default;

    ShortYoungDiagram(int rank, int height, std::vector<int> columns)
        : n(rank), N(height), cols(std::move(columns)) {
        while (!cols.empty() && cols.back() == 0) cols.pop_back();
        validate();
    }

    void validate() const {
        if (n < 2) throw std::invalid_argument("ShortYoungDiagram: rank must be at least 2");
        if (N < 0) throw std::invalid_argument("ShortYoungDiagram: negative height bound");
        if (static_cast<int>(cols.size()) > n)
            throw std::invalid_argument("ShortYoungDiagram: more than n columns");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] <= 0) throw std::invalid_argument("ShortYoungDiagram: column lengths must be positive");
            if (j > 0 && cols[j] > cols[j - 1])
                throw std::invalid_argument("ShortYoungDiagram: columns must be weakly decreasing");
        }
        if (first_two_columns() > N)
            throw std::invalid_argument("ShortYoungDiagram: first two columns exceed the height bound");
    }

    int col(int j) const {  // 1-based, zero beyond the stored columns
        return (j >= 1 && j <= static_cast<int>(cols.size())) ? cols[j - 1] : 0;
    }

    int first_two_columns() const { return col(1) + col(2); }

    int cell_count() const { return std::accumulate(cols.begin(), cols.end(), 0); }

    /// Row lengths (the conjugate partition), top row first.
    std::vector<int> row_lengths() const {
        std::vector<int> rows;
        for (int rrow = 1; rrow <= col(1); ++rrow) {
            int len = 0;
            while (len < static_cast<int>(cols.size()) && cols[len] >= rrow) ++len;
            rows.push_back(len);
        }
        return rows;
    }

    bool contains(const ShortYoungDiagram& other) const {
        int m = std::max(cols.size(), other.cols.size());
        for (int j = 1; j <= m; ++j)
            if (col(j) < other.col(j)) return false;
        return true;
    }

    /// At most one new cell per column.
    bool grows_by_horizontal_strip(const ShortYoungDiagram& next) const {
        if (!next.contains(*this)) return false;
        int m = std::max(cols.size(), next.cols.size());
        for (int j = 1; j <= m; ++j)
            if (next.col(j) - col(j) > 1) return false;
        return true;
    }

    friend bool operator==(const ShortYoungDiagram& a, const ShortYoungDiagram& b) {
        return a.n == b.n && a.N == b.N && a.cols == b.cols;
    }
};

/// Plain semi-standard Young tableau fill: rows of weakly increasing entries,
/// columns strictly increasing.  Used for the generic Bender-Knuth move,
/// which does not care about shortness.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> fill) : rows(std::move(fill)) { validate(); }

    void validate() const {
        for (std::size_t rrow = 0; rrow < rows.size(); ++rrow) {
            if (rows[rrow].empty()) throw std::invalid_argument("Tableau: empty row");
            if (rrow > 0 && rows[rrow].size() > rows[rrow - 1].size())
                throw std::invalid_argument("Tableau: row lengths must weakly decrease");
            for (std::size_t c = 0; c < rows[rrow].size(); ++c) {
                if (rows[rrow][c] < 1) throw std::invalid_argument("Tableau: entries must be positive");
                if (c > 0 && rows[rrow][c] < rows[rrow][c - 1])
                    throw std::invalid_argument("Tableau: rows must weakly increase");
                if (rrow > 0 && rows[rrow][c] <= rows[rrow - 1][c])
                    throw std::invalid_argument("Tableau: columns must strictly increase");
            }
        }
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Short semi-standard Young tableau: nested chain of short diagrams with
/// horizontal-strip steps.  The equivalent fill labels a cell i iff it is
/// added at step i.
struct Sssyt {
    int n = 0;
    int N = 0;
    std::vector<ShortYoungDiagram> steps;  // steps[k-1] is the shape after k steps

    Sssyt() = default;

    Sssyt(int rank, int length, std::vector<ShortYoungDiagram> chain)
        : n(rank), N(length), steps(std::move(chain)) {
        if (static_cast<int>(steps.size()) != N)
            throw std::invalid_argument("Sssyt: need one shape per step");
        if (N < 1) throw std::invalid_argument("Sssyt: need N >= 1");
        ShortYoungDiagram prev(n, 0, {});
        for (int k = 1; k <= N; ++k) {
            const ShortYoungDiagram& cur = steps[k - 1];
            if (cur.n != n) throw std::invalid_argument("Sssyt: rank mismatch in chain");
            if (cur.N != k) throw std::invalid_argument("Sssyt: step height bounds must be 1..N");
            cur.validate();
            if (!prev.grows_by_horizontal_strip(cur))
                throw std::invalid_argument("Sssyt: steps must grow by horizontal strips");
            prev = cur;
        }
    }

    const ShortYoungDiagram& shape() const { return steps.back(); }

    /// Shape after k steps; k = 0 gives the empty diagram.
    ShortYoungDiagram shape_at(int k) const {
        if (k == 0) return ShortYoungDiagram(n, 0, {});
        return steps[k - 1];
    }

    /// Row-wise entry fill: cell in column c of row r holds the step at which
    /// column c reached length r.
    std::vector<std::vector<int>> rows() const {
        const ShortYoungDiagram& fin = shape();
        std::vector<std::vector<int>> out;
        for (int rrow = 1; rrow <= fin.col(1); ++rrow) {
            std::vector<int> line;
            for (int c = 1; c <= static_cast<int>(fin.cols.size()) && fin.col(c) >= rrow; ++c) {
                int step = 0;
                for (int k = 1; k <= N; ++k)
                    if (steps[k - 1].col(c) >= rrow) {
                        step = k;
                        break;
                    }
                line.push_back(step);
            }
            out.push_back(std::move(line));
        }
        return out;
    }

    Tableau to_tableau() const { return Tableau(rows()); }

    /// Rebuild the chain from a fill.  Validates semistandardness, entry
    /// range, and every per-step shortness bound.
    static Sssyt from_rows(int rank, int length, const std::vector<std::vector<int>>& fill) {
        Tableau t(fill);  // semistandardness
        int ncols = fill.empty() ? 0 : static_cast<int>(fill.front().size());
        if (ncols > rank) throw std::invalid_argument("Sssyt: fill has more than n columns");
        for (const auto& row : fill)
            for (int v : row)
                if (v > length) throw std::invalid_argument("Sssyt: entry exceeds N");
        std::vector<ShortYoungDiagram> chain;
        for (int k = 1; k <= length; ++k) {
            std::vector<int> cols(ncols, 0);
            for (const auto& row : fill)
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (row[c] <= k) cols[c] += 1;
            chain.emplace_back(rank, k, std::move(cols));  // validates the shortness bound
        }
        return Sssyt(rank, length, std::move(chain));
    }

    friend bool operator==(const Sssyt&, const Sssyt&) = default;

    friend bool operator<(const Sssyt& a, const Sssyt& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.N != b.N) return a.N < b.N;
        return a.rows() < b.rows();
    }
};

// ---------------------------------------------------------------------------
// Bijections between weights, cell diagrams, short diagrams, and chains.

/// The diagram with r_i = N/2 + lambda_i, l_i = N/2 - lambda_i.  Requires
/// lambda to be reachable in N steps so both sides are nonnegative integers.
inline CellDiagram cell_diagram_from_weight(const Weight& lambda, int N) {
    if (!is_reachable(lambda, N))
        throw std::invalid_argument("cell_diagram_from_weight: weight is not reachable in N steps");
    std::vector<int> l(lambda.n), r(lambda.n);
    for (int i = 0; i < lambda.n; ++i) {
        r[i] = (N + lambda.doubled[i]) / 2;
        l[i] = (N - lambda.doubled[i]) / 2;
    }
    return CellDiagram(lambda.n, N, std::move(l), std::move(r));
}

inline Weight weight_from_cell_diagram(const CellDiagram& d) {
    std::vector<int> doubled(d.n);
    for (int i = 0; i < d.n; ++i) doubled[i] = d.r[i] - d.l[i];
    return Weight(d.n, std::move(doubled));
}

/// Transpose read-off of a regular diagram: for even n the columns are
/// (l_n, ..., l_1); for odd n the first column is r_n instead.
inline ShortYoungDiagram short_diagram_from_cell_diagram(const CellDiagram& d) {
    d.validate();
    std::vector<int> cols(d.n);
    if (d.n % 2 == 0) {
        for (int j = 0; j < d.n; ++j) cols[j] = d.l[d.n - 1 - j];
    } else {
        cols[0] = d.r[d.n - 1];
        for (int j = 1; j < d.n; ++j) cols[j] = d.l[d.n - 1 - j];
    }
    return ShortYoungDiagram(d.n, d.N, std::move(cols));
}

inline CellDiagram cell_diagram_from_short_diagram(const ShortYoungDiagram& nu, int n, int N) {
    if (nu.n != n || nu.N != N)
        throw std::invalid_argument("cell_diagram_from_short_diagram: bounds mismatch");
    std::vector<int> l(n), r(n);
    if (n % 2 == 0) {
        for (int k = 1; k <= n; ++k) {
            l[k - 1] = nu.col(n + 1 - k);
            r[k - 1] = N - l[k - 1];
        }
    } else {
        for (int k = 1; k < n; ++k) {
            l[k - 1] = nu.col(n + 1 - k);
            r[k - 1] = N - l[k - 1];
        }
        r[n - 1] = nu.col(1);
        l[n - 1] = N - r[n - 1];
    }
    return CellDiagram(n, N, std::move(l), std::move(r));
}

/// Step i of the chain is the diagram of the i-th prefix sum.
inline CellTableau cell_tableau_from_path(const WeightSequence& seq) {
    if (!is_dominant_path(seq))
        throw std::invalid_argument("cell_tableau_from_path: sequence is not a dominant path");
    std::vector<CellDiagram> chain;
    Weight sum = Weight::zero(seq.n);
    for (int i = 1; i <= seq.size(); ++i) {
        sum = sum + seq.mus[i - 1];
        chain.push_back(cell_diagram_from_weight(sum, i));
    }
    return CellTableau(std::move(chain));
}

inline WeightSequence path_from_cell_tableau(const CellTableau& ct) {
    std::vector<Weight> mus;
    Weight prev = Weight::zero(ct.n());
    for (const CellDiagram& d : ct.steps) {
        Weight cur = weight_from_cell_diagram(d);
        mus.push_back(cur - prev);
        prev = cur;
    }
    return WeightSequence(ct.n(), std::move(mus));
}

inline Sssyt sssyt_from_cell_tableau(const CellTableau& ct) {
    std::vector<ShortYoungDiagram> chain;
    chain.reserve(ct.steps.size());
    for (const CellDiagram& d : ct.steps) chain.push_back(short_diagram_from_cell_diagram(d));
    return Sssyt(ct.n(), ct.N(), std::move(chain));
}

inline CellTableau cell_tableau_from_sssyt(const Sssyt& x) {
    std::vector<CellDiagram> chain;
    chain.reserve(x.steps.size());
    for (int k = 1; k <= x.N; ++k)
        chain.push_back(cell_diagram_from_short_diagram(x.steps[k - 1], x.n, k));
    return CellTableau(std::move(chain));
}

inline WeightSequence path_from_sssyt(const Sssyt& x) {
    return path_from_cell_tableau(cell_tableau_from_sssyt(x));
}

inline Sssyt sssyt_from_path(const WeightSequence& seq) {
    return sssyt_from_cell_tableau(cell_tableau_from_path(seq));
}

// ---------------------------------------------------------------------------
// Direct enumeration of short tableaux of a fixed shape.

namespace detail {
/// All sub-diagrams of `shape` obtained by removing a horizontal strip and
/// still valid with height bound N.
inline std::vector<ShortYoungDiagram> strip_predecessors(const ShortYoungDiagram& shape, int N) {
    std::vector<ShortYoungDiagram> out;
    int m = static_cast<int>(shape.cols.size());
    if (m == 0) {
        out.emplace_back(shape.n, N, std::vector<int>{});
        return out;
    }
    std::vector<int> cur(m, 0);
    // Each column shrinks by 0 or 1; enumerate all combinations that stay
    // weakly decreasing and short.
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        bool ok = true;
        for (int j = 0; j < m; ++j) {
            cur[j] = shape.cols[j] - ((mask >> j) & 1u);
            if (cur[j] < 0 || (j > 0 && cur[j] > cur[j - 1])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        int first2 = cur[0] + (m > 1 ? cur[1] : 0);
        if (first2 > N) continue;
        out.emplace_back(shape.n, N, cur);
    }
    return out;
}

inline void extend_sssyt(std::vector<ShortYoungDiagram>& suffix, const ShortYoungDiagram& shape,
                         int k, int n, int N, std::vector<Sssyt>& out) {
    if (k == 0) {
        if (shape.cell_count() != 0) return;
        std::vector<ShortYoungDiagram> chain(suffix.rbegin(), suffix.rend());
        out.emplace_back(n, N, std::move(chain));
        return;
    }
    for (const ShortYoungDiagram& prevshape : strip_predecessors(shape, k - 1)) {
        suffix.push_back(shape);
        ShortYoungDiagram fixed(n, k - 1, prevshape.cols);
        extend_sssyt(suffix, fixed, k - 1, n, N, out);
        suffix.pop_back();
    }
}
}  // namespace detail

/// Every short tableau of the given final shape, found by walking chains
/// backwards from the shape; output sorted canonically.  This is deliberately
/// independent of the weight-path enumeration so the two can cross-check.
inline std::vector<Sssyt> enumerate_sssyt(const ShortYoungDiagram& nu, int N, int n,
                                          int limit = 0) {
    if (nu.n != n || nu.N != N) throw std::invalid_argument("enumerate_sssyt: bounds mismatch");
    nu.validate();
    if (n * N > enumeration_limit(limit))
        throw std::invalid_argument("enumerate_sssyt: instance too large for enumeration");
    std::vector<Sssyt> out;
    std::vector<ShortYoungDiagram> suffix;
    detail::extend_sssyt(suffix, nu, N, n, N, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering.

namespace detail {
inline std::string cell_token(int value, int width) {
    std::string num = std::to_string(value);
    std::string pad(width > static_cast<int>(num.size()) ? width - num.size() : 0, ' ');
    return "[" + pad + num + "]";
}
}  // namespace detail

/// Monospaced drawing: each row shows its left cells, the axis '|', then its
/// right cells, with rows right-aligned against the axis.
inline std::string render(const CellDiagram& d) {
    d.validate();
    int max_l = *std::max_element(d.l.begin(), d.l.end());
    std::string out;
    for (int i = 0; i < d.n; ++i) {
        out.append(static_cast<std::size_t>(2 * (max_l - d.l[i])), ' ');
        for (int c = 0; c < d.l[i]; ++c) out += "[]";
        out += "|";
        for (int c = 0; c < d.r[i]; ++c) out += "[]";
        out += "\n";
    }
    return out;
}

/// Drawing of the final diagram with each cell numbered by the step at which
/// it appeared.  Left cells read outward-in toward the axis.
inline std::string render(const CellTableau& ct) {
    const CellDiagram& fin = ct.steps.back();
    int width = static_cast<int>(std::to_string(ct.N()).size());
    int token = width + 2;
    int max_l = *std::max_element(fin.l.begin(), fin.l.end());
    // left_step[i][p]: step at which row i gained its p-th left cell
    // (p counted from the axis outward, 1-based); same for the right side.
    auto step_of = [&](bool left, int row, int p) {
        for (int k = 1; k <= ct.N(); ++k) {
            int have = left ? ct.steps[k - 1].l[row] : ct.steps[k - 1].r[row];
            if (have >= p) return k;
        }
        throw std::logic_error("render: cell not found in chain");
    };
    std::string out;
    for (int i = 0; i < fin.n; ++i) {
        out.append(static_cast<std::size_t>(token * (max_l - fin.l[i])), ' ');
        for (int p = fin.l[i]; p >= 1; --p) out += detail::cell_token(step_of(true, i, p), width);
        out += "|";
        for (int p = 1; p <= fin.r[i]; ++p) out += detail::cell_token(step_of(false, i, p), width);
        out += "\n";
    }
    return out;
}

inline std::string render(const Sssyt& x) {
    int width = static_cast<int>(std::to_string(x.N).size());
    std::string out;
    for (const auto& row : x.rows()) {
        for (int v : row) out += detail::cell_token(v, width);
        out += "\n";
    }
    return out;
}

inline std::string render(const ShortYoungDiagram& nu) {
    std::string out;
    for (int len : nu.row_lengths()) {
        for (int c = 0; c < len; ++c) out += "[]";
        out += "\n";
    }
    return out;
}

}  // namespace spincactus
