#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spincactus/crystal.hpp"
#include "spincactus/decomp.hpp"
#include "spincactus/shapes.hpp"
#include "spincactus/weights.hpp"

namespace spincactus {

enum class TripleType { type0 = 0, type1 = 1, type2 = 2 };

inline std::string to_string(TripleType t) {
    switch (t) {
        case TripleType::type0: return "Type0";
        case TripleType::type1: return "Type1";
        case TripleType::type2: return "Type2";
    }
    throw std::logic_error("to_string(TripleType): bad value");
}

/// The data the generator action at one position depends on: the prefix sum
/// gamma before the position, and the two spin weights mu_a (position i) and
/// mu_b (position i+1).  Admissibility means gamma, gamma + mu_a and
/// gamma + mu_a + mu_b are all dominant.
struct AdmissibleTriple {
    Weight gamma;
    Weight mu_a;
    Weight mu_b;

    AdmissibleTriple() = default;

    AdmissibleTriple(Weight g, Weight a, Weight b)
        : gamma(std::move(g)), mu_a(std::move(a)), mu_b(std::move(b)) {
        if (gamma.n != mu_a.n || gamma.n != mu_b.n)
            throw std::invalid_argument("AdmissibleTriple: rank mismatch");
        if (!is_spin_weight(mu_a) || !is_spin_weight(mu_b))
            throw std::invalid_argument("AdmissibleTriple: mu_a and mu_b must be spin weights");
        if (!is_dominant(gamma) || !is_dominant(gamma + mu_a) ||
            !is_dominant(gamma + mu_a + mu_b))
            throw std::invalid_argument("AdmissibleTriple: prefix sums must stay dominant");
    }

    int rank() const { return gamma.n; }
};

/// A maximal run of coordinates where mu_a and mu_b disagree in sign and
/// gamma is constant.  Within such a run the minus coordinates of mu_b all
/// precede its plus coordinates; mid marks the boundary and is absent when
/// one side is empty (a degenerate interval).
struct FreeInterval {
    int min = 0;
    int max = 0;
    std::optional<int> mid;
    int neg_size = 0;  // coordinates of the interval where mu_b is -1/2
    int pos_size = 0;  // where mu_b is +1/2

    bool degenerate() const { return neg_size == 0 || pos_size == 0; }
    bool contains(int j) const { return min <= j && j <= max; }

    friend bool operator==(const FreeInterval&, const FreeInterval&) = default;
};

inline std::vector<FreeInterval> free_intervals(const AdmissibleTriple& tr) {
    const int n = tr.rank();
    auto free_at = [&](int j) { return tr.mu_a.at2(j) * tr.mu_b.at2(j) < 0; };
    std::vector<FreeInterval> out;
    int j = 1;
    while (j <= n) {
        if (!free_at(j)) {
            ++j;
            continue;
        }
        int start = j;
        while (j + 1 <= n && free_at(j + 1) && tr.gamma.at2(j + 1) == tr.gamma.at2(j)) ++j;
        FreeInterval iv;
        iv.min = start;
        iv.max = j;
        int last_neg = 0;
        for (int k = start; k <= j; ++k) {
            if (tr.mu_b.at2(k) < 0) {
                iv.neg_size += 1;
                if (last_neg != 0 && k != last_neg + 1)
                    throw std::logic_error("free_intervals: minus run of mu_b is not contiguous");
                if (iv.pos_size > 0)
                    throw std::logic_error("free_intervals: plus of mu_b precedes a minus");
                last_neg = k;
            } else {
                iv.pos_size += 1;
            }
        }
        if (iv.neg_size > 0 && iv.pos_size > 0) iv.mid = iv.min + iv.neg_size - 1;
        out.push_back(iv);
        ++j;
    }
    return out;
}

/// The weight surgery that moves, in each non-degenerate free interval, the
/// plus block of mu_b in front of its minus block (and complements mu_a so
/// the sum is conserved).  Returns (mu_a*, mu_b*).
inline std::pair<Weight, Weight> star(const AdmissibleTriple& tr) {
    Weight a = tr.mu_a, b = tr.mu_b;
    for (const FreeInterval& iv : free_intervals(tr)) {
        if (iv.degenerate()) continue;
        for (int k = 0; k < iv.pos_size; ++k) {
            b.doubled[iv.min - 1 + k] = 1;
            a.doubled[iv.min - 1 + k] = -1;
        }
        for (int k = 0; k < iv.neg_size; ++k) {
            b.doubled[iv.min - 1 + iv.pos_size + k] = -1;
            a.doubled[iv.min - 1 + iv.pos_size + k] = 1;
        }
    }
    return {std::move(a), std::move(b)};
}

/// Type 0: gamma + mu_b* is still dominant, so the starred pair already
/// swaps.  Otherwise the failure is at the fork node, and the triple is
/// type 1 or 2 according to whether n-1 and n sit in different intervals.
inline TripleType classify(const AdmissibleTriple& tr) {
    auto [a_star, b_star] = star(tr);
    const int n = tr.rank();
    if (coroot_pairing(tr.gamma + b_star, n) >= 0) return TripleType::type0;
    auto ivs = free_intervals(tr);
    const FreeInterval* at_n = nullptr;
    const FreeInterval* at_n1 = nullptr;
    for (const FreeInterval& iv : ivs) {
        if (iv.contains(n)) at_n = &iv;
        if (iv.contains(n - 1)) at_n1 = &iv;
    }
    if (!at_n || !at_n1)
        throw std::logic_error("classify: fork coordinates escaped every free interval");
    return (at_n == at_n1) ? TripleType::type2 : TripleType::type1;
}

/// Type-1 correction: starting from the starred pair, flip coordinates n and
/// n-a of mu_b* from minus to plus (and of mu_a* the other way), where a is
/// the minus count of the interval containing n-1.
inline std::pair<Weight, Weight> diamond(const AdmissibleTriple& tr) {
    if (classify(tr) != TripleType::type1)
        throw std::invalid_argument("diamond: triple is not of type 1");
    auto [a_star, b_star] = star(tr);
    const int n = tr.rank();
    int a = 0;
    for (const FreeInterval& iv : free_intervals(tr))
        if (iv.contains(n - 1)) a = iv.neg_size;
    if (a <= 0) throw std::logic_error("diamond: interval at n-1 has no minus part");
    for (int pos : {n, n - a}) {
        if (b_star.at2(pos) != -1 || a_star.at2(pos) != 1)
            throw std::logic_error("diamond: unexpected signs at the flip coordinates");
        b_star.doubled[pos - 1] = 1;
        a_star.doubled[pos - 1] = -1;
    }
    if (!is_dominant(tr.gamma + b_star))
        throw std::logic_error("diamond: corrected weight failed dominance");
    return {std::move(a_star), std::move(b_star)};
}

/// Type-2 correction: the last interval holds both n-1 and n; with a minus
/// and b plus coordinates there, the last a+b coordinates of mu_b* become
/// (+,...,+,s) with s = + iff a is even, and mu_a* is complemented there.
inline std::pair<Weight, Weight> double_diamond(const AdmissibleTriple& tr) {
    if (classify(tr) != TripleType::type2)
        throw std::invalid_argument("double_diamond: triple is not of type 2");
    auto [a_star, b_star] = star(tr);
    const int n = tr.rank();
    int a = 0, b = 0;
    for (const FreeInterval& iv : free_intervals(tr))
        if (iv.contains(n)) {
            a = iv.neg_size;
            b = iv.pos_size;
        }
    if (a < 2 || b > 1) throw std::logic_error("double_diamond: last interval has the wrong split");
    for (int pos = n - (a + b) + 1; pos <= n; ++pos) {
        int sign = (pos < n || a % 2 == 0) ? 1 : -1;
        b_star.doubled[pos - 1] = sign;
        a_star.doubled[pos - 1] = -sign;
    }
    if (!is_dominant(tr.gamma + b_star))
        throw std::logic_error("double_diamond: corrected weight failed dominance");
    return {std::move(a_star), std::move(b_star)};
}

namespace detail {
inline AdmissibleTriple triple_at(const WeightSequence& seq, int i) {
    if (i < 1 || i >= seq.size())
        throw std::out_of_range("generator index out of range for the sequence");
    return AdmissibleTriple(seq.prefix_sum(i - 1), seq.mus[i - 1], seq.mus[i]);
}
}  // namespace detail

/// The Bender-Knuth generator on dominant paths: positions (i, i+1) are
/// replaced by the transformed pair (new position i gets the corrected mu_b,
/// position i+1 the corrected mu_a), chosen by the triple's type.  The
/// result is again a dominant path with the same prefix sums away from i.
inline WeightSequence tau_path(const WeightSequence& seq, int i) {
    if (!is_dominant_path(seq))
        throw std::invalid_argument("tau_path: sequence is not a dominant path");
    AdmissibleTriple tr = detail::triple_at(seq, i);
    std::pair<Weight, Weight> moved;
    switch (classify(tr)) {
        case TripleType::type0: moved = star(tr); break;
        case TripleType::type1: moved = diamond(tr); break;
        case TripleType::type2: moved = double_diamond(tr); break;
    }
    WeightSequence out = seq;
    out.mus[i - 1] = moved.second;
    out.mus[i] = moved.first;
    if (!is_dominant_path(out)) throw std::logic_error("tau_path: output left the dominant set");
    return out;
}

/// Independent crystal-theoretic route to the same generator: raise the
/// spinor element at position i+1 to its highest-weight element, replay the
/// recorded index sequence as lowering operators on the first i factors, and
/// read the new pair off the last factor's weight.  Any raising path gives
/// the same answer; `pick` overrides the default greedy smallest-index one.
inline WeightSequence tau_path_crystal(
    const WeightSequence& seq, int i,
    const std::function<std::size_t(const std::vector<int>&)>& pick = {}) {
    if (!is_dominant_path(seq))
        throw std::invalid_argument("tau_path_crystal: sequence is not a dominant path");
    if (i < 1 || i >= seq.size())
        throw std::out_of_range("tau_path_crystal: generator index out of range");
    WeightSequence prefix(seq.n, std::vector<Weight>(seq.mus.begin(), seq.mus.begin() + i));
    TensorElement t = path_to_tensor(prefix);
    const Weight& mu_a = seq.mus[i - 1];
    const Weight& mu_b = seq.mus[i];
    RaiseResult raised = raise_to_highest(SpinorElement::of_weight(mu_b), pick);
    auto lowered = apply_lowering_sequence(t, raised.indices);
    if (!lowered)
        throw std::logic_error(
            "tau_path_crystal: lowering vanished although the raising path exists; "
            "this contradicts the crystal theory the library relies on");
    // When gamma + mu_b is dominant the whole lowering must stay off the
    // i-th factor, so the pair comes back as a plain swap.
    if (is_dominant(seq.prefix_sum(i - 1) + mu_b) &&
        lowered->factors[i - 1] != t.factors[i - 1])
        throw std::logic_error("tau_path_crystal: lowering touched the final factor unexpectedly");
    Weight mu_b_new = lowered->factors[i - 1].weight();
    Weight mu_a_new = mu_a + mu_b - mu_b_new;
    WeightSequence out = seq;
    out.mus[i - 1] = mu_a_new;
    out.mus[i] = mu_b_new;
    if (!is_dominant_path(out))
        throw std::logic_error("tau_path_crystal: output left the dominant set");
    return out;
}

// ---------------------------------------------------------------------------
// Tableau-level action.

namespace detail {

/// Per-row analysis of the cells holding i or i+1.  Their columns form one
/// contiguous band per row; paired low cells (an i with an i+1 directly
/// underneath) are a prefix of the i-run and paired high cells (an i+1 with
/// an i directly above) a suffix of the i+1-run.
struct BandRow {
    int row = 0;         // 0-based row of the tableau
    int begin = 0;       // 0-based first column of the band
    int paired_low = 0;  // a
    int free_low = 0;    // b
    int free_high = 0;   // c
    int paired_high = 0; // d

    int size() const { return paired_low + free_low + free_high + paired_high; }
    int free_cells() const { return free_low + free_high; }
};

inline std::vector<BandRow> band_rows(const std::vector<std::vector<int>>& rows, int i) {
    std::vector<BandRow> out;
    for (std::size_t rrow = 0; rrow < rows.size(); ++rrow) {
        const auto& row = rows[rrow];
        BandRow br;
        br.row = static_cast<int>(rrow);
        int c = 0;
        while (c < static_cast<int>(row.size()) && row[c] < i) ++c;
        br.begin = c;
        int lows = 0, highs = 0;
        while (c < static_cast<int>(row.size()) && row[c] == i) ++lows, ++c;
        while (c < static_cast<int>(row.size()) && row[c] == i + 1) ++highs, ++c;
        if (lows + highs == 0) continue;
        auto below = [&](int col) -> int {
            if (rrow + 1 < rows.size() && col < static_cast<int>(rows[rrow + 1].size()))
                return rows[rrow + 1][col];
            return 0;
        };
        auto above = [&](int col) -> int {
            if (rrow > 0 && col < static_cast<int>(rows[rrow - 1].size())) return rows[rrow - 1][col];
            return 0;
        };
        for (int k = 0; k < lows; ++k)
            if (below(br.begin + k) == i + 1) br.paired_low += 1;
        br.free_low = lows - br.paired_low;
        for (int k = 0; k < highs; ++k)
            if (above(br.begin + lows + k) == i) br.paired_high += 1;
        br.free_high = highs - br.paired_high;
        out.push_back(br);
    }
    return out;
}

/// Rewrite one band row to hold `low` copies of i followed by `high` copies
/// of i+1 (paired cells keep their values by construction).
inline void rewrite_band_row(std::vector<std::vector<int>>& rows, const BandRow& br, int i,
                             int low, int high) {
    for (int k = 0; k < low; ++k) rows[br.row][br.begin + k] = i;
    for (int k = 0; k < high; ++k) rows[br.row][br.begin + low + k] = i + 1;
}

}  // namespace detail

/// The classical Bender-Knuth involution on a plain semi-standard fill: in
/// every row the free i-cells and free (i+1)-cells trade counts.
inline Tableau bender_knuth(const Tableau& x, int i) {
    if (i < 1) throw std::invalid_argument("bender_knuth: index must be positive");
    std::vector<std::vector<int>> rows = x.rows;
    for (const detail::BandRow& br : detail::band_rows(rows, i))
        detail::rewrite_band_row(rows, br, i,
                                 br.paired_low + br.free_high,
                                 br.free_low + br.paired_high);
    return Tableau(std::move(rows));
}

namespace detail {

/// Shape of the entries <= k of a fill, as column lengths.
inline std::vector<int> columns_up_to(const std::vector<std::vector<int>>& rows, int k) {
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<int> cols(ncols, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] <= k) cols[c] += 1;
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    return cols;
}

inline bool first_two_cols_at_most(const std::vector<int>& cols, int bound) {
    int c1 = cols.size() > 0 ? cols[0] : 0;
    int c2 = cols.size() > 1 ? cols[1] : 0;
    return c1 + c2 <= bound;
}

}  // namespace detail

/// Type of a short tableau at generator index i, read off the tableau alone:
/// type 0 when the plain Bender-Knuth image is still short at step i, else
/// type 1/2 by the layout of the last two rows of the skew band between
/// shapes i-1 and i+1.
inline TripleType tableau_type(const Sssyt& x, int i) {
    if (i < 1 || i >= x.N) throw std::out_of_range("tableau_type: generator index out of range");
    std::vector<std::vector<int>> rows = x.rows();
    Tableau flipped = bender_knuth(Tableau(rows), i);
    if (detail::first_two_cols_at_most(detail::columns_up_to(flipped.rows, i), i))
        return TripleType::type0;
    auto band = detail::band_rows(rows, i);
    if (band.empty()) throw std::logic_error("tableau_type: non-short image with an empty band");
    const detail::BandRow& last = band.back();
    bool first_two_full = x.shape_at(i + 1).first_two_columns() == i + 1;
    bool single_free_high = last.size() == 1 && last.free_high == 1;
    bool penult_has_free_high = band.size() >= 2 && band[band.size() - 2].free_high >= 1;
    if (single_free_high && penult_has_free_high && first_two_full) return TripleType::type1;
    return TripleType::type2;
}

/// The cactus generator on short tableaux.  Type 0 is the plain Bender-Knuth
/// involution; the other types patch the last one or two rows of the skew
/// band so the image stays short.
inline Sssyt tau_tableau(const Sssyt& x, int i) {
    if (i < 1 || i >= x.N) throw std::out_of_range("tau_tableau: generator index out of range");
    std::vector<std::vector<int>> rows = x.rows();
    TripleType type = tableau_type(x, i);
    if (type == TripleType::type0) {
        Tableau flipped = bender_knuth(Tableau(std::move(rows)), i);
        return Sssyt::from_rows(x.n, x.N, flipped.rows);
    }
    auto band = detail::band_rows(rows, i);
    if (type == TripleType::type1) {
        // Keep the last band row; in the penultimate one relabel the first
        // free i+1 cell to i and then flip; ordinary flips elsewhere.
        for (std::size_t k = 0; k + 1 < band.size(); ++k) {
            const detail::BandRow& br = band[k];
            if (k + 2 == band.size()) {
                if (br.free_high < 1)
                    throw std::logic_error("tau_tableau: penultimate row lost its free high cell");
                int b = br.free_low + 1, c = br.free_high - 1;
                detail::rewrite_band_row(rows, br, i, br.paired_low + c, b + br.paired_high);
            } else {
                detail::rewrite_band_row(rows, br, i, br.paired_low + br.free_high,
                                         br.free_low + br.paired_high);
            }
        }
    } else {
        // Ordinary flips except in the last band row, whose first (always
        // free) cell toggles exactly when the row has an odd number of free
        // cells.
        for (std::size_t k = 0; k + 1 < band.size(); ++k) {
            const detail::BandRow& br = band[k];
            detail::rewrite_band_row(rows, br, i, br.paired_low + br.free_high,
                                     br.free_low + br.paired_high);
        }
        const detail::BandRow& last = band.back();
        if (last.paired_low != 0)
            throw std::logic_error("tau_tableau: first cell of the last band row is not free");
        if (last.free_cells() % 2 == 1) {
            int& cell = rows[last.row][last.begin];
            cell = (cell == i) ? i + 1 : i;
        }
    }
    return Sssyt::from_rows(x.n, x.N, rows);
}

/// Closure of x under the chosen generators, breadth-first, sorted output.
inline std::vector<Sssyt> orbit(const Sssyt& x, const std::vector<int>& gens) {
    for (int i : gens)
        if (i < 1 || i >= x.N) throw std::out_of_range("orbit: generator index out of range");
    std::set<Sssyt> seen{x};
    std::deque<Sssyt> queue{x};
    while (!queue.empty()) {
        Sssyt cur = std::move(queue.front());
        queue.pop_front();
        for (int i : gens) {
            Sssyt next = tau_tableau(cur, i);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return std::vector<Sssyt>(seen.begin(), seen.end());
}

}  // namespace spincactus
