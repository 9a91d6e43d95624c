#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spincactus/config.hpp"
#include "spincactus/weights.hpp"

namespace spincactus {

/// One basis vector of the rank-n spin crystal: a sign sequence of length n.
/// Stored as a bitmask; bit j-1 set means coordinate j carries '-'.
struct SpinorElement {
    int n = 0;
    std::uint32_t minus = 0;

    SpinorElement() = default;

    SpinorElement(int rank, std::uint32_t minus_mask) : n(rank), minus(minus_mask) {
        if (n < 2 || n > 32) throw std::invalid_argument("SpinorElement: rank must be in [2,32]");
        if (n < 32 && (minus >> n) != 0)
            throw std::invalid_argument("SpinorElement: mask has bits beyond the rank");
    }

    /// Parse a sign string like "+-++"; leftmost character is coordinate 1.
    static SpinorElement from_string(std::string_view s) {
        std::uint32_t mask = 0;
        int rank = static_cast<int>(s.size());
        for (int j = 1; j <= rank; ++j) {
            char c = s[j - 1];
            if (c == '-')
                mask |= std::uint32_t(1) << (j - 1);
            else if (c != '+')
                throw std::invalid_argument("SpinorElement: sign string must use only '+' and '-'");
        }
        return SpinorElement(rank, mask);
    }

    /// The unique element whose weight is the given spin weight.
    static SpinorElement of_weight(const Weight& mu) {
        if (!is_spin_weight(mu))
            throw std::invalid_argument("SpinorElement: weight is not a spin weight");
        std::uint32_t mask = 0;
        for (int j = 1; j <= mu.n; ++j)
            if (mu.at2(j) < 0) mask |= std::uint32_t(1) << (j - 1);
        return SpinorElement(mu.n, mask);
    }

    /// +1 or -1 at coordinate j (1-based).
    int sign(int j) const { return (minus >> (j - 1)) & 1u ? -1 : +1; }

    std::string to_string() const {
        std::string s(n, '+');
        for (int j = 1; j <= n; ++j)
            if (sign(j) < 0) s[j - 1] = '-';
        return s;
    }

    Weight weight() const {
        std::vector<int> d(n);
        for (int j = 1; j <= n; ++j) d[j - 1] = sign(j);
        return Weight(n, std::move(d));
    }

    friend bool operator==(const SpinorElement&, const SpinorElement&) = default;
    friend auto operator<=>(const SpinorElement&, const SpinorElement&) = default;
};

inline Weight spin_wt(const SpinorElement& b) { return b.weight(); }

namespace detail {
inline void check_spin_index(const SpinorElement& b, int j) {
    if (j < 1 || j > b.n) throw std::out_of_range("crystal operator: index out of range");
}
}  // namespace detail

/// Raising operator on the spin crystal.  For j < n it rewrites the sign
/// pattern (-,+) at positions (j, j+1) to (+,-); for j = n it rewrites
/// (-,-) at positions (n-1, n) to (+,+).  Absence of the pattern gives
/// nullopt, which models the ideal element 0.
inline std::optional<SpinorElement> spin_e(const SpinorElement& b, int j) {
    detail::check_spin_index(b, j);
    SpinorElement out = b;
    if (j < b.n) {
        if (b.sign(j) == -1 && b.sign(j + 1) == +1) {
            out.minus &= ~(std::uint32_t(1) << (j - 1));
            out.minus |= std::uint32_t(1) << j;
            return out;
        }
        return std::nullopt;
    }
    if (b.sign(b.n - 1) == -1 && b.sign(b.n) == -1) {
        out.minus &= ~(std::uint32_t(1) << (b.n - 2));
        out.minus &= ~(std::uint32_t(1) << (b.n - 1));
        return out;
    }
    return std::nullopt;
}

/// Lowering operator, inverse to spin_e where either is defined.
inline std::optional<SpinorElement> spin_f(const SpinorElement& b, int j) {
    detail::check_spin_index(b, j);
    SpinorElement out = b;
    if (j < b.n) {
        if (b.sign(j) == +1 && b.sign(j + 1) == -1) {
            out.minus |= std::uint32_t(1) << (j - 1);
            out.minus &= ~(std::uint32_t(1) << j);
            return out;
        }
        return std::nullopt;
    }
    if (b.sign(b.n - 1) == +1 && b.sign(b.n) == +1) {
        out.minus |= std::uint32_t(1) << (b.n - 2);
        out.minus |= std::uint32_t(1) << (b.n - 1);
        return out;
    }
    return std::nullopt;
}

/// epsilon_j on the spin crystal; the crystal is seminormal so the value is
/// the count of raising steps available, always 0 or 1.
inline int spin_eps(const SpinorElement& b, int j) {
    detail::check_spin_index(b, j);
    if (j < b.n) return (b.sign(j) == -1 && b.sign(j + 1) == +1) ? 1 : 0;
    return (b.sign(b.n - 1) == -1 && b.sign(b.n) == -1) ? 1 : 0;
}

inline int spin_phi(const SpinorElement& b, int j) {
    detail::check_spin_index(b, j);
    if (j < b.n) return (b.sign(j) == +1 && b.sign(j + 1) == -1) ? 1 : 0;
    return (b.sign(b.n - 1) == +1 && b.sign(b.n) == +1) ? 1 : 0;
}

/// A pure tensor of N spinor elements; factor 1 is the leftmost one.
struct TensorElement {
    std::vector<SpinorElement> factors;

    TensorElement() = default;

    explicit TensorElement(std::vector<SpinorElement> f) : factors(std::move(f)) {
        if (factors.empty()) throw std::invalid_argument("TensorElement: need at least one factor");
        for (const auto& b : factors)
            if (b.n != factors.front().n)
                throw std::invalid_argument("TensorElement: factors must share one rank");
    }

    int rank() const { return factors.front().n; }
    int size() const { return static_cast<int>(factors.size()); }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
    friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
};

inline Weight tensor_wt(const TensorElement& t) {
    Weight w = t.factors.front().weight();
    for (std::size_t k = 1; k < t.factors.size(); ++k) w = w + t.factors[k].weight();
    return w;
}

namespace detail {

/// <wt(b), alpha_j^vee> for a single spinor factor, without building a Weight.
inline int spin_wt_pairing(const SpinorElement& b, int j) {
    if (j < b.n) return (b.sign(j) - b.sign(j + 1)) / 2;
    return (b.sign(b.n - 1) + b.sign(b.n)) / 2;
}

struct EpsPhi {
    int eps, phi;
};

/// Statistics of the left-associated product of the first `count` factors,
/// folded with the two-factor rules
///   eps(a (x) b) = max(eps(a), eps(b) - wt_j(a))
///   phi(a (x) b) = max(phi(b), phi(a) + wt_j(b)).
inline EpsPhi tensor_stats_prefix(const TensorElement& t, int j, int count) {
    int eps = spin_eps(t.factors[0], j);
    int phi = spin_phi(t.factors[0], j);
    int wt_left = spin_wt_pairing(t.factors[0], j);
    for (int k = 1; k < count; ++k) {
        const SpinorElement& b = t.factors[k];
        int eb = spin_eps(b, j), pb = spin_phi(b, j), wb = spin_wt_pairing(b, j);
        eps = std::max(eps, eb - wt_left);
        phi = std::max(pb, phi + wb);
        wt_left += wb;
    }
    return {eps, phi};
}

/// Factor index (0-based) the raising operator acts on under the
/// left-associative signature rule: at each binary node e_j moves to the
/// right factor iff eps_j(right) > phi_j(left).  `strict` false gives the
/// lowering rule, where f_j moves right iff eps_j(right) >= phi_j(left).
inline int tensor_op_target(const TensorElement& t, int j, bool strict) {
    const int N = t.size();
    // phi_j of every left-associated prefix, one fold; the recursion then
    // picks the largest factor whose eps beats the prefix phi to its left.
    int target = 0;
    int phi = spin_phi(t.factors[0], j);
    for (int k = 1; k < N; ++k) {
        const SpinorElement& b = t.factors[k];
        int eps_right = spin_eps(b, j);
        if (strict ? eps_right > phi : eps_right >= phi) target = k;
        phi = std::max(spin_phi(b, j), phi + spin_wt_pairing(b, j));
    }
    return target;
}

inline int tensor_e_target(const TensorElement& t, int j) { return tensor_op_target(t, j, true); }

inline int tensor_f_target(const TensorElement& t, int j) { return tensor_op_target(t, j, false); }

}  // namespace detail

inline int tensor_eps(const TensorElement& t, int j) {
    detail::check_spin_index(t.factors.front(), j);
    return detail::tensor_stats_prefix(t, j, t.size()).eps;
}

inline int tensor_phi(const TensorElement& t, int j) {
    detail::check_spin_index(t.factors.front(), j);
    return detail::tensor_stats_prefix(t, j, t.size()).phi;
}

/// Raising operator on the N-fold product.  Returns nullopt exactly when
/// the factor selected by the signature rule cannot be raised.
inline std::optional<TensorElement> tensor_e(const TensorElement& t, int j) {
    detail::check_spin_index(t.factors.front(), j);
    int k = detail::tensor_e_target(t, j);
    auto leaf = spin_e(t.factors[k], j);
    if (!leaf) return std::nullopt;
    TensorElement out = t;
    out.factors[k] = *leaf;
    return out;
}

inline std::optional<TensorElement> tensor_f(const TensorElement& t, int j) {
    detail::check_spin_index(t.factors.front(), j);
    int k = detail::tensor_f_target(t, j);
    auto leaf = spin_f(t.factors[k], j);
    if (!leaf) return std::nullopt;
    TensorElement out = t;
    out.factors[k] = *leaf;
    return out;
}

/// True iff every raising operator kills the element.  Whenever the
/// signature rule selects a factor k >= 2 (its eps beats the prefix phi,
/// hence is positive) the chosen leaf is raisable, so e_j survives iff some
/// suffix factor triggers the rule or the first factor itself is raisable.
inline bool is_highest(const TensorElement& t) {
    const int n = t.rank();
    const int N = t.size();
    for (int j = 1; j <= n; ++j) {
        if (spin_eps(t.factors[0], j) > 0) return false;
        int phi = spin_phi(t.factors[0], j);
        for (int k = 1; k < N; ++k) {
            const SpinorElement& b = t.factors[k];
            if (spin_eps(b, j) > phi) return false;
            phi = std::max(spin_phi(b, j), phi + detail::spin_wt_pairing(b, j));
        }
    }
    return true;
}

struct RaiseResult {
    SpinorElement highest;
    std::vector<int> indices;  // first applied first
};

/// Raise a spinor element to the highest-weight element of its component.
/// `pick` selects which applicable index to use at each step (given the
/// sorted list of applicable indices); the default takes the smallest.
/// The result is always (+...+) or (+...+-).
inline RaiseResult raise_to_highest(
    const SpinorElement& b,
    const std::function<std::size_t(const std::vector<int>&)>& pick = {}) {
    SpinorElement cur = b;
    std::vector<int> used;
    for (;;) {
        std::vector<int> applicable;
        for (int j = 1; j <= cur.n; ++j)
            if (spin_eps(cur, j) > 0) applicable.push_back(j);
        if (applicable.empty()) break;
        int j = applicable[pick ? pick(applicable) : 0];
        cur = *spin_e(cur, j);
        used.push_back(j);
    }
    return {cur, std::move(used)};
}

/// Fold tensor_f over the index sequence in order; nullopt if any step dies.
inline std::optional<TensorElement> apply_lowering_sequence(const TensorElement& t,
                                                            const std::vector<int>& indices) {
    TensorElement cur = t;
    for (int j : indices) {
        auto next = tensor_f(cur, j);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

/// Scan all 2^(n*N) pure tensors and keep the highest-weight ones, sorted by
/// weight and then by factor signs.  Refuses instances beyond the brute-force
/// limit (default n*N <= 20, see config.hpp).
inline std::vector<TensorElement> enumerate_highest(int n, int N, int limit = 0) {
    if (n < 2 || n > 32) throw std::invalid_argument("enumerate_highest: rank must be in [2,32]");
    if (N < 1) throw std::invalid_argument("enumerate_highest: need N >= 1");
    if (n * N > brute_force_limit(limit))
        throw std::invalid_argument("enumerate_highest: instance too large for brute force");
    std::vector<TensorElement> out;
    const std::uint64_t total = std::uint64_t(1) << (n * N);
    const std::uint32_t coord_mask = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
    TensorElement probe(std::vector<SpinorElement>(static_cast<std::size_t>(N), SpinorElement(n, 0)));
    for (std::uint64_t v = 0; v < total; ++v) {
        for (int k = 0; k < N; ++k)
            probe.factors[k].minus = static_cast<std::uint32_t>(v >> (k * n)) & coord_mask;
        if (is_highest(probe)) out.push_back(probe);
    }
    std::vector<Weight> keys;
    keys.reserve(out.size());
    for (const TensorElement& t : out) keys.push_back(tensor_wt(t));
    std::vector<std::size_t> order(out.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return out[a].factors < out[b].factors;
    });
    std::vector<TensorElement> sorted;
    sorted.reserve(out.size());
    for (std::size_t k : order) sorted.push_back(std::move(out[k]));
    return sorted;
}

}  // namespace spincactus
