#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincactus {

/// A point of the rank-n half-integer weight lattice, stored as doubled
/// integer coordinates: doubled[j-1] holds 2*lambda_j.  This keeps every
/// operation in exact integer arithmetic.  All coordinates must share one
/// parity: even entries form the integer sublattice, odd entries the spin
/// coset (lambda_i - lambda_j is always an integer).
struct Weight {
    int n = 0;
    std::vector<int> doubled;

    Weight() = default;

    Weight(int rank, std::vector<int> twice) : n(rank), doubled(std::move(twice)) {
        if (n < 2) throw std::invalid_argument("Weight: rank must be at least 2");
        if (static_cast<int>(doubled.size()) != n)
            throw std::invalid_argument("Weight: coordinate count does not match rank");
        int parity = ((doubled[0] % 2) + 2) % 2;
        for (int v : doubled)
            if ((((v % 2) + 2) % 2) != parity)
                throw std::invalid_argument("Weight: coordinates must share one parity");
    }

    static Weight zero(int rank) { return Weight(rank, std::vector<int>(rank, 0)); }

    /// Doubled coordinate 2*lambda_j, 1-based.
    int at2(int j) const { return doubled[j - 1]; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.doubled <=> b.doubled;
    }
};

/// <lambda, alpha_j^vee>: lambda_j - lambda_{j+1} for j < n, and
/// lambda_{n-1} + lambda_n for j = n.  Always an integer thanks to the
/// shared-parity invariant.
inline int coroot_pairing(const Weight& w, int j) {
    if (j < 1 || j > w.n) throw std::out_of_range("coroot_pairing: index out of range");
    if (j < w.n) return (w.at2(j) - w.at2(j + 1)) / 2;
    return (w.at2(w.n - 1) + w.at2(w.n)) / 2;
}

inline bool is_dominant(const Weight& w) {
    for (int j = 1; j <= w.n; ++j)
        if (coroot_pairing(w, j) < 0) return false;
    return true;
}

/// True iff every coordinate is +-1/2.
inline bool is_spin_weight(const Weight& w) {
    for (int v : w.doubled)
        if (v != 1 && v != -1) return false;
    return true;
}

/// All 2^n weights with every coordinate +-1/2, in binary-counting order:
/// coordinate 1 is the most significant bit, bit value 0 maps to +1/2.  The
/// first element is therefore (+1/2, ..., +1/2).
inline std::vector<Weight> spin_weight_set(int n) {
    if (n < 2) throw std::invalid_argument("spin_weight_set: rank must be at least 2");
    if (n > 25) throw std::invalid_argument("spin_weight_set: rank too large to enumerate");
    std::vector<Weight> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v) {
        std::vector<int> d(n);
        for (int j = 1; j <= n; ++j) d[j - 1] = ((v >> (n - j)) & 1u) ? -1 : 1;
        out.emplace_back(n, std::move(d));
    }
    return out;
}

/// Indices adjacent to i in the rank-n Dynkin diagram of type D.  The
/// branch node is n-2, with leaves n-1 and n.  The table assumes n >= 4;
/// smaller ranks are refused because the fork does not exist there.
inline std::vector<int> dynkin_adjacent(int n, int i) {
    if (n < 4) throw std::invalid_argument("dynkin_adjacent: unsupported small rank (need n >= 4)");
    if (i < 1 || i > n) throw std::out_of_range("dynkin_adjacent: index out of range");
    if (i == 1) return {2};
    if (i < n - 2) return {i - 1, i + 1};
    if (i == n - 2) return {n - 3, n - 1, n};
    return {n - 2};  // i == n-1 or i == n
}

inline Weight operator+(const Weight& a, const Weight& b) {
    if (a.n != b.n) throw std::invalid_argument("Weight addition: rank mismatch");
    std::vector<int> d(a.n);
    for (int j = 0; j < a.n; ++j) d[j] = a.doubled[j] + b.doubled[j];
    return Weight(a.n, std::move(d));
}

inline Weight operator-(const Weight& a, const Weight& b) {
    if (a.n != b.n) throw std::invalid_argument("Weight subtraction: rank mismatch");
    std::vector<int> d(a.n);
    for (int j = 0; j < a.n; ++j) d[j] = a.doubled[j] - b.doubled[j];
    return Weight(a.n, std::move(d));
}

inline std::string to_string(const Weight& w) {
    std::string s = "(";
    for (int j = 1; j <= w.n; ++j) {
        int v = w.at2(j);
        if (v % 2 == 0)
            s += std::to_string(v / 2);
        else
            s += std::to_string(v) + "/2";
        if (j < w.n) s += ",";
    }
    s += ")";
    return s;
}

}  // namespace spincactus
