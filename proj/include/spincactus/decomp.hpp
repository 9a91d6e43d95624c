#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spincactus/config.hpp"
#include "spincactus/crystal.hpp"
#include "spincactus/weights.hpp"

namespace spincactus {

/// A sequence of N spin weights of one rank.  The constructor checks only
/// the per-entry shape; whether the prefix sums stay dominant (membership in
/// the dominant-path set) is a separate, explicit test.
struct WeightSequence {
    int n = 0;
    std::vector<Weight> mus;

    WeightSequence() = default;

    WeightSequence(int rank, std::vector<Weight> entries) : n(rank), mus(std::move(entries)) {
        if (mus.empty()) throw std::invalid_argument("WeightSequence: need at least one entry");
        for (const Weight& mu : mus) {
            if (mu.n != n) throw std::invalid_argument("WeightSequence: rank mismatch");
            if (!is_spin_weight(mu))
                throw std::invalid_argument("WeightSequence: entry is not a spin weight");
        }
    }

    int size() const { return static_cast<int>(mus.size()); }

    Weight prefix_sum(int k) const {  // mu_1 + ... + mu_k; k = 0 gives zero
        Weight s = Weight::zero(n);
        for (int i = 0; i < k; ++i) s = s + mus[i];
        return s;
    }

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
    friend auto operator<=>(const WeightSequence& a, const WeightSequence& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.mus <=> b.mus;
    }
};

/// True iff every prefix sum mu_1 + ... + mu_k is dominant.  Such sequences
/// index the highest-weight elements of the N-fold spin-crystal product.
inline bool is_dominant_path(const WeightSequence& seq) {
    Weight s = Weight::zero(seq.n);
    for (const Weight& mu : seq.mus) {
        s = s + mu;
        if (!is_dominant(s)) return false;
    }
    return true;
}

/// True iff lambda is a possible sum of an N-step dominant path, i.e. both
/// r_i = N/2 + lambda_i and l_i = N/2 - lambda_i are nonnegative integers
/// for every coordinate and lambda is dominant.
inline bool is_reachable(const Weight& lambda, int N) {
    if (N < 0) return false;
    if (!is_dominant(lambda)) return false;
    for (int v : lambda.doubled) {
        if (((N + v) % 2 + 2) % 2 != 0) return false;  // N/2 + lambda_i integral
        if (N + v < 0 || N - v < 0) return false;      // both counts nonnegative
    }
    return true;
}

/// The dominant spin-weight extensions of lambda: all lambda + mu with mu a
/// spin weight and the sum dominant, in the fixed spin_weight_set order.
inline std::vector<Weight> branch(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("branch: weight must be dominant");
    std::vector<Weight> out;
    for (const Weight& mu : spin_weight_set(lambda.n)) {
        Weight s = lambda + mu;
        if (is_dominant(s)) out.push_back(std::move(s));
    }
    return out;
}

namespace detail {
inline void extend_paths(const std::vector<Weight>& steps, std::vector<Weight>& prefix,
                         const Weight& sum, int N, std::vector<WeightSequence>& out) {
    if (static_cast<int>(prefix.size()) == N) {
        out.emplace_back(sum.n, prefix);
        return;
    }
    for (const Weight& mu : steps) {
        Weight next = sum + mu;
        if (!is_dominant(next)) continue;
        prefix.push_back(mu);
        extend_paths(steps, prefix, next, N, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All N-step dominant paths of rank n, depth-first in spin_weight_set order.
inline std::vector<WeightSequence> enumerate_paths(int n, int N, int limit = 0) {
    if (n < 2) throw std::invalid_argument("enumerate_paths: rank must be at least 2");
    if (N < 1) throw std::invalid_argument("enumerate_paths: need N >= 1");
    if (n * N > enumeration_limit(limit))
        throw std::invalid_argument("enumerate_paths: instance too large for enumeration");
    std::vector<WeightSequence> out;
    std::vector<Weight> prefix;
    detail::extend_paths(spin_weight_set(n), prefix, Weight::zero(n), N, out);
    return out;
}

/// The dominant paths whose total sum is lambda.
inline std::vector<WeightSequence> enumerate_paths_to(const Weight& lambda, int N, int limit = 0) {
    std::vector<WeightSequence> out;
    for (WeightSequence& seq : enumerate_paths(lambda.n, N, limit))
        if (seq.prefix_sum(N) == lambda) out.push_back(std::move(seq));
    return out;
}

/// The distinct sums of N-step dominant paths, sorted.
inline std::vector<Weight> enumerate_reachable(int n, int N, int limit = 0) {
    std::vector<Weight> sums;
    for (const WeightSequence& seq : enumerate_paths(n, N, limit)) sums.push_back(seq.prefix_sum(N));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

/// A dominant path corresponds to the highest-weight pure tensor whose k-th
/// factor is the unique spinor element of weight mu_k.
inline TensorElement path_to_tensor(const WeightSequence& seq) {
    if (!is_dominant_path(seq))
        throw std::invalid_argument("path_to_tensor: sequence is not a dominant path");
    std::vector<SpinorElement> factors;
    factors.reserve(seq.mus.size());
    for (const Weight& mu : seq.mus) factors.push_back(SpinorElement::of_weight(mu));
    return TensorElement(std::move(factors));
}

inline WeightSequence tensor_to_path(const TensorElement& t) {
    if (!is_highest(t))
        throw std::invalid_argument("tensor_to_path: element is not highest-weight");
    std::vector<Weight> mus;
    mus.reserve(t.factors.size());
    for (const SpinorElement& b : t.factors) mus.push_back(b.weight());
    return WeightSequence(t.rank(), std::move(mus));
}

}  // namespace spincactus
