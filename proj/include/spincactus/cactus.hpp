#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincactus/action.hpp"
#include "spincactus/shapes.hpp"

namespace spincactus {

/// One group generator: either a Bender-Knuth generator t_i or an interval
/// reverser s_{p,q} with p < q.
struct CactusGenerator {
    enum class Kind { bk, interval };
    Kind kind = Kind::bk;
    int i = 0;       // bk index, 1 <= i <= N-1
    int p = 0, q = 0;  // interval bounds, 1 <= p < q <= N

    static CactusGenerator bk(int i) {
        CactusGenerator g;
        g.kind = Kind::bk;
        g.i = i;
        return g;
    }
    static CactusGenerator interval(int p, int q) {
        CactusGenerator g;
        g.kind = Kind::interval;
        g.p = p;
        g.q = q;
        return g;
    }

    void check(int N) const {
        if (kind == Kind::bk) {
            if (i < 1 || i > N - 1)
                throw std::invalid_argument("cactus generator t index out of range");
        } else {
            if (p < 1 || q <= p || q > N)
                throw std::invalid_argument("cactus generator s bounds out of range");
        }
    }

    std::string to_string() const {
        if (kind == Kind::bk) return "t" + std::to_string(i);
        return "s" + std::to_string(p) + "," + std::to_string(q);
    }

    friend bool operator==(const CactusGenerator&, const CactusGenerator&) = default;
};

/// A free word in the generators; no normal form is computed, words are
/// compared only through their action on finite carrier sets.
struct CactusWord {
    int N = 0;
    std::vector<CactusGenerator> gens;

    CactusWord() = default;
    CactusWord(int ambient, std::vector<CactusGenerator> g) : N(ambient), gens(std::move(g)) {
        if (N < 2) throw std::invalid_argument("CactusWord: ambient size must be at least 2");
        for (const CactusGenerator& gen : gens) gen.check(N);
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (k) out += " ";
            out += gens[k].to_string();
        }
        return out;
    }

    friend bool operator==(const CactusWord&, const CactusWord&) = default;
};

/// Parse whitespace-separated tokens like "t3" and "s1,4".
inline CactusWord parse_word(const std::string& text, int N) {
    std::vector<CactusGenerator> gens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            if (tok.size() >= 2 && tok[0] == 't') {
                gens.push_back(CactusGenerator::bk(std::stoi(tok.substr(1))));
            } else if (tok.size() >= 4 && tok[0] == 's') {
                auto comma = tok.find(',');
                if (comma == std::string::npos) throw std::invalid_argument(tok);
                gens.push_back(CactusGenerator::interval(std::stoi(tok.substr(1, comma - 1)),
                                                         std::stoi(tok.substr(comma + 1))));
            } else {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse cactus word token '" + tok + "'");
        }
    }
    return CactusWord(N, std::move(gens));
}

/// Translation of t_i into the interval presentation:
/// t_1 -> s_{1,2}; t_2 -> s_{1,2} s_{1,3} s_{1,2};
/// t_i -> s_{1,i} s_{1,i+1} s_{1,i} s_{1,i-1} for i > 2.
inline CactusWord t_to_s(int i, int N) {
    if (i < 1 || i > N - 1) throw std::out_of_range("t_to_s: index out of range");
    std::vector<CactusGenerator> gens;
    if (i == 1) {
        gens = {CactusGenerator::interval(1, 2)};
    } else if (i == 2) {
        gens = {CactusGenerator::interval(1, 2), CactusGenerator::interval(1, 3),
                CactusGenerator::interval(1, 2)};
    } else {
        gens = {CactusGenerator::interval(1, i), CactusGenerator::interval(1, i + 1),
                CactusGenerator::interval(1, i), CactusGenerator::interval(1, i - 1)};
    }
    return CactusWord(N, std::move(gens));
}

namespace detail {
/// The staircase word s_k = t_1 (t_2 t_1) ... (t_k t_{k-1} ... t_1); s_0 is
/// the empty word.
inline void append_staircase(std::vector<CactusGenerator>& gens, int k) {
    for (int block = 1; block <= k; ++block)
        for (int j = block; j >= 1; --j) gens.push_back(CactusGenerator::bk(j));
}
}  // namespace detail

/// Translation of s_{p,q} into Bender-Knuth generators: the word
/// s_{q-1} s_{q-p} s_{q-1} with each factor the staircase word above.
inline CactusWord s_to_t(int p, int q, int N) {
    if (p < 1 || q <= p || q > N) throw std::out_of_range("s_to_t: bounds out of range");
    std::vector<CactusGenerator> gens;
    detail::append_staircase(gens, q - 1);
    detail::append_staircase(gens, q - p);
    detail::append_staircase(gens, q - 1);
    return CactusWord(N, std::move(gens));
}

/// Apply a word to a short tableau, rightmost generator first.  Bender-Knuth
/// generators act directly; interval generators act through their
/// Bender-Knuth expansion.
inline Sssyt apply_word(const CactusWord& w, const Sssyt& x) {
    if (w.N != x.N) throw std::invalid_argument("apply_word: ambient size mismatch");
    Sssyt cur = x;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        if (it->kind == CactusGenerator::Kind::bk) {
            cur = tau_tableau(cur, it->i);
        } else {
            CactusWord expansion = s_to_t(it->p, it->q, w.N);
            for (auto jt = expansion.gens.rbegin(); jt != expansion.gens.rend(); ++jt)
                cur = tau_tableau(cur, jt->i);
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Relation verification.

struct RelationViolation {
    std::string shape;     // final-shape columns, e.g. "[4,3,3,2]"
    std::string relation;  // family label
    std::string indices;   // offending index tuple
    std::string witness;   // row fill of a tableau the two sides disagree on
};

struct RelationReport {
    int shapes_checked = 0;
    int instances_checked = 0;
    std::vector<RelationViolation> violations;
    bool ok() const { return violations.empty(); }
};

struct RelationCheckOptions {
    int limit = 0;
    /// Test hook: corrupt the t_1 permutation (cyclic shift) so the harness
    /// demonstrably catches a broken action.
    bool inject_fault = false;
};

namespace detail {

using Perm = std::vector<int>;

inline Perm compose(const Perm& f, const Perm& g) {  // (f . g)(x) = f(g(x))
    Perm out(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = f[g[k]];
    return out;
}

inline Perm identity_perm(std::size_t size) {
    Perm out(size);
    for (std::size_t k = 0; k < size; ++k) out[k] = static_cast<int>(k);
    return out;
}

/// Permutation of the sorted carrier induced by a word of bk generators,
/// given the precomputed generator permutations (index 0 holds t_1).
inline Perm word_perm(const std::vector<Perm>& tau_perms, const std::vector<CactusGenerator>& word) {
    Perm out = identity_perm(tau_perms.front().size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = compose(tau_perms[it->i - 1], out);
    return out;
}

inline Perm staircase_perm(const std::vector<Perm>& tau_perms, int k) {
    std::vector<CactusGenerator> word;
    append_staircase(word, k);
    return word_perm(tau_perms, word);
}

}  // namespace detail

/// Verify every defining relation of both presentations as permutations of
/// every short-tableau carrier for the given (n, N): involutivity and the
/// disjointness/nesting laws of the interval generators, involutivity and
/// far commutation of the Bender-Knuth generators, and the mixed relation
/// (t_i s_{k-1} s_{k-j} s_{k-1})^2 = 1 for i+1 < j < k <= N-1.
inline RelationReport check_relations(int n, int N, const RelationCheckOptions& opts = {}) {
    if (N < 2) throw std::invalid_argument("check_relations: need N >= 2");
    if (n * N > enumeration_limit(opts.limit))
        throw std::invalid_argument("check_relations: instance too large for enumeration");
    RelationReport report;

    for (const Weight& lambda : enumerate_reachable(n, N, opts.limit)) {
        ShortYoungDiagram nu = short_diagram_from_cell_diagram(cell_diagram_from_weight(lambda, N));
        std::vector<Sssyt> carrier = enumerate_sssyt(nu, N, n, opts.limit);
        report.shapes_checked += 1;
        std::string shape_label = "[";
        for (std::size_t j = 0; j < nu.cols.size(); ++j)
            shape_label += (j ? "," : "") + std::to_string(nu.cols[j]);
        shape_label += "]";

        std::map<Sssyt, int> index_of;
        for (std::size_t k = 0; k < carrier.size(); ++k) index_of[carrier[k]] = static_cast<int>(k);

        std::vector<detail::Perm> tau_perms(static_cast<std::size_t>(N - 1));
        for (int i = 1; i <= N - 1; ++i) {
            detail::Perm perm(carrier.size());
            for (std::size_t k = 0; k < carrier.size(); ++k) {
                auto it = index_of.find(tau_tableau(carrier[k], i));
                if (it == index_of.end())
                    throw std::logic_error("check_relations: generator left the carrier set");
                perm[k] = it->second;
            }
            tau_perms[i - 1] = std::move(perm);
        }
        if (opts.inject_fault && carrier.size() >= 3) {
            std::rotate(tau_perms[0].begin(), tau_perms[0].begin() + 1, tau_perms[0].end());
        }

        const detail::Perm id = detail::identity_perm(carrier.size());
        auto record = [&](const std::string& relation, const std::string& indices,
                          const detail::Perm& lhs, const detail::Perm& rhs) {
            report.instances_checked += 1;
            if (lhs == rhs) return;
            std::string witness = "?";
            for (std::size_t k = 0; k < lhs.size(); ++k)
                if (lhs[k] != rhs[k]) {
                    std::string fill;
                    for (const auto& row : carrier[k].rows()) {
                        fill += "[";
                        for (std::size_t c = 0; c < row.size(); ++c)
                            fill += (c ? "," : "") + std::to_string(row[c]);
                        fill += "]";
                    }
                    witness = fill;
                    break;
                }
            report.violations.push_back({shape_label, relation, indices, witness});
        };

        // Interval-generator permutations via their Bender-Knuth expansions.
        std::map<std::pair<int, int>, detail::Perm> s_perm;
        for (int p = 1; p < N; ++p)
            for (int q = p + 1; q <= N; ++q)
                s_perm[{p, q}] = detail::word_perm(tau_perms, s_to_t(p, q, N).gens);

        for (int p = 1; p < N; ++p)
            for (int q = p + 1; q <= N; ++q) {
                const auto& s = s_perm[{p, q}];
                record("s^2=1", "s" + std::to_string(p) + "," + std::to_string(q),
                       detail::compose(s, s), id);
            }
        for (int p1 = 1; p1 < N; ++p1)
            for (int q1 = p1 + 1; q1 <= N; ++q1)
                for (int p2 = q1 + 1; p2 < N; ++p2)
                    for (int q2 = p2 + 1; q2 <= N; ++q2) {
                        const auto &s1 = s_perm[{p1, q1}], &s2 = s_perm[{p2, q2}];
                        record("disjoint commutation",
                               "s" + std::to_string(p1) + "," + std::to_string(q1) + " s" +
                                   std::to_string(p2) + "," + std::to_string(q2),
                               detail::compose(s1, s2), detail::compose(s2, s1));
                    }
        for (int p1 = 1; p1 < N; ++p1)
            for (int q1 = p1 + 1; q1 <= N; ++q1)
                for (int p2 = p1; p2 < q1; ++p2)
                    for (int q2 = p2 + 1; q2 <= q1; ++q2) {
                        int m = p1 + q1 - q2, nn = p1 + q1 - p2;
                        const auto &s1 = s_perm[{p1, q1}], &s2 = s_perm[{p2, q2}];
                        record("nesting",
                               "s" + std::to_string(p1) + "," + std::to_string(q1) + " s" +
                                   std::to_string(p2) + "," + std::to_string(q2),
                               detail::compose(s1, detail::compose(s2, s1)), s_perm[{m, nn}]);
                    }
        for (int i = 1; i <= N - 1; ++i)
            record("t^2=1", "t" + std::to_string(i),
                   detail::compose(tau_perms[i - 1], tau_perms[i - 1]), id);
        for (int i = 1; i <= N - 1; ++i)
            for (int j = i + 2; j <= N - 1; ++j)
                record("far commutation", "t" + std::to_string(i) + " t" + std::to_string(j),
                       detail::compose(tau_perms[i - 1], tau_perms[j - 1]),
                       detail::compose(tau_perms[j - 1], tau_perms[i - 1]));
        // Mixed relation between the two presentations, with the staircase
        // expansion of the inner interval word.
        for (int k = 3; k <= N - 1; ++k)
            for (int j = 3; j < k; ++j)
                for (int i = 1; i + 1 < j; ++i) {
                    detail::Perm inner = detail::compose(
                        detail::staircase_perm(tau_perms, k - 1),
                        detail::compose(detail::staircase_perm(tau_perms, k - j),
                                        detail::staircase_perm(tau_perms, k - 1)));
                    detail::Perm once = detail::compose(tau_perms[i - 1], inner);
                    record("mixed relation",
                           "t" + std::to_string(i) + " k=" + std::to_string(k) +
                               " j=" + std::to_string(j),
                           detail::compose(once, once), id);
                }
    }
    return report;
}

}  // namespace spincactus
