// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Sizes and time budgets are fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spincactus/json_io.hpp"
#include "spincactus/verify.hpp"

using namespace spincactus;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(std::string name, double budget_seconds)
        : name_(std::move(name)),
          budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool cond, const std::string& what) {
        if (cond || !detail_.empty()) return;
        detail_ = what;
    }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool ok = detail_.empty() && elapsed < budget_;
        if (!ok && detail_.empty()) detail_ = "exceeded the time budget";
        std::printf("%s  %s  (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", name_.c_str(), elapsed,
                    budget_, detail_.empty() ? "" : "  -- ", detail_.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }

  private:
    std::string name_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::string detail_;
};

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(SPINCACTUS_FIXTURES_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("missing fixture " + name);
    return json::parse(in);
}

std::string load_text(const std::string& name) {
    std::ifstream in(std::string(SPINCACTUS_FIXTURES_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("missing fixture " + name);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// --------------------------------------------------------------- criterion 1

void golden_examples() {
    Criterion c("criterion-1 golden-examples", 1.0);

    // 5.1 / 5.2: the (7,4) diagram and its column shape
    Weight lam51(4, {3, 1, 1, -1});
    CellDiagram d51 = cell_diagram_from_weight(lam51, 7);
    c.require(to_json(d51) == load_fixture("ex51_cell_diagram.json"), "5.1 diagram");
    c.require(render(d51) == load_text("ex51_render.txt"), "5.1 render");
    ShortYoungDiagram nu52 = short_diagram_from_cell_diagram(d51);
    c.require(to_json(nu52) == load_fixture("ex52_short_diagram.json"), "5.2 shape");

    // 5.3: odd rank
    Weight lam53 = weight_from_json(load_fixture("ex53_weight.json"));
    ShortYoungDiagram nu53 = short_diagram_from_cell_diagram(cell_diagram_from_weight(lam53, 6));
    c.require(to_json(nu53) == load_fixture("ex53_short_diagram.json"), "5.3 shape");

    // 5.4: the seven-step chain
    WeightSequence path54 = sequence_from_json(load_fixture("ex54_path.json"));
    CellTableau ct54 = cell_tableau_from_path(path54);
    c.require(to_json(ct54) == load_fixture("ex54_cell_tableau.json"), "5.4 cell table");
    c.require(render(ct54) == load_text("ex54_cell_tableau_render.txt"), "5.4 render");
    Sssyt x54 = sssyt_from_cell_tableau(ct54);
    c.require(to_json(x54) == load_fixture("ex54_sssyt.json"), "5.4 tableau");

    // 6.1 free intervals
    AdmissibleTriple tr61 = triple_from_json(load_fixture("ex61_triple.json"));
    auto ivs = free_intervals(tr61);
    bool iv_ok = ivs.size() == 4 && ivs[0].min == 2 && ivs[0].max == 4 && ivs[1].min == 7 &&
                 ivs[1].max == 8 && ivs[2].min == 10 && ivs[2].max == 11 && ivs[3].min == 12 &&
                 ivs[3].max == 12;
    c.require(iv_ok, "6.1 free intervals");
    c.require(classify(tr61) == TripleType::type0, "6.1 type");

    // 6.2 starred weights
    auto [a_star, b_star] = star(tr61);
    json g62 = load_fixture("ex62_star.json");
    c.require(a_star.doubled == g62.at("mu_a_star").get<std::vector<int>>(), "6.2 mu_a*");
    c.require(b_star.doubled == g62.at("mu_b_star").get<std::vector<int>>(), "6.2 mu_b*");

    // 6.3 / 6.4: type 1 and its correction
    AdmissibleTriple tr63 = triple_from_json(load_fixture("ex63_triple.json"));
    c.require(classify(tr63) == TripleType::type1, "6.3 type");
    auto [a_dia, b_dia] = diamond(tr63);
    json g64 = load_fixture("ex64_diamond.json");
    c.require(a_dia.doubled == g64.at("mu_a_diamond").get<std::vector<int>>(), "6.4 mu_a");
    c.require(b_dia.doubled == g64.at("mu_b_diamond").get<std::vector<int>>(), "6.4 mu_b");

    // 6.5: type 2 and its correction
    AdmissibleTriple tr65 = triple_from_json(load_fixture("ex65_triple.json"));
    c.require(classify(tr65) == TripleType::type2, "6.5 type");
    auto [a_dd, b_dd] = double_diamond(tr65);
    json g65 = load_fixture("ex65_double_diamond.json");
    c.require(a_dd.doubled == g65.at("mu_a_double_diamond").get<std::vector<int>>(), "6.5 mu_a");
    c.require(b_dd.doubled == g65.at("mu_b_double_diamond").get<std::vector<int>>(), "6.5 mu_b");

    // 7.1: the plain Bender-Knuth figure
    Tableau t71(load_fixture("ex71_tableau.json").at("rows").get<std::vector<std::vector<int>>>());
    Tableau t71_bk(
        load_fixture("ex71_bk_expected.json").at("rows").get<std::vector<std::vector<int>>>());
    c.require(bender_knuth(t71, 10) == t71_bk, "7.1 flip");

    // 7.2: the type-1 tableau action
    Sssyt x72 = sssyt_from_json(load_fixture("ex71_tableau.json"));
    c.require(tableau_type(x72, 10) == TripleType::type1, "7.2 type");
    c.require(to_json(tau_tableau(x72, 10)) == load_fixture("ex72_tau_expected.json"), "7.2 action");

    // 7.3: the type-2 tableau action
    Sssyt x73 = sssyt_from_json(load_fixture("ex73_tableau.json"));
    c.require(tableau_type(x73, 11) == TripleType::type2, "7.3 type");
    c.require(to_json(tau_tableau(x73, 11)) == load_fixture("ex73_tau_expected.json"), "7.3 action");
}

// --------------------------------------------------------------- criterion 2

void highest_weight_census() {
    Criterion c("criterion-2 highest-weight-census", 60.0);
    for (int n : {2, 3, 4, 5}) {
        for (int N = 1; n * N <= 20; ++N) {
            std::vector<TensorElement> brute = enumerate_highest(n, N);
            std::vector<TensorElement> image;
            for (const WeightSequence& seq : enumerate_paths(n, N))
                image.push_back(path_to_tensor(seq));
            std::sort(image.begin(), image.end());
            std::vector<TensorElement> sorted_brute = brute;
            std::sort(sorted_brute.begin(), sorted_brute.end());
            c.require(image == sorted_brute,
                      "census mismatch at n=" + std::to_string(n) + " N=" + std::to_string(N));
        }
    }
}

// --------------------------------------------------------------- criterion 3

void branching_census() {
    Criterion c("criterion-3 branching", 60.0);
    const int n = 4;
    for (int k = 1; k <= 4; ++k) {
        std::vector<TensorElement> hw = enumerate_highest(n, k + 1);
        for (const Weight& lam : enumerate_reachable(n, k)) {
            // realize the component of a highest-weight element of weight lam
            WeightSequence x0 = enumerate_paths_to(lam, k).front();
            TensorElement t0 = path_to_tensor(x0);
            std::set<TensorElement> component{t0};
            std::vector<TensorElement> queue{t0};
            while (!queue.empty()) {
                TensorElement cur = queue.back();
                queue.pop_back();
                for (int j = 1; j <= n; ++j)
                    if (auto down = tensor_f(cur, j))
                        if (component.insert(*down).second) queue.push_back(*down);
            }
            // census of highest-weight elements whose prefix lies in it
            std::vector<Weight> census;
            for (const TensorElement& t : hw) {
                TensorElement prefix(
                    std::vector<SpinorElement>(t.factors.begin(), t.factors.begin() + k));
                if (component.count(prefix)) census.push_back(tensor_wt(t));
            }
            std::sort(census.begin(), census.end());
            c.require(std::adjacent_find(census.begin(), census.end()) == census.end(),
                      "multiplicity above 1 at " + to_string(lam));
            std::vector<Weight> expected = branch(lam);
            std::sort(expected.begin(), expected.end());
            c.require(census == expected, "branch census mismatch at " + to_string(lam) +
                                              " k=" + std::to_string(k));
        }
    }
}

// --------------------------------------------------------------- criterion 4

void oracle_equivalence() {
    Criterion c("criterion-4 oracle-equivalence", 300.0);
    for (int N = 2; N <= 6; ++N) {
        for (const WeightSequence& seq : enumerate_paths(4, N)) {
            Sssyt x = sssyt_from_path(seq);
            for (int i = 1; i <= N - 1; ++i) {
                WeightSequence fast = tau_path(seq, i);
                c.require(fast == tau_path_crystal(seq, i),
                          "route mismatch at N=" + std::to_string(N));
                c.require(tau_tableau(x, i) == sssyt_from_path(fast),
                          "tableau conjugation mismatch at N=" + std::to_string(N));
            }
        }
    }
    for (int N = 2; N <= 4; ++N)
        for (const WeightSequence& seq : enumerate_paths(5, N))
            for (int i = 1; i <= N - 1; ++i)
                c.require(tau_path(seq, i) == tau_path_crystal(seq, i),
                          "route mismatch at n=5 N=" + std::to_string(N));
}

// --------------------------------------------------------------- criterion 5

void involution_and_relations() {
    Criterion c("criterion-5 involution-and-relations", 300.0);
    for (int N = 2; N <= 6; ++N) {
        for (const Weight& lam : enumerate_reachable(4, N)) {
            ShortYoungDiagram nu =
                short_diagram_from_cell_diagram(cell_diagram_from_weight(lam, N));
            for (const Sssyt& x : enumerate_sssyt(nu, N, 4))
                for (int i = 1; i <= N - 1; ++i)
                    c.require(tau_tableau(tau_tableau(x, i), i) == x,
                              "involution broken at N=" + std::to_string(N));
        }
        RelationReport rel = check_relations(4, N);
        c.require(rel.ok(), "relation violated at N=" + std::to_string(N) +
                                (rel.ok() ? "" : ": " + rel.violations.front().relation));
    }
}

// --------------------------------------------------------------- criterion 6

void bijection_round_trips() {
    Criterion c("criterion-6 bijections", 120.0);
    for (int n : {2, 3, 4}) {
        for (int N = 1; N <= 6; ++N) {
            VerifyReport report = run_bijections_suite(n, N);
            c.require(report.ok(), "bijection failure at n=" + std::to_string(n) +
                                       " N=" + std::to_string(N));
        }
    }
}

// --------------------------------------------------------------- criterion 7

struct BandCell {
    int row, col, value;
    bool free;
};

std::vector<std::vector<BandCell>> band_cells(const Sssyt& x, int i) {
    auto rows = x.rows();
    std::vector<std::vector<BandCell>> per_row;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        std::vector<BandCell> cells;
        for (int ccol = 0; ccol < static_cast<int>(rows[r].size()); ++ccol) {
            int v = rows[r][ccol];
            if (v != i && v != i + 1) continue;
            bool above = r > 0 && ccol < static_cast<int>(rows[r - 1].size()) &&
                         (rows[r - 1][ccol] == i || rows[r - 1][ccol] == i + 1);
            bool below = r + 1 < static_cast<int>(rows.size()) &&
                         ccol < static_cast<int>(rows[r + 1].size()) &&
                         (rows[r + 1][ccol] == i || rows[r + 1][ccol] == i + 1);
            cells.push_back({r, ccol, v, !above && !below});
        }
        if (!cells.empty()) per_row.push_back(std::move(cells));
    }
    return per_row;
}

void trichotomy() {
    Criterion c("criterion-7 trichotomy", 300.0);
    for (int N = 2; N <= 6; ++N) {
        for (const WeightSequence& seq : enumerate_paths(4, N)) {
            Sssyt x = sssyt_from_path(seq);
            for (int i = 1; i <= N - 1; ++i) {
                AdmissibleTriple tr(seq.prefix_sum(i - 1), seq.mus[i - 1], seq.mus[i]);
                TripleType from_triple = classify(tr);
                TripleType from_tableau = tableau_type(x, i);
                c.require(from_triple == from_tableau,
                          "type disagreement at N=" + std::to_string(N));
                if (from_triple == TripleType::type0) continue;

                // non-short flips satisfy exactly one of the two bullet lists
                auto band = band_cells(x, i);
                bool first_two_full = x.shape_at(i + 1).first_two_columns() == i + 1;
                const auto& last = band.back();
                int last_free_high = 0, last_low = 0;
                for (const BandCell& cell : last) {
                    if (cell.value == i + 1 && cell.free) ++last_free_high;
                    if (cell.value == i) ++last_low;
                }
                bool penult_free_high = false;
                if (band.size() >= 2)
                    for (const BandCell& cell : band[band.size() - 2])
                        if (cell.value == i + 1 && cell.free) penult_free_high = true;
                bool bullets1 = last.size() == 1 && last.front().free &&
                                last.front().value == i + 1 && penult_free_high && first_two_full;
                bool bullets2 = last_free_high >= 2 && last_low < 2 && first_two_full;
                c.require(bullets1 != bullets2, "bullet lists not exclusive");
                c.require(bullets1 == (from_triple == TripleType::type1), "type-1 bullets");
                c.require(bullets2 == (from_triple == TripleType::type2), "type-2 bullets");
            }
        }
    }
}

// --------------------------------------------------------------- criterion 8

void axioms_and_normality() {
    Criterion c("criterion-8 axioms-and-normality", 300.0);
    VerifyReport report = run_normality_suite(4, 3, /*limit=*/0, /*samples=*/10000);
    for (const VerifyRecord& r : report.records)
        c.require(r.pass, r.property + ": " + r.witness);
}

}  // namespace

int main() {
    golden_examples();
    highest_weight_census();
    branching_census();
    oracle_equivalence();
    involution_and_relations();
    bijection_round_trips();
    trichotomy();
    axioms_and_normality();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
