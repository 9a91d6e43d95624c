// Command-line front end: enumeration, generator application, orbits,
// classification, verification suites, rendering, and format conversion over
// the JSON formats documented in docs/formats.md.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spincactus/json_io.hpp"
#include "spincactus/verify.hpp"

using namespace spincactus;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open input file " + path);
    return json::parse(in);
}

Sssyt to_sssyt_any(const json& payload) {
    switch (payload_kind(payload)) {
        case PayloadKind::sssyt: return sssyt_from_json(payload);
        case PayloadKind::cell_tableau:
            return sssyt_from_cell_tableau(cell_tableau_from_json(payload));
        case PayloadKind::sequence: return sssyt_from_path(sequence_from_json(payload));
        default: throw std::invalid_argument("input is not a tableau, cell table, or sequence");
    }
}

json from_sssyt_as(const Sssyt& x, PayloadKind kind) {
    switch (kind) {
        case PayloadKind::sssyt: return to_json(x);
        case PayloadKind::cell_tableau: return to_json(cell_tableau_from_sssyt(x));
        case PayloadKind::sequence: return to_json(path_from_sssyt(x));
        default: throw std::logic_error("unsupported output representation");
    }
}

PayloadKind parse_repr(const std::string& name) {
    if (name == "seq") return PayloadKind::sequence;
    if (name == "celltab") return PayloadKind::cell_tableau;
    if (name == "sssyt") return PayloadKind::sssyt;
    throw std::invalid_argument("representation must be seq, celltab or sssyt, got " + name);
}

int run_enumerate(int n, int N, const std::string& lambda_file, const std::string& shape_file,
                  const std::string& as, int limit) {
    PayloadKind repr = parse_repr(as);
    std::optional<Weight> lambda;
    if (!lambda_file.empty()) {
        lambda = weight_from_json(load_json_file(lambda_file));
    } else if (!shape_file.empty()) {
        ShortYoungDiagram nu = short_diagram_from_json(load_json_file(shape_file));
        lambda = weight_from_cell_diagram(cell_diagram_from_short_diagram(nu, n, N));
    }
    std::vector<WeightSequence> paths =
        lambda ? enumerate_paths_to(*lambda, N, limit) : enumerate_paths(n, N, limit);
    for (const WeightSequence& seq : paths) {
        if (repr == PayloadKind::sequence)
            std::cout << to_json(seq).dump() << "\n";
        else
            std::cout << from_sssyt_as(sssyt_from_path(seq), repr).dump() << "\n";
    }
    return 0;
}

int run_act(const std::string& in_file, const std::string& gen, const std::string& word_text) {
    json payload = load_json_file(in_file);
    PayloadKind kind = payload_kind(payload);
    Sssyt x = to_sssyt_any(payload);
    std::string text = !gen.empty() ? gen : word_text;
    CactusWord word = parse_word(text, x.N);
    Sssyt moved = apply_word(word, x);
    std::cout << from_sssyt_as(moved, kind).dump() << "\n";
    return 0;
}

int run_orbit(const std::string& in_file, const std::string& gens_text) {
    json payload = load_json_file(in_file);
    PayloadKind kind = payload_kind(payload);
    Sssyt x = to_sssyt_any(payload);
    std::vector<int> gens;
    std::stringstream ss(gens_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) gens.push_back(std::stoi(tok));
    for (const Sssyt& y : orbit(x, gens)) std::cout << from_sssyt_as(y, kind).dump() << "\n";
    return 0;
}

int run_classify(const std::string& in_file, int i) {
    json payload = load_json_file(in_file);
    AdmissibleTriple tr = [&] {
        if (payload_kind(payload) == PayloadKind::triple) return triple_from_json(payload);
        if (i < 1) throw std::invalid_argument("classify needs --i for sequence or tableau input");
        WeightSequence seq = payload_kind(payload) == PayloadKind::sequence
                                 ? sequence_from_json(payload)
                                 : path_from_sssyt(to_sssyt_any(payload));
        if (i >= seq.size()) throw std::invalid_argument("--i out of range for the input");
        return AdmissibleTriple(seq.prefix_sum(i - 1), seq.mus[i - 1], seq.mus[i]);
    }();
    TripleType type = classify(tr);
    json out;
    out["type"] = to_string(type);
    out["type_index"] = static_cast<int>(type);
    json intervals = json::array();
    for (const FreeInterval& iv : free_intervals(tr)) intervals.push_back(to_json(iv));
    out["free_intervals"] = intervals;
    auto [a_star, b_star] = star(tr);
    out["mu_a_star"] = a_star.doubled;
    out["mu_b_star"] = b_star.doubled;
    if (type == TripleType::type1) {
        auto [a_dia, b_dia] = diamond(tr);
        out["mu_a_diamond"] = a_dia.doubled;
        out["mu_b_diamond"] = b_dia.doubled;
    } else if (type == TripleType::type2) {
        auto [a_dd, b_dd] = double_diamond(tr);
        out["mu_a_double_diamond"] = a_dd.doubled;
        out["mu_b_double_diamond"] = b_dd.doubled;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_render(const std::string& in_file) {
    json payload = load_json_file(in_file);
    switch (payload_kind(payload)) {
        case PayloadKind::cell_diagram: std::cout << render(cell_diagram_from_json(payload)); break;
        case PayloadKind::cell_tableau: std::cout << render(cell_tableau_from_json(payload)); break;
        case PayloadKind::sssyt: std::cout << render(sssyt_from_json(payload)); break;
        case PayloadKind::short_diagram: std::cout << render(short_diagram_from_json(payload)); break;
        case PayloadKind::sequence:
            std::cout << render(cell_tableau_from_path(sequence_from_json(payload)));
            break;
        default: throw std::invalid_argument("input kind has no rendering");
    }
    return 0;
}

int run_convert(const std::string& in_file, const std::string& from, const std::string& to) {
    json payload = load_json_file(in_file);
    if (payload_kind(payload) != parse_repr(from))
        throw std::invalid_argument("input does not match --from " + from);
    std::cout << from_sssyt_as(to_sssyt_any(payload), parse_repr(to)).dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int n, int N, int limit, int samples,
               std::uint64_t seed, bool inject_fault) {
    VerifyReport report;
    if (suite == "involution") {
        report = run_involution_suite(n, N, limit);
    } else if (suite == "oracle") {
        report = run_oracle_suite(n, N, limit);
    } else if (suite == "cactus-relations") {
        report = run_cactus_relations_suite(n, N, limit, inject_fault);
    } else if (suite == "bijections") {
        report = run_bijections_suite(n, N, limit);
    } else if (suite == "normality") {
        report = run_normality_suite(n, N, limit, samples, seed);
    } else {
        throw std::invalid_argument("unknown suite " + suite);
    }
    for (const VerifyRecord& r : report.records) {
        json line{{"suite", r.suite}, {"scope", r.scope}, {"property", r.property}, {"pass", r.pass}};
        if (!r.witness.empty()) line["witness"] = r.witness;
        std::cout << line.dump() << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cactus-group actions on short semi-standard Young tableaux"};
    app.require_subcommand(1);

    int n = 0, N = 0, limit = 0, index = 0, samples = 10000;
    std::uint64_t seed = 20240901;
    std::string in_file, lambda_file, shape_file, as = "seq", gen, word_text, gens_text;
    std::string from, to, suite;
    bool inject_fault = false;

    auto* enumerate = app.add_subcommand("enumerate", "list a carrier set");
    enumerate->add_option("--n", n, "rank")->required();
    enumerate->add_option("--N", N, "number of steps")->required();
    auto* lam_opt = enumerate->add_option("--lambda", lambda_file, "weight JSON file");
    enumerate->add_option("--shape", shape_file, "column-shape JSON file")->excludes(lam_opt);
    enumerate->add_option("--as", as, "output representation: seq|celltab|sssyt");
    enumerate->add_option("--limit", limit, "enumeration size cap (overrides SPINCACTUS_LIMIT)");

    auto* act = app.add_subcommand("act", "apply a generator or word");
    act->add_option("--in", in_file, "input JSON file")->required();
    auto* gen_opt = act->add_option("--gen", gen, "single generator token, e.g. t3");
    act->add_option("--word", word_text, "whitespace-separated word, e.g. 't1 s2,5 t4'")
        ->excludes(gen_opt);

    auto* orbit_cmd = app.add_subcommand("orbit", "closure under chosen generators");
    orbit_cmd->add_option("--in", in_file, "input JSON file")->required();
    orbit_cmd->add_option("--gens", gens_text, "comma-separated generator indices")->required();

    auto* classify_cmd = app.add_subcommand("classify", "type and free intervals at a position");
    classify_cmd->add_option("--in", in_file, "triple, sequence, or tableau JSON file")->required();
    classify_cmd->add_option("--i", index, "generator index (for sequence/tableau input)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "involution|oracle|cactus-relations|bijections|normality")
        ->required();
    verify->add_option("--n", n, "rank")->required();
    verify->add_option("--N", N, "number of steps")->required();
    verify->add_option("--limit", limit, "size cap (overrides SPINCACTUS_LIMIT)");
    verify->add_option("--samples", samples, "random samples for the normality suite");
    verify->add_option("--seed", seed, "random seed for the normality suite");
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt the action on purpose (harness self-test)");

    auto* render_cmd = app.add_subcommand("render", "plain-text drawing");
    render_cmd->add_option("--in", in_file, "input JSON file")->required();

    auto* convert = app.add_subcommand("convert", "translate between representations");
    convert->add_option("--from", from, "seq|celltab|sssyt")->required();
    convert->add_option("--to", to, "seq|celltab|sssyt")->required();
    convert->add_option("--in", in_file, "input JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(n, N, lambda_file, shape_file, as, limit);
        if (act->parsed()) {
            if (gen.empty() && word_text.empty())
                throw std::invalid_argument("act needs --gen or --word");
            return run_act(in_file, gen, word_text);
        }
        if (orbit_cmd->parsed()) return run_orbit(in_file, gens_text);
        if (classify_cmd->parsed()) return run_classify(in_file, index);
        if (verify->parsed()) return run_verify(suite, n, N, limit, samples, seed, inject_fault);
        if (render_cmd->parsed()) return run_render(in_file);
        if (convert->parsed()) return run_convert(in_file, from, to);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
