#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>

#include "spincactus/json_io.hpp"

using namespace spincactus;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPINCACTUS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(SPINCACTUS_FIXTURES_DIR) + "/" + name;
}

std::string load_text(const std::string& name) {
    std::ifstream in(fixture(name));
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("classify reports the worked type-2 example") {
    auto res = run_cli("classify --in " + fixture("ex65_triple.json"));
    REQUIRE(res.status == 0);
    json out = json::parse(res.out);
    CHECK(out.at("type") == "Type2");
    CHECK(out.at("type_index") == 2);
    REQUIRE(out.at("free_intervals").size() == 3);
    CHECK(out.at("free_intervals")[2].at("min") == 9);
    CHECK(out.at("free_intervals")[2].at("max") == 12);
    json golden = json::parse(load_text("ex65_double_diamond.json"));
    CHECK(out.at("mu_b_double_diamond") == golden.at("mu_b_double_diamond"));
}

TEST_CASE("classify also takes a sequence with --i") {
    auto res = run_cli("classify --in " + fixture("ex54_path.json") + " --i 1");
    REQUIRE(res.status == 0);
    json out = json::parse(res.out);
    CHECK(out.contains("type"));
    auto missing = run_cli("classify --in " + fixture("ex54_path.json"));
    CHECK(missing.status == 2);
}

TEST_CASE("act applies a generator to the worked type-2 tableau") {
    auto res = run_cli("act --gen t11 --in " + fixture("ex73_tableau.json"));
    REQUIRE(res.status == 0);
    json expected = json::parse(load_text("ex73_tau_expected.json"));
    CHECK(json::parse(res.out) == to_json(sssyt_from_json(expected)));
}

TEST_CASE("act applies words in both presentations") {
    auto direct = run_cli("act --gen t3 --in " + fixture("ex54_sssyt.json"));
    auto expanded = run_cli("act --word \"s1,3 s1,4 s1,3 s1,2\" --in " + fixture("ex54_sssyt.json"));
    REQUIRE(direct.status == 0);
    REQUIRE(expanded.status == 0);
    CHECK(direct.out == expanded.out);

    // a word and its reverse cancel (these generators are involutions)
    auto twice = run_cli("act --word \"t2 t2\" --in " + fixture("ex54_sssyt.json"));
    REQUIRE(twice.status == 0);
    CHECK(json::parse(twice.out) == to_json(sssyt_from_json(json::parse(load_text("ex54_sssyt.json")))));
}

TEST_CASE("enumerate is deterministic and respects --lambda") {
    std::string args = "enumerate --n 4 --N 3";
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);  // byte-identical

    auto fiber = run_cli("enumerate --n 4 --N 7 --lambda " + fixture("ex52_lambda.json") +
                         " --as sssyt");
    REQUIRE(fiber.status == 0);
}

TEST_CASE("enumerate with a shape lists the tableau carrier") {
    auto res = run_cli("enumerate --n 4 --N 7 --shape " + fixture("ex52_short_diagram.json") +
                       " --as sssyt");
    REQUIRE(res.status == 0);
    std::size_t count = 0;
    std::stringstream ss(res.out);
    std::string line;
    bool found_example = false;
    json example = json::parse(load_text("ex54_sssyt.json"));
    while (std::getline(ss, line)) {
        json x = json::parse(line);
        CHECK(x.at("rows").size() == 4);
        if (x == example) found_example = true;
        ++count;
    }
    CHECK(count > 0);
    CHECK(found_example);
}

TEST_CASE("convert round trips across representations") {
    auto to_celltab = run_cli("convert --from seq --to celltab --in " + fixture("ex54_path.json"));
    REQUIRE(to_celltab.status == 0);
    CHECK(json::parse(to_celltab.out) ==
          json::parse(load_text("ex54_cell_tableau.json")));

    auto to_sssyt = run_cli("convert --from celltab --to sssyt --in " +
                            fixture("ex54_cell_tableau.json"));
    REQUIRE(to_sssyt.status == 0);
    CHECK(json::parse(to_sssyt.out) == json::parse(load_text("ex54_sssyt.json")));

    auto back = run_cli("convert --from sssyt --to seq --in " + fixture("ex54_sssyt.json"));
    REQUIRE(back.status == 0);
    CHECK(json::parse(back.out) == json::parse(load_text("ex54_path.json")));
}

TEST_CASE("render matches the goldens through the CLI") {
    auto res = run_cli("render --in " + fixture("ex51_cell_diagram.json"));
    REQUIRE(res.status == 0);
    CHECK(res.out == load_text("ex51_render.txt"));
    auto res2 = run_cli("render --in " + fixture("ex54_sssyt.json"));
    CHECK(res2.out == load_text("ex54_sssyt_render.txt"));
}

TEST_CASE("orbit emits a closed, sorted set") {
    auto res = run_cli("orbit --gens 1,2 --in " + fixture("ex54_sssyt.json"));
    REQUIRE(res.status == 0);
    std::stringstream ss(res.out);
    std::string line;
    std::vector<json> members;
    while (std::getline(ss, line)) members.push_back(json::parse(line));
    CHECK(members.size() >= 1);
}

TEST_CASE("verify exits 0 on honest suites and 1 on injected faults") {
    auto ok = run_cli("verify --suite involution --n 4 --N 3");
    CHECK(ok.status == 0);

    auto bad = run_cli("verify --suite cactus-relations --n 4 --N 4 --inject-fault");
    CHECK(bad.status == 1);
    // the report names a witness on some failing line
    bool found_witness = false;
    std::stringstream ss(bad.out);
    std::string line;
    while (std::getline(ss, line)) {
        json rec = json::parse(line);
        if (!rec.at("pass").get<bool>() && rec.contains("witness")) found_witness = true;
    }
    CHECK(found_witness);
}

TEST_CASE("JSON wire formats round trip") {
    Weight lam(4, {3, 1, 1, -1});
    CHECK(weight_from_json(to_json(lam)) == lam);

    TensorElement t({SpinorElement::from_string("+-++"), SpinorElement::from_string("++--")});
    CHECK(tensor_from_json(to_json(t)) == t);

    WeightSequence seq = sequence_from_json(json::parse(load_text("ex54_path.json")));
    CHECK(sequence_from_json(to_json(seq)) == seq);

    CellDiagram d = cell_diagram_from_json(json::parse(load_text("ex51_cell_diagram.json")));
    CHECK(cell_diagram_from_json(to_json(d)) == d);

    CellTableau ct = cell_tableau_from_json(json::parse(load_text("ex54_cell_tableau.json")));
    CHECK(cell_tableau_from_json(to_json(ct)) == ct);

    ShortYoungDiagram nu = short_diagram_from_json(json::parse(load_text("ex52_short_diagram.json")));
    CHECK(short_diagram_from_json(to_json(nu)) == nu);

    Sssyt x = sssyt_from_json(json::parse(load_text("ex54_sssyt.json")));
    CHECK(sssyt_from_json(to_json(x)) == x);

    AdmissibleTriple tr = triple_from_json(json::parse(load_text("ex65_triple.json")));
    CHECK(to_json(triple_from_json(to_json(tr))) == to_json(tr));

    // malformed payloads are rejected
    CHECK_THROWS_AS(weight_from_json(json{{"n", 4}}), std::invalid_argument);
    CHECK_THROWS_AS(payload_kind(json{{"x", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(sssyt_from_json(json{{"n", 4}, {"N", 2}, {"rows", {{1, 1, 1}}}}),
                    std::invalid_argument);
}

TEST_CASE("every enumerated element survives a JSON round trip") {
    for (const WeightSequence& seq : enumerate_paths(4, 4)) {
        CHECK(sequence_from_json(to_json(seq)) == seq);
        Sssyt x = sssyt_from_path(seq);
        CHECK(sssyt_from_json(to_json(x)) == x);
        CellTableau ct = cell_tableau_from_sssyt(x);
        CHECK(cell_tableau_from_json(to_json(ct)) == ct);
    }
}

TEST_CASE("invalid flags exit 2") {
    CHECK(run_cli("enumerate --n 4").status == 2);
    CHECK(run_cli("bogus").status == 2);
    CHECK(run_cli("act --in /nonexistent.json --gen t1").status == 2);
    CHECK(run_cli("convert --from seq --to sssyt --in " + fixture("ex54_sssyt.json")).status == 2);
    CHECK(run_cli("verify --suite unknown --n 4 --N 3").status == 2);
    CHECK(run_cli("enumerate --n 4 --N 9 --limit 8").status == 2);
}
