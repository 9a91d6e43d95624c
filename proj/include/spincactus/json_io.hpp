#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spincactus/action.hpp"
#include "spincactus/cactus.hpp"
#include "spincactus/crystal.hpp"
#include "spincactus/decomp.hpp"
#include "spincactus/shapes.hpp"
#include "spincactus/weights.hpp"

// JSON wire formats.  Weights always travel in doubled coordinates:
//   Weight            {"n":4, "doubled":[3,1,1,-1]}
//   TensorElement     {"n":4, "factors":["+-++", ...]}
//   WeightSequence    {"n":4, "mus":[[1,1,1,-1], ...]}
//   CellDiagram       {"n":4, "N":7, "l":[2,3,3,4], "r":[5,4,4,3]}
//   CellTableau       {"n":4, "N":7, "steps":[<CellDiagram>, ...]}
//   ShortYoungDiagram {"n":4, "N":7, "cols":[4,3,3,2]}
//   Sssyt             {"n":4, "N":7, "rows":[[1,3,3,6], ...]}
//   AdmissibleTriple  {"n":12, "gamma":[...], "mu_a":[...], "mu_b":[...]}
//   CactusWord        [{"t":3}, {"s":[1,4]}, ...]

namespace spincactus {

using json = nlohmann::json;

namespace detail {
inline std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}
inline int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}
inline const json& field(const json& j, const char* key) {
    if (!j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}
}  // namespace detail

inline json to_json(const Weight& w) { return json{{"n", w.n}, {"doubled", w.doubled}}; }

inline Weight weight_from_json(const json& j) {
    return Weight(detail::int_field(j, "n"), detail::int_array(detail::field(j, "doubled"), "Weight.doubled"));
}

inline json to_json(const TensorElement& t) {
    json factors = json::array();
    for (const SpinorElement& b : t.factors) factors.push_back(b.to_string());
    return json{{"n", t.rank()}, {"factors", factors}};
}

inline TensorElement tensor_from_json(const json& j) {
    int n = detail::int_field(j, "n");
    std::vector<SpinorElement> factors;
    for (const auto& s : detail::field(j, "factors")) {
        factors.push_back(SpinorElement::from_string(s.get<std::string>()));
        if (factors.back().n != n)
            throw std::invalid_argument("TensorElement: factor length differs from n");
    }
    return TensorElement(std::move(factors));
}

inline json to_json(const WeightSequence& seq) {
    json mus = json::array();
    for (const Weight& mu : seq.mus) mus.push_back(mu.doubled);
    return json{{"n", seq.n}, {"mus", mus}};
}

inline WeightSequence sequence_from_json(const json& j) {
    int n = detail::int_field(j, "n");
    std::vector<Weight> mus;
    for (const auto& entry : detail::field(j, "mus"))
        mus.emplace_back(n, detail::int_array(entry, "WeightSequence.mus"));
    return WeightSequence(n, std::move(mus));
}

inline json to_json(const CellDiagram& d) {
    return json{{"n", d.n}, {"N", d.N}, {"l", d.l}, {"r", d.r}};
}

inline CellDiagram cell_diagram_from_json(const json& j) {
    return CellDiagram(detail::int_field(j, "n"), detail::int_field(j, "N"),
                       detail::int_array(detail::field(j, "l"), "CellDiagram.l"),
                       detail::int_array(detail::field(j, "r"), "CellDiagram.r"));
}

inline json to_json(const CellTableau& ct) {
    json steps = json::array();
    for (const CellDiagram& d : ct.steps) steps.push_back(to_json(d));
    return json{{"n", ct.n()}, {"N", ct.N()}, {"steps", steps}};
}

inline CellTableau cell_tableau_from_json(const json& j) {
    std::vector<CellDiagram> steps;
    for (const auto& s : detail::field(j, "steps")) steps.push_back(cell_diagram_from_json(s));
    CellTableau ct(std::move(steps));
    if (ct.n() != detail::int_field(j, "n") || ct.N() != detail::int_field(j, "N"))
        throw std::invalid_argument("CellTableau: envelope n/N disagree with the steps");
    return ct;
}

inline json to_json(const ShortYoungDiagram& nu) {
    return json{{"n", nu.n}, {"N", nu.N}, {"cols", nu.cols}};
}

inline ShortYoungDiagram short_diagram_from_json(const json& j) {
    return ShortYoungDiagram(detail::int_field(j, "n"), detail::int_field(j, "N"),
                             detail::int_array(detail::field(j, "cols"), "ShortYoungDiagram.cols"));
}

inline json to_json(const Sssyt& x) {
    return json{{"n", x.n}, {"N", x.N}, {"rows", x.rows()}};
}

inline Sssyt sssyt_from_json(const json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : detail::field(j, "rows")) rows.push_back(detail::int_array(row, "Sssyt.rows"));
    return Sssyt::from_rows(detail::int_field(j, "n"), detail::int_field(j, "N"), rows);
}

inline json to_json(const AdmissibleTriple& tr) {
    return json{{"n", tr.rank()},
                {"gamma", tr.gamma.doubled},
                {"mu_a", tr.mu_a.doubled},
                {"mu_b", tr.mu_b.doubled}};
}

inline AdmissibleTriple triple_from_json(const json& j) {
    int n = detail::int_field(j, "n");
    return AdmissibleTriple(Weight(n, detail::int_array(detail::field(j, "gamma"), "AdmissibleTriple.gamma")),
                            Weight(n, detail::int_array(detail::field(j, "mu_a"), "AdmissibleTriple.mu_a")),
                            Weight(n, detail::int_array(detail::field(j, "mu_b"), "AdmissibleTriple.mu_b")));
}

inline json to_json(const CactusWord& w) {
    json out = json::array();
    for (const CactusGenerator& g : w.gens) {
        if (g.kind == CactusGenerator::Kind::bk)
            out.push_back(json{{"t", g.i}});
        else
            out.push_back(json{{"s", {g.p, g.q}}});
    }
    return out;
}

inline CactusWord word_from_json(const json& j, int N) {
    std::vector<CactusGenerator> gens;
    for (const auto& g : j) {
        if (g.contains("t"))
            gens.push_back(CactusGenerator::bk(g.at("t").get<int>()));
        else if (g.contains("s"))
            gens.push_back(CactusGenerator::interval(g.at("s").at(0).get<int>(),
                                                     g.at("s").at(1).get<int>()));
        else
            throw std::invalid_argument("CactusWord: generator needs a 't' or 's' key");
    }
    return CactusWord(N, std::move(gens));
}

inline json to_json(const FreeInterval& iv) {
    json out{{"min", iv.min}, {"max", iv.max}, {"neg_size", iv.neg_size}, {"pos_size", iv.pos_size}};
    out["mid"] = iv.mid ? json(*iv.mid) : json(nullptr);
    return out;
}

/// Which wire format a JSON payload carries, judged by its signature keys.
enum class PayloadKind { weight, tensor, sequence, cell_diagram, cell_tableau, short_diagram, sssyt, triple };

inline PayloadKind payload_kind(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("payload must be a JSON object");
    if (j.contains("gamma")) return PayloadKind::triple;
    if (j.contains("mus")) return PayloadKind::sequence;
    if (j.contains("factors")) return PayloadKind::tensor;
    if (j.contains("steps")) return PayloadKind::cell_tableau;
    if (j.contains("rows")) return PayloadKind::sssyt;
    if (j.contains("cols")) return PayloadKind::short_diagram;
    if (j.contains("l") && j.contains("r")) return PayloadKind::cell_diagram;
    if (j.contains("doubled")) return PayloadKind::weight;
    throw std::invalid_argument("payload does not match any known format");
}

}  // namespace spincactus
