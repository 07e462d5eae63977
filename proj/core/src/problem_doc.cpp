#include "qgames/problem_doc.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace qgames {

using nlohmann::json;

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Mw: return "mw";
        case Scheme::Refined: return "refined";
        case Scheme::Emw: return "emw";
    }
    return "mw";
}

namespace {

Scheme scheme_from_name(const std::string& name, const std::string& path) {
    if (name == "mw") return Scheme::Mw;
    if (name == "refined") return Scheme::Refined;
    if (name == "emw") return Scheme::Emw;
    throw SchemaError(path, "scheme must be one of mw, refined, emw");
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(path, "number must be finite");
    return v;
}

BimatrixGame parse_game(const json& j) {
    if (!j.is_object()) throw SchemaError("/game", "expected an object");
    if (!j.contains("payoffs")) throw SchemaError("/game/payoffs", "missing payoff matrix");
    const json& pj = j.at("payoffs");
    if (!pj.is_array() || pj.empty()) {
        throw SchemaError("/game/payoffs", "expected a nonempty array of rows");
    }
    std::vector<std::vector<PayoffPair>> payoffs;
    for (std::size_t r = 0; r < pj.size(); ++r) {
        const std::string rpath = "/game/payoffs/" + std::to_string(r);
        const json& row = pj.at(r);
        if (!row.is_array() || row.empty()) {
            throw SchemaError(rpath, "expected a nonempty array of payoff pairs");
        }
        std::vector<PayoffPair> out_row;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string cpath = rpath + "/" + std::to_string(c);
            const json& cell = row.at(c);
            if (!cell.is_array() || cell.size() != 2) {
                throw SchemaError(cpath, "expected a [p1, p2] pair");
            }
            out_row.emplace_back(number_at(cell.at(0), cpath + "/0"),
                                 number_at(cell.at(1), cpath + "/1"));
        }
        if (!payoffs.empty() && out_row.size() != payoffs[0].size()) {
            throw DimensionError(rpath, "ragged payoff matrix");
        }
        payoffs.push_back(std::move(out_row));
    }

    auto parse_labels = [&](const char* key, std::size_t expected,
                            const std::string& path) -> std::optional<std::vector<std::string>> {
        if (!j.contains(key)) return std::nullopt;
        const json& lj = j.at(key);
        if (!lj.is_array()) throw SchemaError(path, "expected an array of strings");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < lj.size(); ++i) {
            if (!lj.at(i).is_string()) {
                throw SchemaError(path + "/" + std::to_string(i), "expected a string");
            }
            labels.push_back(lj.at(i).get<std::string>());
        }
        if (labels.size() != expected) throw DimensionError(path, "label count mismatch");
        return labels;
    };

    auto rlabels = parse_labels("row_labels", payoffs.size(), "/game/row_labels");
    auto clabels = parse_labels("col_labels", payoffs[0].size(), "/game/col_labels");
    if (rlabels && clabels) {
        return BimatrixGame(std::move(payoffs), std::move(*rlabels), std::move(*clabels));
    }
    BimatrixGame defaulted(payoffs);
    return BimatrixGame(std::move(payoffs),
                        rlabels ? std::move(*rlabels) : defaulted.row_labels(),
                        clabels ? std::move(*clabels) : defaulted.col_labels());
}

CVector parse_state(const json& j, const std::string& path, std::size_t expected_dim) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError(path, "expected a nonempty array of [re, im] amplitudes");
    }
    std::vector<Complex> amps;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string apath = path + "/" + std::to_string(i);
        const json& amp = j.at(i);
        if (!amp.is_array() || amp.size() != 2) {
            throw SchemaError(apath, "expected a [re, im] pair");
        }
        amps.emplace_back(number_at(amp.at(0), apath + "/0"),
                          number_at(amp.at(1), apath + "/1"));
    }
    if (amps.size() != expected_dim) {
        throw DimensionError(path, "state dimension must equal n_rows * n_cols");
    }
    CVector state(std::move(amps));
    if (!state.is_normalized()) throw NormalizationError(path, "state is not normalized");
    return state;
}

}  // namespace

ProblemDocument parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("/", "expected a JSON object");
    if (!j.contains("game")) throw SchemaError("/game", "missing game");

    BimatrixGame game = parse_game(j.at("game"));
    const std::size_t dim = game.n_rows() * game.n_cols();

    std::vector<CVector> states;
    if (j.contains("state") && j.contains("states")) {
        throw SchemaError("/state", "give either state or states, not both");
    }
    if (j.contains("state")) {
        states.push_back(parse_state(j.at("state"), "/state", dim));
    } else if (j.contains("states")) {
        const json& sj = j.at("states");
        if (!sj.is_array() || sj.empty()) {
            throw SchemaError("/states", "expected a nonempty array of states");
        }
        for (std::size_t i = 0; i < sj.size(); ++i) {
            states.push_back(parse_state(sj.at(i), "/states/" + std::to_string(i), dim));
        }
    } else {
        throw SchemaError("/states", "missing state(s)");
    }

    ProblemDocument doc{std::move(game), std::move(states), Scheme::Mw, {}};
    if (j.contains("scheme")) {
        if (!j.at("scheme").is_string()) throw SchemaError("/scheme", "expected a string");
        doc.scheme = scheme_from_name(j.at("scheme").get<std::string>(), "/scheme");
    }
    if (j.contains("options")) {
        const json& oj = j.at("options");
        if (!oj.is_object()) throw SchemaError("/options", "expected an object");
        if (oj.contains("tolerance")) {
            const double tol = number_at(oj.at("tolerance"), "/options/tolerance");
            if (tol <= 0.0) throw SchemaError("/options/tolerance", "must be positive");
            doc.options.tolerance = tol;
        }
        if (oj.contains("format")) {
            if (!oj.at("format").is_string()) {
                throw SchemaError("/options/format", "expected a string");
            }
            const std::string f = oj.at("format").get<std::string>();
            if (f != "json" && f != "table") {
                throw SchemaError("/options/format", "must be json or table");
            }
            doc.options.format = f;
        }
    }
    return doc;
}

std::string serialize_problem(const ProblemDocument& doc) {
    json j;
    json payoffs = json::array();
    for (const auto& row : doc.game.payoffs()) {
        json jrow = json::array();
        for (const PayoffPair& p : row) jrow.push_back(json::array({p.p1, p.p2}));
        payoffs.push_back(std::move(jrow));
    }
    j["game"]["payoffs"] = std::move(payoffs);
    j["game"]["row_labels"] = doc.game.row_labels();
    j["game"]["col_labels"] = doc.game.col_labels();
    json states = json::array();
    for (const CVector& s : doc.states) {
        json amps = json::array();
        for (std::size_t i = 0; i < s.dim(); ++i) {
            amps.push_back(json::array({s[i].real(), s[i].imag()}));
        }
        states.push_back(std::move(amps));
    }
    j["states"] = std::move(states);
    j["scheme"] = scheme_name(doc.scheme);
    if (doc.options.tolerance || doc.options.format) {
        json opts = json::object();
        if (doc.options.tolerance) opts["tolerance"] = *doc.options.tolerance;
        if (doc.options.format) opts["format"] = *doc.options.format;
        j["options"] = std::move(opts);
    }
    return j.dump(2);
}

}  // namespace qgames
