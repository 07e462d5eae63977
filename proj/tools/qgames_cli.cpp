// Command-line front end: game/state documents in, transformed games,
// classifications and equilibria out.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgames/emw_scheme.hpp"
#include "qgames/mw_scheme.hpp"
#include "qgames/nash_solver.hpp"
#include "qgames/problem_doc.hpp"
#include "qgames/state_classify.hpp"

namespace {

using nlohmann::json;
using namespace qgames;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitReproduceMismatch = 3;

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Rounds to 6 significant digits for human display.
std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json game_to_json(const BimatrixGame& g) {
    json rows = json::array();
    for (const auto& row : g.payoffs()) {
        json jrow = json::array();
        for (const PayoffPair& p : row) jrow.push_back(json::array({p.p1, p.p2}));
        rows.push_back(std::move(jrow));
    }
    return json{{"payoffs", std::move(rows)},
                {"row_labels", g.row_labels()},
                {"col_labels", g.col_labels()}};
}

void print_game_table(const BimatrixGame& g, std::ostream& os) {
    std::size_t width = 0;
    for (const auto& l : g.row_labels()) width = std::max(width, l.size());
    std::vector<std::vector<std::string>> cells(g.n_rows());
    std::vector<std::size_t> col_width(g.n_cols());
    for (std::size_t c = 0; c < g.n_cols(); ++c) col_width[c] = g.col_labels()[c].size();
    for (std::size_t r = 0; r < g.n_rows(); ++r) {
        for (std::size_t c = 0; c < g.n_cols(); ++c) {
            std::string cell = "(" + fmt6(g.at(r, c).p1) + ", " + fmt6(g.at(r, c).p2) + ")";
            col_width[c] = std::max(col_width[c], cell.size());
            cells[r].push_back(std::move(cell));
        }
    }
    os << std::string(width, ' ');
    for (std::size_t c = 0; c < g.n_cols(); ++c) {
        os << "  " << g.col_labels()[c]
           << std::string(col_width[c] - g.col_labels()[c].size(), ' ');
    }
    os << "\n";
    for (std::size_t r = 0; r < g.n_rows(); ++r) {
        os << g.row_labels()[r] << std::string(width - g.row_labels()[r].size(), ' ');
        for (std::size_t c = 0; c < g.n_cols(); ++c) {
            os << "  " << cells[r][c] << std::string(col_width[c] - cells[r][c].size(), ' ');
        }
        os << "\n";
    }
}

json strategy_to_json(const MixedStrategy& s) {
    json out = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i]);
    return out;
}

std::string strategy_summary(const MixedStrategy& s, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 1e-12) continue;
        if (!out.empty()) out += " + ";
        out += fmt6(s[i]) + " " + labels[i];
    }
    return out;
}

json equilibria_to_json(const std::vector<Equilibrium>& eqs) {
    json out = json::array();
    for (const Equilibrium& e : eqs) {
        out.push_back(json{{"s1", strategy_to_json(e.s1)},
                           {"s2", strategy_to_json(e.s2)},
                           {"payoff", json::array({e.payoff.p1, e.payoff.p2})},
                           {"kind", e.kind == EquilibriumKind::Pure ? "pure" : "mixed"}});
    }
    return out;
}

struct RunOptions {
    std::string format = "table";
    std::size_t max_support = 0;  // 0 = min(dims)
};

BimatrixGame scheme_game(const ProblemDocument& doc) {
    switch (doc.scheme) {
        case Scheme::Mw:
            return mw_output_game(doc.game, doc.states.at(0));
        case Scheme::Emw:
            return emw_bimatrix(EmwConfig(doc.game, doc.states));
        case Scheme::Refined:
            throw InvalidArgument(
                "the refined scheme has a continuum of strategies and no finite game; "
                "use scheme mw or emw");
    }
    throw InvalidArgument("unknown scheme");
}

int cmd_transform(const ProblemDocument& doc, const RunOptions& opt) {
    const BimatrixGame out = mw_output_game(doc.game, doc.states.at(0));
    if (opt.format == "json") {
        std::cout << json{{"output_game", game_to_json(out)}}.dump(2) << "\n";
    } else {
        print_game_table(out, std::cout);
    }
    return kExitOk;
}

int cmd_emw(const ProblemDocument& doc, const RunOptions& opt) {
    const BimatrixGame out = emw_bimatrix(EmwConfig(doc.game, doc.states));
    if (opt.format == "json") {
        std::cout << json{{"emw_game", game_to_json(out)}}.dump(2) << "\n";
    } else {
        print_game_table(out, std::cout);
    }
    return kExitOk;
}

int cmd_classify(const ProblemDocument& doc, const RunOptions& opt) {
    const EmwConfig cfg(doc.game, doc.states);
    const Classification cls = classify_emw(cfg);
    const bool classical = cls.kind == GameClass::Classical;
    if (opt.format == "json") {
        json j{{"classification", classical ? "classical" : "non-classical"},
               {"profiles_tested", cls.profiles_tested}};
        if (cls.witness) {
            j["witness"] = json{{"s1", strategy_to_json(cls.witness->first)},
                                {"s2", strategy_to_json(cls.witness->second)}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (classical ? "classical" : "non-classical") << "\n";
        if (cls.witness) {
            std::vector<std::string> labels1, labels2;
            for (std::size_t k = 0; k < cfg.strategy_count(1); ++k) {
                labels1.push_back(cfg.strategy_label(1, k));
            }
            for (std::size_t k = 0; k < cfg.strategy_count(2); ++k) {
                labels2.push_back(cfg.strategy_label(2, k));
            }
            std::cout << "witness s1: " << strategy_summary(cls.witness->first, labels1) << "\n";
            std::cout << "witness s2: " << strategy_summary(cls.witness->second, labels2)
                      << "\n";
        }
    }
    return kExitOk;
}

int cmd_solve(const ProblemDocument& doc, const RunOptions& opt) {
    const BimatrixGame g = scheme_game(doc);
    const std::size_t max_support =
        opt.max_support == 0 ? std::min(g.n_rows(), g.n_cols())
                             : std::min(opt.max_support, std::min(g.n_rows(), g.n_cols()));
    const SupportEnumerationResult res = support_enumeration(g, max_support);
    if (opt.format == "json") {
        json j{{"equilibria", equilibria_to_json(res.equilibria)},
               {"degenerate_supports_skipped", res.degenerate_supports.size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.equilibria.empty()) std::cout << "no equilibria found\n";
        for (const Equilibrium& e : res.equilibria) {
            std::cout << (e.kind == EquilibriumKind::Pure ? "pure " : "mixed") << "  s1: "
                      << strategy_summary(e.s1, g.row_labels()) << "  s2: "
                      << strategy_summary(e.s2, g.col_labels()) << "  payoff: ("
                      << fmt6(e.payoff.p1) << ", " << fmt6(e.payoff.p2) << ")\n";
        }
        if (!res.degenerate_supports.empty()) {
            std::cout << "note: " << res.degenerate_supports.size()
                      << " degenerate support pair(s) skipped\n";
        }
    }
    return kExitOk;
}

struct Fixture {
    BimatrixGame input;
    CVector state;
    Scheme scheme;
    BimatrixGame expected;
    // Pure profiles that must / must not be equilibria of the expected game.
    std::vector<std::pair<std::size_t, std::size_t>> must_include;
    std::vector<std::pair<std::size_t, std::size_t>> must_exclude;
};

Fixture make_fixture(const std::string& id) {
    const BimatrixGame bos({{{5, 3}, {1, 1}}, {{1, 1}, {3, 5}}}, {"t", "b"}, {"l", "r"});
    if (id == "diagram7") {
        return Fixture{bos,
                       CVector{{kInvSqrt2, 0}, {kInvSqrt2, 0}, {0, 0}, {0, 0}},
                       Scheme::Mw,
                       BimatrixGame({{{3, 2}, {3, 2}}, {{2, 3}, {2, 3}}}),
                       {},
                       {}};
    }
    if (id == "bos-00-11") {
        return Fixture{bos,
                       CVector{{kInvSqrt2, 0}, {0, 0}, {0, 0}, {kInvSqrt2, 0}},
                       Scheme::Emw,
                       BimatrixGame({{{5, 3}, {1, 1}, {5, 3}, {1, 1}},
                                     {{1, 1}, {3, 5}, {1, 1}, {3, 5}},
                                     {{5, 3}, {1, 1}, {4, 4}, {1, 1}},
                                     {{1, 1}, {3, 5}, {1, 1}, {4, 4}}}),
                       {},
                       {{2, 2}, {3, 3}}};
    }
    if (id == "bos-01-10") {
        return Fixture{bos,
                       CVector{{0, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {0, 0}},
                       Scheme::Emw,
                       BimatrixGame({{{5, 3}, {1, 1}, {5, 3}, {1, 1}},
                                     {{1, 1}, {3, 5}, {1, 1}, {3, 5}},
                                     {{5, 3}, {1, 1}, {1, 1}, {4, 4}},
                                     {{1, 1}, {3, 5}, {4, 4}, {1, 1}}}),
                       {{2, 3}},
                       {}};
    }
    if (id == "riskgame") {
        return Fixture{BimatrixGame({{{5, 5}, {0, 4}}, {{4, 0}, {2, 2}}}, {"t", "b"},
                                    {"l", "r"}),
                       CVector{{0, 0}, {0, 0}, {0, 0}, {1, 0}},
                       Scheme::Emw,
                       BimatrixGame({{{5, 5}, {0, 4}, {5, 5}, {0, 4}},
                                     {{4, 0}, {2, 2}, {4, 0}, {2, 2}},
                                     {{5, 5}, {0, 4}, {2, 2}, {4, 0}},
                                     {{4, 0}, {2, 2}, {0, 4}, {5, 5}}}),
                       {{3, 3}},
                       {{2, 2}}};
    }
    throw InvalidArgument("unknown fixture id: " + id +
                          " (known: diagram7, bos-00-11, bos-01-10, riskgame)");
}

int cmd_reproduce(const std::string& id, const RunOptions& opt) {
    const Fixture fx = make_fixture(id);
    const BimatrixGame actual = fx.scheme == Scheme::Mw
                                    ? mw_output_game(fx.input, fx.state)
                                    : emw_bimatrix(EmwConfig(fx.input, {fx.state}));
    bool ok = actual.same_payoffs(fx.expected, tolerance());
    std::string detail;
    if (!ok) detail = "output table differs from expected";

    const std::vector<Equilibrium> eqs = pure_nash(actual);
    auto has_pure = [&](std::size_t r, std::size_t c) {
        for (const Equilibrium& e : eqs) {
            if (e.s1[r] == 1.0 && e.s2[c] == 1.0) return true;
        }
        return false;
    };
    for (const auto& [r, c] : fx.must_include) {
        if (!has_pure(r, c)) {
            ok = false;
            detail = "expected pure equilibrium at (" + actual.row_labels()[r] + ", " +
                     actual.col_labels()[c] + ") missing";
        }
    }
    for (const auto& [r, c] : fx.must_exclude) {
        if (has_pure(r, c)) {
            ok = false;
            detail = "unexpected pure equilibrium at (" + actual.row_labels()[r] + ", " +
                     actual.col_labels()[c] + ")";
        }
    }

    if (opt.format == "json") {
        json j{{"fixture", id},
               {"match", ok},
               {"output_game", game_to_json(actual)},
               {"pure_equilibria", equilibria_to_json(eqs)}};
        if (!ok) j["detail"] = detail;
        std::cout << j.dump(2) << "\n";
    } else {
        print_game_table(actual, std::cout);
        std::cout << (ok ? "reproduce " + id + ": match"
                         : "reproduce " + id + ": MISMATCH (" + detail + ")")
                  << "\n";
    }
    return ok ? kExitOk : kExitReproduceMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantization of bimatrix games: induced output games, "
                 "classification and Nash equilibria"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input_path = "-";
    std::string scheme_override;
    std::string format;
    double tol = 0.0;
    std::size_t max_support = 0;
    std::string fixture_id;

    app.add_option("--tolerance", tol, "numeric tolerance override");
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto add_doc_options = [&](CLI::App* sub) {
        sub->add_option("--input", input_path, "problem document (JSON), '-' for stdin");
        sub->add_option("--scheme", scheme_override, "scheme override: mw, refined or emw")
            ->check(CLI::IsMember({"mw", "refined", "emw"}));
    };

    CLI::App* transform = app.add_subcommand("transform", "emit the MW output game");
    add_doc_options(transform);
    CLI::App* emw = app.add_subcommand("emw", "emit the extended-scheme bimatrix");
    add_doc_options(emw);
    CLI::App* classify =
        app.add_subcommand("classify", "classify the extended scheme's output game");
    add_doc_options(classify);
    CLI::App* solve = app.add_subcommand("solve", "find Nash equilibria of the scheme's game");
    add_doc_options(solve);
    solve->add_option("--max-support", max_support, "largest support size to enumerate");
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "run a built-in fixture and diff against expectations");
    reproduce->add_option("id", fixture_id, "diagram7, bos-00-11, bos-01-10 or riskgame")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tol != 0.0) set_tolerance(tol);

        RunOptions opt;
        if (max_support != 0) opt.max_support = max_support;

        if (reproduce->parsed()) {
            if (!format.empty()) opt.format = format;
            return cmd_reproduce(fixture_id, opt);
        }

        ProblemDocument doc = parse_problem(read_input(input_path));
        if (doc.options.tolerance && tol == 0.0) set_tolerance(*doc.options.tolerance);
        if (!scheme_override.empty()) {
            doc.scheme = scheme_override == "mw"
                             ? Scheme::Mw
                             : (scheme_override == "emw" ? Scheme::Emw : Scheme::Refined);
        }
        opt.format = !format.empty() ? format : doc.options.format.value_or("table");

        if (transform->parsed()) return cmd_transform(doc, opt);
        if (emw->parsed()) return cmd_emw(doc, opt);
        if (classify->parsed()) return cmd_classify(doc, opt);
        if (solve->parsed()) return cmd_solve(doc, opt);
        return kExitUsage;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
