#include "gg/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gg/diagram.hpp"
#include "gg/errors.hpp"
#include "gg/json_io.hpp"
#include "gg/semantics.hpp"
#include "gg/suites.hpp"

namespace gg {

namespace {

Json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file \"" + path + "\"");
    return Json::parse(in);
}

// --game takes inline JSON (starts with '{') or a path to a JSON file.
Json json_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    return json_from_file(arg);
}

GraphInput load_graph(const std::string& expr, const std::string& file,
                      std::size_t perm_bound) {
    if (expr.empty() == file.empty())
        throw InputError("give exactly one graph, via --expr or --file");
    if (!expr.empty()) return {to_raw(eval(*parse_term(expr), perm_bound)), false};
    return graph_input_from_json(json_from_file(file));
}

int run_normalize(const std::string& expr, const std::string& file, bool as_json,
                  std::size_t perm_bound, std::ostream& out) {
    GraphInput in = load_graph(expr, file, perm_bound);
    OpenGraph g = canonicalize(in.raw, perm_bound);
    if (as_json) {
        out << graph_to_json(g).dump(2) << "\n";
        return 0;
    }
    out << "m: " << g.dom() << "  n: " << g.cod() << "  k: " << g.vertices() << "\n";
    out << "A: " << to_string(g.a().canon()) << "\n";
    out << "B: " << to_string(g.b()) << "\n";
    out << "C: " << to_string(g.c()) << "\n";
    out << "D: " << to_string(g.d()) << "\n";
    out << "E: " << to_string(g.e().canon()) << "\n";
    return 0;
}

int run_eq(const std::vector<std::string>& exprs, const std::vector<std::string>& files,
           bool as_json, std::size_t perm_bound, std::ostream& out) {
    if (exprs.size() + files.size() != 2)
        throw InputError("eq needs exactly two graphs across --expr and --file");
    std::vector<OpenGraph> gs;
    for (const std::string& e : exprs) gs.push_back(eval(*parse_term(e), perm_bound));
    for (const std::string& f : files)
        gs.push_back(canonicalize(graph_input_from_json(json_from_file(f)).raw, perm_bound));
    bool equal = og_equal(gs[0], gs[1]);
    if (as_json)
        out << Json{{"schema", 1}, {"equal", equal}}.dump(2) << "\n";
    else
        out << (equal ? "equal" : "different") << "\n";
    return equal ? 0 : 1;
}

int run_nash(const std::string& expr, const std::string& file, const std::string& game_arg,
             bool cap_given, Nat cap, bool as_json, std::size_t perm_bound,
             std::uint64_t guard, std::ostream& out, std::ostream& err) {
    GraphInput in = load_graph(expr, file, perm_bound);
    if (in.raw.m != 0 || in.raw.n != 0)
        throw InputError("nash needs a closed graph (no open ports)");

    GameSpec spec = game_spec_from_json(json_from_arg(game_arg));
    if (cap_given) {
        if (spec.kind != "majority") throw InputError("--cap only applies to the majority game");
        if (cap == 0) throw InputError("a majority cap must be at least 1");
        spec.has_cap = true;
        spec.cap = cap;
    }

    // Engine and direct search must see the same vertex order: the normal
    // form's for expressions and block files, the caller's for edge lists.
    std::vector<StrategyProfile> engine;
    NatMatrix sym;
    if (in.user_ordered) {
        sym = add(in.raw.e, transpose(in.raw.e));
    } else {
        OpenGraph g = canonicalize(in.raw, perm_bound);
        sym = symmetrize(g.e());
        in.raw = to_raw(g);
    }
    Nat auto_cap = recommended_cap(sym);
    if (spec.kind == "majority" && spec.has_cap && spec.cap < auto_cap)
        err << "warning: cap " << spec.cap << " is below the largest neighbourhood size "
            << auto_cap << "; saturated counts may merge distinct signals\n";
    MonoidGame game = resolve_game(spec, auto_cap);

    engine = nash_raw(in.raw, game, guard);
    std::vector<StrategyProfile> direct = classical_nash_sym(game, sym, guard);
    if (engine != direct) {
        err << "cross-check failed: the game engine and the direct search disagree\n";
        return 1;
    }

    if (as_json) {
        Json profiles = Json::array();
        for (const StrategyProfile& p : engine) {
            Json row = Json::array();
            for (std::size_t s : p) row.push_back(game.strategy_labels[s]);
            profiles.push_back(std::move(row));
        }
        out << Json{{"schema", 1},
                    {"count", engine.size()},
                    {"vertex_order", in.user_ordered ? "input" : "normal"},
                    {"profiles", std::move(profiles)}}
                   .dump(2)
            << "\n";
    } else {
        for (const StrategyProfile& p : engine) {
            for (std::size_t s : p) out << game.strategy_labels[s];
            out << "\n";
        }
    }
    err << engine.size() << " equilibria over " << in.raw.k << " vertices\n";
    return engine.empty() ? 1 : 0;
}

int run_check(const std::string& which, std::uint64_t seed, std::size_t instances,
              std::size_t random_terms, std::size_t perm_bound, bool as_json,
              std::ostream& out) {
    std::vector<CheckResult> rows;
    if (which == "axioms")
        rows = axiom_suite(perm_bound);
    else if (which == "props")
        rows = prop_law_suite(seed, instances, perm_bound);
    else
        rows = functor_suite(seed, random_terms);

    std::size_t passed = 0;
    for (const CheckResult& r : rows) passed += r.pass ? 1 : 0;

    if (as_json) {
        Json results = Json::array();
        for (const CheckResult& r : rows)
            results.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out << Json{{"schema", 1},
                    {"results", std::move(results)},
                    {"passed", passed},
                    {"total", rows.size()}}
                   .dump(2)
            << "\n";
    } else {
        for (const CheckResult& r : rows) {
            if (r.pass)
                out << "PASS " << r.name << "\n";
            else
                out << "FAIL " << r.name << ": " << r.detail << "\n";
        }
        out << passed << "/" << rows.size() << " passed\n";
    }
    return passed == rows.size() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"open graphs in adjacency normal form and the network games they play"};
    app.require_subcommand(1);

    auto* norm = app.add_subcommand("normalize", "reduce a graph to its normal form");
    std::string n_expr, n_file;
    bool n_json = false;
    std::size_t n_pb = kDefaultPermBound;
    norm->add_option("--expr", n_expr, "wiring expression");
    norm->add_option("--file", n_file, "JSON graph file");
    norm->add_flag("--json", n_json, "emit JSON");
    norm->add_option("--perm-bound", n_pb, "vertex permutation search cap");

    auto* eq = app.add_subcommand("eq", "decide whether two graphs are equal");
    std::vector<std::string> e_exprs, e_files;
    bool e_json = false;
    std::size_t e_pb = kDefaultPermBound;
    eq->add_option("--expr", e_exprs, "wiring expression (repeatable)");
    eq->add_option("--file", e_files, "JSON graph file (repeatable)");
    eq->add_flag("--json", e_json, "emit JSON");
    eq->add_option("--perm-bound", e_pb, "vertex permutation search cap");

    auto* nash_cmd = app.add_subcommand("nash", "pure equilibria of a closed graph");
    std::string a_expr, a_file, a_game;
    Nat a_cap = 0;
    bool a_json = false;
    std::size_t a_pb = kDefaultPermBound;
    std::uint64_t a_guard = kDefaultProfileGuard;
    nash_cmd->add_option("--expr", a_expr, "wiring expression");
    nash_cmd->add_option("--file", a_file, "JSON graph file");
    nash_cmd->add_option("--game", a_game, "stage game, inline JSON or a file path")
        ->required();
    nash_cmd->add_option("--cap", a_cap, "majority counter cap (default: fits the graph)");
    nash_cmd->add_flag("--json", a_json, "emit JSON");
    nash_cmd->add_option("--perm-bound", a_pb, "vertex permutation search cap");
    nash_cmd->add_option("--profile-guard", a_guard, "profile enumeration cap");

    auto* check = app.add_subcommand("check", "run a self-check suite");
    std::string c_which;
    std::uint64_t c_seed = 0;
    std::size_t c_instances = 500, c_terms = 20, c_pb = kDefaultPermBound;
    bool c_json = false;
    check->add_option("suite", c_which, "axioms, props or functor")
        ->required()
        ->check(CLI::IsMember({"axioms", "props", "functor"}));
    check->add_option("--seed", c_seed, "random seed");
    check->add_option("--instances", c_instances, "cases per property");
    check->add_option("--random-terms", c_terms, "random wiring terms to compare");
    check->add_option("--perm-bound", c_pb, "vertex permutation search cap");
    check->add_flag("--json", c_json, "emit JSON");

    try {
        std::vector<std::string> argv_store;
        argv_store.reserve(args.size() + 1);
        argv_store.push_back("graphgame");
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        argv.reserve(argv_store.size());
        for (const std::string& s : argv_store) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (norm->parsed()) return run_normalize(n_expr, n_file, n_json, n_pb, out);
        if (eq->parsed()) return run_eq(e_exprs, e_files, e_json, e_pb, out);
        if (nash_cmd->parsed())
            return run_nash(a_expr, a_file, a_game, nash_cmd->count("--cap") > 0, a_cap,
                            a_json, a_pb, a_guard, out, err);
        if (check->parsed())
            return run_check(c_which, c_seed, c_instances, c_terms, c_pb, c_json, out);
        throw InputError("no subcommand given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gg
