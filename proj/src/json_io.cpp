#include "gg/json_io.hpp"

#include <cstdint>
#include <utility>

#include "gg/errors.hpp"

namespace gg {

namespace {

Nat get_nat(const Json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw InputError(std::string(what) + " must be a whole number");
    if (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)
        throw InputError(std::string(what) + " must not be negative");
    Nat v = j.get<Nat>();
    if (v > kEntryCap) throw InputError(std::string(what) + " exceeds the entry cap");
    return v;
}

Nat get_nat_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return get_nat(j[key], (std::string("\"") + key + "\"").c_str());
}

std::size_t get_size_field(const Json& j, const char* key) {
    return static_cast<std::size_t>(get_nat_field(j, key));
}

double get_double_field(const Json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number())
        throw InputError(std::string("\"") + key + "\" must be a number");
    return j[key].get<double>();
}

NatMatrix matrix_field(const Json& j, const char* key, std::size_t rows, std::size_t cols) {
    if (!j.contains(key))
        throw InputError(std::string("missing block \"") + key + "\"");
    NatMatrix m = matrix_from_json(j[key]);
    if (m.rows() != rows || m.cols() != cols)
        throw InputError(std::string("block \"") + key + "\" must be " + std::to_string(rows) +
                         " x " + std::to_string(cols));
    return m;
}

MonoidPtr monoid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("a monoid needs a string \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "bool_or") return CommMonoid::bool_or();
    if (kind == "sat_counter") return CommMonoid::sat_counter(get_nat_field(j, "cap"));
    if (kind == "product") {
        if (!j.contains("a") || !j.contains("b"))
            throw InputError("a product monoid needs \"a\" and \"b\"");
        return CommMonoid::product(monoid_from_json(j["a"]), monoid_from_json(j["b"]));
    }
    throw InputError("unknown monoid kind \"" + kind + "\"");
}

MonoidGame custom_game_from_json(const Json& j) {
    MonoidGame game;
    if (!j.contains("monoid")) throw InputError("a custom game needs a \"monoid\"");
    game.monoid = monoid_from_json(j["monoid"]);
    if (!j.contains("X") || !j["X"].is_array() || j["X"].empty())
        throw InputError("a custom game needs a non-empty strategy list \"X\"");
    for (const Json& s : j["X"]) {
        if (!s.is_string()) throw InputError("strategy labels must be strings");
        game.strategy_labels.push_back(s.get<std::string>());
    }
    if (!j.contains("f") || !j["f"].is_object())
        throw InputError("a custom game needs a broadcast map \"f\"");
    if (!j.contains("g") || !j["g"].is_object())
        throw InputError("a custom game needs a utility table \"g\"");
    const CommMonoid& m = *game.monoid;
    for (const std::string& s : game.strategy_labels) {
        if (!j["f"].contains(s) || !j["f"][s].is_string())
            throw InputError("\"f\" is missing strategy \"" + s + "\"");
        game.broadcast.push_back(m.by_label(j["f"][s].get<std::string>()));
        // Utility rows are sparse: unnamed signals score zero.
        std::vector<double> row(m.size(), 0.0);
        if (j["g"].contains(s)) {
            if (!j["g"][s].is_object())
                throw InputError("\"g\" rows must map signal labels to numbers");
            for (const auto& [label, value] : j["g"][s].items()) {
                if (!value.is_number())
                    throw InputError("utility for \"" + s + "\" at \"" + label +
                                     "\" must be a number");
                row[m.by_label(label)] = value.get<double>();
            }
        }
        game.utility.push_back(std::move(row));
    }
    game.validate();
    return game;
}

} // namespace

NatMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw InputError("a matrix needs \"rows\", \"cols\" and \"data\"");
    std::size_t rows = get_size_field(j, "rows");
    std::size_t cols = get_size_field(j, "cols");
    if (!j["data"].is_array())
        throw InputError("matrix \"data\" must be an array");
    if (j["data"].size() != rows * cols)
        throw InputError("matrix \"data\" must hold rows x cols entries");
    NatMatrix m(rows, cols);
    std::size_t idx = 0;
    for (const Json& e : j["data"]) {
        m.set(idx / (cols ? cols : 1), idx % (cols ? cols : 1), get_nat(e, "a matrix entry"));
        ++idx;
    }
    return m;
}

Json matrix_to_json(const NatMatrix& m) {
    Json data = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) data.push_back(m.at(i, j));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

GraphInput graph_input_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("a graph must be a JSON object");
    if (j.contains("vertices") || j.contains("edges")) {
        std::size_t k = get_size_field(j, "vertices");
        NatMatrix e(k, k);
        if (j.contains("edges")) {
            if (!j["edges"].is_array())
                throw InputError("\"edges\" must be an array of pairs");
            for (const Json& ed : j["edges"]) {
                if (!ed.is_array() || ed.size() != 2)
                    throw InputError("each edge must be a pair [i, j]");
                auto i = static_cast<std::size_t>(get_nat(ed[0], "an edge endpoint"));
                auto jx = static_cast<std::size_t>(get_nat(ed[1], "an edge endpoint"));
                if (i >= k || jx >= k) throw InputError("edge endpoint out of range");
                e.set(i, jx, nat_add(e.at(i, jx), 1));
            }
        }
        return {raw::RawGraph{0, 0, k, NatMatrix(0, 0), NatMatrix(0, 0), NatMatrix(0, k),
                              NatMatrix(k, 0), std::move(e)},
                true};
    }
    std::size_t m = get_size_field(j, "m");
    std::size_t n = get_size_field(j, "n");
    std::size_t k = get_size_field(j, "k");
    return {raw::RawGraph{m, n, k, matrix_field(j, "A", m, m), matrix_field(j, "B", m, n),
                          matrix_field(j, "C", m, k), matrix_field(j, "D", k, n),
                          matrix_field(j, "E", k, k)},
            false};
}

Json graph_to_json(const OpenGraph& g) {
    return Json{{"schema", 1},
                {"m", g.dom()},
                {"n", g.cod()},
                {"k", g.vertices()},
                {"A", matrix_to_json(g.a().canon())},
                {"B", matrix_to_json(g.b())},
                {"C", matrix_to_json(g.c())},
                {"D", matrix_to_json(g.d())},
                {"E", matrix_to_json(g.e().canon())}};
}

GameSpec game_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("game") || !j["game"].is_string())
        throw InputError("a game spec needs a string \"game\" field");
    GameSpec spec;
    spec.kind = j["game"].get<std::string>();
    if (spec.kind == "majority") {
        if (j.contains("cap")) {
            spec.has_cap = true;
            spec.cap = get_nat_field(j, "cap");
            if (spec.cap == 0) throw InputError("a majority cap must be at least 1");
        }
        if (j.contains("tie_wins")) {
            if (!j["tie_wins"].is_boolean())
                throw InputError("\"tie_wins\" must be a boolean");
            spec.tie_wins = j["tie_wins"].get<bool>();
        }
        return spec;
    }
    if (spec.kind == "best_shot") {
        spec.benefit = get_double_field(j, "benefit", spec.benefit);
        spec.cost = get_double_field(j, "cost", spec.cost);
        return spec;
    }
    if (spec.kind == "custom") {
        spec.custom = custom_game_from_json(j);
        return spec;
    }
    throw InputError("unknown game \"" + spec.kind + "\"");
}

MonoidGame resolve_game(const GameSpec& spec, Nat default_cap) {
    if (spec.kind == "majority")
        return majority_game(spec.has_cap ? spec.cap : default_cap, spec.tie_wins);
    if (spec.kind == "best_shot") return best_shot_game(spec.benefit, spec.cost);
    if (spec.custom) return *spec.custom;
    throw InputError("unresolved game spec");
}

} // namespace gg
