#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <da1/errors.hpp>
#include <da1/expr.hpp>
#include <da1/graded_algebra.hpp>
#include <da1/subalgebra.hpp>

// Generator-set files:
//   {"generators": [{"name": "g1", "expr": "x^2"}, ...],
//    "bounds": {"word_length": 5, "x_degree_cap": 24, "order_cap": 24}}
// "name" defaults to g1, g2, ...; "bounds" is optional and only meaningful
// for operator generator sets.

namespace da1_cli {

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw da1::error("cannot open generator file '" + path + "'");
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw da1::error("invalid JSON in '" + path + "': " + e.what());
    }
}

struct RawGenSet {
    std::vector<std::pair<std::string, std::string>> generators; // name, expr
    da1::SearchBounds bounds;
};

inline RawGenSet parse_genset_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw da1::error("'" + path + "': expected {\"generators\": [...]}");
    RawGenSet raw;
    std::size_t idx = 0;
    for (const auto& g : j["generators"]) {
        ++idx;
        if (!g.is_object() || !g.contains("expr") || !g["expr"].is_string())
            throw da1::error("'" + path + "': generator " + std::to_string(idx) +
                             " needs a string \"expr\"");
        std::string name = g.value("name", "g" + std::to_string(idx));
        raw.generators.emplace_back(name, g["expr"].get<std::string>());
    }
    if (j.contains("bounds")) {
        const auto& b = j["bounds"];
        if (!b.is_object()) throw da1::error("'" + path + "': \"bounds\" must be an object");
        raw.bounds.word_length = b.value("word_length", raw.bounds.word_length);
        raw.bounds.x_degree_cap = b.value("x_degree_cap", raw.bounds.x_degree_cap);
        raw.bounds.order_cap = b.value("order_cap", raw.bounds.order_cap);
    }
    return raw;
}

struct WeylGenFile {
    da1::FilteredGenSet gens;
    da1::SearchBounds bounds;
};

inline WeylGenFile load_weyl_gens(const std::string& path) {
    RawGenSet raw = parse_genset_json(read_json_file(path), path);
    std::vector<da1::NamedOp> named;
    for (const auto& [name, expr] : raw.generators)
        named.push_back({name, da1::parse_weyl(expr)});
    return WeylGenFile{da1::FilteredGenSet(std::move(named)), raw.bounds};
}

inline da1::GradedGenSet load_graded_gens(const std::string& path) {
    RawGenSet raw = parse_genset_json(read_json_file(path), path);
    std::vector<da1::NamedGraded> named;
    for (const auto& [name, expr] : raw.generators)
        named.push_back({name, da1::parse_graded(expr)});
    return da1::GradedGenSet(std::move(named));
}

} // namespace da1_cli
