#ifndef GRAPHMETRIC_GRAPH_JSON_HPP
#define GRAPHMETRIC_GRAPH_JSON_HPP

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "digraph.hpp"
#include "errors.hpp"

namespace graphmetric {

// On-disk form: {"n": int, "implicit_self_loops": bool, "edges": [[from, to, weight], ...]}
// Vertices are 0-based; edges are emitted sorted by (from, to) so the output
// is byte-stable for a given graph.

inline nlohmann::json graph_to_json(const weighted_digraph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    j["implicit_self_loops"] = g.implicit_self_loops();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const edge& e : g.edges()) edges.push_back({e.from, e.to, e.weight});
    return j;
}

inline weighted_digraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph json: expected an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw parse_error("graph json: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    const bool implicit =
        j.contains("implicit_self_loops") ? j["implicit_self_loops"].get<bool>() : true;
    if (!j["edges"].is_array()) throw parse_error("graph json: \"edges\" must be an array");
    std::vector<edge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
            !row[1].is_number_integer() || !row[2].is_number())
            throw parse_error("graph json: each edge must be [from, to, weight]");
        edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
    }
    try {
        return weighted_digraph(n, std::move(edges), implicit);
    } catch (const invalid_parameter& e) {
        throw parse_error(std::string("graph json: ") + e.what());
    }
}

inline void write_graph(const weighted_digraph& g, std::ostream& out) {
    out << graph_to_json(g).dump(2) << '\n';
}

inline void write_graph(const weighted_digraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    write_graph(g, out);
    if (!out) throw io_error("failed writing " + path);
}

inline weighted_digraph read_graph(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("graph json: ") + e.what());
    }
    return graph_from_json(j);
}

inline weighted_digraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    try {
        return read_graph(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

} // namespace graphmetric

#endif
