#include "cubex/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cubex {

json complex_to_json(const CubeComplex& x) {
    json j;
    j["vertices"] = x.vertex_count();
    json edges = json::array();
    std::vector<std::pair<int, int>> sorted = x.edges();
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    for (auto& [a, b] : sorted) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

CubeComplex complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw error("complex json: expected keys 'vertices' and 'edges'");
    int n = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw error("complex json: malformed edge");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return CubeComplex::build_from_graph(n, edges);
}

json defining_graph_to_json(const DefiningGraph& g) {
    json j;
    j["labels"] = g.labels;
    json edges = json::array();
    auto sorted = g.edges;
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    for (auto& [a, b] : sorted) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

DefiningGraph defining_graph_from_json(const json& j) {
    DefiningGraph g;
    if (!j.contains("labels") || !j.contains("edges"))
        throw error("defining graph json: expected keys 'labels' and 'edges'");
    for (const auto& l : j.at("labels")) g.labels.push_back(l.get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw error("defining graph json: malformed edge");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.validate();
    return g;
}

DefiningGraph defining_graph_from_dot(const std::string& text) {
    // accepts the fragment between the outer braces: statements `a -- b;`
    // and bare node statements `a;`
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw error("dot: missing braces");
    std::string body = text.substr(open + 1, close - open - 1);

    DefiningGraph g;
    std::unordered_map<std::string, int> ids;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = ids.emplace(name, static_cast<int>(g.labels.size()));
        if (fresh) g.labels.push_back(name);
        return it->second;
    };
    std::stringstream ss(body);
    std::string stmt;
    while (std::getline(ss, stmt, ';')) {
        std::string clean;
        for (char c : stmt)
            if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
        if (clean.empty()) continue;
        auto dash = clean.find("--");
        if (dash == std::string::npos) {
            intern(clean);
        } else {
            int a = intern(clean.substr(0, dash));
            int b = intern(clean.substr(dash + 2));
            g.edges.emplace_back(a, b);
        }
    }
    g.validate();
    return g;
}

std::string auxgraph_to_dot(const AuxGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  n" << v;
        if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
            out << " [label=\"" << g.labels[v] << "\"]";
        out << ";\n";
    }
    auto sorted = g.edges;
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    for (auto& [a, b] : sorted) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw error("json parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_complex(const json& j) { return j.contains("vertices"); }

}  // namespace cubex
