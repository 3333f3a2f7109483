#include "oramsey/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "oramsey/bounds.hpp"

namespace oramsey::io {

namespace {

json pair_list(const std::vector<VertexPair>& pairs) {
    json out = json::array();
    for (const auto& [i, j] : pairs) out.push_back(json::array({i, j}));
    return out;
}

std::vector<VertexPair> parse_pairs(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array()) throw std::invalid_argument("'" + key + "' must be an array of pairs");
    std::vector<VertexPair> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument("'" + key + "' entries must be integer pairs");
        pairs.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return pairs;
}

int parse_vertex_count(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("missing integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("'n' must be positive");
    return n;
}

}  // namespace

json to_json(const KOrdering& ordering) {
    json out;
    out["n"] = ordering.vertex_count();
    out["edges"] = pair_list(ordering.graph().edges());
    json labels = json::object();
    for (const auto& [vertex, label] : ordering.labels())
        labels[std::to_string(vertex)] = label;
    out["labels"] = labels;
    return out;
}

json to_json(const OrderedColoring& coloring) {
    const int n = coloring.vertex_count();
    std::vector<VertexPair> blue;
    std::vector<VertexPair> red;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            const Color c = coloring.at(i, j);
            if (c == Color::Blue) blue.push_back({i, j});
            if (c == Color::Red) red.push_back({i, j});
        }
    json out;
    out["n"] = n;
    out["blue"] = pair_list(blue);
    out["red"] = pair_list(red);
    return out;
}

json to_json(const Embedding& embedding) {
    json out;
    out["color"] = color_name(embedding.color);
    out["map"] = embedding.map;
    std::vector<int> image = embedding.map;
    std::sort(image.begin(), image.end());
    out["image"] = image;
    return out;
}

json figure3_rows_json() {
    json rows = json::array();
    for (const auto& row : figure3_table()) {
        json r;
        r["graph"] = row.graph;
        r["ordering"] = row.ordering;
        r["upper"] = row.record.upper->value;
        r["source"] = row.record.citation;
        rows.push_back(r);
    }
    return rows;
}

KOrdering kordering_from_json(const nlohmann::json& j) {
    const int n = parse_vertex_count(j);
    if (!j.contains("edges")) throw std::invalid_argument("missing field 'edges'");
    std::vector<VertexPair> edges = parse_pairs(j["edges"], "edges");
    std::map<int, int> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw std::invalid_argument("'labels' must be an object mapping vertex to label");
        for (const auto& [key, value] : j["labels"].items()) {
            int vertex = 0;
            try {
                vertex = std::stoi(key);
            } catch (const std::exception&) {
                throw std::invalid_argument("label key '" + key + "' is not a vertex index");
            }
            if (!value.is_number_integer())
                throw std::invalid_argument("label for vertex " + key + " must be an integer");
            labels[vertex] = value.get<int>();
        }
    }
    return KOrdering(UnorderedGraph(n, std::move(edges)), std::move(labels));
}

OrderedColoring coloring_from_json(const nlohmann::json& j) {
    const int n = parse_vertex_count(j);
    if (!j.contains("blue") || !j.contains("red"))
        throw std::invalid_argument("coloring needs 'blue' and 'red' pair lists");
    OrderedColoring coloring(n);
    auto apply = [&](const std::vector<VertexPair>& pairs, Color c, const std::string& key) {
        for (auto [a, b] : pairs) {
            if (a == b) throw std::invalid_argument("'" + key + "' has a self-pair");
            if (a > b) std::swap(a, b);
            if (a < 1 || b > n)
                throw std::invalid_argument("'" + key + "' pair out of range 1.." +
                                            std::to_string(n));
            if (coloring.at(a, b) != Color::Unknown)
                throw std::invalid_argument("pair (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") listed twice");
            coloring.set(a, b, c);
        }
    };
    apply(parse_pairs(j["blue"], "blue"), Color::Blue, "blue");
    apply(parse_pairs(j["red"], "red"), Color::Red, "red");
    return coloring;
}

KOrdering load_kordering(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return kordering_from_json(j);
}

OrderedColoring load_coloring(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return coloring_from_json(j);
}

namespace {

void render(const json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool scalars = std::all_of(j.begin(), j.end(), [](const json& item) {
            return !item.is_array() && !item.is_object();
        });
        if (scalars) {
            out += "[";
            for (std::size_t t = 0; t < j.size(); ++t) {
                if (t > 0) out += ", ";
                out += j[t].dump();
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t t = 0; t < j.size(); ++t) {
            out += inner;
            render(j[t], depth + 1, out);
            if (t + 1 < j.size()) out += ",";
            out += "\n";
        }
        out += pad + "]";
        return;
    }
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t t = 0;
        for (const auto& [key, value] : j.items()) {
            out += inner + json(key).dump() + ": ";
            render(value, depth + 1, out);
            if (++t < j.size()) out += ",";
            out += "\n";
        }
        out += pad + "}";
        return;
    }
    out += j.dump();
}

}  // namespace

std::string compact_dump(const json& j) {
    std::string out;
    render(j, 0, out);
    return out;
}

void save_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << compact_dump(j) << "\n";
}

std::string color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Blue: return "blue";
        default: return "unknown";
    }
}

}  // namespace oramsey::io
