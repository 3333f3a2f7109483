#include "oramsey/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oramsey {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

// ----------------------------------------------------------- UnorderedGraph

UnorderedGraph::UnorderedGraph(int vertex_count, std::vector<VertexPair> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_)
            throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

bool UnorderedGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), VertexPair{i, j});
}

int UnorderedGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

bool UnorderedGraph::is_complete() const {
    return static_cast<long long>(edges_.size()) ==
           static_cast<long long>(n_) * (n_ - 1) / 2;
}

UnorderedGraph complete_graph(int n) {
    std::vector<VertexPair> edges;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) edges.push_back({i, j});
    return {n, std::move(edges)};
}

UnorderedGraph path_graph(int n) {
    std::vector<VertexPair> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return {n, std::move(edges)};
}

// ---------------------------------------------------------------- KOrdering

KOrdering::KOrdering(UnorderedGraph graph, std::map<int, int> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    std::set<int> seen;
    for (const auto& [vertex, label] : labels_) {
        if (vertex < 1 || vertex > graph_.vertex_count())
            throw std::invalid_argument("labeled vertex out of range");
        if (label < 1 || label > graph_.vertex_count())
            throw std::invalid_argument("order-label out of range 1.." +
                                        std::to_string(graph_.vertex_count()));
        if (!seen.insert(label).second)
            throw std::invalid_argument("duplicate order-label " + std::to_string(label));
    }
}

std::optional<int> KOrdering::label_of(int vertex) const {
    auto it = labels_.find(vertex);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> KOrdering::vertex_with_label(int label) const {
    for (const auto& [vertex, l] : labels_)
        if (l == label) return vertex;
    return std::nullopt;
}

// ----------------------------------------------------------- OrderedColoring

OrderedColoring::OrderedColoring(int vertex_count, Color fill) : n_(vertex_count) {
    if (n_ < 1) throw std::invalid_argument("coloring needs at least one vertex");
    cells_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, fill);
}

int OrderedColoring::pair_index(int i, int j) {
    if (i == j) throw std::invalid_argument("no pair between a vertex and itself");
    if (i > j) std::swap(i, j);
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

Color OrderedColoring::at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("vertex out of range");
    return cells_[static_cast<std::size_t>(pair_index(i, j))];
}

void OrderedColoring::set(int i, int j, Color c) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("vertex out of range");
    cells_[static_cast<std::size_t>(pair_index(i, j))] = c;
}

bool OrderedColoring::is_complete() const {
    return std::none_of(cells_.begin(), cells_.end(),
                        [](Color c) { return c == Color::Unknown; });
}

int OrderedColoring::known_count() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                          [](Color c) { return c != Color::Unknown; }));
}

OrderedColoring OrderedColoring::from_cells(int vertex_count, std::vector<Color> cells) {
    OrderedColoring g(vertex_count);
    if (cells.size() != g.cells_.size())
        throw std::invalid_argument("cell count does not match vertex count");
    g.cells_ = std::move(cells);
    return g;
}

// ------------------------------------------------------------------ catalog

const std::vector<GraphCatalogEntry>& catalog() {
    static const std::vector<GraphCatalogEntry> entries = [] {
        std::vector<GraphCatalogEntry> list;
        auto add = [&list](std::string name, std::vector<VertexPair> edges,
                           std::vector<std::string> vertex_names) {
            list.push_back({std::move(name), UnorderedGraph(4, std::move(edges)),
                            std::move(vertex_names)});
        };
        add("diamond", {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, {"d1", "d2", "d3", "d4"});
        add("path4", {{1, 2}, {2, 3}, {3, 4}}, {"p1", "p2", "p3", "p4"});
        add("pan3", {{1, 2}, {2, 3}, {2, 4}, {3, 4}}, {"e1", "e2", "e3", "e4"});
        add("star4", {{1, 2}, {2, 3}, {2, 4}}, {"s1", "s2", "s3", "s4"});
        add("cycle4", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {"c1", "c2", "c3", "c4"});
        add("complete4", {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
            {"k1", "k2", "k3", "k4"});
        return list;
    }();
    return entries;
}

const GraphCatalogEntry* find_catalog_entry(std::string_view name) {
    const std::string key = lowercase(name);
    for (const auto& entry : catalog())
        if (entry.name == key) return &entry;
    return nullptr;
}

int vertex_index(const GraphCatalogEntry& entry, std::string_view vertex_name) {
    const std::string key = lowercase(vertex_name);
    for (int i = 0; i < static_cast<int>(entry.vertex_names.size()); ++i)
        if (entry.vertex_names[i] == key) return i + 1;
    throw std::invalid_argument("unknown vertex name '" + std::string(vertex_name) +
                                "' for graph " + entry.name);
}

KOrdering make_v_l_ordering(const GraphCatalogEntry& entry,
                            std::string_view vertex_name, int label) {
    const int vertex = vertex_index(entry, vertex_name);
    if (label < 1 || label > entry.graph.vertex_count())
        throw std::invalid_argument("order-label out of range 1.." +
                                    std::to_string(entry.graph.vertex_count()));
    return KOrdering(entry.graph, {{vertex, label}});
}

// ----------------------------------------------------------------- symmetry

KOrdering reverse(const KOrdering& ordering) {
    const int n = ordering.vertex_count();
    std::map<int, int> labels;
    for (const auto& [vertex, label] : ordering.labels()) labels[vertex] = n + 1 - label;
    return KOrdering(ordering.graph(), std::move(labels));
}

OrderedColoring reverse_coloring(const OrderedColoring& coloring) {
    const int n = coloring.vertex_count();
    OrderedColoring out(n);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) out.set(n + 1 - j, n + 1 - i, coloring.at(i, j));
    return out;
}

OrderedColoring swap_colors(const OrderedColoring& coloring) {
    const int n = coloring.vertex_count();
    OrderedColoring out(n);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            Color c = coloring.at(i, j);
            if (c == Color::Red)
                c = Color::Blue;
            else if (c == Color::Blue)
                c = Color::Red;
            out.set(i, j, c);
        }
    return out;
}

std::vector<std::vector<int>> automorphisms(const UnorderedGraph& graph) {
    const int n = graph.vertex_count();
    if (n > 8) throw std::invalid_argument("brute-force automorphisms limited to 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> result;
    do {
        bool ok = true;
        for (const auto& [u, v] : graph.edges()) {
            if (!graph.has_edge(perm[u - 1], perm[v - 1])) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::vector<OneOrderingClass> one_ordering_classes(const GraphCatalogEntry& entry) {
    const int n = entry.graph.vertex_count();
    const auto autos = automorphisms(entry.graph);

    std::set<std::pair<int, int>> remaining;
    for (int v = 1; v <= n; ++v)
        for (int l = 1; l <= n; ++l) remaining.insert({v, l});

    std::vector<OneOrderingClass> classes;
    while (!remaining.empty()) {
        const auto seed = *remaining.begin();
        // Orbit closure under (automorphism, optional label reversal).
        std::set<std::pair<int, int>> orbit{seed};
        std::vector<std::pair<int, int>> frontier{seed};
        while (!frontier.empty()) {
            const auto [v, l] = frontier.back();
            frontier.pop_back();
            for (const auto& perm : autos) {
                for (int rev = 0; rev < 2; ++rev) {
                    std::pair<int, int> image{perm[v - 1], rev ? n + 1 - l : l};
                    if (orbit.insert(image).second) frontier.push_back(image);
                }
            }
        }
        OneOrderingClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        cls.representative = cls.members.front();
        classes.push_back(std::move(cls));
        for (const auto& member : orbit) remaining.erase(member);
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.representative < b.representative; });
    return classes;
}

KOrdering h_plus(const KOrdering& ordering) {
    const int n = ordering.vertex_count();
    std::vector<VertexPair> edges = ordering.graph().edges();
    for (int v = 1; v <= n; ++v) edges.push_back({v, n + 1});
    std::map<int, int> labels;
    for (const auto& [vertex, label] : ordering.labels()) labels[vertex] = label + 1;
    labels[n + 1] = 1;
    return KOrdering(UnorderedGraph(n + 1, std::move(edges)), std::move(labels));
}

std::string ordering_display_name(const GraphCatalogEntry& entry, int vertex, int label) {
    return "(" + entry.vertex_names.at(static_cast<std::size_t>(vertex - 1)) + "," +
           std::to_string(label) + ")";
}

}  // namespace oramsey
