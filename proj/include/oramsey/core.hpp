// Core types for ordered Ramsey computations: simple graphs, k-orderings,
// ordered 2-colorings, the catalog of connected 4-vertex graphs, and the
// symmetry operations used for equivalence classes and search pruning.
//
// Conventions: vertices are 1-indexed; an edge {i,j} is stored with i < j;
// vertex pairs of a coloring are laid out in column-major order
// (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ... which is also the edge
// assignment order of the backtracking search.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oramsey {

enum class Color : std::uint8_t { Red = 0, Blue = 1, Unknown = 2 };

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 1..n. No loops, no multi-edges.
class UnorderedGraph {
public:
    UnorderedGraph() = default;
    UnorderedGraph(int vertex_count, std::vector<VertexPair> edges);

    int vertex_count() const { return n_; }
    const std::vector<VertexPair>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    int degree(int v) const;
    bool is_complete() const;

    bool operator==(const UnorderedGraph& other) const = default;

private:
    int n_ = 1;
    std::vector<VertexPair> edges_;  // normalized i < j, sorted, unique
};

UnorderedGraph complete_graph(int n);
UnorderedGraph path_graph(int n);

// A graph plus an injective partial assignment of order-labels to vertices.
// k = |labels| may be anything from 0 (plain graph) to n (fully ordered).
class KOrdering {
public:
    explicit KOrdering(UnorderedGraph graph, std::map<int, int> labels = {});

    const UnorderedGraph& graph() const { return graph_; }
    const std::map<int, int>& labels() const { return labels_; }  // vertex -> order-label
    int vertex_count() const { return graph_.vertex_count(); }
    int order_size() const { return static_cast<int>(labels_.size()); }
    std::optional<int> label_of(int vertex) const;
    std::optional<int> vertex_with_label(int label) const;

    bool operator==(const KOrdering& other) const = default;

private:
    UnorderedGraph graph_;
    std::map<int, int> labels_;
};

// Complete graph on vertices 1..n with each pair colored Red, Blue or
// Unknown. Unknown pairs make the coloring a partial skeleton; a complete
// coloring has none.
class OrderedColoring {
public:
    explicit OrderedColoring(int vertex_count, Color fill = Color::Unknown);

    // Index of pair {i,j} in the column-major layout; i != j required.
    static int pair_index(int i, int j);

    int vertex_count() const { return n_; }
    int pair_count() const { return static_cast<int>(cells_.size()); }
    Color at(int i, int j) const;
    void set(int i, int j, Color c);
    bool is_complete() const;
    int known_count() const;

    const std::vector<Color>& cells() const { return cells_; }
    static OrderedColoring from_cells(int vertex_count, std::vector<Color> cells);

    bool operator==(const OrderedColoring& other) const = default;

private:
    int n_;
    std::vector<Color> cells_;
};

// ---------------------------------------------------------------- catalog

// One of the six connected 4-vertex graphs with its canonical vertex names.
struct GraphCatalogEntry {
    std::string name;                       // diamond, path4, pan3, star4, cycle4, complete4
    UnorderedGraph graph;
    std::vector<std::string> vertex_names;  // vertex_names[i-1] names vertex i
};

const std::vector<GraphCatalogEntry>& catalog();

// Case-insensitive lookup; nullptr when the name is unknown.
const GraphCatalogEntry* find_catalog_entry(std::string_view name);

// Index of a canonical vertex name like "e3"; throws std::invalid_argument.
int vertex_index(const GraphCatalogEntry& entry, std::string_view vertex_name);

// The 1-ordering assigning `label` to the named vertex.
KOrdering make_v_l_ordering(const GraphCatalogEntry& entry,
                            std::string_view vertex_name, int label);

// --------------------------------------------------------------- symmetry

// Same graph with every order-label l replaced by n + 1 - l.
KOrdering reverse(const KOrdering& ordering);

// Vertex i becomes vertex n + 1 - i; edge colors carried along.
OrderedColoring reverse_coloring(const OrderedColoring& coloring);

// Red <-> Blue on every pair; Unknown unchanged.
OrderedColoring swap_colors(const OrderedColoring& coloring);

// All vertex permutations preserving the edge set, by brute force over n!
// permutations (n <= 8). perm[v-1] is the image of vertex v.
std::vector<std::vector<int>> automorphisms(const UnorderedGraph& graph);

// Equivalence class of 1-orderings under automorphisms x label reversal.
// Members are (vertex, label) pairs; the representative is the
// lexicographically least member.
struct OneOrderingClass {
    std::pair<int, int> representative;
    std::vector<std::pair<int, int>> members;
};

// Partition of all n*n 1-orderings of a catalog graph into equivalence
// classes, sorted by representative.
std::vector<OneOrderingClass> one_ordering_classes(const GraphCatalogEntry& entry);

// New universal vertex n+1 with order-label 1; all existing labels shifted
// up by one, edges preserved.
KOrdering h_plus(const KOrdering& ordering);

// "(e3,2)" display form for a 1-ordering of a catalog graph.
std::string ordering_display_name(const GraphCatalogEntry& entry, int vertex, int label);

}  // namespace oramsey
