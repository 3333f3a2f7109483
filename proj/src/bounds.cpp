#include "oramsey/bounds.hpp"

#include <stdexcept>

namespace oramsey {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Search: return "search";
        case Provenance::Certificate: return "certificate";
        case Provenance::Formula: return "formula";
        case Provenance::Literature: return "literature";
    }
    return "literature";
}

int classical_ramsey_number(const std::string& graph_name) {
    if (graph_name == "path4") return 5;
    if (graph_name == "pan3") return 7;
    if (graph_name == "star4") return 6;
    if (graph_name == "cycle4") return 6;
    if (graph_name == "diamond") return 10;
    if (graph_name == "complete4") return 18;
    throw std::invalid_argument("no classical Ramsey constant for '" + graph_name + "'");
}

const std::vector<TableRow>& figure3_table() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> list;
        auto add = [&list](const std::string& graph, const std::string& ordering, int upper,
                           const std::string& source) {
            BoundRecord record;
            record.subject = ordering + "-ordering of " + graph;
            record.lower = BoundValue{classical_ramsey_number(graph), Provenance::Literature};
            record.upper = BoundValue{upper, Provenance::Literature};
            record.citation = source;
            list.push_back({graph, ordering, std::move(record)});
        };
        add("diamond", "(d1,1)", 14, "two-vertex anchoring");
        add("diamond", "(d1,2)", 16, "two-vertex anchoring");
        add("diamond", "(d2,1)", 13, "two-vertex anchoring");
        add("diamond", "(d2,2)", 17, "two-vertex anchoring");
        add("path4", "(p1,1)", 5, "parent graph C4/C5; equals R(P4) = 5");
        add("path4", "(p1,2)", 5, "parent graph C4/C5; equals R(P4) = 5");
        add("path4", "(p2,1)", 5, "parent graph C4/C5; equals R(P4) = 5");
        add("path4", "(p2,2)", 5, "parent graph C4/C5; equals R(P4) = 5");
        add("pan3", "(e1,1)", 10, "two-vertex anchoring");
        add("pan3", "(e1,2)", 10, "single-vertex anchoring");
        add("pan3", "(e2,1)", 7, "single-vertex anchoring; equals R(3-pan) = 7");
        add("pan3", "(e2,2)", 10, "single-vertex anchoring");
        add("pan3", "(e3,1)", 10, "parent graph: diamond, R = 10");
        add("pan3", "(e3,2)", 9, "two-vertex anchoring via diamond parent");
        add("star4", "(s1,1)", 6, "two-vertex anchoring; equals R(4-star) = 6");
        add("star4", "(s1,2)", 6, "leaf symmetry with (s2,1); equals R(4-star) = 6");
        add("star4", "(s2,1)", 6, "Balko, Cibulka, Kral, Kyncl 2013, Theorem 12");
        add("star4", "(s2,2)", 9, "Balko, Cibulka, Kral, Kyncl 2013, Theorem 12");
        add("cycle4", "(c1,1)", 6, "equals R(C4) = 6 (Chvatal & Harary 1972, p. 391)");
        add("cycle4", "(c1,2)", 6, "equals R(C4) = 6 (Chvatal & Harary 1972, p. 391)");
        add("complete4", "(k1,1)", 18, "equals R(K4) = 18 (Chvatal & Harary 1972, p. 391)");
        add("complete4", "(k1,2)", 18, "equals R(K4) = 18 (Chvatal & Harary 1972, p. 391)");
        return list;
    }();
    return rows;
}

int cycle_ramsey(int n) {
    if (n < 5) throw std::invalid_argument("cycle Ramsey formula requires n >= 5");
    return (n % 2 == 1) ? 2 * n - 1 : 3 * n / 2 - 1;
}

int path_one_ordering_bound(int n) {
    if (n < 5) throw std::invalid_argument("path 1-ordering bound requires n >= 5");
    return cycle_ramsey(n);
}

long long h_plus_recursion_bound(std::span<const int> r_values) {
    if (r_values.empty()) throw std::invalid_argument("bound sequence must be nonempty");
    long long sum = 0;
    int previous = 0;
    for (int value : r_values) {
        if (value < 1) throw std::invalid_argument("bound sequence entries must be >= 1");
        if (value < previous) throw std::invalid_argument("bound sequence must be nondecreasing");
        previous = value;
        sum += value;
    }
    return sum - static_cast<long long>(r_values.size()) + 1;
}

long long complete_vs_path_plus_bound(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("bound requires m, n >= 2");
    return static_cast<long long>(n - 1) * m * (m - 1) / 2 + 1;
}

long long chvatal_tree_ramsey(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("tree Ramsey formula requires m, n >= 1");
    return static_cast<long long>(m - 1) * (n - 1) + 1;
}

long long erdos_szekeres_path(int n) {
    if (n < 1) throw std::invalid_argument("monotone path formula requires n >= 1");
    return static_cast<long long>(n - 1) * (n - 1) + 1;
}

}  // namespace oramsey
