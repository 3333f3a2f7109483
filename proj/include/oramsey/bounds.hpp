// Closed-form bounds and the reference table of upper bounds for the
// 1-orderings of connected 4-vertex graphs.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "oramsey/core.hpp"

namespace oramsey {

enum class Provenance { Search, Certificate, Formula, Literature };

std::string provenance_name(Provenance p);

struct BoundValue {
    int value = 0;
    Provenance provenance = Provenance::Literature;
};

// One named ordered-Ramsey quantity with its best known bounds.
struct BoundRecord {
    std::string subject;
    std::optional<BoundValue> lower;
    std::optional<BoundValue> upper;
    std::string citation;
};

// Row of the reference table: one 1-ordering equivalence class per row.
struct TableRow {
    std::string graph;     // catalog name
    std::string ordering;  // "(d1,1)" form
    BoundRecord record;
};

// All 22 rows, one per 1-ordering class of the six catalog graphs. Upper
// bounds and sources are fixed reference data; lower bounds come from the
// classical Ramsey number of the underlying graph, which every ordered
// Ramsey number dominates.
const std::vector<TableRow>& figure3_table();

// Classical (unordered) Ramsey number of a catalog graph, as cited
// reference constants: path4 5, pan3 7, star4 6, cycle4 6, diamond 10,
// complete4 18.
int classical_ramsey_number(const std::string& graph_name);

// R(C_n) for n >= 5: 2n - 1 for odd n, 3n/2 - 1 for even n.
int cycle_ramsey(int n);

// Upper bound for every 1-ordering of the n-vertex path: R(C_n), n >= 5.
int path_one_ordering_bound(int n);

// Given upper bounds r[i-1] on R_<(K_i, H) for i = 1..n, an upper bound on
// R_<(K_n, H+): sum r[i] - n + 1. The sequence must be nonempty, positive
// and nondecreasing.
long long h_plus_recursion_bound(std::span<const int> r_values);

// R_<(K_m, P_n+) <= (n-1) m (m-1) / 2 + 1 for m, n >= 2.
long long complete_vs_path_plus_bound(int m, int n);

// Ramsey number of K_m versus any n-vertex tree: (m-1)(n-1) + 1.
long long chvatal_tree_ramsey(int m, int n);

// Exact ordered Ramsey number of the monotone n-vertex path: (n-1)^2 + 1.
long long erdos_szekeres_path(int n);

}  // namespace oramsey
