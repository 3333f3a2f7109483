// Backtracking search for avoiding colorings: lower-bound certificates by
// construction, upper bounds by exhaustion, exact ordered Ramsey numbers at
// desk scale, and completion of partial skeletons.
#pragma once

#include <cstdint>
#include <optional>

#include "oramsey/bounds.hpp"
#include "oramsey/containment.hpp"
#include "oramsey/core.hpp"

namespace oramsey {

struct SearchBudget {
    std::optional<std::int64_t> max_nodes;  // one node = one edge-color decision
    std::optional<double> max_seconds;
};

struct SearchStats {
    std::int64_t nodes = 0;
    std::int64_t prunes = 0;
    double seconds = 0.0;
};

enum class SearchStatus { FoundAvoiding, ExhaustedNoAvoiding, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNoAvoiding;
    std::optional<OrderedColoring> witness;  // present iff FoundAvoiding
    SearchStats stats;
};

struct SearchOptions {
    SearchBudget budget;
    // >= 2 splits the first two edge decisions across up to four workers.
    // Status and witness do not depend on the worker count.
    int threads = 1;
    // With h1 == h2 and no preset edges, fixes edge (1,2) to Red; sound
    // because swapping colors maps avoiders to avoiders.
    bool color_swap_breaking = true;
};

// Searches for a complete coloring on n vertices that extends `skeleton`
// (when given) and has no red copy of h1 and no blue copy of h2. Edges are
// assigned in the column-major order (1,2), (1,3), (2,3), ...; each
// forbidden copy is tested exactly once, at the moment its last edge in
// that order is colored. With one thread the witness is the first avoiding
// coloring in assignment order, i.e. the least one with Red < Blue.
//
// ExhaustedNoAvoiding with an empty skeleton certifies R_<(h1,h2) <= n.
// Every witness is re-verified against avoids() before it is returned.
SearchOutcome find_avoiding(int n, const KOrdering& h1, const KOrdering& h2,
                            const std::optional<OrderedColoring>& skeleton = std::nullopt,
                            const SearchOptions& options = {});

// Exact number of complete colorings on n vertices avoiding (h1, h2),
// with no symmetry reduction. Guarded to n(n-1)/2 <= 28 edges.
std::int64_t count_avoiding(int n, const KOrdering& h1, const KOrdering& h2);

struct RamseyResult {
    std::optional<int> value;          // present iff lower == upper
    std::optional<BoundValue> lower;   // largest n with an avoiding coloring, plus 1
    std::optional<BoundValue> upper;   // smallest n proven unavoidable
    bool budget_exceeded = false;
    SearchStats stats;
};

// Runs find_avoiding for n = 1, 2, ... until a level exhausts with no
// avoiding coloring (that level is the exact value) or n_max or the budget
// is reached (bounds only). The budget spans the whole call.
RamseyResult ordered_ramsey(const KOrdering& h1, const KOrdering& h2, int n_max,
                            const SearchOptions& options = {});

struct CertificateReport {
    bool avoiding = false;
    std::vector<Embedding> violations;       // red copies of h1, then blue copies of h2
    std::optional<int> implied_lower_bound;  // n + 1 when avoiding
};

// Checks a complete coloring against the pair of targets and reports every
// violating copy, or the lower bound the certificate establishes.
CertificateReport verify_certificate(const OrderedColoring& coloring,
                                     const KOrdering& h1, const KOrdering& h2);

}  // namespace oramsey
