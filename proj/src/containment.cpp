#include "oramsey/containment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oramsey {

namespace {

void require_complete(const OrderedColoring& coloring) {
    if (!coloring.is_complete())
        throw std::invalid_argument("containment requires a complete coloring");
}

// Positions 1..m of the sorted image: pinned[p] is the ordering vertex that
// must sit at position p, or 0 when the position takes an unlabeled vertex.
struct PositionPlan {
    int m = 0;
    std::vector<int> pinned;      // size m+1, index by position
    std::vector<int> unlabeled;   // ordering vertices without labels, ascending
    std::vector<int> free_slots;  // positions without a pinned vertex, ascending
};

PositionPlan plan_positions(const KOrdering& ordering) {
    PositionPlan plan;
    plan.m = ordering.vertex_count();
    plan.pinned.assign(static_cast<std::size_t>(plan.m) + 1, 0);
    for (const auto& [vertex, label] : ordering.labels()) plan.pinned[label] = vertex;
    for (int v = 1; v <= plan.m; ++v)
        if (!ordering.label_of(v)) plan.unlabeled.push_back(v);
    for (int p = 1; p <= plan.m; ++p)
        if (plan.pinned[p] == 0) plan.free_slots.push_back(p);
    return plan;
}

bool edges_match(const OrderedColoring& coloring, const KOrdering& ordering,
                 const std::vector<int>& map, Color c) {
    for (const auto& [u, v] : ordering.graph().edges())
        if (coloring.at(map[u - 1], map[v - 1]) != c) return false;
    return true;
}

// Visits every image subset in lexicographic order and, within a subset,
// every assignment of unlabeled vertices in lexicographic map order. The
// callback returns true to stop early.
template <typename Callback>
void for_each_embedding(const OrderedColoring& coloring, const KOrdering& ordering,
                        Color c, Callback&& callback) {
    const int n = coloring.vertex_count();
    const PositionPlan plan = plan_positions(ordering);
    const int m = plan.m;
    if (m > n) return;

    std::vector<int> subset(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) subset[p] = p + 1;

    std::vector<int> map(static_cast<std::size_t>(m));
    const std::size_t free_count = plan.free_slots.size();
    // When the unlabeled part is fully symmetric, validity does not depend
    // on how unlabeled vertices are distributed over the free slots, and
    // the ascending assignment is both the least map and the one canonical
    // copy per image set.
    const bool symmetric_free =
        ordering.graph().is_complete() || ordering.graph().edges().empty();

    auto try_subset = [&]() -> bool {
        for (int p = 1; p <= m; ++p)
            if (plan.pinned[p] != 0) map[plan.pinned[p] - 1] = subset[p - 1];
        // Assignments of free slots to unlabeled vertices, in lexicographic
        // order of the slot sequence (equals map order: pinned entries are
        // constant within a subset).
        std::vector<int> slots(free_count);
        for (std::size_t t = 0; t < free_count; ++t)
            slots[t] = subset[static_cast<std::size_t>(plan.free_slots[t]) - 1];
        std::sort(slots.begin(), slots.end());
        do {
            for (std::size_t t = 0; t < free_count; ++t)
                map[static_cast<std::size_t>(plan.unlabeled[t]) - 1] = slots[t];
            if (edges_match(coloring, ordering, map, c)) {
                if (callback(map)) return true;
            }
            if (symmetric_free) break;
        } while (std::next_permutation(slots.begin(), slots.end()));
        return false;
    };

    // Lexicographic m-subset enumeration.
    while (true) {
        if (try_subset()) return;
        int p = m - 1;
        while (p >= 0 && subset[p] == n - (m - 1 - p)) --p;
        if (p < 0) break;
        ++subset[p];
        for (int q = p + 1; q < m; ++q) subset[q] = subset[q - 1] + 1;
    }
}

// Automorphisms of the ordering's graph that fix every labeled vertex;
// composing a valid map with one yields the same copy.
std::vector<std::vector<int>> label_preserving_automorphisms(const KOrdering& ordering) {
    std::vector<std::vector<int>> result;
    for (const auto& perm : automorphisms(ordering.graph())) {
        bool fixes_labels = true;
        for (const auto& [vertex, label] : ordering.labels()) {
            (void)label;
            if (perm[vertex - 1] != vertex) {
                fixes_labels = false;
                break;
            }
        }
        if (fixes_labels) result.push_back(perm);
    }
    return result;
}

// Least map in the copy's class. Complete and edgeless graphs admit every
// permutation of the unlabeled vertices, so their canonical form is direct
// and needs no automorphism enumeration (which is capped at 8 vertices).
std::vector<int> canonical_copy_map(const KOrdering& ordering,
                                    const std::vector<std::vector<int>>& autos,
                                    const std::vector<int>& map) {
    const int m = ordering.vertex_count();
    if (ordering.graph().is_complete() || ordering.graph().edges().empty()) {
        std::vector<int> least = map;
        std::vector<int> free_images;
        for (int v = 1; v <= m; ++v)
            if (!ordering.label_of(v)) free_images.push_back(map[v - 1]);
        std::sort(free_images.begin(), free_images.end());
        std::size_t t = 0;
        for (int v = 1; v <= m; ++v)
            if (!ordering.label_of(v)) least[v - 1] = free_images[t++];
        return least;
    }
    std::vector<int> least = map;
    std::vector<int> composed(static_cast<std::size_t>(m));
    for (const auto& perm : autos) {
        for (int v = 1; v <= m; ++v) composed[v - 1] = map[perm[v - 1] - 1];
        if (composed < least) least = composed;
    }
    return least;
}

}  // namespace

std::optional<Embedding> find_embedding(const OrderedColoring& coloring,
                                        const KOrdering& ordering, Color c) {
    require_complete(coloring);
    if (c == Color::Unknown) throw std::invalid_argument("embedding color must be Red or Blue");
    std::optional<Embedding> found;
    for_each_embedding(coloring, ordering, c, [&](const std::vector<int>& map) {
        found = Embedding{map, c};
        return true;
    });
    return found;
}

bool contains(const OrderedColoring& coloring, const KOrdering& ordering) {
    return find_embedding(coloring, ordering, Color::Red).has_value() ||
           find_embedding(coloring, ordering, Color::Blue).has_value();
}

bool avoids(const OrderedColoring& coloring, const KOrdering& h1, const KOrdering& h2) {
    return !find_embedding(coloring, h1, Color::Red).has_value() &&
           !find_embedding(coloring, h2, Color::Blue).has_value();
}

std::vector<Embedding> enumerate_embeddings(const OrderedColoring& coloring,
                                            const KOrdering& ordering, Color c) {
    require_complete(coloring);
    if (c == Color::Unknown) throw std::invalid_argument("embedding color must be Red or Blue");
    const bool symmetric_free_part =
        ordering.graph().is_complete() || ordering.graph().edges().empty();
    const auto autos = symmetric_free_part ? std::vector<std::vector<int>>{}
                                           : label_preserving_automorphisms(ordering);
    std::set<std::vector<int>> canonical;
    for_each_embedding(coloring, ordering, c, [&](const std::vector<int>& map) {
        canonical.insert(canonical_copy_map(ordering, autos, map));
        return false;
    });
    std::vector<Embedding> result;
    result.reserve(canonical.size());
    for (const auto& map : canonical) result.push_back({map, c});
    return result;
}

std::int64_t count_embeddings(const OrderedColoring& coloring,
                              const KOrdering& ordering, Color c) {
    return static_cast<std::int64_t>(enumerate_embeddings(coloring, ordering, c).size());
}

}  // namespace oramsey
