// Monochromatic order-preserving containment of a k-ordering in a complete
// ordered 2-coloring.
//
// A copy of H on image vertices w_1 < ... < w_m is valid when every H edge
// maps to an edge of the requested color and the vertex at position i is
// either H's label-i vertex or unlabeled. Labels therefore pin their
// vertices to fixed positions of the sorted image; only unlabeled vertices
// permute over the remaining slots.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oramsey/core.hpp"

namespace oramsey {

// Witness map from ordering vertices into coloring vertices.
// map[v-1] is the image of ordering vertex v.
struct Embedding {
    std::vector<int> map;
    Color color = Color::Red;

    bool operator==(const Embedding& other) const = default;
};

// Least valid embedding of `ordering` in color `c`, ordering first by the
// sorted image set, then by the vertex-by-vertex map. Requires a complete
// coloring.
std::optional<Embedding> find_embedding(const OrderedColoring& coloring,
                                        const KOrdering& ordering, Color c);

// True when a red or blue copy exists.
bool contains(const OrderedColoring& coloring, const KOrdering& ordering);

// True when the coloring has no red copy of h1 and no blue copy of h2.
bool avoids(const OrderedColoring& coloring, const KOrdering& h1, const KOrdering& h2);

// All distinct copies of `ordering` in color `c`. Two witness maps that
// differ by a label-preserving automorphism of the ordering describe the
// same copy and are reported once, by their least map.
std::vector<Embedding> enumerate_embeddings(const OrderedColoring& coloring,
                                            const KOrdering& ordering, Color c);

// Number of distinct copies in color `c`.
std::int64_t count_embeddings(const OrderedColoring& coloring,
                              const KOrdering& ordering, Color c);

}  // namespace oramsey
