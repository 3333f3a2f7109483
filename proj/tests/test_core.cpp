#include <doctest.h>

#include <random>
#include <set>

#include "oramsey/core.hpp"
#include "oracle.hpp"

using namespace oramsey;

namespace {

std::set<VertexPair> edge_set(const UnorderedGraph& graph) {
    return {graph.edges().begin(), graph.edges().end()};
}

KOrdering random_ordering(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(1, 6);
    const int n = size(rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<VertexPair> edges;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (coin(rng)) edges.push_back({i, j});
    UnorderedGraph graph(n, std::move(edges));

    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) labels[v - 1] = v;
    std::shuffle(labels.begin(), labels.end(), rng);
    std::uniform_int_distribution<int> count(0, n);
    const int k = count(rng);
    std::map<int, int> assignment;
    std::vector<int> vertices(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) vertices[v - 1] = v;
    std::shuffle(vertices.begin(), vertices.end(), rng);
    for (int t = 0; t < k; ++t) assignment[vertices[t]] = labels[t];
    return KOrdering(std::move(graph), std::move(assignment));
}

}  // namespace

TEST_CASE("catalog matches the canonical drawings") {
    REQUIRE(catalog().size() == 6);

    const auto* diamond = find_catalog_entry("diamond");
    REQUIRE(diamond != nullptr);
    CHECK(edge_set(diamond->graph) ==
          std::set<VertexPair>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});

    const auto* pan = find_catalog_entry("pan3");
    REQUIRE(pan != nullptr);
    CHECK(edge_set(pan->graph) == std::set<VertexPair>{{1, 2}, {2, 3}, {2, 4}, {3, 4}});

    const auto* path = find_catalog_entry("path4");
    REQUIRE(path != nullptr);
    CHECK(edge_set(path->graph) == std::set<VertexPair>{{1, 2}, {2, 3}, {3, 4}});

    const auto* star = find_catalog_entry("star4");
    REQUIRE(star != nullptr);
    CHECK(edge_set(star->graph) == std::set<VertexPair>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(star->graph.degree(2) == 3);

    const auto* cycle = find_catalog_entry("cycle4");
    REQUIRE(cycle != nullptr);
    CHECK(edge_set(cycle->graph) == std::set<VertexPair>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});

    const auto* complete = find_catalog_entry("complete4");
    REQUIRE(complete != nullptr);
    CHECK(complete->graph.edges().size() == 6);
    CHECK(complete->graph.is_complete());

    CHECK(find_catalog_entry("Diamond") == diamond);  // case-insensitive
    CHECK(find_catalog_entry("nosuch") == nullptr);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(UnorderedGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(UnorderedGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(UnorderedGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    const UnorderedGraph graph(3, {{3, 1}, {1, 2}});
    CHECK(graph.has_edge(1, 3));
    CHECK(graph.has_edge(3, 1));
    CHECK_FALSE(graph.has_edge(2, 3));
}

TEST_CASE("make_v_l_ordering") {
    const auto* pan = find_catalog_entry("pan3");
    const KOrdering figure_ordering = make_v_l_ordering(*pan, "e3", 2);
    CHECK(figure_ordering.labels() == std::map<int, int>{{3, 2}});

    const auto* path = find_catalog_entry("path4");
    CHECK(make_v_l_ordering(*path, "p1", 1).labels() == std::map<int, int>{{1, 1}});

    const auto* star = find_catalog_entry("star4");
    CHECK_THROWS_AS(make_v_l_ordering(*star, "s2", 5), std::invalid_argument);
    CHECK_THROWS_AS(make_v_l_ordering(*star, "s2", 0), std::invalid_argument);
    CHECK_THROWS_AS(make_v_l_ordering(*star, "x1", 1), std::invalid_argument);
}

TEST_CASE("label reversal") {
    const auto* pan = find_catalog_entry("pan3");
    const KOrdering e3_2 = make_v_l_ordering(*pan, "e3", 2);
    CHECK(reverse(e3_2) == make_v_l_ordering(*pan, "e3", 3));

    const KOrdering unordered(pan->graph);
    CHECK(reverse(unordered) == unordered);

    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        const KOrdering ordering = random_ordering(rng);
        CHECK(reverse(reverse(ordering)) == ordering);
    }
}

TEST_CASE("coloring reversal and color swap") {
    // Right side of the containment example: blue star at vertex 1 plus
    // blue (2,4), everything else red.
    OrderedColoring figure2(5, Color::Red);
    for (const auto& [i, j] :
         std::vector<VertexPair>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}})
        figure2.set(i, j, Color::Blue);

    const OrderedColoring reversed = reverse_coloring(figure2);
    CHECK(reversed.at(4, 5) == Color::Blue);  // was (1,2)
    CHECK(reversed.at(2, 4) == Color::Blue);  // was (2,4)
    CHECK(reversed.at(3, 4) == Color::Red);   // was (2,3)

    const OrderedColoring swapped = swap_colors(figure2);
    CHECK(swapped.at(1, 2) == Color::Red);
    CHECK(swapped.at(2, 3) == Color::Blue);

    const OrderedColoring all_red(3, Color::Red);
    CHECK(reverse_coloring(all_red) == all_red);

    const OrderedColoring blank(4);
    CHECK(swap_colors(blank) == blank);

    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> size(1, 7);
        const OrderedColoring coloring = oracle::random_partial_coloring(size(rng), rng);
        CHECK(reverse_coloring(reverse_coloring(coloring)) == coloring);
        CHECK(swap_colors(swap_colors(coloring)) == coloring);
    }
}

TEST_CASE("automorphism groups of the catalog graphs") {
    const std::map<std::string, std::size_t> expected{
        {"diamond", 4}, {"path4", 2},  {"pan3", 2},
        {"star4", 6},   {"cycle4", 8}, {"complete4", 24}};
    for (const auto& entry : catalog())
        CHECK(automorphisms(entry.graph).size() == expected.at(entry.name));
}

TEST_CASE("1-ordering equivalence classes") {
    const std::map<std::string, std::size_t> expected_counts{
        {"diamond", 4}, {"path4", 4},  {"pan3", 6},
        {"star4", 4},   {"cycle4", 2}, {"complete4", 2}};

    for (const auto& entry : catalog()) {
        const auto classes = one_ordering_classes(entry);
        CHECK(classes.size() == expected_counts.at(entry.name));

        // Classes partition all 16 1-orderings.
        std::set<std::pair<int, int>> seen;
        for (const auto& cls : classes) {
            CHECK(cls.representative == cls.members.front());
            for (const auto& member : cls.members) CHECK(seen.insert(member).second);
        }
        CHECK(seen.size() == 16);

        // Equivalent pairs never span two classes: applying any generator to
        // any member stays inside the member set.
        const auto autos = automorphisms(entry.graph);
        for (const auto& cls : classes) {
            const std::set<std::pair<int, int>> members(cls.members.begin(), cls.members.end());
            for (const auto& [v, l] : cls.members)
                for (const auto& perm : autos) {
                    CHECK(members.count({perm[v - 1], l}) == 1);
                    CHECK(members.count({perm[v - 1], 5 - l}) == 1);
                }
        }
    }

    const auto path_classes = one_ordering_classes(*find_catalog_entry("path4"));
    std::vector<std::pair<int, int>> path_reps;
    for (const auto& cls : path_classes) path_reps.push_back(cls.representative);
    CHECK(path_reps == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

    const auto complete_classes = one_ordering_classes(*find_catalog_entry("complete4"));
    CHECK(complete_classes[0].representative == std::pair<int, int>{1, 1});
    CHECK(complete_classes[1].representative == std::pair<int, int>{1, 2});
}

TEST_CASE("universal-vertex extension") {
    // Adding a dominating label-1 vertex to the 3-path gives the diamond
    // with label 1 on a degree-3 vertex.
    const KOrdering path3(path_graph(3));
    const KOrdering extended = h_plus(path3);
    CHECK(extended.vertex_count() == 4);
    CHECK(extended.order_size() == 1);
    CHECK(extended.graph().degree(4) == 3);
    CHECK(extended.label_of(4) == 1);

    const auto* diamond = find_catalog_entry("diamond");
    bool matches_diamond_center_ordering = false;
    std::vector<int> perm{1, 2, 3, 4};
    do {
        bool iso = true;
        for (int a = 1; a <= 4 && iso; ++a)
            for (int b = a + 1; b <= 4; ++b)
                if (extended.graph().has_edge(a, b) !=
                    diamond->graph.has_edge(perm[a - 1], perm[b - 1])) {
                    iso = false;
                    break;
                }
        if (iso && diamond->graph.degree(perm[3]) == 3)
            matches_diamond_center_ordering = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(matches_diamond_center_ordering);

    const KOrdering single(UnorderedGraph(1, {}));
    const KOrdering edge = h_plus(single);
    CHECK(edge.vertex_count() == 2);
    CHECK(edge.graph().has_edge(1, 2));
    CHECK(edge.label_of(2) == 1);
    CHECK_FALSE(edge.label_of(1).has_value());

    std::mt19937 rng(20240903);
    for (int trial = 0; trial < 100; ++trial) {
        const KOrdering ordering = random_ordering(rng);
        const KOrdering plus = h_plus(ordering);
        CHECK(plus.order_size() == ordering.order_size() + 1);
        CHECK(plus.graph().degree(ordering.vertex_count() + 1) == ordering.vertex_count());
        for (const auto& [vertex, label] : ordering.labels())
            CHECK(plus.label_of(vertex) == label + 1);
    }
}

TEST_CASE("pair layout is column-major") {
    CHECK(OrderedColoring::pair_index(1, 2) == 0);
    CHECK(OrderedColoring::pair_index(1, 3) == 1);
    CHECK(OrderedColoring::pair_index(2, 3) == 2);
    CHECK(OrderedColoring::pair_index(1, 4) == 3);
    CHECK(OrderedColoring::pair_index(3, 4) == 5);
    CHECK(OrderedColoring::pair_index(4, 3) == 5);
    CHECK_THROWS_AS(OrderedColoring::pair_index(2, 2), std::invalid_argument);

    OrderedColoring coloring(4);
    CHECK_FALSE(coloring.is_complete());
    coloring.set(3, 1, Color::Red);
    CHECK(coloring.at(1, 3) == Color::Red);
    CHECK(coloring.known_count() == 1);
}
