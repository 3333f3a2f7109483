#include <doctest.h>

#include <random>

#include "oramsey/json_io.hpp"
#include "oracle.hpp"

using namespace oramsey;

TEST_CASE("ordering round trip") {
    const auto* pan = find_catalog_entry("pan3");
    const KOrdering ordering = make_v_l_ordering(*pan, "e3", 2);
    const auto j = io::to_json(ordering);
    CHECK(j["n"] == 4);
    CHECK(j["labels"] == nlohmann::ordered_json{{"3", 2}});
    CHECK(io::kordering_from_json(j) == ordering);

    // Missing labels means no labels.
    const auto parsed = io::kordering_from_json(
        nlohmann::json{{"n", 2}, {"edges", {{1, 2}}}});
    CHECK(parsed.order_size() == 0);
}

TEST_CASE("ordering validation") {
    using nlohmann::json;
    CHECK_THROWS(io::kordering_from_json(json{{"edges", json::array()}}));
    CHECK_THROWS(io::kordering_from_json(json{{"n", 3}}));
    CHECK_THROWS(io::kordering_from_json(
        json{{"n", 3}, {"edges", {{1, 2}}}, {"labels", {{"1", 1}, {"2", 1}}}}));
    CHECK_THROWS(io::kordering_from_json(
        json{{"n", 3}, {"edges", {{1, 2}}}, {"labels", {{"1", 4}}}}));
    CHECK_THROWS(io::kordering_from_json(
        json{{"n", 3}, {"edges", {{1, 2}}}, {"labels", {{"x", 1}}}}));
    CHECK_THROWS(io::kordering_from_json(json{{"n", 3}, {"edges", {{1, 1}}}}));
}

TEST_CASE("coloring round trip keeps unknown pairs") {
    std::mt19937 rng(20240908);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        const OrderedColoring coloring = oracle::random_partial_coloring(size(rng), rng);
        CHECK(io::coloring_from_json(io::to_json(coloring)) == coloring);
    }
}

TEST_CASE("coloring validation") {
    using nlohmann::json;
    // Pair in both lists.
    CHECK_THROWS(io::coloring_from_json(
        json{{"n", 3}, {"blue", {{1, 2}}}, {"red", {{2, 1}}}}));
    // Duplicate within one list.
    CHECK_THROWS(io::coloring_from_json(
        json{{"n", 3}, {"blue", {{1, 2}, {1, 2}}}, {"red", json::array()}}));
    // Out of range and self pairs.
    CHECK_THROWS(io::coloring_from_json(
        json{{"n", 3}, {"blue", {{1, 4}}}, {"red", json::array()}}));
    CHECK_THROWS(io::coloring_from_json(
        json{{"n", 3}, {"blue", {{2, 2}}}, {"red", json::array()}}));
    // Missing lists.
    CHECK_THROWS(io::coloring_from_json(json{{"n", 3}, {"blue", json::array()}}));
    CHECK_THROWS(io::coloring_from_json(json{{"n", 0}, {"blue", json::array()},
                                             {"red", json::array()}}));

    const auto parsed = io::coloring_from_json(
        json{{"n", 3}, {"blue", {{2, 1}}}, {"red", {{1, 3}}}});
    CHECK(parsed.at(1, 2) == Color::Blue);
    CHECK(parsed.at(1, 3) == Color::Red);
    CHECK(parsed.at(2, 3) == Color::Unknown);
    CHECK_FALSE(parsed.is_complete());
}
