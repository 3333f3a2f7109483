// JSON encodings of the core types.
//
//   KOrdering       {"n": int, "edges": [[i,j],...], "labels": {"vertex": label}}
//   OrderedColoring {"n": int, "blue": [[i,j],...], "red": [[i,j],...]}
//
// A pair absent from both color lists is Unknown; a pair in both lists is a
// validation error. Emission uses the column-major pair order throughout so
// output is byte-stable.
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "oramsey/containment.hpp"
#include "oramsey/core.hpp"

namespace oramsey::io {

using json = nlohmann::ordered_json;

json to_json(const KOrdering& ordering);
json to_json(const OrderedColoring& coloring);
json to_json(const Embedding& embedding);

// The reference upper-bound table as emitted by `bounds --table`.
json figure3_rows_json();

KOrdering kordering_from_json(const nlohmann::json& j);
OrderedColoring coloring_from_json(const nlohmann::json& j);

KOrdering load_kordering(const std::filesystem::path& path);
OrderedColoring load_coloring(const std::filesystem::path& path);

// dump(2) layout except that arrays of scalars stay on one line, so pair
// lists read as [1, 5] rather than four lines each.
std::string compact_dump(const json& j);

void save_json(const json& j, const std::filesystem::path& path);
std::string color_name(Color c);

}  // namespace oramsey::io
