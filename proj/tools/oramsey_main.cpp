// Command-line front end: catalog inspection, certificate verification,
// avoiding-coloring search, exact ordered Ramsey computation, and bound
// evaluation.
//
// Exit codes: 0 success / 1 negative verdict / 2 usage or input error /
// 3 budget exceeded or bounds only. Standard output carries a single JSON
// document for codes 0, 1 and 3; diagnostics go to standard error.
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oramsey/bounds.hpp"
#include "oramsey/core.hpp"
#include "oramsey/json_io.hpp"
#include "oramsey/search.hpp"

namespace {

using oramsey::io::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
    }
}

// Target specs: `graph:vertex:label` (1-ordering), `graph:full:l1,l2,...`
// (fully ordered), `kN` (complete graph, no labels), or a KOrdering JSON
// file path.
oramsey::KOrdering parse_target_spec(const std::string& spec) {
    if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'K') &&
        std::all_of(spec.begin() + 1, spec.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        const int n = parse_int(spec.substr(1), "complete-graph size");
        if (n < 1 || n > 32)
            throw std::invalid_argument("complete-graph target supports sizes 1..32");
        return oramsey::KOrdering(oramsey::complete_graph(n));
    }
    if (spec.find(':') == std::string::npos) return oramsey::io::load_kordering(spec);

    const auto parts = split(spec, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("target spec must be graph:vertex:label or graph:full:... : '" +
                                    spec + "'");
    const auto* entry = oramsey::find_catalog_entry(parts[0]);
    if (entry == nullptr) throw std::invalid_argument("unknown catalog graph '" + parts[0] + "'");
    if (parts[1] == "full") {
        const auto label_texts = split(parts[2], ',');
        const int n = entry->graph.vertex_count();
        if (static_cast<int>(label_texts.size()) != n)
            throw std::invalid_argument("full ordering needs exactly " + std::to_string(n) +
                                        " labels");
        std::map<int, int> labels;
        for (int v = 1; v <= n; ++v)
            labels[v] = parse_int(label_texts[static_cast<std::size_t>(v - 1)], "order-label");
        return oramsey::KOrdering(entry->graph, std::move(labels));
    }
    return oramsey::make_v_l_ordering(*entry, parts[1], parse_int(parts[2], "order-label"));
}

struct TargetOptions {
    std::string both;
    std::string red;
    std::string blue;
};

void add_target_options(CLI::App* cmd, TargetOptions& opts) {
    // --h needs the single-letter name, so help stays on --help only.
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--h", opts.both, "target ordering for both colors");
    cmd->add_option("--h1", opts.red, "target ordering for red");
    cmd->add_option("--h2", opts.blue, "target ordering for blue");
}

std::pair<oramsey::KOrdering, oramsey::KOrdering> resolve_targets(const TargetOptions& opts) {
    if (!opts.both.empty()) {
        if (!opts.red.empty() || !opts.blue.empty())
            throw std::invalid_argument("use either --h or --h1/--h2, not both");
        auto target = parse_target_spec(opts.both);
        return {target, target};
    }
    if (opts.red.empty() || opts.blue.empty())
        throw std::invalid_argument("specify a target with --h, or both --h1 and --h2");
    return {parse_target_spec(opts.red), parse_target_spec(opts.blue)};
}

struct BudgetOptions {
    std::int64_t max_nodes = 100000000;
    double max_seconds = 300.0;
    int threads = 1;
};

void add_budget_options(CLI::App* cmd, BudgetOptions& opts) {
    cmd->add_option("--max-nodes", opts.max_nodes, "node budget (edge-color decisions)")
        ->capture_default_str();
    cmd->add_option("--max-seconds", opts.max_seconds, "wall-clock budget in seconds")
        ->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker threads for the search")
        ->capture_default_str();
}

oramsey::SearchOptions to_search_options(const BudgetOptions& opts) {
    oramsey::SearchOptions options;
    options.budget.max_nodes = opts.max_nodes;
    options.budget.max_seconds = opts.max_seconds;
    options.threads = opts.threads;
    return options;
}

void emit(const json& payload) { std::cout << oramsey::io::compact_dump(payload) << "\n"; }

json search_stats_json(const oramsey::SearchStats& stats) {
    json out;
    out["nodes"] = stats.nodes;
    out["prunes"] = stats.prunes;
    out["seconds"] = stats.seconds;
    return out;
}

json catalog_entry_json(const oramsey::GraphCatalogEntry& entry) {
    json out;
    out["name"] = entry.name;
    out["n"] = entry.graph.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : entry.graph.edges()) edges.push_back(json::array({u, v}));
    out["edges"] = edges;
    json vertices = json::object();
    for (std::size_t i = 0; i < entry.vertex_names.size(); ++i)
        vertices[entry.vertex_names[i]] = static_cast<int>(i) + 1;
    out["vertices"] = vertices;
    json classes = json::array();
    for (const auto& cls : oramsey::one_ordering_classes(entry)) {
        json c;
        c["representative"] =
            oramsey::ordering_display_name(entry, cls.representative.first,
                                           cls.representative.second);
        json members = json::array();
        for (const auto& [vertex, label] : cls.members)
            members.push_back(oramsey::ordering_display_name(entry, vertex, label));
        c["members"] = members;
        classes.push_back(c);
    }
    out["ordering_classes"] = classes;
    return out;
}

int cmd_catalog(const std::string& graph) {
    if (!graph.empty()) {
        const auto* entry = oramsey::find_catalog_entry(graph);
        if (entry == nullptr) throw std::invalid_argument("unknown catalog graph '" + graph + "'");
        emit(catalog_entry_json(*entry));
        return 0;
    }
    json out;
    json graphs = json::array();
    for (const auto& entry : oramsey::catalog()) graphs.push_back(catalog_entry_json(entry));
    out["graphs"] = graphs;
    emit(out);
    return 0;
}

int cmd_verify(const std::string& certificate_path, const TargetOptions& targets) {
    const auto [h1, h2] = resolve_targets(targets);
    const oramsey::OrderedColoring coloring = oramsey::io::load_coloring(certificate_path);
    if (!coloring.is_complete())
        throw std::invalid_argument(certificate_path + " is not a complete coloring");

    const auto report = oramsey::verify_certificate(coloring, h1, h2);
    json out;
    out["n"] = coloring.vertex_count();
    out["h1"] = oramsey::io::to_json(h1);
    out["h2"] = oramsey::io::to_json(h2);
    out["avoiding"] = report.avoiding;
    if (report.implied_lower_bound)
        out["implied_lower_bound"] = *report.implied_lower_bound;
    else
        out["implied_lower_bound"] = nullptr;
    json violations = json::array();
    for (const auto& embedding : report.violations)
        violations.push_back(oramsey::io::to_json(embedding));
    out["violations"] = violations;
    emit(out);
    if (report.avoiding) {
        std::cerr << "certificate avoids both targets: R_<(H1,H2) >= "
                  << *report.implied_lower_bound << "\n";
        return 0;
    }
    std::cerr << "certificate fails: " << report.violations.size()
              << " monochromatic cop" << (report.violations.size() == 1 ? "y" : "ies")
              << " found\n";
    return 1;
}

int cmd_search(int n, const TargetOptions& targets, const std::string& skeleton_path,
               const BudgetOptions& budget, const std::string& out_path) {
    const auto [h1, h2] = resolve_targets(targets);
    std::optional<oramsey::OrderedColoring> skeleton;
    if (!skeleton_path.empty()) skeleton = oramsey::io::load_coloring(skeleton_path);

    const auto outcome = oramsey::find_avoiding(n, h1, h2, skeleton, to_search_options(budget));

    json out = json::object();
    switch (outcome.status) {
        case oramsey::SearchStatus::FoundAvoiding: out["status"] = "found_avoiding"; break;
        case oramsey::SearchStatus::ExhaustedNoAvoiding:
            out["status"] = "exhausted_no_avoiding";
            break;
        case oramsey::SearchStatus::BudgetExceeded: out["status"] = "budget_exceeded"; break;
    }
    out.update(search_stats_json(outcome.stats));
    out["n"] = n;
    if (outcome.witness) {
        out["certificate"] = oramsey::io::to_json(*outcome.witness);
        out["implied_lower_bound"] = n + 1;
        if (!out_path.empty()) {
            oramsey::io::save_json(oramsey::io::to_json(*outcome.witness), out_path);
            std::cerr << "certificate written to " << out_path << "\n";
        }
    } else {
        out["certificate"] = nullptr;
        if (outcome.status == oramsey::SearchStatus::ExhaustedNoAvoiding && !skeleton)
            out["implied_upper_bound"] = n;
    }
    emit(out);
    switch (outcome.status) {
        case oramsey::SearchStatus::FoundAvoiding: return 0;
        case oramsey::SearchStatus::ExhaustedNoAvoiding: return 1;
        default: return 3;
    }
}

int cmd_ramsey(const TargetOptions& targets, int max_n, const BudgetOptions& budget) {
    const auto [h1, h2] = resolve_targets(targets);
    const auto result = oramsey::ordered_ramsey(h1, h2, max_n, to_search_options(budget));

    auto bound_json = [](const std::optional<oramsey::BoundValue>& bound) -> json {
        if (!bound) return nullptr;
        json out;
        out["value"] = bound->value;
        out["provenance"] = oramsey::provenance_name(bound->provenance);
        return out;
    };
    json out;
    out["value"] = result.value ? json(*result.value) : json(nullptr);
    out["lower"] = bound_json(result.lower);
    out["upper"] = bound_json(result.upper);
    out["budget_exceeded"] = result.budget_exceeded;
    out["max_n"] = max_n;
    out.update(search_stats_json(result.stats));
    emit(out);
    return result.value ? 0 : 3;
}

int cmd_bounds(bool table, const std::optional<int>& path_n,
               const std::vector<int>& kpnplus, const std::optional<int>& es) {
    const int selected = (table ? 1 : 0) + (path_n ? 1 : 0) + (!kpnplus.empty() ? 1 : 0) +
                         (es ? 1 : 0);
    if (selected != 1)
        throw std::invalid_argument("choose exactly one of --table, --path-n, --kpnplus, --es");

    if (table) {
        std::size_t graph_width = 0;
        std::size_t ordering_width = 0;
        for (const auto& row : oramsey::figure3_table()) {
            graph_width = std::max(graph_width, row.graph.size());
            ordering_width = std::max(ordering_width, row.ordering.size());
        }
        emit(oramsey::io::figure3_rows_json());
        for (const auto& row : oramsey::figure3_table()) {
            std::cerr << row.graph << std::string(graph_width + 2 - row.graph.size(), ' ')
                      << row.ordering
                      << std::string(ordering_width + 2 - row.ordering.size(), ' ')
                      << row.record.upper->value << "\t" << row.record.citation << "\n";
        }
        return 0;
    }
    json out;
    if (path_n) {
        out["quantity"] = "path_one_ordering_upper_bound";
        out["n"] = *path_n;
        out["value"] = oramsey::path_one_ordering_bound(*path_n);
    } else if (!kpnplus.empty()) {
        if (kpnplus.size() != 2)
            throw std::invalid_argument("--kpnplus needs two integers: m n");
        out["quantity"] = "complete_vs_path_plus_upper_bound";
        out["m"] = kpnplus[0];
        out["n"] = kpnplus[1];
        out["value"] = oramsey::complete_vs_path_plus_bound(kpnplus[0], kpnplus[1]);
    } else {
        out["quantity"] = "monotone_path_ramsey";
        out["n"] = *es;
        out["value"] = oramsey::erdos_szekeres_path(*es);
    }
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered Ramsey numbers of small orderings: search, certificates, bounds"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "list the 4-vertex graphs and their "
                                                      "1-ordering classes");
    std::string catalog_graph;
    catalog_cmd->add_option("--graph", catalog_graph, "restrict to one catalog graph");

    auto* verify_cmd =
        app.add_subcommand("verify", "check an avoiding-coloring certificate");
    std::string certificate_path;
    verify_cmd->add_option("certificate", certificate_path, "coloring JSON file")->required();
    TargetOptions verify_targets;
    add_target_options(verify_cmd, verify_targets);

    auto* search_cmd = app.add_subcommand("search", "search for an avoiding coloring on n "
                                                    "vertices");
    int search_n = 0;
    search_cmd->add_option("--n", search_n, "number of vertices")->required();
    TargetOptions search_targets;
    add_target_options(search_cmd, search_targets);
    std::string skeleton_path;
    search_cmd->add_option("--skeleton", skeleton_path, "partial coloring JSON to complete");
    std::string search_out;
    search_cmd->add_option("-o,--out", search_out, "write the found certificate to a file");
    BudgetOptions search_budget;
    add_budget_options(search_cmd, search_budget);

    auto* ramsey_cmd =
        app.add_subcommand("ramsey", "compute an ordered Ramsey number by leveled search");
    TargetOptions ramsey_targets;
    add_target_options(ramsey_cmd, ramsey_targets);
    int max_n = 0;
    ramsey_cmd->add_option("--max-n", max_n, "largest vertex count to try")->required();
    BudgetOptions ramsey_budget;
    add_budget_options(ramsey_cmd, ramsey_budget);

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds and the "
                                                    "reference table");
    bool bounds_table = false;
    bounds_cmd->add_flag("--table", bounds_table, "emit the 1-ordering upper-bound table");
    std::optional<int> bounds_path_n;
    bounds_cmd->add_option("--path-n", bounds_path_n,
                           "upper bound for 1-orderings of the n-vertex path");
    std::vector<int> bounds_kpnplus;
    bounds_cmd->add_option("--kpnplus", bounds_kpnplus,
                           "upper bound for (complete m, path-n-plus)")
        ->expected(2);
    std::optional<int> bounds_es;
    bounds_cmd->add_option("--es", bounds_es, "monotone path ordered Ramsey number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (catalog_cmd->parsed()) return cmd_catalog(catalog_graph);
        if (verify_cmd->parsed()) return cmd_verify(certificate_path, verify_targets);
        if (search_cmd->parsed())
            return cmd_search(search_n, search_targets, skeleton_path, search_budget, search_out);
        if (ramsey_cmd->parsed()) return cmd_ramsey(ramsey_targets, max_n, ramsey_budget);
        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_table, bounds_path_n, bounds_kpnplus, bounds_es);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
