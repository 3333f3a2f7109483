#include "oramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <set>
#include <stdexcept>

namespace oramsey {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSearchVertices = 32;
constexpr std::int64_t kBudgetCheckInterval = 1 << 16;

int cell_index(int i, int j) {  // requires i < j
    return (j - 1) * (j - 2) / 2 + (i - 1);
}

// A forbidden copy, expressed over positions 1..m of its sorted image.
// Labeled vertices are pinned to their label's position, so one ordering
// compiles to the set of distinct position-edge-sets its embeddings can
// realize. The trigger (pstar,qstar) is the pattern pair assigned last in
// the column-major edge order; positions above qstar carry no pattern
// edges and only need spare vertices above the trigger's endpoint.
struct Pattern {
    int m = 0;
    int pstar = 0, qstar = 0;
    std::vector<std::vector<int>> lower_pairs;  // lower_pairs[t]: p < t with (p,t) in pattern
};

struct CompiledTarget {
    int m = 0;
    bool edgeless = false;
    std::vector<Pattern> patterns;
};

CompiledTarget compile_target(const KOrdering& ordering) {
    CompiledTarget target;
    const int m = ordering.vertex_count();
    target.m = m;
    if (ordering.graph().edges().empty()) {
        target.edgeless = true;
        return target;
    }

    std::vector<int> position_of(static_cast<std::size_t>(m) + 1, 0);  // vertex -> position
    std::vector<int> free_positions;
    {
        std::vector<bool> taken(static_cast<std::size_t>(m) + 1, false);
        for (const auto& [vertex, label] : ordering.labels()) {
            position_of[vertex] = label;
            taken[label] = true;
        }
        for (int p = 1; p <= m; ++p)
            if (!taken[p]) free_positions.push_back(p);
    }
    std::vector<int> unlabeled;
    for (int v = 1; v <= m; ++v)
        if (!ordering.label_of(v)) unlabeled.push_back(v);

    std::set<std::vector<VertexPair>> edge_sets;
    if (ordering.graph().is_complete()) {
        std::vector<VertexPair> all;
        for (int q = 2; q <= m; ++q)
            for (int p = 1; p < q; ++p) all.push_back({p, q});
        edge_sets.insert(std::move(all));
    } else {
        if (unlabeled.size() > 8)
            throw std::invalid_argument("ordering has too many unlabeled vertices to compile");
        std::vector<int> slots = free_positions;
        do {
            for (std::size_t t = 0; t < slots.size(); ++t)
                position_of[unlabeled[t]] = slots[t];
            std::vector<VertexPair> pairs;
            for (const auto& [u, v] : ordering.graph().edges()) {
                int p = position_of[u];
                int q = position_of[v];
                if (p > q) std::swap(p, q);
                pairs.push_back({p, q});
            }
            std::sort(pairs.begin(), pairs.end());
            edge_sets.insert(std::move(pairs));
        } while (std::next_permutation(slots.begin(), slots.end()));
    }

    for (const auto& pairs : edge_sets) {
        Pattern pattern;
        pattern.m = m;
        auto trigger = *std::max_element(pairs.begin(), pairs.end(),
                                         [](const VertexPair& a, const VertexPair& b) {
                                             return std::pair{a.second, a.first} <
                                                    std::pair{b.second, b.first};
                                         });
        pattern.pstar = trigger.first;
        pattern.qstar = trigger.second;
        pattern.lower_pairs.assign(static_cast<std::size_t>(pattern.qstar) + 1, {});
        for (const auto& [p, q] : pairs) pattern.lower_pairs[q].push_back(p);
        target.patterns.push_back(std::move(pattern));
    }
    return target;
}

// Contained in every complete coloring on n vertices.
bool trivially_contained(const CompiledTarget& target, int n) {
    if (target.m <= 1) return n >= 1;
    return target.edgeless && target.m <= n;
}

enum class RunStatus { Exhausted, Found, Budget, Cancelled };

struct EngineResult {
    RunStatus status = RunStatus::Exhausted;
    std::vector<Color> witness;
    std::int64_t nodes = 0;
    std::int64_t prunes = 0;
    std::int64_t leaves = 0;
};

struct SharedControl {
    std::atomic<std::int64_t> nodes{0};
    std::atomic<int> winner{kNoWinner};
    std::int64_t max_nodes = -1;  // -1 unbounded
    std::optional<Clock::time_point> deadline;

    static constexpr int kNoWinner = 1 << 30;
};

class Engine {
public:
    Engine(int n, const CompiledTarget& red, const CompiledTarget& blue, SharedControl& control)
        : n_(n), positions_(n * (n - 1) / 2), red_(red), blue_(blue), control_(control) {
        cells_.assign(static_cast<std::size_t>(positions_), Color::Unknown);
        preset.assign(static_cast<std::size_t>(positions_), Color::Unknown);
        pos_pair_.reserve(static_cast<std::size_t>(positions_));
        for (int j = 2; j <= n_; ++j)
            for (int i = 1; i < j; ++i) pos_pair_.push_back({i, j});
        const int max_m = std::max(red_.m, blue_.m);
        image_.assign(static_cast<std::size_t>(max_m) + 1, 0);
    }

    std::vector<Color> preset;  // Unknown = free to assign
    bool break_first_edge = false;
    bool count_mode = false;
    int worker_index = 0;

    // True when the skeleton's known edges already realize a forbidden copy.
    bool preset_has_forbidden_copy() {
        cells_ = preset;
        for (int pos = 0; pos < positions_; ++pos) {
            const Color c = cells_[static_cast<std::size_t>(pos)];
            if (c != Color::Unknown && copy_completed_at(pos, c)) return true;
        }
        std::fill(cells_.begin(), cells_.end(), Color::Unknown);
        return false;
    }

    EngineResult run() {
        result_ = EngineResult{};
        std::fill(cells_.begin(), cells_.end(), Color::Unknown);
        result_.status = descend(0);
        flush_nodes();
        return result_;
    }

private:
    RunStatus descend(int pos) {
        if (pos == positions_) {
            if (count_mode) {
                ++result_.leaves;
                return RunStatus::Exhausted;
            }
            result_.witness = cells_;
            return RunStatus::Found;
        }
        const std::size_t slot = static_cast<std::size_t>(pos);
        if (preset[slot] != Color::Unknown) {
            const Color c = preset[slot];
            cells_[slot] = c;
            RunStatus status = RunStatus::Exhausted;
            if (copy_completed_at(pos, c)) {
                ++result_.prunes;
            } else {
                status = descend(pos + 1);
            }
            cells_[slot] = Color::Unknown;
            return status;
        }
        for (const Color c : {Color::Red, Color::Blue}) {
            if (pos == 0 && break_first_edge && c == Color::Blue) break;
            ++local_nodes_;
            if ((local_nodes_ & (kBudgetCheckInterval - 1)) == 0) {
                if (const auto stop = control_check()) return *stop;
            }
            cells_[slot] = c;
            if (copy_completed_at(pos, c)) {
                ++result_.prunes;
            } else {
                const RunStatus status = descend(pos + 1);
                if (status != RunStatus::Exhausted) {
                    cells_[slot] = Color::Unknown;
                    return status;
                }
            }
            cells_[slot] = Color::Unknown;
        }
        return RunStatus::Exhausted;
    }

    void flush_nodes() {
        control_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        result_.nodes += local_nodes_;
        local_nodes_ = 0;
    }

    std::optional<RunStatus> control_check() {
        flush_nodes();
        if (control_.max_nodes >= 0 &&
            control_.nodes.load(std::memory_order_relaxed) >= control_.max_nodes)
            return RunStatus::Budget;
        if (control_.deadline && Clock::now() >= *control_.deadline) return RunStatus::Budget;
        if (control_.winner.load(std::memory_order_relaxed) < worker_index)
            return RunStatus::Cancelled;
        return std::nullopt;
    }

    // Any forbidden copy whose last edge in assignment order is `pos`?
    bool copy_completed_at(int pos, Color c) {
        const CompiledTarget& target = (c == Color::Red) ? red_ : blue_;
        const auto [i, j] = pos_pair_[static_cast<std::size_t>(pos)];
        for (const Pattern& pattern : target.patterns) {
            if (i - 1 < pattern.pstar - 1) continue;
            if (j - i - 1 < pattern.qstar - 1 - pattern.pstar) continue;
            if (n_ - j < pattern.m - pattern.qstar) continue;
            if (probe(pattern, c, i, j, 1)) return true;
        }
        return false;
    }

    // Fills image positions 1..qstar in ascending vertex order with
    // position pstar fixed at i and qstar at j, checking the pattern's
    // edges to lower positions as each position is placed.
    bool probe(const Pattern& pattern, Color c, int i, int j, int t) {
        if (t > pattern.qstar) return true;
        if (t == pattern.pstar) return probe_at(pattern, c, i, j, t, i);
        if (t == pattern.qstar) return probe_at(pattern, c, i, j, t, j);
        const int low = image_[static_cast<std::size_t>(t - 1)] + 1;
        const int high =
            (t < pattern.pstar) ? i - (pattern.pstar - t) : j - (pattern.qstar - t);
        for (int w = low; w <= high; ++w)
            if (probe_at(pattern, c, i, j, t, w)) return true;
        return false;
    }

    bool probe_at(const Pattern& pattern, Color c, int i, int j, int t, int w) {
        for (const int p : pattern.lower_pairs[static_cast<std::size_t>(t)]) {
            const int a = image_[static_cast<std::size_t>(p)];
            if (cells_[static_cast<std::size_t>(cell_index(a, w))] != c) return false;
        }
        image_[static_cast<std::size_t>(t)] = w;
        return probe(pattern, c, i, j, t + 1);
    }

    int n_;
    int positions_;
    const CompiledTarget& red_;
    const CompiledTarget& blue_;
    SharedControl& control_;
    std::vector<Color> cells_;
    std::vector<VertexPair> pos_pair_;
    std::vector<int> image_;
    std::int64_t local_nodes_ = 0;
    EngineResult result_;
};

void validate_search_size(int n) {
    if (n < 1) throw std::invalid_argument("search needs at least one vertex");
    if (n > kMaxSearchVertices)
        throw std::invalid_argument("search supports at most " +
                                    std::to_string(kMaxSearchVertices) + " vertices");
}

std::vector<Color> preset_from_skeleton(int n, const std::optional<OrderedColoring>& skeleton) {
    if (!skeleton) return std::vector<Color>(static_cast<std::size_t>(n) * (n - 1) / 2,
                                             Color::Unknown);
    if (skeleton->vertex_count() != n)
        throw std::invalid_argument("skeleton has " + std::to_string(skeleton->vertex_count()) +
                                    " vertices, search asked for " + std::to_string(n));
    return skeleton->cells();
}

}  // namespace

SearchOutcome find_avoiding(int n, const KOrdering& h1, const KOrdering& h2,
                            const std::optional<OrderedColoring>& skeleton,
                            const SearchOptions& options) {
    validate_search_size(n);
    const auto start = Clock::now();
    auto finish_stats = [&](SearchOutcome& outcome, const SharedControl& control,
                            std::int64_t prunes) {
        outcome.stats.nodes = control.nodes.load();
        outcome.stats.prunes = prunes;
        outcome.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    };

    const CompiledTarget red = compile_target(h1);
    const CompiledTarget blue = compile_target(h2);

    SharedControl control;
    if (options.budget.max_nodes) {
        if (*options.budget.max_nodes <= 0)
            throw std::invalid_argument("node budget must be positive");
        control.max_nodes = *options.budget.max_nodes;
    }
    if (options.budget.max_seconds) {
        if (*options.budget.max_seconds <= 0)
            throw std::invalid_argument("time budget must be positive");
        control.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(*options.budget.max_seconds));
    }

    if (trivially_contained(red, n) || trivially_contained(blue, n)) {
        SearchOutcome outcome;
        outcome.status = SearchStatus::ExhaustedNoAvoiding;
        finish_stats(outcome, control, 0);
        return outcome;
    }

    const std::vector<Color> preset = preset_from_skeleton(n, skeleton);
    const bool skeleton_empty =
        std::all_of(preset.begin(), preset.end(), [](Color c) { return c == Color::Unknown; });
    {
        Engine probe_engine(n, red, blue, control);
        probe_engine.preset = preset;
        if (probe_engine.preset_has_forbidden_copy())
            throw std::invalid_argument("skeleton already contains a forbidden copy");
    }

    const bool breaking = options.color_swap_breaking && skeleton_empty && h1 == h2;
    const int positions = n * (n - 1) / 2;

    std::vector<EngineResult> results;
    if (options.threads >= 2 && positions >= 2 && preset[0] == Color::Unknown &&
        preset[1] == Color::Unknown) {
        // Split the first two edge decisions; worker order is the
        // assignment order, so the merged witness is the one the
        // sequential search would report.
        std::vector<std::pair<Color, Color>> prefixes;
        for (const Color first : {Color::Red, Color::Blue}) {
            if (breaking && first == Color::Blue) break;
            for (const Color second : {Color::Red, Color::Blue})
                prefixes.push_back({first, second});
        }
        std::vector<std::future<EngineResult>> futures;
        for (std::size_t w = 0; w < prefixes.size(); ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                Engine engine(n, red, blue, control);
                engine.preset = preset;
                engine.preset[0] = prefixes[w].first;
                engine.preset[1] = prefixes[w].second;
                engine.worker_index = static_cast<int>(w);
                EngineResult r = engine.run();
                if (r.status == RunStatus::Found) {
                    int expected = control.winner.load();
                    while (static_cast<int>(w) < expected &&
                           !control.winner.compare_exchange_weak(expected, static_cast<int>(w))) {
                    }
                }
                return r;
            }));
        }
        for (auto& future : futures) results.push_back(future.get());
    } else {
        Engine engine(n, red, blue, control);
        engine.preset = preset;
        engine.break_first_edge = breaking;
        results.push_back(engine.run());
    }

    std::int64_t prunes = 0;
    for (const auto& r : results) prunes += r.prunes;

    SearchOutcome outcome;
    outcome.status = SearchStatus::ExhaustedNoAvoiding;
    for (const auto& r : results) {
        if (r.status == RunStatus::Exhausted) continue;
        if (r.status == RunStatus::Found) {
            outcome.status = SearchStatus::FoundAvoiding;
            outcome.witness = OrderedColoring::from_cells(n, r.witness);
        } else {
            outcome.status = SearchStatus::BudgetExceeded;
            outcome.witness.reset();
        }
        break;
    }
    finish_stats(outcome, control, prunes);

    if (outcome.status == SearchStatus::FoundAvoiding) {
        if (!outcome.witness->is_complete() || !avoids(*outcome.witness, h1, h2))
            throw std::logic_error("search returned a coloring that fails verification");
        if (skeleton) {
            for (int pos = 0; pos < positions; ++pos)
                if (preset[static_cast<std::size_t>(pos)] != Color::Unknown &&
                    outcome.witness->cells()[static_cast<std::size_t>(pos)] !=
                        preset[static_cast<std::size_t>(pos)])
                    throw std::logic_error("search witness does not extend the skeleton");
        }
    }
    return outcome;
}

std::int64_t count_avoiding(int n, const KOrdering& h1, const KOrdering& h2) {
    validate_search_size(n);
    const int positions = n * (n - 1) / 2;
    if (positions > 28)
        throw std::invalid_argument("instance too large for exact counting (> 28 edges)");

    const CompiledTarget red = compile_target(h1);
    const CompiledTarget blue = compile_target(h2);
    if (trivially_contained(red, n) || trivially_contained(blue, n)) return 0;

    SharedControl control;
    Engine engine(n, red, blue, control);
    engine.count_mode = true;
    const EngineResult result = engine.run();
    return result.leaves;
}

RamseyResult ordered_ramsey(const KOrdering& h1, const KOrdering& h2, int n_max,
                            const SearchOptions& options) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    const auto start = Clock::now();

    RamseyResult result;
    result.lower = BoundValue{1, Provenance::Search};
    for (int n = 1; n <= n_max; ++n) {
        SearchOptions level = options;
        if (options.budget.max_nodes) {
            const std::int64_t remaining = *options.budget.max_nodes - result.stats.nodes;
            if (remaining <= 0) {
                result.budget_exceeded = true;
                break;
            }
            level.budget.max_nodes = remaining;
        }
        if (options.budget.max_seconds) {
            const double elapsed =
                std::chrono::duration<double>(Clock::now() - start).count();
            const double remaining = *options.budget.max_seconds - elapsed;
            if (remaining <= 0) {
                result.budget_exceeded = true;
                break;
            }
            level.budget.max_seconds = remaining;
        }

        const SearchOutcome outcome = find_avoiding(n, h1, h2, std::nullopt, level);
        result.stats.nodes += outcome.stats.nodes;
        result.stats.prunes += outcome.stats.prunes;
        if (outcome.status == SearchStatus::FoundAvoiding) {
            result.lower = BoundValue{n + 1, Provenance::Search};
            continue;
        }
        if (outcome.status == SearchStatus::ExhaustedNoAvoiding) {
            // No avoiding coloring at n means none at any larger n either.
            result.upper = BoundValue{n, Provenance::Search};
            result.value = n;
            break;
        }
        result.budget_exceeded = true;
        break;
    }
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

CertificateReport verify_certificate(const OrderedColoring& coloring, const KOrdering& h1,
                                     const KOrdering& h2) {
    CertificateReport report;
    const auto red = enumerate_embeddings(coloring, h1, Color::Red);
    const auto blue = enumerate_embeddings(coloring, h2, Color::Blue);
    report.violations.insert(report.violations.end(), red.begin(), red.end());
    report.violations.insert(report.violations.end(), blue.begin(), blue.end());
    report.avoiding = report.violations.empty();
    if (report.avoiding) report.implied_lower_bound = coloring.vertex_count() + 1;
    return report;
}

}  // namespace oramsey
