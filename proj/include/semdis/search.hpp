#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "semdis/distance.hpp"
#include "semdis/lower_bound.hpp"
#include "semdis/moving_stats.hpp"
#include "semdis/series.hpp"

namespace semdis {

enum class Algorithm { Brute, SmartBrute, Pruned };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);  // throws std::invalid_argument

/// Context-similarity threshold: either a fixed value or the
/// nearest-rank percentile of z-normalized distances between randomly
/// sampled non-flat context pairs.
struct EpsilonPolicy {
    bool fixed = false;
    double value = 0.0;        // used when fixed
    double percentile = 0.4;   // in (0, 1]
    std::size_t samples = 2000;

    static EpsilonPolicy fixed_value(double v) {
        EpsilonPolicy e;
        e.fixed = true;
        e.value = v;
        return e;
    }
    static EpsilonPolicy from_percentile(double pct = 0.4, std::size_t samples = 2000) {
        EpsilonPolicy e;
        e.percentile = pct;
        e.samples = samples;
        return e;
    }
};

struct SearchConfig {
    std::size_t context_len = 0;  // L
    std::size_t target_len = 0;   // l; 0 means round(0.4 * L)
    EpsilonPolicy epsilon = EpsilonPolicy::from_percentile();
    Algorithm algorithm = Algorithm::Pruned;
    std::uint64_t seed = 0;
    unsigned threads = 1;  // 0 means hardware concurrency

    std::size_t resolved_target_len() const;
    void validate(std::size_t n) const;  // throws InvalidWindowError
};

/// Discord answer: the target at `target` has the largest distance to
/// its nearest non-self-match reference target; that nearest distance is
/// attained by reference target `match_target` under the context pair
/// (`context`, `match_context`). All indices 0-based.
struct DiscordReport {
    double distance = 0.0;
    std::size_t target = 0;
    std::size_t match_target = 0;
    std::size_t context = 0;
    std::size_t match_context = 0;
    std::size_t target_len = 0;
    std::size_t context_len = 0;
    double epsilon = 0.0;
};

/// Work accounting. A "distance call" is one enumerated context pair
/// (i, j) inside an optimal-distance evaluation, mirroring the inner
/// double loop of the brute-force algorithm; for brute force the total
/// equals the closed-form cell count.
struct SearchMetrics {
    std::uint64_t distance_calls = 0;
    std::uint64_t lb_calls = 0;
    std::uint64_t candidate_pairs = 0;
    std::uint64_t evaluated_pairs = 0;
    std::uint64_t pruned_pairs = 0;

    double pruning_rate() const {
        return candidate_pairs == 0
                   ? 0.0
                   : static_cast<double>(pruned_pairs) / static_cast<double>(candidate_pairs);
    }

    SearchMetrics& operator+=(const SearchMetrics& o) {
        distance_calls += o.distance_calls;
        lb_calls += o.lb_calls;
        candidate_pairs += o.candidate_pairs;
        evaluated_pairs += o.evaluated_pairs;
        pruned_pairs += o.pruned_pairs;
        return *this;
    }
};

struct SearchResult {
    DiscordReport report;
    SearchMetrics metrics;
};

/// Shared read-only precomputation for one (series, L, l) configuration.
struct SeriesStats {
    std::size_t n = 0;
    std::size_t context_len = 0;
    std::size_t target_len = 0;
    MovingStats target;        // window l
    MovingStats context;       // window L
    WindowedMaxStd max_sigma;  // per target start

    std::size_t target_count() const { return n - target_len + 1; }
    std::size_t context_count() const { return n - context_len + 1; }

    /// A target can participate at all only if it is non-flat and at
    /// least one enclosing context is non-flat.
    bool target_feasible(std::size_t p) const {
        return !target.is_flat(p) && max_sigma.max_sigma_ctx[p] > 0.0;
    }

    /// Enclosing context anchor range for a target start, clipped to
    /// valid context starts.
    std::size_t ctx_lo(std::size_t p) const {
        const std::size_t shift = context_len - target_len;
        return p > shift ? p - shift : 0;
    }
    std::size_t ctx_hi(std::size_t p) const {
        const std::size_t last = n - context_len;
        return p < last ? p : last;
    }
};

SeriesStats compute_series_stats(const TimeSeries& ts, std::size_t context_len,
                                 std::size_t target_len);

/// Targets closer than or exactly L apart overlap potential contexts and
/// are skipped as self-matches.
inline bool is_self_match(std::size_t p, std::size_t q, std::size_t context_len) {
    const std::size_t d = p > q ? p - q : q - p;
    return d <= context_len;
}

/// Resolves the epsilon threshold by sampling `samples` unordered pairs
/// of distinct non-flat context starts (seeded), measuring their
/// z-normalized distances, and returning the nearest-rank percentile.
/// Throws CalibrationError with fewer than two non-flat contexts.
double calibrate_epsilon(const TimeSeries& ts, const MovingStats& context_stats,
                         std::size_t samples, double percentile,
                         std::uint64_t seed);

/// Convenience overload that computes the context stats itself.
double calibrate_epsilon(const TimeSeries& ts, std::size_t context_len,
                         std::size_t samples = 2000, double percentile = 0.4,
                         std::uint64_t seed = 0);

inline constexpr double kInfDistance = std::numeric_limits<double>::infinity();

/// Optimal context-aware distance between targets p and q: the minimum
/// over feasible context pairs (enclosure, non-flat, |i-j| > L,
/// d_ED(i, j) < epsilon). feasible == false (distance +inf) when the
/// constraint set is empty.
struct OptDistResult {
    double distance = kInfDistance;
    bool feasible = false;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Oracle flavor: literal per-point sums, no inner-product reuse.
OptDistResult opt_context_dist_direct(const TimeSeries& ts, const SeriesStats& stats,
                                      std::size_t p, std::size_t q, double epsilon,
                                      SearchMetrics* metrics = nullptr);

/// Fast flavor: closed-form distances fed by a streaming target inner
/// product and a per-pair context inner-product grid.
OptDistResult opt_context_dist_fast(const TimeSeries& ts, const SeriesStats& stats,
                                    double qt_pq, std::size_t p, std::size_t q,
                                    double epsilon, SearchMetrics* metrics = nullptr);

/// Resolves the epsilon policy once (before any search loop).
double resolve_epsilon(const TimeSeries& ts, const SeriesStats& stats,
                       const SearchConfig& cfg);

/// Exhaustive search. cfg.algorithm selects the plain (direct-sum) or
/// smart (streaming inner product) evaluation; both return identical
/// reports. Throws EmptyResultError when no target is feasible.
SearchResult brute_force_search(const TimeSeries& ts, const SearchConfig& cfg);

/// Lower-bound-pruned exact search: per target, reference targets are
/// visited in ascending lower-bound order and the scan stops as soon as
/// the running nearest-neighbor distance drops below the next bound.
/// Returns exactly what brute_force_search returns, with fewer distance
/// calls.
SearchResult pruned_search(const TimeSeries& ts, const SearchConfig& cfg);

/// Dispatches on cfg.algorithm.
SearchResult run_search(const TimeSeries& ts, const SearchConfig& cfg);

/// Classic discord baseline: the window of length w with the largest
/// z-normalized distance to its nearest non-self match (|p-q| > w).
struct ClassicDiscord {
    std::size_t position = 0;
    double nn_distance = 0.0;
};

ClassicDiscord classic_discord(const TimeSeries& ts, std::size_t w);

/// Per-target nearest-neighbor z-normalized distances used by
/// classic_discord; +inf for excluded (flat or matchless) targets.
std::vector<double> classic_nn_profile(const TimeSeries& ts, std::size_t w);

/// Closed-form work accounting for brute force on a clean series (no
/// flat windows): number of candidate (p, q) pairs and the total number
/// of (i, j) cells those pairs enumerate.
std::uint64_t candidate_pair_count(std::size_t n, std::size_t context_len,
                                   std::size_t target_len);
std::uint64_t brute_force_cell_count(std::size_t n, std::size_t context_len,
                                     std::size_t target_len);

}  // namespace semdis
