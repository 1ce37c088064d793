#include "semdis/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "semdis/rng.hpp"

namespace semdis {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Brute: return "brute";
        case Algorithm::SmartBrute: return "smart-brute";
        case Algorithm::Pruned: return "pruned";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "brute") return Algorithm::Brute;
    if (name == "smart-brute") return Algorithm::SmartBrute;
    if (name == "pruned") return Algorithm::Pruned;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::size_t SearchConfig::resolved_target_len() const {
    if (target_len != 0) return target_len;
    return static_cast<std::size_t>(std::llround(0.4 * static_cast<double>(context_len)));
}

void SearchConfig::validate(std::size_t n) const {
    const std::size_t l = resolved_target_len();
    if (context_len == 0 || l == 0) {
        throw InvalidWindowError("context and target lengths must be positive");
    }
    // l == L degenerates to one context per target, which is exactly the
    // classic-discord reduction; only l > L is rejected.
    if (l > context_len) {
        throw InvalidWindowError("target length " + std::to_string(l) +
                                 " must not exceed context length " +
                                 std::to_string(context_len));
    }
    if (context_len > n) {
        throw InvalidWindowError("context length " + std::to_string(context_len) +
                                 " exceeds series length " + std::to_string(n));
    }
    if (!epsilon.fixed) {
        if (!(epsilon.percentile > 0.0 && epsilon.percentile <= 1.0)) {
            throw std::invalid_argument("epsilon percentile must be in (0, 1]");
        }
        if (epsilon.samples == 0) {
            throw std::invalid_argument("epsilon sample count must be positive");
        }
    } else if (!(epsilon.value >= 0.0)) {
        throw std::invalid_argument("epsilon must be nonnegative");
    }
}

SeriesStats compute_series_stats(const TimeSeries& ts, std::size_t context_len,
                                 std::size_t target_len) {
    SeriesStats st;
    st.n = ts.size();
    st.context_len = context_len;
    st.target_len = target_len;
    st.target = compute_moving_stats(ts, target_len);
    st.context = compute_moving_stats(ts, context_len);
    st.max_sigma = compute_window_max_std(st.context, context_len, target_len, st.n);
    return st;
}

double calibrate_epsilon(const TimeSeries& ts, const MovingStats& context_stats,
                         std::size_t samples, double percentile,
                         std::uint64_t seed) {
    if (!(percentile > 0.0 && percentile <= 1.0)) {
        throw std::invalid_argument("epsilon percentile must be in (0, 1]");
    }
    std::vector<std::uint32_t> starts;
    starts.reserve(context_stats.count());
    for (std::size_t k = 0; k < context_stats.count(); ++k) {
        if (!context_stats.is_flat(k)) starts.push_back(static_cast<std::uint32_t>(k));
    }
    if (starts.size() < 2) {
        throw CalibrationError("need at least two non-flat contexts to calibrate epsilon");
    }
    Rng rng(seed);
    std::vector<double> dists;
    dists.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t a = rng.uniform_below(starts.size());
        std::size_t b = rng.uniform_below(starts.size());
        while (b == a) b = rng.uniform_below(starts.size());
        dists.push_back(znorm_dist(ts, starts[a], starts[b], context_stats));
    }
    std::sort(dists.begin(), dists.end());
    // Nearest-rank percentile: the ceil(pct * N)-th smallest.
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(percentile * static_cast<double>(dists.size())));
    if (rank == 0) rank = 1;
    if (rank > dists.size()) rank = dists.size();
    return dists[rank - 1];
}

double calibrate_epsilon(const TimeSeries& ts, std::size_t context_len,
                         std::size_t samples, double percentile,
                         std::uint64_t seed) {
    const MovingStats stats = compute_moving_stats(ts, context_len);
    return calibrate_epsilon(ts, stats, samples, percentile, seed);
}

double resolve_epsilon(const TimeSeries& ts, const SeriesStats& stats,
                       const SearchConfig& cfg) {
    if (cfg.epsilon.fixed) return cfg.epsilon.value;
    return calibrate_epsilon(ts, stats.context, cfg.epsilon.samples,
                             cfg.epsilon.percentile, cfg.seed);
}

namespace {

// Context-similarity gate in correlation form: d_ED(i,j) < eps is
// delta_ij > 1 - eps^2 / (2L). -inf when eps is infinite (gate open).
inline double gate_threshold(double epsilon, std::size_t context_len) {
    if (std::isinf(epsilon)) return -kInfDistance;
    return 1.0 - epsilon * epsilon / (2.0 * static_cast<double>(context_len));
}

// Enumerates the context-pair cells of one (p, q) evaluation with
// closed-form distances. The context inner products come from a per-pair
// grid: direct dot products along the first row and column, diagonal
// recurrence inside. Scratch buffers persist across evaluations.
class FastPairEvaluator {
public:
    FastPairEvaluator(const TimeSeries& ts, const SeriesStats& st, double epsilon)
        : ts_(ts), st_(st),
          delta_min_(gate_threshold(epsilon, st.context_len)) {
        const std::size_t span = st_.context_len - st_.target_len + 1;
        grid_.resize(span * span);
        t1_.resize(span);
        x_.resize(span);
        y_.resize(span);
        t3_.resize(span);
        inv_j_.resize(span);
        b_j_.resize(span);
    }

    OptDistResult evaluate(double qt_pq, std::size_t p, std::size_t q,
                           std::uint64_t& cells) {
        const std::size_t L = st_.context_len;
        const double Ld = static_cast<double>(L);
        const double l = static_cast<double>(st_.target_len);
        const std::size_t ilo = st_.ctx_lo(p), ihi = st_.ctx_hi(p);
        const std::size_t jlo = st_.ctx_lo(q), jhi = st_.ctx_hi(q);
        const std::size_t ni = ihi - ilo + 1, nj = jhi - jlo + 1;
        cells += static_cast<std::uint64_t>(ni) * nj;

        fill_grid(ilo, ni, jlo, nj);

        const MovingStats& cs = st_.context;
        const double mu_p = st_.target.mu[p], sigma_p = st_.target.sigma[p];
        const double mu_q = st_.target.mu[q], sigma_q = st_.target.sigma[q];
        for (std::size_t di = 0; di < ni; ++di) {
            const std::size_t i = ilo + di;
            if (cs.is_flat(i)) {
                t1_[di] = kInfDistance;
                continue;
            }
            const double inv_i = 1.0 / cs.sigma[i];
            const double b_i = cs.mu[i] * inv_i;
            t1_[di] = l * inv_i * inv_i *
                      (sigma_p * sigma_p + (mu_p - cs.mu[i]) * (mu_p - cs.mu[i]));
            x_[di] = 2.0 * l * (qt_pq / l * inv_i - mu_q * b_i);
            y_[di] = 2.0 * l * (b_i - mu_p * inv_i);
        }
        for (std::size_t dj = 0; dj < nj; ++dj) {
            const std::size_t j = jlo + dj;
            if (cs.is_flat(j)) {
                inv_j_[dj] = 0.0;  // marks the column invalid
                continue;
            }
            const double inv = 1.0 / cs.sigma[j];
            inv_j_[dj] = inv;
            b_j_[dj] = cs.mu[j] * inv;
            t3_[dj] = l * inv * inv *
                      (sigma_q * sigma_q + (mu_q - cs.mu[j]) * (mu_q - cs.mu[j]));
        }

        OptDistResult best;
        double best_d2 = kInfDistance;
        for (std::size_t di = 0; di < ni; ++di) {
            const std::size_t i = ilo + di;
            if (cs.is_flat(i)) continue;
            const double* grow = grid_.data() + di * nj;
            const double lmu_i = Ld * cs.mu[i];
            const double pgate = 1.0 / (Ld * cs.sigma[i]);
            const double t1 = t1_[di], x = x_[di], y = y_[di];
            // Skip the self-match band |i-j| <= L arithmetically.
            const std::size_t banned_lo = i > L ? i - L : 0;
            const std::size_t banned_hi = i + L;
            auto scan = [&](std::size_t from, std::size_t to) {
                for (std::size_t dj = from; dj < to; ++dj) {
                    const double inv_j = inv_j_[dj];
                    if (inv_j == 0.0) continue;
                    const std::size_t j = jlo + dj;
                    double delta = (grow[dj] - lmu_i * cs.mu[j]) * pgate * inv_j;
                    if (delta > 1.0) delta = 1.0;
                    if (!(delta > delta_min_)) continue;
                    double d2 = t1 + t3_[dj] - (inv_j * x + b_j_[dj] * y);
                    if (d2 < 0.0) d2 = 0.0;
                    if (d2 < best_d2) {
                        best_d2 = d2;
                        best.i = i;
                        best.j = j;
                    }
                }
            };
            // j segments outside [banned_lo, banned_hi]
            std::size_t seg_end = banned_lo > jlo ? std::min(banned_lo - jlo, nj) : 0;
            scan(0, seg_end);
            if (banned_hi + 1 > jlo) {
                std::size_t from = banned_hi + 1 - jlo;
                if (from < nj) scan(from, nj);
            } else {
                scan(0, nj);  // band entirely left of the j range
            }
        }
        if (best_d2 < kInfDistance) {
            best.distance = std::sqrt(best_d2);
            best.feasible = true;
        }
        return best;
    }

private:
    void fill_grid(std::size_t ilo, std::size_t ni, std::size_t jlo, std::size_t nj) {
        const std::size_t L = st_.context_len;
        const double* t = ts_.data();
        // First row: direct dot products.
        for (std::size_t dj = 0; dj < nj; ++dj) {
            const double* a = t + ilo;
            const double* b = t + jlo + dj;
            double acc = 0.0;
            for (std::size_t m = 0; m < L; ++m) acc += a[m] * b[m];
            grid_[dj] = acc;
        }
        // First column: direct dot products.
        for (std::size_t di = 1; di < ni; ++di) {
            const double* a = t + ilo + di;
            const double* b = t + jlo;
            double acc = 0.0;
            for (std::size_t m = 0; m < L; ++m) acc += a[m] * b[m];
            grid_[di * nj] = acc;
        }
        // Interior via the diagonal recurrence.
        for (std::size_t di = 1; di < ni; ++di) {
            const std::size_t i = ilo + di;
            double* row = grid_.data() + di * nj;
            const double* prev = row - nj;
            const double drop_i = t[i - 1];
            const double add_i = t[i + L - 1];
            for (std::size_t dj = 1; dj < nj; ++dj) {
                const std::size_t j = jlo + dj;
                row[dj] = prev[dj - 1] - drop_i * t[j - 1] + add_i * t[j + L - 1];
            }
        }
    }

    const TimeSeries& ts_;
    const SeriesStats& st_;
    double delta_min_;
    std::vector<double> grid_;
    std::vector<double> t1_, x_, y_;          // per-i tables
    std::vector<double> t3_, inv_j_, b_j_;    // per-j tables
};

// Literal-sum flavor of the same enumeration (the oracle path).
OptDistResult evaluate_pair_direct(const TimeSeries& ts, const SeriesStats& st,
                                   std::size_t p, std::size_t q, double delta_min,
                                   std::uint64_t& cells) {
    const std::size_t L = st.context_len;
    const std::size_t ilo = st.ctx_lo(p), ihi = st.ctx_hi(p);
    const std::size_t jlo = st.ctx_lo(q), jhi = st.ctx_hi(q);
    cells += static_cast<std::uint64_t>(ihi - ilo + 1) * (jhi - jlo + 1);

    const MovingStats& cs = st.context;
    OptDistResult best;
    DistanceInputs d;
    d.p = p;
    d.q = q;
    d.target_len = st.target_len;
    d.context_len = L;
    for (std::size_t i = ilo; i <= ihi; ++i) {
        if (cs.is_flat(i)) continue;
        for (std::size_t j = jlo; j <= jhi; ++j) {
            if (cs.is_flat(j)) continue;
            if (is_self_match(i, j, L)) continue;
            double dot = 0.0;
            const double* a = ts.data() + i;
            const double* b = ts.data() + j;
            for (std::size_t m = 0; m < L; ++m) dot += a[m] * b[m];
            double delta = (dot - static_cast<double>(L) * cs.mu[i] * cs.mu[j]) /
                           (static_cast<double>(L) * cs.sigma[i] * cs.sigma[j]);
            if (delta > 1.0) delta = 1.0;
            if (!(delta > delta_min)) continue;
            d.i = i;
            d.j = j;
            const double dist = context_aware_dist_direct(ts, d, st.target, st.context);
            if (dist < best.distance) {
                best.distance = dist;
                best.feasible = true;
                best.i = i;
                best.j = j;
            }
        }
    }
    return best;
}

}  // namespace

OptDistResult opt_context_dist_direct(const TimeSeries& ts, const SeriesStats& stats,
                                      std::size_t p, std::size_t q, double epsilon,
                                      SearchMetrics* metrics) {
    std::uint64_t cells = 0;
    auto res = evaluate_pair_direct(ts, stats, p, q,
                                    gate_threshold(epsilon, stats.context_len), cells);
    if (metrics) {
        metrics->distance_calls += cells;
        metrics->evaluated_pairs += 1;
    }
    return res;
}

OptDistResult opt_context_dist_fast(const TimeSeries& ts, const SeriesStats& stats,
                                    double qt_pq, std::size_t p, std::size_t q,
                                    double epsilon, SearchMetrics* metrics) {
    FastPairEvaluator eval(ts, stats, epsilon);
    std::uint64_t cells = 0;
    auto res = eval.evaluate(qt_pq, p, q, cells);
    if (metrics) {
        metrics->distance_calls += cells;
        metrics->evaluated_pairs += 1;
    }
    return res;
}

namespace {

struct TargetBest {
    double distance = kInfDistance;
    std::size_t q = 0, i = 0, j = 0;
};

struct WorkerOutcome {
    SearchMetrics metrics;
    bool found = false;
    double distance = 0.0;
    std::size_t p = 0, q = 0, i = 0, j = 0;

    void offer(std::size_t p_, const TargetBest& b) {
        if (b.distance == kInfDistance) return;  // empty constraint set: excluded
        if (!found || b.distance > distance) {
            found = true;
            distance = b.distance;
            p = p_;
            q = b.q;
            i = b.i;
            j = b.j;
        }
    }
};

// Prefix counts of feasible targets enable O(1) candidate accounting
// per target.
struct FeasiblePrefix {
    std::vector<std::uint64_t> prefix;  // prefix[k] = feasible targets with index < k

    explicit FeasiblePrefix(const SeriesStats& st) {
        const std::size_t count = st.target_count();
        prefix.assign(count + 1, 0);
        for (std::size_t k = 0; k < count; ++k) {
            prefix[k + 1] = prefix[k] + (st.target_feasible(k) ? 1 : 0);
        }
    }

    std::uint64_t outside_band(std::size_t p, std::size_t L) const {
        const std::size_t count = prefix.size() - 1;
        const std::uint64_t below = p > L ? prefix[p - L] : 0;
        const std::size_t hi = p + L + 1;
        const std::uint64_t above = hi < count ? prefix[count] - prefix[hi] : 0;
        return below + above;
    }
};

// Runs fn(lo, hi, slot) over a contiguous partition of [0, count).
template <typename Fn>
void run_partitioned(unsigned threads, std::size_t count, Fn&& fn) {
    unsigned want = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (want == 0) want = 1;
    if (want > count) want = static_cast<unsigned>(count ? count : 1);
    if (want <= 1) {
        fn(std::size_t{0}, count, 0u);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(want);
    const std::size_t base = count / want, extra = count % want;
    std::size_t lo = 0;
    for (unsigned w = 0; w < want; ++w) {
        const std::size_t hi = lo + base + (w < extra ? 1 : 0);
        pool.emplace_back([&, lo, hi, w] {
            try {
                fn(lo, hi, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

SearchResult finish(const std::vector<WorkerOutcome>& outcomes, const SearchConfig& cfg,
                    std::size_t l, double epsilon) {
    WorkerOutcome merged;
    for (const auto& o : outcomes) {
        merged.metrics += o.metrics;
        if (o.found && (!merged.found || o.distance > merged.distance)) {
            merged.found = true;
            merged.distance = o.distance;
            merged.p = o.p;
            merged.q = o.q;
            merged.i = o.i;
            merged.j = o.j;
        }
    }
    if (!merged.found) {
        throw EmptyResultError("no target has a feasible non-self match");
    }
    SearchResult res;
    res.report.distance = merged.distance;
    res.report.target = merged.p;
    res.report.match_target = merged.q;
    res.report.context = merged.i;
    res.report.match_context = merged.j;
    res.report.target_len = l;
    res.report.context_len = cfg.context_len;
    res.report.epsilon = epsilon;
    res.metrics = merged.metrics;
    return res;
}

SearchResult brute_impl(const TimeSeries& ts, const SearchConfig& cfg, bool smart) {
    require_finite(ts);
    cfg.validate(ts.size());
    const std::size_t l = cfg.resolved_target_len();
    const std::size_t L = cfg.context_len;
    const SeriesStats stats = compute_series_stats(ts, L, l);
    const double epsilon = resolve_epsilon(ts, stats, cfg);
    const double delta_min = gate_threshold(epsilon, L);
    const FeasiblePrefix feas(stats);
    const std::size_t count = stats.target_count();

    unsigned want = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    if (want == 0) want = 1;
    std::vector<WorkerOutcome> outcomes(std::min<std::size_t>(want, count ? count : 1));

    run_partitioned(cfg.threads, count, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        WorkerOutcome& out = outcomes[slot];
        std::optional<QTRow> row;
        std::optional<FastPairEvaluator> eval;
        if (smart) {
            eval.emplace(ts, stats, epsilon);
        }
        for (std::size_t p = lo; p < hi; ++p) {
            if (smart) {
                if (!row) {
                    row = qt_canonical_row(ts, l, p);
                } else {
                    qt_advance(*row, ts);
                }
            }
            if (!stats.target_feasible(p)) continue;
            const std::uint64_t cand = feas.outside_band(p, L);
            out.metrics.candidate_pairs += cand;
            TargetBest best;
            for (std::size_t q = 0; q < count; ++q) {
                if (is_self_match(p, q, L)) continue;
                if (!stats.target_feasible(q)) continue;
                out.metrics.evaluated_pairs += 1;
                OptDistResult r;
                if (smart) {
                    r = eval->evaluate(row->qt[q], p, q, out.metrics.distance_calls);
                } else {
                    r = evaluate_pair_direct(ts, stats, p, q, delta_min,
                                             out.metrics.distance_calls);
                }
                if (r.feasible && r.distance < best.distance) {
                    best.distance = r.distance;
                    best.q = q;
                    best.i = r.i;
                    best.j = r.j;
                }
            }
            out.offer(p, best);
        }
    });
    return finish(outcomes, cfg, l, epsilon);
}

}  // namespace

SearchResult brute_force_search(const TimeSeries& ts, const SearchConfig& cfg) {
    return brute_impl(ts, cfg, cfg.algorithm == Algorithm::SmartBrute);
}

SearchResult pruned_search(const TimeSeries& ts, const SearchConfig& cfg) {
    require_finite(ts);
    cfg.validate(ts.size());
    const std::size_t l = cfg.resolved_target_len();
    const std::size_t L = cfg.context_len;
    const SeriesStats stats = compute_series_stats(ts, L, l);
    const double epsilon = resolve_epsilon(ts, stats, cfg);
    const FeasiblePrefix feas(stats);
    const std::size_t count = stats.target_count();

    unsigned want = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    if (want == 0) want = 1;
    std::vector<WorkerOutcome> outcomes(std::min<std::size_t>(want, count ? count : 1));

    run_partitioned(cfg.threads, count, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        WorkerOutcome& out = outcomes[slot];
        std::optional<QTRow> row;
        FastPairEvaluator eval(ts, stats, epsilon);
        // Min-heap of (lower bound, q): pop order is ascending bound,
        // ties by ascending q, i.e. exactly the LB-row visit order.
        using Entry = std::pair<double, std::uint32_t>;
        std::vector<Entry> heap;
        heap.reserve(count);
        const auto later = [](const Entry& a, const Entry& b) {
            return a.first > b.first || (a.first == b.first && a.second > b.second);
        };
        for (std::size_t p = lo; p < hi; ++p) {
            if (!row) {
                row = qt_canonical_row(ts, l, p);
            } else {
                qt_advance(*row, ts);
            }
            if (!stats.target_feasible(p)) continue;
            const std::uint64_t cand = feas.outside_band(p, L);
            out.metrics.candidate_pairs += cand;

            heap.clear();
            for (std::size_t q = 0; q < count; ++q) {
                if (is_self_match(p, q, L)) continue;
                if (!stats.target_feasible(q)) continue;
                const double delta = correlation(p, q, row->qt[q], stats.target);
                heap.emplace_back(lower_bound(p, q, delta, stats.max_sigma, stats.target),
                                  static_cast<std::uint32_t>(q));
            }
            out.metrics.lb_calls += heap.size();
            std::make_heap(heap.begin(), heap.end(), later);

            TargetBest best;
            std::uint64_t evaluated = 0;
            while (!heap.empty()) {
                std::pop_heap(heap.begin(), heap.end(), later);
                const auto [lb, q] = heap.back();
                heap.pop_back();
                if (best.distance <= lb) break;  // every remaining bound is >= lb
                ++evaluated;
                const OptDistResult r =
                    eval.evaluate(row->qt[q], p, q, out.metrics.distance_calls);
                if (r.feasible && r.distance < best.distance) {
                    best.distance = r.distance;
                    best.q = q;
                    best.i = r.i;
                    best.j = r.j;
                }
            }
            out.metrics.evaluated_pairs += evaluated;
            out.metrics.pruned_pairs += cand - evaluated;
            out.offer(p, best);
        }
    });
    return finish(outcomes, cfg, l, epsilon);
}

SearchResult run_search(const TimeSeries& ts, const SearchConfig& cfg) {
    if (cfg.algorithm == Algorithm::Pruned) return pruned_search(ts, cfg);
    return brute_force_search(ts, cfg);
}

std::vector<double> classic_nn_profile(const TimeSeries& ts, std::size_t w) {
    require_finite(ts);
    const MovingStats stats = compute_moving_stats(ts, w);
    const std::size_t count = stats.count();
    std::vector<double> profile(count, kInfDistance);
    QTRow row = qt_first_row(ts, w);
    for (std::size_t p = 0; p < count; ++p) {
        if (p > 0) qt_advance(row, ts);
        if (stats.is_flat(p)) continue;
        double best = kInfDistance;
        for (std::size_t q = 0; q < count; ++q) {
            const std::size_t gap = p > q ? p - q : q - p;
            if (gap <= w) continue;
            if (stats.is_flat(q)) continue;
            const double delta = correlation(p, q, row.qt[q], stats);
            const double d = znorm_dist_from_corr(delta, w);
            if (d < best) best = d;
        }
        profile[p] = best;
    }
    return profile;
}

ClassicDiscord classic_discord(const TimeSeries& ts, std::size_t w) {
    const std::vector<double> profile = classic_nn_profile(ts, w);
    ClassicDiscord out;
    bool found = false;
    for (std::size_t p = 0; p < profile.size(); ++p) {
        if (profile[p] == kInfDistance) continue;
        if (!found || profile[p] > out.nn_distance) {
            found = true;
            out.position = p;
            out.nn_distance = profile[p];
        }
    }
    if (!found) {
        throw EmptyResultError("no non-flat window with a non-self match");
    }
    return out;
}

std::uint64_t candidate_pair_count(std::size_t n, std::size_t context_len,
                                   std::size_t target_len) {
    const std::size_t count = n - target_len + 1;
    std::uint64_t pairs = 0;
    for (std::size_t p = 0; p < count; ++p) {
        const std::uint64_t below = p > context_len ? p - context_len : 0;
        const std::size_t hi = p + context_len + 1;
        const std::uint64_t above = hi < count ? count - hi : 0;
        pairs += below + above;
    }
    return pairs;
}

std::uint64_t brute_force_cell_count(std::size_t n, std::size_t context_len,
                                     std::size_t target_len) {
    const std::size_t count = n - target_len + 1;
    const std::size_t last_ctx = n - context_len;
    const std::size_t shift = context_len - target_len;
    std::vector<std::uint64_t> width(count);
    std::vector<std::uint64_t> prefix(count + 1, 0);
    for (std::size_t q = 0; q < count; ++q) {
        const std::size_t hi = q < last_ctx ? q : last_ctx;
        const std::size_t lo = q > shift ? q - shift : 0;
        width[q] = hi - lo + 1;
        prefix[q + 1] = prefix[q] + width[q];
    }
    std::uint64_t cells = 0;
    for (std::size_t p = 0; p < count; ++p) {
        const std::uint64_t below = p > context_len ? prefix[p - context_len] : 0;
        const std::size_t hi = p + context_len + 1;
        const std::uint64_t above = hi < count ? prefix[count] - prefix[hi] : 0;
        cells += width[p] * (below + above);
    }
    return cells;
}

}  // namespace semdis
