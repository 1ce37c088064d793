// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Each criterion pins its tolerances in code; budgets assume
// a desktop-class machine.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semdis/generators.hpp"
#include "semdis/report.hpp"
#include "semdis/rng.hpp"
#include "semdis/search.hpp"

using namespace semdis;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double now_sec() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// 1. Exactness: pruned == brute on 50 seeded random walks
// (n=300, L=40, l=16, 40th-percentile epsilon).
Outcome criterion_exactness() {
    Outcome out;
    int mismatches = 0;
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
        const auto ts = random_walk(300, 7000 + s);
        SearchConfig cfg;
        cfg.context_len = 40;
        cfg.target_len = 16;
        cfg.seed = 7000 + s;
        cfg.threads = 0;
        cfg.algorithm = Algorithm::SmartBrute;
        const auto brute = brute_force_search(ts, cfg);
        cfg.algorithm = Algorithm::Pruned;
        const auto pruned = pruned_search(ts, cfg);
        const bool same_idx = pruned.report.target == brute.report.target &&
                              pruned.report.match_target == brute.report.match_target &&
                              pruned.report.context == brute.report.context &&
                              pruned.report.match_context == brute.report.match_context;
        const double diff = std::abs(pruned.report.distance - brute.report.distance);
        worst = std::max(worst, diff);
        if (!same_idx || diff > 1e-9) ++mismatches;
    }
    out.pass = mismatches == 0;
    out.detail = fmt("50 series, mismatches=%d, worst distance diff=%.3g", mismatches, worst);
    return out;
}

// 2. Lower-bound soundness over exhaustively enumerated enclosing
// context pairs: LB(p,q) <= d_{i,j}(p,q) + 1e-9, zero violations.
Outcome criterion_lb_soundness() {
    Outcome out;
    std::uint64_t checked = 0, violations = 0;
    double worst_gap = 0.0;
    const std::size_t L = 40, l = 16, n = 300;
    Rng pick(2024);
    for (int s = 0; s < 20; ++s) {
        const auto ts = random_walk(n, 8100 + s);
        const auto stats = compute_series_stats(ts, L, l);
        // independent direct context moments for the literal distances
        std::vector<double> mu(n - L + 1), sd(n - L + 1);
        for (std::size_t i = 0; i + L <= n; ++i) {
            mu[i] = oracle::mean(ts.values, i, L);
            sd[i] = oracle::pop_std(ts.values, i, L);
        }
        const std::size_t count = stats.target_count();
        const std::size_t shift = L - l, last = n - L;
        int sampled = 0;
        while (sampled < 5000) {
            const std::size_t p = pick.uniform_below(count);
            const std::size_t q = pick.uniform_below(count);
            // the bound's domain: non-self-match target pairs
            if (is_self_match(p, q, L)) continue;
            ++sampled;
            if (stats.target.is_flat(p) || stats.target.is_flat(q)) continue;
            const double qt = oracle::dot(ts.values, p, q, l);
            const double delta = correlation(p, q, qt, stats.target);
            const double lb = lower_bound(p, q, delta, stats.max_sigma, stats.target);
            const std::size_t ilo = p > shift ? p - shift : 0;
            const std::size_t ihi = p < last ? p : last;
            const std::size_t jlo = q > shift ? q - shift : 0;
            const std::size_t jhi = q < last ? q : last;
            for (std::size_t i = ilo; i <= ihi; ++i) {
                for (std::size_t j = jlo; j <= jhi; ++j) {
                    double acc = 0.0;
                    for (std::size_t m = 0; m < l; ++m) {
                        const double dd = (ts.values[p + m] - mu[i]) / sd[i] -
                                          (ts.values[q + m] - mu[j]) / sd[j];
                        acc += dd * dd;
                    }
                    const double dist = std::sqrt(acc);
                    ++checked;
                    if (lb > dist + 1e-9) {
                        ++violations;
                        worst_gap = std::max(worst_gap, lb - dist);
                    }
                }
            }
        }
    }
    out.pass = violations == 0;
    out.detail = fmt("%llu pair cells checked, %llu violations, worst overshoot=%.3g",
                     (unsigned long long)checked, (unsigned long long)violations, worst_gap);
    return out;
}

// 3. Closed-form kernel vs the literal sum on 1e5 random tuples, the
// inner products coming from chained QT rows across a refresh boundary.
Outcome criterion_kernel() {
    Outcome out;
    const std::size_t n = 6000, L = 40, l = 16;
    const auto ts = random_walk(n, 9001);
    const auto stats = compute_series_stats(ts, L, l);
    std::vector<double> mu(n - L + 1), sd(n - L + 1);
    for (std::size_t i = 0; i + L <= n; ++i) {
        mu[i] = oracle::mean(ts.values, i, L);
        sd[i] = oracle::pop_std(ts.values, i, L);
    }
    Rng pick(555);
    const std::size_t count = stats.target_count();
    const std::size_t shift = L - l, last = n - L;
    QTRow row = qt_first_row(ts, l);
    std::uint64_t checked = 0, bad = 0;
    double worst = 0.0;
    const std::size_t tuples_per_anchor = 35;
    for (std::size_t p = 0; p < count; ++p) {
        if (p > 0) qt_advance(row, ts);
        if (checked >= 100000) break;
        if (p % 2 != 0) continue;  // stride anchors but keep the chain intact
        for (std::size_t t = 0; t < tuples_per_anchor; ++t) {
            const std::size_t q = pick.uniform_below(count);
            const std::size_t ilo = p > shift ? p - shift : 0;
            const std::size_t ihi = p < last ? p : last;
            const std::size_t jlo = q > shift ? q - shift : 0;
            const std::size_t jhi = q < last ? q : last;
            DistanceInputs d;
            d.p = p;
            d.q = q;
            d.i = ilo + pick.uniform_below(ihi - ilo + 1);
            d.j = jlo + pick.uniform_below(jhi - jlo + 1);
            d.target_len = l;
            d.context_len = L;
            const double fast = context_aware_dist_fast(row, d, stats.target, stats.context);
            double acc = 0.0;
            for (std::size_t m = 0; m < l; ++m) {
                const double dd = (ts.values[p + m] - mu[d.i]) / sd[d.i] -
                                  (ts.values[q + m] - mu[d.j]) / sd[d.j];
                acc += dd * dd;
            }
            const double want = std::sqrt(acc);
            const double rel = std::abs(fast - want) / std::max(1.0, want);
            worst = std::max(worst, rel);
            ++checked;
            if (rel > 1e-9) ++bad;
        }
    }
    out.pass = bad == 0 && checked >= 100000;
    out.detail = fmt("%llu tuples, %llu beyond 1e-9, worst rel diff=%.3g",
                     (unsigned long long)checked, (unsigned long long)bad, worst);
    return out;
}

// 4. Reduction: L == l with an open gate reproduces the classic 1-NN
// discord profile.
Outcome criterion_reduction() {
    Outcome out;
    std::uint64_t bad = 0;
    double worst = 0.0;
    const std::size_t n = 300, w = 16;
    for (int s = 0; s < 20; ++s) {
        const auto ts = random_walk(n, 9500 + s);
        const auto stats = compute_series_stats(ts, w, w);
        const auto classic = classic_nn_profile(ts, w);
        const std::size_t count = stats.target_count();
        QTRow row = qt_first_row(ts, w);
        for (std::size_t p = 0; p < count; ++p) {
            if (p > 0) qt_advance(row, ts);
            if (!stats.target_feasible(p)) continue;
            double nn = kInfDistance;
            for (std::size_t q = 0; q < count; ++q) {
                if (is_self_match(p, q, w)) continue;
                if (!stats.target_feasible(q)) continue;
                const auto r =
                    opt_context_dist_fast(ts, stats, row.qt[q], p, q, kInfDistance);
                if (r.feasible && r.distance < nn) nn = r.distance;
            }
            if (nn == kInfDistance) {
                if (classic[p] != kInfDistance) ++bad;
                continue;
            }
            const double diff = std::abs(nn - classic[p]);
            worst = std::max(worst, diff);
            if (diff > 1e-9) ++bad;
        }
    }
    out.pass = bad == 0;
    out.detail = fmt("20 series, %llu profile mismatches, worst diff=%.3g",
                     (unsigned long long)bad, worst);
    return out;
}

// 5. Pruning at scale on seeded random walks (L=400, l=160): at
// n=16000 the pruning rate must reach 0.99 and the distance calls must
// sit 100x below the brute-force cell count; the call ratio must be
// nondecreasing over {2000, 4000, 8000, 16000}.
Outcome criterion_scale() {
    Outcome out;
    const std::size_t L = 400, l = 160;
    const std::vector<std::size_t> sizes{2000, 4000, 8000, 16000};
    std::vector<double> ratios;
    double final_rate = 0.0, final_ratio = 0.0;
    for (std::size_t n : sizes) {
        const auto ts = random_walk(n, 123456);
        SearchConfig cfg;
        cfg.context_len = L;
        cfg.target_len = l;
        cfg.seed = 99;
        cfg.threads = 0;
        cfg.algorithm = Algorithm::Pruned;
        const auto res = pruned_search(ts, cfg);
        const double brute_cells =
            static_cast<double>(brute_force_cell_count(n, L, l));
        const double ratio = brute_cells / static_cast<double>(res.metrics.distance_calls);
        ratios.push_back(ratio);
        if (n == 16000) {
            final_rate = res.metrics.pruning_rate();
            final_ratio = ratio;
        }
    }
    bool monotone = true;
    for (std::size_t k = 1; k < ratios.size(); ++k) {
        if (ratios[k] < ratios[k - 1]) monotone = false;
    }
    out.pass = final_rate >= 0.99 && final_ratio >= 100.0 && monotone;
    out.detail = fmt("pruning=%.4f, call ratio=%.0f (ratios %.0f/%.0f/%.0f/%.0f)",
                     final_rate, final_ratio, ratios[0], ratios[1], ratios[2], ratios[3]);
    return out;
}

// 6. Bump scenario: semantic discord overlaps the planted bump, classic
// discord at the same target length does not.
Outcome criterion_bump() {
    Outcome out;
    double semantic_sum = 0.0, classic_sum = 0.0;
    const BumpParams params;
    for (int s = 0; s < 20; ++s) {
        const auto labeled = generate_bump_series(params, 4200 + s);
        SearchConfig cfg;
        cfg.context_len = labeled.suggested_context_len;
        cfg.seed = 4200 + s;
        cfg.threads = 0;
        const std::size_t l = cfg.resolved_target_len();
        const auto res = pruned_search(labeled.series, cfg);
        const Interval detected{
            static_cast<std::int64_t>(res.report.target) + 1,
            static_cast<std::int64_t>(res.report.target + l)};
        semantic_sum += overlapping_rate(detected, labeled.truth);

        const auto cls = classic_discord(labeled.series, l);
        const Interval cdet{static_cast<std::int64_t>(cls.position) + 1,
                            static_cast<std::int64_t>(cls.position + l)};
        classic_sum += overlapping_rate(cdet, labeled.truth);
    }
    const double semantic_mean = semantic_sum / 20.0;
    const double classic_mean = classic_sum / 20.0;
    out.pass = semantic_mean >= 0.5 && classic_mean <= 0.1;
    out.detail = fmt("mean overlap: semantic=%.3f (need >= 0.5), classic=%.3f (need <= 0.1)",
                     semantic_mean, classic_mean);
    return out;
}

// 7. Overlapping-rate metric unit cases, exact.
Outcome criterion_metric() {
    Outcome out;
    const bool a = overlapping_rate({100, 199}, {100, 199}) == 1.0;
    const bool b = overlapping_rate({100, 199}, {300, 399}) == 0.0;
    const bool c = overlapping_rate({100, 199}, {150, 249}) == 0.5;
    out.pass = a && b && c;
    out.detail = fmt("identical=%d disjoint=%d half=%d", a, b, c);
    return out;
}

// 8. Determinism: identical seeds and flags give byte-identical
// detection records at 1 and N worker threads.
Outcome criterion_determinism() {
    Outcome out;
    BumpParams params;
    params.cycles = 8;
    const auto labeled = generate_bump_series(params, 31);
    SearchConfig cfg;
    cfg.context_len = labeled.suggested_context_len;
    cfg.seed = 31;
    std::vector<std::string> records;
    for (unsigned threads : {1u, 1u, 2u, 4u}) {
        cfg.threads = threads;
        const auto res = pruned_search(labeled.series, cfg);
        records.push_back(
            detection_to_json(make_detection_record(res, Algorithm::Pruned, 0.0)));
    }
    out.pass = records[0] == records[1] && records[0] == records[2] &&
               records[0] == records[3];
    out.detail = out.pass ? "records identical across reruns and 1/2/4 threads"
                          : "records differ";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const std::vector<Entry> entries{
        {1, "exactness: pruned equals brute force", criterion_exactness},
        {2, "lower-bound soundness", criterion_lb_soundness},
        {3, "closed-form kernel equals literal sums", criterion_kernel},
        {4, "classic-discord reduction at L == l", criterion_reduction},
        {5, "pruning at scale", criterion_scale},
        {6, "bump scenario: semantic finds it, classic does not", criterion_bump},
        {7, "overlapping-rate metric", criterion_metric},
        {8, "deterministic records across thread counts", criterion_determinism},
    };
    int failures = 0;
    for (const auto& e : entries) {
        const double t0 = now_sec();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double dt = now_sec() - t0;
        std::printf("[%s] %d. %s — %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", e.id,
                    e.name, o.detail.c_str(), dt);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
