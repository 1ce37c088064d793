#include "semdis/distance.hpp"

#include <algorithm>
#include <cmath>

namespace semdis {

namespace {

struct WindowMoments {
    double mu;
    double sigma;
};

WindowMoments moments(std::span<const double> w) {
    double sum = 0.0, sum2 = 0.0;
    for (double v : w) {
        sum += v;
        sum2 += v * v;
    }
    const double inv = 1.0 / static_cast<double>(w.size());
    const double mu = sum * inv;
    double var = sum2 * inv - mu * mu;
    if (var < 0.0) var = 0.0;
    return {mu, std::sqrt(var)};
}

}  // namespace

double znorm_dist_from_corr(double delta, std::size_t w) {
    delta = std::clamp(delta, -1.0, 1.0);
    double d2 = 2.0 * static_cast<double>(w) * (1.0 - delta);
    if (d2 < 0.0) d2 = 0.0;
    return std::sqrt(d2);
}

namespace {
inline double znorm_from_corr(double delta, std::size_t w) {
    return znorm_dist_from_corr(delta, w);
}
}  // namespace

double znorm_dist(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw InvalidWindowError("windows must be non-empty and equal length");
    }
    const auto ma = moments(a);
    const auto mb = moments(b);
    if (ma.sigma < kFlatSigma || mb.sigma < kFlatSigma) {
        throw FlatWindowError("flat window in z-normalized distance");
    }
    double dot = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) dot += a[m] * b[m];
    // products grouped pairwise so the value is exact under operand swap
    const double w = static_cast<double>(a.size());
    const double delta = (dot - w * (ma.mu * mb.mu)) / (w * (ma.sigma * mb.sigma));
    return znorm_from_corr(delta, a.size());
}

double znorm_dist(const TimeSeries& ts, std::size_t a, std::size_t b,
                  const MovingStats& stats_w) {
    const std::size_t w = stats_w.window;
    if (stats_w.is_flat(a) || stats_w.is_flat(b)) {
        throw FlatWindowError("flat window in z-normalized distance");
    }
    double dot = 0.0;
    const double* t = ts.data();
    for (std::size_t m = 0; m < w; ++m) dot += t[a + m] * t[b + m];
    const double wd = static_cast<double>(w);
    const double delta = (dot - wd * (stats_w.mu[a] * stats_w.mu[b])) /
                         (wd * (stats_w.sigma[a] * stats_w.sigma[b]));
    return znorm_from_corr(delta, w);
}

double context_aware_dist_direct(const TimeSeries& ts, const DistanceInputs& d,
                                 const MovingStats& /*target_stats*/,
                                 const MovingStats& context_stats) {
    if (context_stats.is_flat(d.i) || context_stats.is_flat(d.j)) {
        throw FlatWindowError("flat context in context-aware distance");
    }
    const double mu_i = context_stats.mu[d.i];
    const double sigma_i = context_stats.sigma[d.i];
    const double mu_j = context_stats.mu[d.j];
    const double sigma_j = context_stats.sigma[d.j];
    const double* t = ts.data();
    double acc = 0.0;
    for (std::size_t m = 0; m < d.target_len; ++m) {
        const double diff = (t[d.p + m] - mu_i) / sigma_i - (t[d.q + m] - mu_j) / sigma_j;
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

double context_aware_dist_fast(double qt_pq, const DistanceInputs& d,
                               const MovingStats& target_stats,
                               const MovingStats& context_stats) {
    if (context_stats.is_flat(d.i) || context_stats.is_flat(d.j)) {
        throw FlatWindowError("flat context in context-aware distance");
    }
    const double l = static_cast<double>(d.target_len);
    const double mu_p = target_stats.mu[d.p];
    const double sigma_p = target_stats.sigma[d.p];
    const double mu_q = target_stats.mu[d.q];
    const double sigma_q = target_stats.sigma[d.q];
    const double mu_i = context_stats.mu[d.i];
    const double sigma_i = context_stats.sigma[d.i];
    const double mu_j = context_stats.mu[d.j];
    const double sigma_j = context_stats.sigma[d.j];

    // Grouped so the value is bit-identical under the (p,i)<->(q,j)
    // exchange: every subexpression is symmetric up to commutativity.
    const double term_p = l / (sigma_i * sigma_i) *
                          (sigma_p * sigma_p + (mu_p - mu_i) * (mu_p - mu_i));
    const double term_q = l / (sigma_j * sigma_j) *
                          (sigma_q * sigma_q + (mu_q - mu_j) * (mu_q - mu_j));
    const double cross = 2.0 * l / (sigma_i * sigma_j) *
                         (qt_pq / l - (mu_i * mu_q + mu_j * mu_p) + mu_i * mu_j);
    double d2 = (term_p + term_q) - cross;
    if (d2 < 0.0) d2 = 0.0;
    return std::sqrt(d2);
}

double context_aware_dist_fast(const QTRow& row, const DistanceInputs& d,
                               const MovingStats& target_stats,
                               const MovingStats& context_stats) {
    return context_aware_dist_fast(row.qt[d.q], d, target_stats, context_stats);
}

double correlation(std::size_t p, std::size_t q, double qt_pq,
                   const MovingStats& target_stats) {
    if (target_stats.is_flat(p) || target_stats.is_flat(q)) {
        throw FlatWindowError("flat target in correlation");
    }
    const double l = static_cast<double>(target_stats.window);
    const double delta = (qt_pq - l * (target_stats.mu[p] * target_stats.mu[q])) /
                         (l * (target_stats.sigma[p] * target_stats.sigma[q]));
    return std::clamp(delta, -1.0, 1.0);
}

}  // namespace semdis
