#pragma once

#include <cstddef>
#include <span>

#include "semdis/moving_stats.hpp"
#include "semdis/series.hpp"

namespace semdis {

/// Index bundle for one context-aware distance evaluation: targets start
/// at p and q (length target_len), their enclosing contexts at i and j
/// (length context_len).
struct DistanceInputs {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t target_len = 0;
    std::size_t context_len = 0;
};

/// z-normalized Euclidean distance between two equal-length windows,
/// computed as sqrt(2w(1-delta)) with delta the Pearson correlation
/// (clamped to [-1, 1]). Throws FlatWindowError if either window is
/// flat.
double znorm_dist(std::span<const double> a, std::span<const double> b);

/// Same distance for two windows of length w inside ts, using
/// precomputed stats for the means and deviations.
double znorm_dist(const TimeSeries& ts, std::size_t a, std::size_t b,
                  const MovingStats& stats_w);

/// Literal per-point summation of the context-aware distance: each
/// target sample is normalized by its context's mean and deviation.
/// O(target_len); this is the oracle path. Throws FlatWindowError on a
/// flat context.
double context_aware_dist_direct(const TimeSeries& ts, const DistanceInputs& d,
                                 const MovingStats& target_stats,
                                 const MovingStats& context_stats);

/// Closed-form context-aware distance from means, deviations and the
/// target inner product qt_pq. O(1). Negative radicands from rounding
/// are clamped to 0.
double context_aware_dist_fast(double qt_pq, const DistanceInputs& d,
                               const MovingStats& target_stats,
                               const MovingStats& context_stats);

/// Convenience overload reading qt_pq out of a row anchored at d.p.
double context_aware_dist_fast(const QTRow& row, const DistanceInputs& d,
                               const MovingStats& target_stats,
                               const MovingStats& context_stats);

/// Pearson correlation between the targets at p and q given their inner
/// product, clamped to [-1, 1]. Throws FlatWindowError on a flat target.
double correlation(std::size_t p, std::size_t q, double qt_pq,
                   const MovingStats& target_stats);

/// The d^2 = 2w(1 - delta) identity, with delta clamped to [-1, 1] and
/// the radicand clamped at 0.
double znorm_dist_from_corr(double delta, std::size_t w);

}  // namespace semdis
