#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semdis/series.hpp"

namespace semdis {

/// Per-window mean and population standard deviation for one window
/// length. sigma below kFlatSigma is stored as 0 and the window flagged
/// flat; flat windows are excluded from normalization everywhere.
struct MovingStats {
    std::size_t window = 0;
    std::vector<double> mu;
    std::vector<double> sigma;
    std::vector<std::uint8_t> flat;

    std::size_t count() const { return mu.size(); }
    bool is_flat(std::size_t k) const { return flat[k] != 0; }
};

/// Single pass over cumulative sums; O(n). Throws InvalidWindowError if
/// w is zero or exceeds the series length.
MovingStats compute_moving_stats(const TimeSeries& ts, std::size_t w);

/// For each target start q, the largest context standard deviation over
/// the anchor range of enclosing contexts [q-(L-l), q], clipped to valid
/// context starts. 0 means every context in the range is flat.
struct WindowedMaxStd {
    std::size_t context_len = 0;
    std::size_t target_len = 0;
    std::vector<double> max_sigma_ctx;  // one entry per target start

    std::size_t count() const { return max_sigma_ctx.size(); }
};

/// Monotonic-deque sliding maximum over the context sigma array; O(n)
/// total. n is the series length.
WindowedMaxStd compute_window_max_std(const MovingStats& context_stats,
                                      std::size_t context_len,
                                      std::size_t target_len,
                                      std::size_t n);

/// Full QT rows are recomputed from scratch at every anchor divisible by
/// this, bounding streaming float drift. Rows are canonical: a row's
/// values depend only on (series, l, anchor), never on which worker
/// produced it.
inline constexpr std::size_t kQtRefreshInterval = 4096;

/// Sliding dot products between the target window anchored at p and
/// every target window: qt[q] = sum of t[p+m]*t[q+m], m in [0, l).
struct QTRow {
    std::size_t anchor = 0;
    std::size_t target_len = 0;
    std::vector<double> qt;
};

/// Direct dot products for anchor 0.
QTRow qt_first_row(const TimeSeries& ts, std::size_t l);

/// Direct dot products for an arbitrary anchor.
QTRow qt_row_direct(const TimeSeries& ts, std::size_t l, std::size_t p);

/// Advances row from anchor p-1 to p in place using the diagonal
/// recurrence qt[q] = prev[q-1] - t[p-1]*t[q-1] + t[p+l-1]*t[q+l-1];
/// qt[0] is recomputed directly, and the whole row is rebuilt at every
/// refresh anchor.
void qt_advance(QTRow& row, const TimeSeries& ts);

/// Value-returning variant of qt_advance.
QTRow qt_next_row(const QTRow& prev, const TimeSeries& ts);

/// The row for anchor p with canonical values: built directly at the
/// nearest refresh anchor at or below p, then advanced. Workers starting
/// mid-series use this so that any thread count reproduces the
/// single-threaded rows bit for bit.
QTRow qt_canonical_row(const TimeSeries& ts, std::size_t l, std::size_t p);

}  // namespace semdis
