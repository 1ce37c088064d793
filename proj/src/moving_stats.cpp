#include "semdis/moving_stats.hpp"

#include <cmath>
#include <deque>

namespace semdis {

MovingStats compute_moving_stats(const TimeSeries& ts, std::size_t w) {
    const std::size_t n = ts.size();
    if (w == 0 || w > n) {
        throw InvalidWindowError("window length " + std::to_string(w) +
                                 " invalid for series of length " + std::to_string(n));
    }
    MovingStats out;
    out.window = w;
    const std::size_t count = n - w + 1;
    out.mu.resize(count);
    out.sigma.resize(count);
    out.flat.resize(count);

    // Long-double cumulative sums keep the catastrophic cancellation in
    // sum(x^2) - mean^2 far below the 1e-9 contract.
    std::vector<long double> cum(n + 1, 0.0L), cum2(n + 1, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        const long double v = ts.values[i];
        cum[i + 1] = cum[i] + v;
        cum2[i + 1] = cum2[i] + v * v;
    }
    const long double inv_w = 1.0L / static_cast<long double>(w);
    for (std::size_t k = 0; k < count; ++k) {
        const long double mean = (cum[k + w] - cum[k]) * inv_w;
        long double var = (cum2[k + w] - cum2[k]) * inv_w - mean * mean;
        if (var < 0.0L) var = 0.0L;
        const double sigma = static_cast<double>(std::sqrt(var));
        out.mu[k] = static_cast<double>(mean);
        if (sigma < kFlatSigma) {
            out.sigma[k] = 0.0;
            out.flat[k] = 1;
        } else {
            out.sigma[k] = sigma;
            out.flat[k] = 0;
        }
    }
    return out;
}

WindowedMaxStd compute_window_max_std(const MovingStats& context_stats,
                                      std::size_t context_len,
                                      std::size_t target_len,
                                      std::size_t n) {
    WindowedMaxStd out;
    out.context_len = context_len;
    out.target_len = target_len;
    const std::size_t targets = n - target_len + 1;
    const std::size_t last_ctx = n - context_len;  // last valid context start
    const std::size_t shift = context_len - target_len;
    out.max_sigma_ctx.resize(targets);

    // Monotonic deque of indices into context sigma, values decreasing.
    std::deque<std::size_t> dq;
    std::size_t next = 0;  // next context index to admit
    for (std::size_t q = 0; q < targets; ++q) {
        const std::size_t hi = q < last_ctx ? q : last_ctx;
        const std::size_t lo = q > shift ? q - shift : 0;
        while (next <= hi) {
            const double s = context_stats.sigma[next];
            while (!dq.empty() && context_stats.sigma[dq.back()] <= s) dq.pop_back();
            dq.push_back(next);
            ++next;
        }
        while (!dq.empty() && dq.front() < lo) dq.pop_front();
        out.max_sigma_ctx[q] = dq.empty() ? 0.0 : context_stats.sigma[dq.front()];
    }
    return out;
}

namespace {

void fill_row_direct(QTRow& row, const TimeSeries& ts) {
    const std::size_t l = row.target_len;
    const std::size_t count = ts.size() - l + 1;
    const double* t = ts.data();
    const double* anchor = t + row.anchor;
    row.qt.resize(count);
    for (std::size_t q = 0; q < count; ++q) {
        double acc = 0.0;
        const double* w = t + q;
        for (std::size_t m = 0; m < l; ++m) acc += anchor[m] * w[m];
        row.qt[q] = acc;
    }
}

}  // namespace

QTRow qt_first_row(const TimeSeries& ts, std::size_t l) {
    return qt_row_direct(ts, l, 0);
}

QTRow qt_row_direct(const TimeSeries& ts, std::size_t l, std::size_t p) {
    if (l == 0 || l > ts.size()) {
        throw InvalidWindowError("target length " + std::to_string(l) +
                                 " invalid for series of length " + std::to_string(ts.size()));
    }
    QTRow row;
    row.anchor = p;
    row.target_len = l;
    fill_row_direct(row, ts);
    return row;
}

void qt_advance(QTRow& row, const TimeSeries& ts) {
    const std::size_t p = row.anchor + 1;
    row.anchor = p;
    if (p % kQtRefreshInterval == 0) {
        fill_row_direct(row, ts);
        return;
    }
    const std::size_t l = row.target_len;
    const std::size_t count = ts.size() - l + 1;
    const double* t = ts.data();
    const double drop = t[p - 1];
    const double add = t[p + l - 1];
    // In-place right-to-left so prev[q-1] is still intact when read.
    for (std::size_t q = count - 1; q > 0; --q) {
        row.qt[q] = row.qt[q - 1] - drop * t[q - 1] + add * t[q + l - 1];
    }
    double acc = 0.0;
    for (std::size_t m = 0; m < l; ++m) acc += t[p + m] * t[m];
    row.qt[0] = acc;
}

QTRow qt_next_row(const QTRow& prev, const TimeSeries& ts) {
    QTRow row = prev;
    qt_advance(row, ts);
    return row;
}

QTRow qt_canonical_row(const TimeSeries& ts, std::size_t l, std::size_t p) {
    const std::size_t base = p - p % kQtRefreshInterval;
    QTRow row = qt_row_direct(ts, l, base);
    while (row.anchor < p) qt_advance(row, ts);
    return row;
}

}  // namespace semdis
