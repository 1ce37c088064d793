#include "semdis/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "semdis/distance.hpp"

namespace semdis {

double lower_bound(std::size_t p, std::size_t q, double delta,
                   const WindowedMaxStd& max_std,
                   const MovingStats& target_stats) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (target_stats.is_flat(p) || target_stats.is_flat(q)) return inf;
    const double max_i = max_std.max_sigma_ctx[p];
    const double max_j = max_std.max_sigma_ctx[q];
    if (max_i <= 0.0 || max_j <= 0.0) return inf;

    const double gamma = std::max(target_stats.sigma[q] / max_j,
                                  target_stats.sigma[p] / max_i);
    const double l = static_cast<double>(target_stats.window);
    if (delta > 0.0) {
        double r = 1.0 - delta * delta;
        if (r < 0.0) r = 0.0;
        return gamma * std::sqrt(l * r);
    }
    return gamma * std::sqrt(l);
}

LBRow compute_lb_row(std::size_t p, const QTRow& row,
                     const MovingStats& target_stats,
                     const WindowedMaxStd& max_std) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    LBRow out;
    out.anchor = p;
    const std::size_t count = row.qt.size();
    out.lb.resize(count);

    const bool p_infeasible =
        target_stats.is_flat(p) || max_std.max_sigma_ctx[p] <= 0.0;
    for (std::size_t q = 0; q < count; ++q) {
        if (p_infeasible || target_stats.is_flat(q) ||
            max_std.max_sigma_ctx[q] <= 0.0) {
            out.lb[q] = inf;
            continue;
        }
        const double delta = correlation(p, q, row.qt[q], target_stats);
        out.lb[q] = lower_bound(p, q, delta, max_std, target_stats);
    }

    out.sort_order.resize(count);
    std::iota(out.sort_order.begin(), out.sort_order.end(), 0u);
    std::stable_sort(out.sort_order.begin(), out.sort_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return out.lb[a] < out.lb[b];
                     });
    return out;
}

}  // namespace semdis
