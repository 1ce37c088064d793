#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semdis/moving_stats.hpp"

namespace semdis {

/// O(1) lower bound on the optimal context-aware distance between the
/// targets at p and q:
///
///   gamma * sqrt(l * (1 - delta^2))   if delta > 0
///   gamma * sqrt(l)                   otherwise
///
/// with gamma = max(sigma_q / max_sigma_ctx[q], sigma_p / max_sigma_ctx[p])
/// and delta the target correlation. The bound relaxes every feasibility
/// constraint, so it never exceeds any feasible context-aware distance.
/// Returns +infinity when either anchor range has no non-flat context or
/// either target is flat (the pair is infeasible, not anomalous).
double lower_bound(std::size_t p, std::size_t q, double delta,
                   const WindowedMaxStd& max_std,
                   const MovingStats& target_stats);

/// All lower bounds for a fixed target p plus the visit permutation
/// (ascending bound, ties by ascending q). Infeasible entries carry
/// +infinity and sort last.
struct LBRow {
    std::size_t anchor = 0;
    std::vector<double> lb;
    std::vector<std::uint32_t> sort_order;
};

LBRow compute_lb_row(std::size_t p, const QTRow& row,
                     const MovingStats& target_stats,
                     const WindowedMaxStd& max_std);

}  // namespace semdis
