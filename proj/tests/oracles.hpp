#pragma once

// Test-only reference implementations. Everything here is written as
// plain per-window loops, independent of the library's streaming and
// closed-form kernels, so the two sides can be checked against each
// other.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "semdis/series.hpp"

namespace oracle {

inline double mean(const std::vector<double>& v, std::size_t k, std::size_t w) {
    double s = 0.0;
    for (std::size_t m = 0; m < w; ++m) s += v[k + m];
    return s / static_cast<double>(w);
}

inline double pop_std(const std::vector<double>& v, std::size_t k, std::size_t w) {
    const double mu = mean(v, k, w);
    double s = 0.0;
    for (std::size_t m = 0; m < w; ++m) {
        const double d = v[k + m] - mu;
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(w));
}

inline double dot(const std::vector<double>& v, std::size_t a, std::size_t b,
                  std::size_t w) {
    double s = 0.0;
    for (std::size_t m = 0; m < w; ++m) s += v[a + m] * v[b + m];
    return s;
}

/// Literal z-normalized Euclidean distance (normalize both windows
/// point by point, sum squared differences).
inline double znorm_literal(const std::vector<double>& v, std::size_t a,
                            std::size_t b, std::size_t w) {
    const double mu_a = mean(v, a, w), sd_a = pop_std(v, a, w);
    const double mu_b = mean(v, b, w), sd_b = pop_std(v, b, w);
    double s = 0.0;
    for (std::size_t m = 0; m < w; ++m) {
        const double d = (v[a + m] - mu_a) / sd_a - (v[b + m] - mu_b) / sd_b;
        s += d * d;
    }
    return std::sqrt(s);
}

/// Literal context-aware distance: targets at p and q normalized by the
/// moments of the contexts at i and j.
inline double ca_literal(const std::vector<double>& v, std::size_t p, std::size_t q,
                         std::size_t i, std::size_t j, std::size_t l, std::size_t L) {
    const double mu_i = mean(v, i, L), sd_i = pop_std(v, i, L);
    const double mu_j = mean(v, j, L), sd_j = pop_std(v, j, L);
    double s = 0.0;
    for (std::size_t m = 0; m < l; ++m) {
        const double d = (v[p + m] - mu_i) / sd_i - (v[q + m] - mu_j) / sd_j;
        s += d * d;
    }
    return std::sqrt(s);
}

struct OptDist {
    double distance = std::numeric_limits<double>::infinity();
    bool feasible = false;
    std::size_t i = 0, j = 0;
};

/// Full enumeration of the feasible context pairs of (p, q) with literal
/// distances: enclosure, non-flat, |i-j| > L, context distance < eps.
/// Ties broken by smallest i then j.
inline OptDist opt_dist_enum(const std::vector<double>& v, std::size_t p,
                             std::size_t q, std::size_t l, std::size_t L,
                             double eps) {
    const std::size_t n = v.size();
    const std::size_t shift = L - l;
    const std::size_t last = n - L;
    const std::size_t ilo = p > shift ? p - shift : 0;
    const std::size_t ihi = p < last ? p : last;
    const std::size_t jlo = q > shift ? q - shift : 0;
    const std::size_t jhi = q < last ? q : last;
    OptDist best;
    for (std::size_t i = ilo; i <= ihi; ++i) {
        if (pop_std(v, i, L) < semdis::kFlatSigma) continue;
        for (std::size_t j = jlo; j <= jhi; ++j) {
            if (pop_std(v, j, L) < semdis::kFlatSigma) continue;
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap <= L) continue;
            if (!(znorm_literal(v, i, j, L) < eps)) continue;
            const double d = ca_literal(v, p, q, i, j, l, L);
            if (d < best.distance) {
                best.distance = d;
                best.feasible = true;
                best.i = i;
                best.j = j;
            }
        }
    }
    return best;
}

struct Discord {
    double distance = -1.0;
    bool found = false;
    std::size_t p = 0, q = 0, i = 0, j = 0;
};

/// Tiny-instance discord by full enumeration, for hand-checkable cases.
inline Discord discord_enum(const std::vector<double>& v, std::size_t l,
                            std::size_t L, double eps) {
    const std::size_t count = v.size() - l + 1;
    Discord best;
    for (std::size_t p = 0; p < count; ++p) {
        if (pop_std(v, p, l) < semdis::kFlatSigma) continue;
        OptDist nn;
        std::size_t nn_q = 0;
        for (std::size_t q = 0; q < count; ++q) {
            const std::size_t gap = p > q ? p - q : q - p;
            if (gap <= L) continue;
            if (pop_std(v, q, l) < semdis::kFlatSigma) continue;
            const OptDist r = opt_dist_enum(v, p, q, l, L, eps);
            if (r.feasible && r.distance < nn.distance) {
                nn = r;
                nn_q = q;
            }
        }
        if (nn.feasible && (!best.found || nn.distance > best.distance)) {
            best.found = true;
            best.distance = nn.distance;
            best.p = p;
            best.q = nn_q;
            best.i = nn.i;
            best.j = nn.j;
        }
    }
    return best;
}

}  // namespace oracle
