#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semdis/series.hpp"

namespace semdis {

/// Inclusive integer interval. Generators and reports use 1-based
/// positions here because these values face files and humans.
struct Interval {
    std::int64_t start = 0;
    std::int64_t end = 0;

    std::int64_t length() const { return end - start + 1; }
    bool empty() const { return end < start; }
};

/// |detected ∩ truth| / |detected|. Deliberately asymmetric: it scores
/// how much of the detection lies on the truth. Throws
/// std::invalid_argument on an empty detected interval.
double overlapping_rate(const Interval& detected, const Interval& truth);

/// A generated series with the planted anomaly interval (1-based,
/// inclusive).
struct LabeledSeries {
    TimeSeries series;
    Interval truth;
    bool negative_control = false;        // true when no anomaly was planted
    std::size_t suggested_context_len = 0;  // 0 when the generator has no hint
};

/// One labeled instance of a UCR-style pool file: first comma-separated
/// field is the class label, the rest are samples.
struct Instance {
    std::string label;
    std::vector<double> values;
};

struct InstancePool {
    std::vector<Instance> instances;
    std::string source;

    bool empty() const { return instances.empty(); }
};

/// Loads a pool file (one instance per line, comma separated, label
/// first). Throws ParseError on malformed rows, GenerationError when the
/// file yields no instances.
InstancePool load_instance_pool(const std::string& path);

/// Keeps only instances with the given class label.
InstancePool filter_pool(const InstancePool& pool, const std::string& label);

/// Concatenation protocol: normal_count draws (with replacement) from
/// the normal pool plus one draw from the anomaly pool, inserted at a
/// uniformly chosen slot. Truth covers the anomalous instance.
LabeledSeries generate_concat_series(const InstancePool& normal,
                                     const InstancePool& anomaly,
                                     std::size_t normal_count,
                                     std::uint64_t seed);

/// Periodic plateau/baseline cycles with i.i.d. sample noise and a small
/// per-cycle amplitude jitter. Every cycle carries the same small bump
/// on its baseline segment; one seeded middle cycle additionally carries
/// a bump of identical shape on top of its plateau. Window-level
/// z-normalization cannot tell the extra bump from the normal ones, but
/// under a half-cycle context its level gives it away. Truth is the
/// extra bump's interval.
struct BumpParams {
    std::size_t cycles = 20;
    std::size_t cycle_len = 200;
    double plateau_height = 1.0;
    std::size_t bump_width = 44;
    double bump_height = 0.3;
    double noise = 0.01;
    double amplitude_jitter = 0.01;
};

LabeledSeries generate_bump_series(const BumpParams& params, std::uint64_t seed);

/// Cumulative sum of seeded standard-normal steps.
TimeSeries random_walk(std::size_t n, std::uint64_t seed);

}  // namespace semdis
