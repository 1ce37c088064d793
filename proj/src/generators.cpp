#include "semdis/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "semdis/rng.hpp"

namespace semdis {

double overlapping_rate(const Interval& detected, const Interval& truth) {
    if (detected.empty()) {
        throw std::invalid_argument("empty detected interval");
    }
    const std::int64_t lo = std::max(detected.start, truth.start);
    const std::int64_t hi = std::min(detected.end, truth.end);
    const std::int64_t inter = hi >= lo ? hi - lo + 1 : 0;
    return static_cast<double>(inter) / static_cast<double>(detected.length());
}

namespace {

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    if (line.find(',') != std::string::npos) {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) out.push_back(trim(field));
    } else {
        std::stringstream ss(line);
        std::string field;
        while (ss >> field) out.push_back(field);
    }
    return out;
}

}  // namespace

InstancePool load_instance_pool(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open pool file " + path);
    }
    InstancePool pool;
    pool.source = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto fields = split_fields(stripped);
        if (fields.size() < 3) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": instance needs a label and at least two values");
        }
        Instance inst;
        inst.label = fields[0];
        inst.values.reserve(fields.size() - 1);
        for (std::size_t k = 1; k < fields.size(); ++k) {
            char* end = nullptr;
            const double v = std::strtod(fields[k].c_str(), &end);
            if (end == fields[k].c_str() || !std::isfinite(v)) {
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": bad value '" + fields[k] + "'");
            }
            inst.values.push_back(v);
        }
        pool.instances.push_back(std::move(inst));
    }
    return pool;
}

InstancePool filter_pool(const InstancePool& pool, const std::string& label) {
    InstancePool out;
    out.source = pool.source;
    for (const auto& inst : pool.instances) {
        if (inst.label == label) out.instances.push_back(inst);
    }
    return out;
}

LabeledSeries generate_concat_series(const InstancePool& normal,
                                     const InstancePool& anomaly,
                                     std::size_t normal_count,
                                     std::uint64_t seed) {
    if (normal.empty() || anomaly.empty()) {
        throw GenerationError("instance pool is empty");
    }
    Rng rng(seed);
    // Draw order: normal instances, anomaly instance, insertion slot.
    std::vector<std::size_t> picks(normal_count);
    for (auto& k : picks) k = rng.uniform_below(normal.instances.size());
    const std::size_t anomaly_pick = rng.uniform_below(anomaly.instances.size());
    const std::size_t slot = rng.uniform_below(normal_count + 1);

    LabeledSeries out;
    auto& v = out.series.values;
    std::size_t mean_len = 0;
    for (std::size_t s = 0; s < normal_count + 1; ++s) {
        if (s == slot) {
            const auto& inst = anomaly.instances[anomaly_pick].values;
            out.truth.start = static_cast<std::int64_t>(v.size()) + 1;
            v.insert(v.end(), inst.begin(), inst.end());
            out.truth.end = static_cast<std::int64_t>(v.size());
        }
        if (s < normal_count) {
            const auto& inst = normal.instances[picks[s]].values;
            mean_len += inst.size();
            v.insert(v.end(), inst.begin(), inst.end());
        }
    }
    if (normal_count > 0) {
        out.suggested_context_len = mean_len / normal_count;
    } else {
        out.suggested_context_len = out.series.size();
    }
    return out;
}

LabeledSeries generate_bump_series(const BumpParams& params, std::uint64_t seed) {
    const std::size_t C = params.cycle_len;
    const std::size_t bw = params.bump_width;
    if (params.cycles < 3) {
        throw GenerationError("need at least three cycles");
    }
    if (bw < 2 || bw >= C) {
        throw GenerationError("bump width must be in [2, cycle_len)");
    }
    // Cycle layout: a plateau over roughly [0.08C, 0.36C), baseline
    // elsewhere. The normal bump sits centered on the post-plateau
    // baseline in every cycle; the planted bump is the same half-sine
    // centered on the plateau of one middle cycle.
    const std::size_t pl_start = static_cast<std::size_t>(std::llround(0.08 * C));
    const std::size_t pl_len = static_cast<std::size_t>(std::llround(0.28 * C));
    const std::size_t pl_end = pl_start + pl_len;  // exclusive
    const std::size_t tail_len = C - pl_end;
    if (bw > pl_len || bw > tail_len) {
        throw GenerationError("bump width does not fit the cycle layout");
    }
    const std::size_t anom_off = pl_start + (pl_len - bw) / 2;
    const std::size_t norm_off = pl_end + (tail_len - bw) / 2;
    const std::size_t ramp = std::max<std::size_t>(2, C / 50);

    std::vector<double> bump(bw);
    for (std::size_t m = 0; m < bw; ++m) {
        bump[m] = std::sin(3.14159265358979323846 * static_cast<double>(m) /
                           static_cast<double>(bw - 1));
    }
    std::vector<double> cycle(C, 0.0);
    for (std::size_t k = 0; k < pl_len; ++k) {
        double v = 1.0;
        if (k < ramp) {
            v = 0.5 * (1.0 - std::cos(3.14159265358979323846 *
                                      static_cast<double>(k + 1) /
                                      static_cast<double>(ramp + 1)));
        } else if (pl_len - 1 - k < ramp) {
            const std::size_t m = pl_len - 1 - k;
            v = 0.5 * (1.0 - std::cos(3.14159265358979323846 *
                                      static_cast<double>(m + 1) /
                                      static_cast<double>(ramp + 1)));
        }
        cycle[pl_start + k] = params.plateau_height * v;
    }
    for (std::size_t m = 0; m < bw; ++m) {
        cycle[norm_off + m] += params.bump_height * bump[m];
    }

    Rng rng(seed);
    // Draw order: anomalous cycle index, then per cycle one amplitude
    // jitter followed by one noise sample per point.
    const std::size_t margin = params.cycles >= 5 ? 2 : 1;
    const std::size_t anom_cycle =
        margin + rng.uniform_below(params.cycles - 2 * margin);

    LabeledSeries out;
    out.series.values.resize(params.cycles * C);
    double anom_amp = 1.0;
    for (std::size_t c = 0; c < params.cycles; ++c) {
        const double amp = 1.0 + params.amplitude_jitter * rng.normal();
        if (c == anom_cycle) anom_amp = amp;
        double* dst = out.series.values.data() + c * C;
        for (std::size_t t = 0; t < C; ++t) {
            dst[t] = amp * cycle[t] + params.noise * rng.normal();
        }
    }
    const std::size_t truth_begin = anom_cycle * C + anom_off;
    if (params.bump_height != 0.0) {
        for (std::size_t m = 0; m < bw; ++m) {
            out.series.values[truth_begin + m] += anom_amp * params.bump_height * bump[m];
        }
    } else {
        out.negative_control = true;
    }
    out.truth.start = static_cast<std::int64_t>(truth_begin) + 1;
    out.truth.end = static_cast<std::int64_t>(truth_begin + bw);
    out.suggested_context_len = C / 2;
    return out;
}

TimeSeries random_walk(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("random walk length must be positive");
    }
    Rng rng(seed);
    TimeSeries ts;
    ts.values.resize(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += rng.normal();
        ts.values[i] = acc;
    }
    return ts;
}

}  // namespace semdis
