#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semdis/generators.hpp"
#include "semdis/report.hpp"
#include "semdis/search.hpp"

namespace py = pybind11;
using namespace semdis;

namespace {

SearchConfig make_config(std::size_t context_len, std::size_t target_len,
                         py::object epsilon, double epsilon_percentile,
                         std::size_t epsilon_samples, const std::string& algorithm,
                         std::uint64_t seed, unsigned threads) {
    SearchConfig cfg;
    cfg.context_len = context_len;
    cfg.target_len = target_len;
    if (!epsilon.is_none()) {
        cfg.epsilon = EpsilonPolicy::fixed_value(epsilon.cast<double>());
    } else {
        cfg.epsilon = EpsilonPolicy::from_percentile(epsilon_percentile, epsilon_samples);
    }
    cfg.algorithm = parse_algorithm(algorithm);
    cfg.seed = seed;
    cfg.threads = threads;
    return cfg;
}

py::dict report_dict(const SearchResult& res) {
    py::dict d;
    d["distance"] = res.report.distance;
    d["target"] = res.report.target;
    d["match_target"] = res.report.match_target;
    d["context"] = res.report.context;
    d["match_context"] = res.report.match_context;
    d["target_len"] = res.report.target_len;
    d["context_len"] = res.report.context_len;
    d["epsilon"] = res.report.epsilon;
    py::dict m;
    m["distance_calls"] = res.metrics.distance_calls;
    m["lb_calls"] = res.metrics.lb_calls;
    m["candidate_pairs"] = res.metrics.candidate_pairs;
    m["evaluated_pairs"] = res.metrics.evaluated_pairs;
    m["pruned_pairs"] = res.metrics.pruned_pairs;
    m["pruning_rate"] = res.metrics.pruning_rate();
    d["metrics"] = m;
    return d;
}

}  // namespace

PYBIND11_MODULE(_semdis, m) {
    m.doc() = "semantic discord detection for univariate time series "
              "(indices are 0-based here; file records are 1-based)";

    py::register_exception<FlatWindowError>(m, "FlatWindowError");
    py::register_exception<EmptyResultError>(m, "EmptyResultError");
    py::register_exception<CalibrationError>(m, "CalibrationError");
    py::register_exception<GenerationError>(m, "GenerationError");

    m.def(
        "detect",
        [](const std::vector<double>& values, std::size_t context_len,
           std::size_t target_len, py::object epsilon, double epsilon_percentile,
           std::size_t epsilon_samples, const std::string& algorithm,
           std::uint64_t seed, unsigned threads) {
            const TimeSeries ts{values};
            const auto cfg = make_config(context_len, target_len, epsilon,
                                         epsilon_percentile, epsilon_samples,
                                         algorithm, seed, threads);
            SearchResult res;
            {
                py::gil_scoped_release release;
                res = run_search(ts, cfg);
            }
            return report_dict(res);
        },
        py::arg("values"), py::arg("context_len"), py::arg("target_len") = 0,
        py::arg("epsilon") = py::none(), py::arg("epsilon_percentile") = 0.4,
        py::arg("epsilon_samples") = 2000, py::arg("algorithm") = "pruned",
        py::arg("seed") = 0, py::arg("threads") = 1,
        "Find the semantic discord. target_len 0 means round(0.4 * context_len); "
        "epsilon None calibrates the percentile policy.");

    m.def(
        "classic_discord",
        [](const std::vector<double>& values, std::size_t window) {
            const TimeSeries ts{values};
            ClassicDiscord out;
            {
                py::gil_scoped_release release;
                out = classic_discord(ts, window);
            }
            return py::make_tuple(out.position, out.nn_distance);
        },
        py::arg("values"), py::arg("window"),
        "Largest 1-NN z-normalized discord; returns (position, nn_distance).");

    m.def(
        "calibrate_epsilon",
        [](const std::vector<double>& values, std::size_t context_len,
           std::size_t samples, double percentile, std::uint64_t seed) {
            return calibrate_epsilon(TimeSeries{values}, context_len, samples,
                                     percentile, seed);
        },
        py::arg("values"), py::arg("context_len"), py::arg("samples") = 2000,
        py::arg("percentile") = 0.4, py::arg("seed") = 0);

    m.def(
        "znorm_dist",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return znorm_dist(std::span<const double>(a), std::span<const double>(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "overlapping_rate",
        [](std::int64_t detected_start, std::int64_t detected_end,
           std::int64_t truth_start, std::int64_t truth_end) {
            return overlapping_rate({detected_start, detected_end},
                                    {truth_start, truth_end});
        },
        py::arg("detected_start"), py::arg("detected_end"), py::arg("truth_start"),
        py::arg("truth_end"), "Inclusive intervals, |detected & truth| / |detected|.");

    m.def(
        "random_walk",
        [](std::size_t n, std::uint64_t seed) { return random_walk(n, seed).values; },
        py::arg("n"), py::arg("seed") = 0);

    m.def(
        "generate_bump_series",
        [](std::size_t cycles, std::size_t cycle_len, std::size_t bump_width,
           double bump_height, double noise, std::uint64_t seed) {
            BumpParams params;
            params.cycles = cycles;
            params.cycle_len = cycle_len;
            params.bump_width = bump_width;
            params.bump_height = bump_height;
            params.noise = noise;
            const auto out = generate_bump_series(params, seed);
            py::dict d;
            d["values"] = out.series.values;
            d["truth_start"] = out.truth.start;
            d["truth_end"] = out.truth.end;
            d["negative_control"] = out.negative_control;
            d["suggested_context_len"] = out.suggested_context_len;
            return d;
        },
        py::arg("cycles") = 20, py::arg("cycle_len") = 200, py::arg("bump_width") = 44,
        py::arg("bump_height") = 0.3, py::arg("noise") = 0.01, py::arg("seed") = 0,
        "Plateau/baseline cycles with one planted bump; truth is 1-based inclusive.");

    m.def(
        "generate_concat_series",
        [](const std::vector<std::vector<double>>& normal,
           const std::vector<std::vector<double>>& anomaly, std::size_t normal_count,
           std::uint64_t seed) {
            InstancePool np, ap;
            for (const auto& v : normal) np.instances.push_back({"normal", v});
            for (const auto& v : anomaly) ap.instances.push_back({"anomaly", v});
            const auto out = generate_concat_series(np, ap, normal_count, seed);
            py::dict d;
            d["values"] = out.series.values;
            d["truth_start"] = out.truth.start;
            d["truth_end"] = out.truth.end;
            return d;
        },
        py::arg("normal"), py::arg("anomaly"), py::arg("normal_count") = 20,
        py::arg("seed") = 0,
        "Concatenates normal_count seeded draws plus one anomaly instance.");

    m.attr("__version__") = "0.1.0";
}
