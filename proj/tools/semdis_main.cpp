// semdis — semantic discord detection for univariate time series.
//
// Subcommands: detect, generate, evaluate, bench. Exit codes: 0 success,
// 2 bad input or flags, 3 no feasible target.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semdis/generators.hpp"
#include "semdis/report.hpp"
#include "semdis/rng.hpp"
#include "semdis/search.hpp"

namespace fs = std::filesystem;
using namespace semdis;

namespace {

double now_sec() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct DetectArgs {
    std::string input;
    std::size_t context_len = 0;
    std::size_t target_len = 0;
    double epsilon = -1.0;
    double epsilon_percentile = 0.4;
    std::size_t epsilon_samples = 2000;
    std::uint64_t seed = 0;
    std::string algorithm = "pruned";
    unsigned threads = 1;
    std::string out;
    bool epsilon_set = false;
};

int run_detect(const DetectArgs& a) {
    const TimeSeries ts = load_series_csv(a.input);
    SearchConfig cfg;
    cfg.context_len = a.context_len;
    cfg.target_len = a.target_len;
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    cfg.algorithm = parse_algorithm(a.algorithm);
    if (a.epsilon_set) {
        cfg.epsilon = EpsilonPolicy::fixed_value(a.epsilon);
    } else {
        cfg.epsilon = EpsilonPolicy::from_percentile(a.epsilon_percentile, a.epsilon_samples);
    }
    const double t0 = now_sec();
    const SearchResult res = run_search(ts, cfg);
    const double wall = now_sec() - t0;
    const DetectionRecord rec = make_detection_record(res, cfg.algorithm, wall);
    print_detection(std::cout, rec);
    if (!a.out.empty()) {
        write_detection_file(rec, a.out);
    }
    return 0;
}

struct GenerateArgs {
    std::string generator;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    // concat
    std::string normal_pool, anomaly_pool;
    std::string normal_label, anomaly_label;
    std::size_t normal_count = 20;
    // bump
    BumpParams bump;
    // randomwalk
    std::size_t length = 16000;
};

int run_generate(const GenerateArgs& a) {
    fs::create_directories(a.out_dir);
    InstancePool normal, anomaly;
    if (a.generator == "concat") {
        if (a.normal_pool.empty() || a.anomaly_pool.empty()) {
            throw std::invalid_argument("concat needs --normal-pool and --anomaly-pool");
        }
        normal = load_instance_pool(a.normal_pool);
        if (!a.normal_label.empty()) normal = filter_pool(normal, a.normal_label);
        anomaly = load_instance_pool(a.anomaly_pool);
        if (!a.anomaly_label.empty()) anomaly = filter_pool(anomaly, a.anomaly_label);
    }
    for (std::size_t k = 0; k < a.count; ++k) {
        const std::uint64_t child = Rng::derive(a.seed, k);
        SeriesMetadata meta;
        meta.seed = child;
        meta.generator = a.generator;
        LabeledSeries labeled;
        nlohmann::json params;
        if (a.generator == "concat") {
            labeled = generate_concat_series(normal, anomaly, a.normal_count, child);
            params = {{"normal_pool", a.normal_pool},
                      {"anomaly_pool", a.anomaly_pool},
                      {"normal_label", a.normal_label},
                      {"anomaly_label", a.anomaly_label},
                      {"normal_count", a.normal_count}};
        } else if (a.generator == "bump") {
            labeled = generate_bump_series(a.bump, child);
            params = {{"cycles", a.bump.cycles},
                      {"cycle_len", a.bump.cycle_len},
                      {"plateau_height", a.bump.plateau_height},
                      {"bump_width", a.bump.bump_width},
                      {"bump_height", a.bump.bump_height},
                      {"noise", a.bump.noise},
                      {"amplitude_jitter", a.bump.amplitude_jitter}};
        } else if (a.generator == "randomwalk") {
            labeled.series = random_walk(a.length, child);
            labeled.truth = {0, -1};  // no planted anomaly
            params = {{"length", a.length}};
        } else {
            throw std::invalid_argument("unknown generator: " + a.generator);
        }
        meta.params_json = params.dump();
        meta.negative_control = labeled.negative_control;
        meta.suggested_context_len = labeled.suggested_context_len;
        if (!labeled.truth.empty()) meta.truth = labeled.truth;

        char name[64];
        std::snprintf(name, sizeof(name), "series_%03zu", k);
        const fs::path csv = fs::path(a.out_dir) / (std::string(name) + ".csv");
        const fs::path sidecar = fs::path(a.out_dir) / (std::string(name) + ".json");
        save_series_csv(labeled.series, csv.string());
        write_metadata_file(meta, sidecar.string());
        std::cout << csv.string() << "\n";
    }
    return 0;
}

struct EvaluateArgs {
    std::vector<std::string> detections;
    std::vector<std::string> truths;
    std::string out;
};

int run_evaluate(const EvaluateArgs& a) {
    if (a.detections.empty()) {
        throw std::invalid_argument("no detection files given");
    }
    if (a.detections.size() != a.truths.size()) {
        throw std::invalid_argument("detections and truth files must pair up (" +
                                    std::to_string(a.detections.size()) + " vs " +
                                    std::to_string(a.truths.size()) + ")");
    }
    nlohmann::json out_rows = nlohmann::json::array();
    double sum = 0.0;
    std::printf("%-32s %-32s %10s\n", "detection", "truth", "overlap");
    for (std::size_t k = 0; k < a.detections.size(); ++k) {
        const DetectionRecord rec = read_detection_file(a.detections[k]);
        const SeriesMetadata meta = read_metadata_file(a.truths[k]);
        if (!meta.truth) {
            throw std::invalid_argument(a.truths[k] + " carries no truth interval");
        }
        const double rate = overlapping_rate(rec.target, *meta.truth);
        sum += rate;
        std::printf("%-32s %-32s %10.4f\n", fs::path(a.detections[k]).filename().c_str(),
                    fs::path(a.truths[k]).filename().c_str(), rate);
        out_rows.push_back({{"detection", a.detections[k]},
                            {"truth", a.truths[k]},
                            {"overlapping_rate", rate}});
    }
    const double mean = sum / static_cast<double>(a.detections.size());
    std::printf("%-66s %10.4f\n", "mean", mean);
    if (!a.out.empty()) {
        nlohmann::json j{{"schema", "semdis-evaluation"},
                         {"rows", out_rows},
                         {"mean_overlapping_rate", mean}};
        std::ofstream f(a.out);
        if (!f) throw ParseError("cannot write " + a.out);
        f << j.dump(2) << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::string input;
    std::vector<std::size_t> sizes{2000, 4000, 8000, 16000};
    std::size_t context_len = 400;
    std::size_t target_len = 160;
    std::vector<std::string> algorithms{"pruned"};
    std::size_t brute_cutoff = 600;  // run real brute force only up to this n
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
};

int run_bench(const BenchArgs& a) {
    TimeSeries base;
    if (!a.input.empty()) {
        base = load_series_csv(a.input);
    }
    nlohmann::json rows = nlohmann::json::array();
    std::printf("%8s %-12s %16s %14s %12s %10s\n", "n", "algorithm", "distance_calls",
                "pruning_rate", "wall_sec", "analytic");
    for (std::size_t n : a.sizes) {
        TimeSeries ts;
        if (!a.input.empty()) {
            if (base.size() < n) {
                throw std::invalid_argument("--input shorter than requested size " +
                                            std::to_string(n));
            }
            ts.values.assign(base.values.begin(), base.values.begin() + n);
        } else {
            ts = random_walk(n, Rng::derive(a.seed, n));
        }
        for (const std::string& name : a.algorithms) {
            const Algorithm algo = parse_algorithm(name);
            const bool analytic =
                algo != Algorithm::Pruned && n > a.brute_cutoff;
            std::uint64_t calls = 0;
            double rate = 0.0, wall = 0.0;
            if (analytic) {
                calls = brute_force_cell_count(n, a.context_len, a.target_len);
            } else {
                SearchConfig cfg;
                cfg.context_len = a.context_len;
                cfg.target_len = a.target_len;
                cfg.seed = a.seed;
                cfg.threads = a.threads;
                cfg.algorithm = algo;
                const double t0 = now_sec();
                const SearchResult res = run_search(ts, cfg);
                wall = now_sec() - t0;
                calls = res.metrics.distance_calls;
                rate = res.metrics.pruning_rate();
            }
            std::printf("%8zu %-12s %16llu %14.6f %12.3f %10s\n", n, name.c_str(),
                        static_cast<unsigned long long>(calls), rate, wall,
                        analytic ? "yes" : "no");
            std::fflush(stdout);
            rows.push_back({{"n", n},
                            {"algorithm", name},
                            {"distance_calls", calls},
                            {"pruning_rate", rate},
                            {"wall_sec", wall},
                            {"analytic", analytic}});
        }
    }
    if (!a.out.empty()) {
        nlohmann::json j{{"schema", "semdis-bench"},
                         {"context_len", a.context_len},
                         {"target_len", a.target_len},
                         {"rows", rows}};
        std::ofstream f(a.out);
        if (!f) throw ParseError("cannot write " + a.out);
        f << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic discord detection for univariate time series"};
    app.require_subcommand(1);

    DetectArgs da;
    auto* detect = app.add_subcommand("detect", "find the semantic discord of a series");
    detect->add_option("--input", da.input, "single-column CSV of real values")->required();
    detect->add_option("--context-len", da.context_len, "context window length L")->required();
    detect->add_option("--target-len", da.target_len,
                       "target length l (default round(0.4*L))");
    auto* eps_opt = detect->add_option("--epsilon", da.epsilon,
                                       "fixed context-similarity threshold (inf allowed)");
    detect->add_option("--epsilon-percentile", da.epsilon_percentile,
                       "calibration percentile in (0,1]")->capture_default_str();
    detect->add_option("--epsilon-samples", da.epsilon_samples,
                       "calibration sample count")->capture_default_str();
    detect->add_option("--seed", da.seed, "seed for calibration sampling")
        ->capture_default_str();
    detect->add_option("--algorithm", da.algorithm, "brute | smart-brute | pruned")
        ->capture_default_str();
    detect->add_option("--threads", da.threads, "worker count (0 = hardware)")
        ->capture_default_str();
    detect->add_option("--out", da.out, "write the detection record (JSON) here");

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "write labeled benchmark series");
    generate->add_option("--generator", ga.generator, "concat | bump | randomwalk")
        ->required();
    generate->add_option("--count", ga.count, "number of series")->capture_default_str();
    generate->add_option("--seed", ga.seed, "base seed; per-series seeds derive from it")
        ->capture_default_str();
    generate->add_option("--out-dir", ga.out_dir, "output directory")->capture_default_str();
    generate->add_option("--normal-pool", ga.normal_pool, "instance pool file (concat)");
    generate->add_option("--anomaly-pool", ga.anomaly_pool, "instance pool file (concat)");
    generate->add_option("--normal-label", ga.normal_label, "keep only this class label");
    generate->add_option("--anomaly-label", ga.anomaly_label, "keep only this class label");
    generate->add_option("--normal-count", ga.normal_count, "instances per series (concat)")
        ->capture_default_str();
    generate->add_option("--cycles", ga.bump.cycles, "cycles (bump)")->capture_default_str();
    generate->add_option("--cycle-len", ga.bump.cycle_len, "cycle length (bump)")
        ->capture_default_str();
    generate->add_option("--bump-width", ga.bump.bump_width, "bump width (bump)")
        ->capture_default_str();
    generate->add_option("--bump-height", ga.bump.bump_height,
                         "bump height; 0 marks a negative control (bump)")
        ->capture_default_str();
    generate->add_option("--noise", ga.bump.noise, "sample noise (bump)")
        ->capture_default_str();
    generate->add_option("--length", ga.length, "series length (randomwalk)")
        ->capture_default_str();

    EvaluateArgs ea;
    auto* evaluate = app.add_subcommand("evaluate", "score detections against truth");
    evaluate->add_option("--detections", ea.detections, "detection record files")
        ->required()
        ->expected(-1);
    evaluate->add_option("--truth", ea.truths, "series metadata files")
        ->required()
        ->expected(-1);
    evaluate->add_option("--out", ea.out, "write the summary record (JSON) here");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "distance-call scaling benchmark");
    bench->add_option("--input", ba.input, "CSV input; omit to use seeded random walks");
    bench->add_option("--sizes", ba.sizes, "series lengths")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--context-len", ba.context_len, "context length L")
        ->capture_default_str();
    bench->add_option("--target-len", ba.target_len, "target length l")
        ->capture_default_str();
    bench->add_option("--algorithms", ba.algorithms, "pruned | smart-brute | brute")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--brute-cutoff", ba.brute_cutoff,
                      "above this n, brute-force columns are computed analytically")
        ->capture_default_str();
    bench->add_option("--seed", ba.seed, "seed for generated walks")->capture_default_str();
    bench->add_option("--threads", ba.threads, "worker count (0 = hardware)")
        ->capture_default_str();
    bench->add_option("--out", ba.out, "write the benchmark record (JSON) here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    da.epsilon_set = eps_opt->count() > 0;
    try {
        if (detect->parsed()) return run_detect(da);
        if (generate->parsed()) return run_generate(ga);
        if (evaluate->parsed()) return run_evaluate(ea);
        if (bench->parsed()) return run_bench(ba);
    } catch (const EmptyResultError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
