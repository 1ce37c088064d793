#include "semdis/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace semdis {

namespace {

using nlohmann::json;

Interval to_interval_1based(std::size_t start0, std::size_t len) {
    Interval iv;
    iv.start = static_cast<std::int64_t>(start0) + 1;
    iv.end = static_cast<std::int64_t>(start0 + len);
    return iv;
}

json interval_json(const Interval& iv) {
    return json{{"start", iv.start}, {"end", iv.end}};
}

Interval interval_from(const json& j) {
    Interval iv;
    iv.start = j.at("start").get<std::int64_t>();
    iv.end = j.at("end").get<std::int64_t>();
    return iv;
}

}  // namespace

DetectionRecord make_detection_record(const SearchResult& result, Algorithm algorithm,
                                      double wall_time_sec) {
    const DiscordReport& r = result.report;
    DetectionRecord rec;
    rec.algorithm = algorithm_name(algorithm);
    rec.context_len = r.context_len;
    rec.target_len = r.target_len;
    rec.epsilon = r.epsilon;
    rec.target = to_interval_1based(r.target, r.target_len);
    rec.context = to_interval_1based(r.context, r.context_len);
    rec.match_target = to_interval_1based(r.match_target, r.target_len);
    rec.match_context = to_interval_1based(r.match_context, r.context_len);
    rec.distance = r.distance;
    rec.distance_calls = result.metrics.distance_calls;
    rec.lb_calls = result.metrics.lb_calls;
    rec.pruning_rate = result.metrics.pruning_rate();
    rec.wall_time_sec = wall_time_sec;
    return rec;
}

std::string detection_to_json(const DetectionRecord& rec) {
    json j;
    j["schema"] = "semdis-detection";
    j["algorithm"] = rec.algorithm;
    j["context_len"] = rec.context_len;
    j["target_len"] = rec.target_len;
    // JSON has no infinity; an open gate is stored as the string "inf"
    if (std::isfinite(rec.epsilon)) {
        j["epsilon"] = rec.epsilon;
    } else {
        j["epsilon"] = "inf";
    }
    j["target"] = interval_json(rec.target);
    j["context"] = interval_json(rec.context);
    j["match_target"] = interval_json(rec.match_target);
    j["match_context"] = interval_json(rec.match_context);
    j["distance"] = rec.distance;
    j["distance_calls"] = rec.distance_calls;
    j["lb_calls"] = rec.lb_calls;
    j["pruning_rate"] = rec.pruning_rate;
    // wall_time_sec deliberately not serialized: identical runs must
    // produce identical bytes.
    return j.dump(2) + "\n";
}

DetectionRecord detection_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad detection record: ") + e.what());
    }
    try {
        DetectionRecord rec;
        rec.algorithm = j.at("algorithm").get<std::string>();
        rec.context_len = j.at("context_len").get<std::size_t>();
        rec.target_len = j.at("target_len").get<std::size_t>();
        if (j.at("epsilon").is_string()) {
            rec.epsilon = std::numeric_limits<double>::infinity();
        } else {
            rec.epsilon = j.at("epsilon").get<double>();
        }
        rec.target = interval_from(j.at("target"));
        rec.context = interval_from(j.at("context"));
        rec.match_target = interval_from(j.at("match_target"));
        rec.match_context = interval_from(j.at("match_context"));
        rec.distance = j.at("distance").get<double>();
        rec.distance_calls = j.at("distance_calls").get<std::uint64_t>();
        rec.lb_calls = j.at("lb_calls").get<std::uint64_t>();
        rec.pruning_rate = j.at("pruning_rate").get<double>();
        return rec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad detection record: ") + e.what());
    }
}

void write_detection_file(const DetectionRecord& rec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << detection_to_json(rec);
}

DetectionRecord read_detection_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return detection_from_json(ss.str());
}

void print_detection(std::ostream& os, const DetectionRecord& rec) {
    char line[256];
    os << "algorithm        " << rec.algorithm << "\n";
    std::snprintf(line, sizeof(line), "context_len      %zu\n", rec.context_len);
    os << line;
    std::snprintf(line, sizeof(line), "target_len       %zu\n", rec.target_len);
    os << line;
    std::snprintf(line, sizeof(line), "epsilon          %.6g\n", rec.epsilon);
    os << line;
    std::snprintf(line, sizeof(line), "discord target   [%lld, %lld]\n",
                  static_cast<long long>(rec.target.start),
                  static_cast<long long>(rec.target.end));
    os << line;
    std::snprintf(line, sizeof(line), "discord context  [%lld, %lld]\n",
                  static_cast<long long>(rec.context.start),
                  static_cast<long long>(rec.context.end));
    os << line;
    std::snprintf(line, sizeof(line), "match target     [%lld, %lld]\n",
                  static_cast<long long>(rec.match_target.start),
                  static_cast<long long>(rec.match_target.end));
    os << line;
    std::snprintf(line, sizeof(line), "match context    [%lld, %lld]\n",
                  static_cast<long long>(rec.match_context.start),
                  static_cast<long long>(rec.match_context.end));
    os << line;
    std::snprintf(line, sizeof(line), "distance         %.12g\n", rec.distance);
    os << line;
    std::snprintf(line, sizeof(line), "distance_calls   %llu\n",
                  static_cast<unsigned long long>(rec.distance_calls));
    os << line;
    std::snprintf(line, sizeof(line), "lb_calls         %llu\n",
                  static_cast<unsigned long long>(rec.lb_calls));
    os << line;
    std::snprintf(line, sizeof(line), "pruning_rate     %.6f\n", rec.pruning_rate);
    os << line;
    std::snprintf(line, sizeof(line), "wall_time_sec    %.3f\n", rec.wall_time_sec);
    os << line;
}

std::string metadata_to_json(const SeriesMetadata& meta) {
    json j;
    j["schema"] = "semdis-series";
    j["generator"] = meta.generator;
    j["seed"] = meta.seed;
    if (meta.truth) {
        j["truth"] = interval_json(*meta.truth);
    } else {
        j["truth"] = nullptr;
    }
    j["negative_control"] = meta.negative_control;
    j["suggested_context_len"] = meta.suggested_context_len;
    if (!meta.params_json.empty()) {
        j["params"] = json::parse(meta.params_json);
    } else {
        j["params"] = json::object();
    }
    return j.dump(2) + "\n";
}

SeriesMetadata metadata_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad series metadata: ") + e.what());
    }
    try {
        SeriesMetadata meta;
        meta.generator = j.at("generator").get<std::string>();
        meta.seed = j.at("seed").get<std::uint64_t>();
        if (!j.at("truth").is_null()) {
            meta.truth = interval_from(j.at("truth"));
        }
        meta.negative_control = j.value("negative_control", false);
        meta.suggested_context_len = j.value("suggested_context_len", std::size_t{0});
        if (j.contains("params")) meta.params_json = j["params"].dump();
        return meta;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad series metadata: ") + e.what());
    }
}

void write_metadata_file(const SeriesMetadata& meta, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << metadata_to_json(meta);
}

SeriesMetadata read_metadata_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return metadata_from_json(ss.str());
}

}  // namespace semdis
