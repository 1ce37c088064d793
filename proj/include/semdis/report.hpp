#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "semdis/generators.hpp"
#include "semdis/search.hpp"

namespace semdis {

/// Machine-readable detection result. Every interval is 1-based
/// inclusive. wall_time_sec is shown on stdout but intentionally left
/// out of the serialized record so that identical runs write identical
/// bytes.
struct DetectionRecord {
    std::string algorithm;
    std::size_t context_len = 0;
    std::size_t target_len = 0;
    double epsilon = 0.0;
    Interval target;         // discord target
    Interval context;        // its chosen context
    Interval match_target;   // nearest reference target
    Interval match_context;  // its chosen reference context
    double distance = 0.0;
    std::uint64_t distance_calls = 0;
    std::uint64_t lb_calls = 0;
    double pruning_rate = 0.0;
    double wall_time_sec = 0.0;
};

DetectionRecord make_detection_record(const SearchResult& result, Algorithm algorithm,
                                      double wall_time_sec);

/// Lossless JSON round-trip (wall_time_sec excluded by design).
std::string detection_to_json(const DetectionRecord& rec);
DetectionRecord detection_from_json(const std::string& text);  // throws ParseError

void write_detection_file(const DetectionRecord& rec, const std::string& path);
DetectionRecord read_detection_file(const std::string& path);

/// Renders the human-readable table for stdout.
void print_detection(std::ostream& os, const DetectionRecord& rec);

/// Sidecar metadata written next to every generated series.
struct SeriesMetadata {
    std::string generator;
    std::uint64_t seed = 0;
    std::optional<Interval> truth;
    bool negative_control = false;
    std::size_t suggested_context_len = 0;
    std::string params_json;  // generator parameters, pre-serialized
};

std::string metadata_to_json(const SeriesMetadata& meta);
SeriesMetadata metadata_from_json(const std::string& text);

void write_metadata_file(const SeriesMetadata& meta, const std::string& path);
SeriesMetadata read_metadata_file(const std::string& path);

}  // namespace semdis
