#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semdis {

/// A window whose standard deviation falls below this is treated as flat.
/// Flat windows cannot be z-normalized.
inline constexpr double kFlatSigma = 1e-12;

struct FlatWindowError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidWindowError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search found no feasible target (maps to exit code 3 in the CLI).
struct EmptyResultError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ordered list of finite real-valued samples. Indices are 0-based in
/// code; only rendered reports use 1-based positions.
struct TimeSeries {
    std::vector<double> values;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    const double* data() const { return values.data(); }
};

/// Throws ParseError if any sample is NaN or infinite.
void require_finite(const TimeSeries& ts);

/// Reads a single-column CSV (one real value per line, blank lines and
/// lines starting with '#' ignored). Throws ParseError on bad input.
TimeSeries load_series_csv(const std::string& path);

void save_series_csv(const TimeSeries& ts, const std::string& path);

}  // namespace semdis
