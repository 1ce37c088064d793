#include "semdis/series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace semdis {

void require_finite(const TimeSeries& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(ts.values[i])) {
            throw ParseError("non-finite sample at position " + std::to_string(i + 1));
        }
    }
}

TimeSeries load_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    TimeSeries ts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str() + start, &end);
        if (end == line.c_str() + start) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": not a number: " + line);
        }
        if (!std::isfinite(v)) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": non-finite value");
        }
        ts.values.push_back(v);
    }
    return ts;
}

void save_series_csv(const TimeSeries& ts, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    char buf[64];
    for (double v : ts.values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out << buf;
    }
}

}  // namespace semdis
