#ifndef PAREVAL_ERRORS_HPP
#define PAREVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pareval {

// Schema violations: dimension mismatches, duplicate axis names, N < 2.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad run configuration: degenerate bounds, invalid epsilon/sigma, missing inputs.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation asked for on data that cannot support it (empty front,
// missing session normalization, fewer than two populated groups).
struct evaluation_error : std::runtime_error {
    explicit evaluation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Radar polygon construction with fewer than three axes or mismatched axis sets.
struct geometry_error : std::runtime_error {
    explicit geometry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A priori selection referenced a (model, threshold) combo absent from test data.
struct protocol_error : std::runtime_error {
    explicit protocol_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File parsing failures; message carries file and line.
struct ingestion_error : std::runtime_error {
    explicit ingestion_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pareval

#endif
