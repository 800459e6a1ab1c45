// Error hierarchy. Each class maps to a stable CLI exit code:
//   ConfigError        -> 2   (bad config, parameters, labels, dimensions)
//   DivergenceError    -> 3   (non-finite states, degenerate densities)
//   OracleBudgetError  -> 4   (exhaustive search too large)
//   IoError            -> 5   (file system failures)
// Anything else exits 1.
#pragma once

#include <stdexcept>
#include <string>

namespace dismix {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Degenerate condition pair or zero vector where a direction is required.
struct ZeroDirectionError : ConfigError {
    explicit ZeroDirectionError(const std::string& msg) : ConfigError(msg) {}
};

struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg, int step = -1)
        : Error(msg), step(step) {}
    int step;
};

// All mixture components underflowed even in log space.
struct DegenerateDensityError : DivergenceError {
    explicit DegenerateDensityError(const std::string& msg) : DivergenceError(msg) {}
};

struct OracleBudgetError : Error {
    explicit OracleBudgetError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const DivergenceError*>(&e)) return 3;
    if (dynamic_cast<const OracleBudgetError*>(&e)) return 4;
    if (dynamic_cast<const IoError*>(&e)) return 5;
    return 1;
}

} // namespace dismix
