// Counter-based deterministic random source. Output i of a stream is a pure
// function of (seed, stream, i): a splitmix64 finalizer applied to the counter
// walk. Same inputs give bit-identical draws on every platform and run, which
// is what the reproducibility guarantees of this project hang on.
#pragma once

#include <cmath>
#include <cstdint>

#include "dismix/vecmath.hpp"

namespace dismix {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(seed + detail::kGolden * (stream + 1)) ^ seed) {}

    std::uint64_t next_u64() {
        counter_ += 1;
        return detail::mix64(key_ + counter_ * detail::kGolden);
    }

    // Uniform in the open interval (0, 1); never returns 0 or 1.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws come in deterministic pairs.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    Vec normal_vec(std::size_t n) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = next_normal();
        return v;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace dismix
