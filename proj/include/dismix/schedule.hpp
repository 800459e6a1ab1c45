// Diffusion coefficient schedule. alpha[t] is the cumulative signal-retention
// coefficient: marginally x_t = sqrt(alpha[t]) x_0 + sqrt(1 - alpha[t]) eps.
// alpha[0] = 1 and the sequence is strictly decreasing with alpha[T] > 0.
#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dismix/csv.hpp"
#include "dismix/errors.hpp"

namespace dismix {

struct Schedule {
    int steps = 0;             // T
    std::vector<double> alpha; // alpha[t] for t = 0..T
};

enum class ScheduleKind { LinearBeta, Cosine };

struct ScheduleParams {
    double beta_min = 1e-4;
    double beta_max = 0.2;
    double cosine_offset = 8e-3;
};

inline void validate_schedule(const std::vector<double>& alpha) {
    if (alpha.empty() || alpha[0] != 1.0) {
        throw ConfigError("schedule construction: alpha[0] must be exactly 1");
    }
    for (std::size_t t = 1; t < alpha.size(); ++t) {
        if (!(alpha[t] > 0.0) || !(alpha[t] < alpha[t - 1])) {
            throw ConfigError("schedule construction: alpha not strictly decreasing in (0,1] at index " +
                              std::to_string(t));
        }
    }
}

inline Schedule make_schedule(ScheduleKind kind, int steps, const ScheduleParams& params = {}) {
    if (steps < 1) throw ConfigError("schedule construction: steps must be >= 1");
    Schedule s;
    s.steps = steps;
    s.alpha.resize(static_cast<std::size_t>(steps) + 1);
    s.alpha[0] = 1.0;
    switch (kind) {
        case ScheduleKind::LinearBeta: {
            if (!(params.beta_min > 0.0 && params.beta_min < params.beta_max && params.beta_max < 1.0)) {
                throw ConfigError("schedule construction: need 0 < beta_min < beta_max < 1");
            }
            double prod = 1.0;
            for (int i = 1; i <= steps; ++i) {
                const double frac = steps > 1 ? static_cast<double>(i - 1) / (steps - 1) : 0.0;
                const double beta = params.beta_min + (params.beta_max - params.beta_min) * frac;
                prod *= 1.0 - beta;
                s.alpha[static_cast<std::size_t>(i)] = prod;
            }
            break;
        }
        case ScheduleKind::Cosine: {
            if (!(params.cosine_offset > 0.0)) {
                throw ConfigError("schedule construction: cosine offset must be > 0");
            }
            const double off = params.cosine_offset;
            const double pi = 3.141592653589793238462643383279502884;
            auto f = [&](double t) {
                const double u = (t / steps + off) / (1.0 + off) * pi / 2.0;
                const double c = std::cos(u);
                return c * c;
            };
            const double f0 = f(0.0);
            for (int t = 1; t <= steps; ++t) {
                s.alpha[static_cast<std::size_t>(t)] = f(static_cast<double>(t)) / f0;
            }
            break;
        }
    }
    validate_schedule(s.alpha);
    return s;
}

// Per-step update coefficients: next = x_scale * x + eps_scale * eps.
struct StepCoeffs {
    double x_scale;
    double eps_scale;
};

namespace detail {

// Radicands are nonnegative for any valid schedule; tolerate rounding noise
// within 1e-12 of zero, reject anything more negative.
inline double safe_sqrt(double radicand, const char* what) {
    if (radicand < 0.0) {
        if (radicand < -1e-12) {
            throw ConfigError(std::string("negative radicand in ") + what + ": " +
                              std::to_string(radicand));
        }
        radicand = 0.0;
    }
    return std::sqrt(radicand);
}

} // namespace detail

// Denoising step t -> t-1, valid for t in 1..T.
inline StepCoeffs denoise_coeffs(const Schedule& s, int t) {
    if (t < 1 || t > s.steps) {
        throw std::out_of_range("denoise_coeffs: step " + std::to_string(t) +
                                " outside 1.." + std::to_string(s.steps));
    }
    const double a_prev = s.alpha[static_cast<std::size_t>(t - 1)];
    const double a_cur = s.alpha[static_cast<std::size_t>(t)];
    StepCoeffs k{};
    k.x_scale = std::sqrt(a_prev / a_cur);
    k.eps_scale = detail::safe_sqrt(1.0 - a_prev, "denoise_coeffs") -
                  detail::safe_sqrt(a_prev / a_cur - a_prev, "denoise_coeffs");
    return k;
}

// Inversion step t -> t+1, valid for t in 0..T-1.
inline StepCoeffs invert_coeffs(const Schedule& s, int t) {
    if (t < 0 || t > s.steps - 1) {
        throw std::out_of_range("invert_coeffs: step " + std::to_string(t) +
                                " outside 0.." + std::to_string(s.steps - 1));
    }
    const double a_cur = s.alpha[static_cast<std::size_t>(t)];
    const double a_next = s.alpha[static_cast<std::size_t>(t + 1)];
    StepCoeffs k{};
    k.x_scale = std::sqrt(a_next / a_cur);
    k.eps_scale = detail::safe_sqrt(1.0 - a_next, "invert_coeffs") -
                  detail::safe_sqrt(a_next / a_cur - a_next, "invert_coeffs");
    return k;
}

inline void write_schedule_csv(const Schedule& s, std::ostream& out) {
    out << "t,alpha\n";
    for (int t = 0; t <= s.steps; ++t) {
        out << t << ',' << fmt17(s.alpha[static_cast<std::size_t>(t)]) << '\n';
    }
}

} // namespace dismix
