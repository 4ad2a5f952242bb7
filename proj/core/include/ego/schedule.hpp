#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ego {

/// Per-timestep beta/alpha/alpha_bar tables for the forward noising process.
/// alpha_bar is accumulated in double so that long products stay accurate.
struct NoiseSchedule {
    std::vector<double> beta;
    std::vector<double> alpha;
    std::vector<double> alpha_bar;

    int steps() const { return static_cast<int>(beta.size()); }

    static NoiseSchedule from_betas(std::vector<double> betas) {
        if (betas.empty()) throw std::invalid_argument("NoiseSchedule: empty beta table");
        NoiseSchedule s;
        s.beta = std::move(betas);
        s.alpha.resize(s.beta.size());
        s.alpha_bar.resize(s.beta.size());
        double prod = 1.0;
        for (std::size_t t = 0; t < s.beta.size(); ++t) {
            double b = s.beta[t];
            if (!(b > 0.0) || !(b < 1.0))
                throw std::invalid_argument("NoiseSchedule: beta[" + std::to_string(t) +
                                            "] outside (0,1)");
            s.alpha[t] = 1.0 - b;
            prod *= s.alpha[t];
            if (!(prod > 0.0))
                throw std::invalid_argument("NoiseSchedule: alpha_bar underflowed to zero at t=" +
                                            std::to_string(t));
            s.alpha_bar[t] = prod;
        }
        return s;
    }

    /// Standard DDPM-style linear beta ramp.
    static NoiseSchedule linear(int steps, double beta_lo = 1e-4, double beta_hi = 2e-2) {
        if (steps < 1) throw std::invalid_argument("NoiseSchedule: steps must be >= 1");
        if (!(beta_lo > 0.0) || !(beta_hi < 1.0) || beta_lo > beta_hi)
            throw std::invalid_argument("NoiseSchedule: invalid beta range");
        std::vector<double> b(steps);
        if (steps == 1) {
            b[0] = beta_lo;
        } else {
            for (int t = 0; t < steps; ++t)
                b[t] = beta_lo + (beta_hi - beta_lo) * static_cast<double>(t) / (steps - 1);
        }
        return from_betas(std::move(b));
    }

    void check_timestep(int t) const {
        if (t < 0 || t >= steps())
            throw std::invalid_argument("timestep " + std::to_string(t) + " outside [0, " +
                                        std::to_string(steps()) + ")");
    }

    double sqrt_alpha_bar(int t) const {
        check_timestep(t);
        return std::sqrt(alpha_bar[t]);
    }
    double sqrt_one_minus_alpha_bar(int t) const {
        check_timestep(t);
        return std::sqrt(1.0 - alpha_bar[t]);
    }
};

}  // namespace ego
