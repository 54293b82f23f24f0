#pragma once

// FID synthesis, noise injection, decay compensation and the
// Lorentz-to-parabola apodization window.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newt/analytic.hpp"
#include "newt/errors.hpp"

namespace newt::timedomain {

struct TimeSignal {
    std::vector<std::complex<double>> samples;
    double dt = 1.0;  // s
    double t0 = 0.0;  // s

    double time_at(std::size_t m) const { return t0 + dt * static_cast<double>(m); }
    double duration() const { return samples.empty() ? 0.0 : time_at(samples.size() - 1); }
    void validate() const;
};

struct WindowParams {
    double a = 1.0;  // line-width scale, a = 1 / (sqrt(2) pi FWHM), s
    double s = 1.0;  // amplitude scale
};

/// a for a desired parabolic line FWHM in Hz.
double fwhm_to_a(double fwhm);

struct NoiseSpec {
    std::uint64_t seed = 0;
    std::optional<double> target_snr;   // frequency-domain power ratio
    std::optional<double> noise_power;  // per-sample variance of re and im
    void validate() const;
};

/// Sum over lines of r exp(i(phi + 2 pi center t)) exp(-k t), multiplied by
/// exp(i global_phase); sample m sits at t = t0 + m dt.
TimeSignal synthesize_fid(std::span<const analytic::LineSpec> lines, double dt, std::size_t n,
                          double global_phase = 0.0);

/// Adds independent Gaussian noise to real and imaginary parts. With
/// target_snr set, the variance is calibrated against the noiseless
/// spectrum of sig so the measured frequency-domain power ratio lands near
/// the target. Deterministic for a fixed seed.
TimeSignal add_white_noise(const TimeSignal& sig, const NoiseSpec& spec);

/// Sample-wise multiplication by exp(k_comp * t). Throws OverflowGuardError
/// when an exponent would exceed exp_bound.
TimeSignal compensate_decay(const TimeSignal& sig, double k_comp, double exp_bound = 700.0);

/// W(t) = s (2 sqrt(2) a / sqrt(pi)) (a sin(t/a) - t cos(t/a)) / t^3 with the
/// removable t = 0 singularity evaluated by series.
double window_value(double t, const WindowParams& p);

/// Peak-normalized window, W~(0) = 1 exactly.
double normalized_window_value(double t, double a);

/// First `count` positive solutions of tan x = x, each multiplied by a.
std::vector<double> window_roots(double a, int count);

/// Sample-wise product with the normalized window.
TimeSignal apply_window(const TimeSignal& sig, double a);

/// Standard Gaussian window exp(-(t/tau)^2), for apodization comparisons.
TimeSignal apply_gaussian_window(const TimeSignal& sig, double tau);

/// Keeps the samples with t <= a * x_root (closed interval).
TimeSignal truncate_at_root(const TimeSignal& sig, double a, int root_index);

/// Appends zeros up to target_len; dt unchanged.
TimeSignal zero_fill(const TimeSignal& sig, std::size_t target_len);

} // namespace newt::timedomain
