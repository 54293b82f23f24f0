#pragma once

// Closed-form spectral line shapes (Lorentzian modes, phased mixture,
// Gaussian, truncated parabola), core-fraction analysis and extrema /
// width measurements of sampled sums of lines.

#include <functional>
#include <span>
#include <vector>

#include "newt/errors.hpp"

namespace newt::analytic {

enum class Shape { lorentzian, gaussian, truncated_parabola };

struct LineSpec {
    Shape shape = Shape::lorentzian;
    double r = 1.0;       // amplitude radius
    double k = 1.0;       // damping constant, Hz
    double phi = 0.0;     // phase, rad
    double center = 0.0;  // Hz
    void validate() const;
};

/// Uniformly sampled amplitudes over a strictly increasing frequency grid.
struct SampledLine {
    std::vector<double> grid;    // Hz
    std::vector<double> values;  // amplitude
};

/// Absorption mode Lorentzian A(nu) = 2rk / ((2 pi nu)^2 + k^2), nu from center.
double absorption(double nu, double r, double k);

/// Dispersion mode Lorentzian D(nu) = 2r (2 pi nu) / ((2 pi nu)^2 + k^2).
double dispersion(double nu, double r, double k);

/// Phase-sensitive Lorentzian in angular frequency:
/// r cos(phi) k / ((w - w0)^2 + k^2) - r sin(phi) (w - w0) / ((w - w0)^2 + k^2).
double phased_line(double omega, const LineSpec& spec);

/// Gaussian with the same peak 2r/k and FWHM k/pi as the absorption Lorentzian.
double gaussian(double u, double r, double k);

/// Truncated parabola (-4 pi^2 r u^2 / k^3 + 2r/k) clipped at zero; support
/// |u| <= k / (sqrt(2) pi), same peak and FWHM as the Lorentzian.
double truncated_parabola(double u, double r, double k);

/// Frequency-domain apodization target s (1 - (a w)^2) H(1 - (a w)^2),
/// a = 1 / (sqrt(2) pi FWHM).
double parabola_target(double omega, double s, double a);

/// Shape value at frequency nu (Hz); phase enters as cos(phi) * absorptive
/// part - sin(phi) * dispersive part (dispersive part Lorentzian only).
double evaluate(const LineSpec& spec, double nu);

/// Ratio of the area inside a centered window of width delta to the total
/// area; closed forms for all three shapes. Requires phi = 0.
double core_fraction(const LineSpec& spec, double delta);

/// Pointwise sum of the analytic shapes on a uniform grid.
SampledLine sum_lines(std::span<const LineSpec> specs, double grid_lo, double grid_hi,
                      std::size_t n_points);

struct Extremum {
    double position = 0.0;  // Hz, refined by 3-point quadratic interpolation
    double value = 0.0;
    bool is_maximum = true;
};

/// All interior local maxima and minima of the sampled line.
std::vector<Extremum> find_extrema(const SampledLine& line);

/// Width between linearly interpolated half-maximum crossings around the
/// global maximum. Throws NoHalfCrossingError.
double measure_fwhm(const SampledLine& line);

/// Adaptive Simpson quadrature with relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-8);

} // namespace newt::analytic
