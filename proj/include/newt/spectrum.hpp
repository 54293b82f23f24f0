#pragma once

// Discrete Fourier transform of time signals, two-sided frequency axis and
// frequency-domain measurements.

#include <complex>
#include <span>
#include <vector>

#include "newt/errors.hpp"
#include "newt/timedomain.hpp"

namespace newt::spectrum {

struct Spectrum {
    std::vector<std::complex<double>> bins;
    std::vector<double> freq_axis;  // Hz, ascending, centered at 0
    double df = 0.0;                // Hz
};

/// Unnormalized forward DFT X_j = sum_m x_m exp(-i 2 pi j m / n), bins
/// reordered onto an ascending two-sided axis. Radix-2 fast transform when n
/// is a power of two, direct evaluation otherwise.
Spectrum transform(const timedomain::TimeSignal& sig);

/// Direct O(n^2) DFT in natural (unshifted) bin order.
std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> x);

/// Iterative radix-2 FFT in natural bin order; n must be a power of two.
std::vector<std::complex<double>> fft_radix2(std::vector<std::complex<double>> x);

/// Zero-order phase correction: bins multiplied by exp(-i phi0).
Spectrum phase_correct(const Spectrum& spec, double phi0);

struct FreqInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// (max real-part amplitude in peak region)^2 divided by the variance of the
/// real part in the noise region.
double measure_snr(const Spectrum& spec, FreqInterval peak_region, FreqInterval noise_region);

} // namespace newt::spectrum
