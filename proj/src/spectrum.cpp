#include "newt/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace newt::spectrum {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<std::complex<double>> dft_direct(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            const double arg = -2.0 * kPi * static_cast<double>(j) * static_cast<double>(m) /
                               static_cast<double>(n);
            acc += x[m] * std::complex<double>{std::cos(arg), std::sin(arg)};
        }
        out[j] = acc;
    }
    return out;
}

std::vector<std::complex<double>> fft_radix2(std::vector<std::complex<double>> x) {
    const std::size_t n = x.size();
    if (!std::has_single_bit(n)) throw std::invalid_argument("fft_radix2 needs a power-of-two length");

    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        const std::complex<double> wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> even = x[i + j];
                const std::complex<double> odd = x[i + j + len / 2] * w;
                x[i + j] = even + odd;
                x[i + j + len / 2] = even - odd;
                w *= wlen;
            }
        }
    }
    return x;
}

Spectrum transform(const timedomain::TimeSignal& sig) {
    sig.validate();
    const std::size_t n = sig.samples.size();
    if (n < 2) throw std::invalid_argument("need at least two samples");

    std::vector<std::complex<double>> raw =
        std::has_single_bit(n) ? fft_radix2(sig.samples) : dft_direct(sig.samples);

    Spectrum spec;
    spec.df = 1.0 / (static_cast<double>(n) * sig.dt);
    spec.bins.resize(n);
    spec.freq_axis.resize(n);
    const std::size_t half = n / 2;  // first negative-frequency raw bin
    const std::size_t shift = n - half;
    for (std::size_t j = 0; j < n; ++j) {
        spec.bins[j] = raw[(j + shift) % n];
        spec.freq_axis[j] = (static_cast<double>(j) - static_cast<double>(half)) * spec.df;
    }
    return spec;
}

Spectrum phase_correct(const Spectrum& spec, double phi0) {
    Spectrum out = spec;
    const std::complex<double> rot{std::cos(phi0), -std::sin(phi0)};
    for (auto& b : out.bins) b *= rot;
    return out;
}

double measure_snr(const Spectrum& spec, FreqInterval peak_region, FreqInterval noise_region) {
    if (spec.bins.empty()) throw EmptyRegionError("empty spectrum");
    auto in = [](double f, const FreqInterval& iv) { return f >= iv.lo && f <= iv.hi; };

    double peak = -std::numeric_limits<double>::infinity();
    std::size_t n_peak = 0;
    double sum = 0.0, sum2 = 0.0;
    std::size_t n_noise = 0;
    for (std::size_t j = 0; j < spec.bins.size(); ++j) {
        const double f = spec.freq_axis[j];
        const double re = spec.bins[j].real();
        if (in(f, peak_region)) {
            peak = std::max(peak, re);
            ++n_peak;
        }
        if (in(f, noise_region)) {
            sum += re;
            sum2 += re * re;
            ++n_noise;
        }
    }
    if (n_peak == 0) throw EmptyRegionError("peak region contains no bins");
    if (n_noise < 2) throw EmptyRegionError("noise region contains fewer than two bins");
    const double mean = sum / static_cast<double>(n_noise);
    double variance = sum2 / static_cast<double>(n_noise) - mean * mean;
    variance = std::max(variance, 1e-300);
    return peak * peak / variance;
}

} // namespace newt::spectrum
