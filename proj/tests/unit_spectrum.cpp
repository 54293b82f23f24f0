#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "newt/analytic.hpp"
#include "newt/spectrum.hpp"
#include "newt/timedomain.hpp"

using namespace newt;
using namespace newt::spectrum;
using timedomain::TimeSignal;

namespace {
constexpr double kPi = std::numbers::pi;

TimeSignal random_signal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    TimeSignal sig;
    sig.dt = 1e-3;
    sig.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) sig.samples.push_back({dist(rng), dist(rng)});
    return sig;
}
} // namespace

TEST_CASE("transform basics") {
    SUBCASE("constant signal concentrates at zero frequency") {
        TimeSignal sig;
        sig.dt = 0.25;
        sig.samples.assign(16, {1.0, 0.0});
        auto spec = transform(sig);
        for (std::size_t j = 0; j < spec.bins.size(); ++j) {
            if (spec.freq_axis[j] == 0.0)
                CHECK(spec.bins[j].real() == doctest::Approx(16.0));
            else
                CHECK(std::abs(spec.bins[j]) <= 1e-12);
        }
    }
    SUBCASE("on-grid oscillation gives a single bin") {
        TimeSignal sig;
        sig.dt = 1.0 / 64.0;
        const double nu = 5.0;
        for (int m = 0; m < 64; ++m) {
            const double arg = 2.0 * kPi * nu * sig.dt * m;
            sig.samples.push_back({std::cos(arg), std::sin(arg)});
        }
        auto spec = transform(sig);
        for (std::size_t j = 0; j < spec.bins.size(); ++j) {
            if (spec.freq_axis[j] == nu)
                CHECK(std::abs(spec.bins[j]) == doctest::Approx(64.0));
            else
                CHECK(std::abs(spec.bins[j]) <= 1e-9);
        }
    }
    SUBCASE("axis convention") {
        TimeSignal sig;
        sig.dt = 0.5;
        sig.samples.assign(8, {1.0, 0.0});
        auto spec = transform(sig);
        CHECK(spec.df == doctest::Approx(1.0 / (8.0 * 0.5)));
        CHECK(spec.freq_axis.front() == doctest::Approx(-1.0 / (2.0 * 0.5)));
        CHECK(spec.freq_axis.back() == doctest::Approx(1.0 / (2.0 * 0.5) - spec.df));
    }
}

TEST_CASE("fast and direct transforms agree") {
    for (std::size_t n : {64u, 256u, 1024u, 4096u}) {
        auto sig = random_signal(n, 17u + n);
        auto fast = fft_radix2(sig.samples);
        auto direct = dft_direct(sig.samples);
        double max_rel = 0.0, scale = 0.0;
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(direct[j]));
        for (std::size_t j = 0; j < n; ++j)
            max_rel = std::max(max_rel, std::abs(fast[j] - direct[j]) / scale);
        CHECK(max_rel <= 1e-9);
    }
}

TEST_CASE("Parseval") {
    for (std::size_t n : {100u, 128u, 1000u, 4096u}) {
        auto sig = random_signal(n, 3u * n);
        auto spec = transform(sig);
        double e_t = 0.0, e_f = 0.0;
        for (const auto& s : sig.samples) e_t += std::norm(s);
        for (const auto& b : spec.bins) e_f += std::norm(b);
        CHECK(e_t == doctest::Approx(e_f / static_cast<double>(n)).epsilon(1e-9));
    }
}

TEST_CASE("linearity") {
    const std::size_t n = 512;
    auto x = random_signal(n, 1);
    auto y = random_signal(n, 2);
    const double alpha = 0.7, beta = -1.9;
    TimeSignal z = x;
    for (std::size_t i = 0; i < n; ++i) z.samples[i] = alpha * x.samples[i] + beta * y.samples[i];

    auto sx = transform(x), sy = transform(y), sz = transform(z);
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(sz.bins[j]));
    for (std::size_t j = 0; j < n; ++j) {
        const auto want = alpha * sx.bins[j] + beta * sy.bins[j];
        CHECK(std::abs(sz.bins[j] - want) / scale <= 1e-9);
    }
}

TEST_CASE("shift theorem") {
    const std::size_t n = 2048;
    std::vector<analytic::LineSpec> lines{{analytic::Shape::lorentzian, 1.0, 5.0, 0.0, 0.0}};
    auto sig = timedomain::synthesize_fid(lines, 1.0 / 1024.0, n);
    auto spec0 = transform(sig);

    const double nu0 = 100.0;
    TimeSignal mod = sig;
    for (std::size_t m = 0; m < n; ++m) {
        const double arg = 2.0 * kPi * nu0 * mod.time_at(m);
        mod.samples[m] *= std::complex<double>{std::cos(arg), std::sin(arg)};
    }
    auto spec1 = transform(mod);

    auto peak_bin = [](const Spectrum& s) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < s.bins.size(); ++j)
            if (std::abs(s.bins[j]) > std::abs(s.bins[best])) best = j;
        return best;
    };
    const long shift = static_cast<long>(peak_bin(spec1)) - static_cast<long>(peak_bin(spec0));
    CHECK(shift == std::lround(nu0 / spec0.df));
}

TEST_CASE("phase_correct") {
    std::vector<analytic::LineSpec> lines{{analytic::Shape::lorentzian, 1.0, kPi, kPi / 2.0, 100.0}};
    auto sig = timedomain::synthesize_fid(lines, 1.0 / 1024.0, 4096);
    auto spec = transform(sig);

    SUBCASE("phi0 = 0 is the identity") {
        auto out = phase_correct(spec, 0.0);
        CHECK(out.bins == spec.bins);
    }
    SUBCASE("undoing the synthesis phase restores pure absorption") {
        auto corrected = phase_correct(spec, kPi / 2.0);
        // pure absorption: even around the peak, maximum on the center bin
        std::size_t best = 0;
        for (std::size_t j = 0; j < corrected.bins.size(); ++j)
            if (corrected.bins[j].real() > corrected.bins[best].real()) best = j;
        CHECK(corrected.freq_axis[best] == doctest::Approx(100.0).epsilon(1e-6));
        const double peak = corrected.bins[best].real();
        CHECK(corrected.bins[best + 40].real() ==
              doctest::Approx(corrected.bins[best - 40].real()).epsilon(0.02));
        CHECK(peak > 0.0);
    }
    SUBCASE("phi0 then -phi0 round-trips") {
        auto out = phase_correct(phase_correct(spec, 0.77), -0.77);
        for (std::size_t j = 0; j < spec.bins.size(); ++j)
            CHECK(std::abs(out.bins[j] - spec.bins[j]) <= 1e-12 * std::abs(spec.bins[j]) + 1e-12);
    }
}

TEST_CASE("measure_snr") {
    std::vector<analytic::LineSpec> lines{{analytic::Shape::lorentzian, 1.0, kPi, 0.0, 4000.0}};
    auto sig = timedomain::synthesize_fid(lines, 1.0 / 8192.0, 16384);

    SUBCASE("noiseless line has a huge ratio") {
        auto spec = transform(sig);
        CHECK(measure_snr(spec, {3995.0, 4005.0}, {2000.0, 3000.0}) > 1e6);
    }
    SUBCASE("pure noise is order one") {
        timedomain::TimeSignal noise;
        noise.dt = 1.0 / 8192.0;
        noise.samples.assign(16384, {0.0, 0.0});
        timedomain::NoiseSpec nspec;
        nspec.seed = 99;
        nspec.noise_power = 1.0;
        auto noisy = timedomain::add_white_noise(noise, nspec);
        auto spec = transform(noisy);
        CHECK(measure_snr(spec, {1000.0, 2000.0}, {-3000.0, -1000.0}) < 50.0);
    }
    SUBCASE("empty regions rejected") {
        auto spec = transform(sig);
        CHECK_THROWS_AS(measure_snr(spec, {1e6, 2e6}, {2000.0, 3000.0}), EmptyRegionError);
    }
}

TEST_CASE("synthesized line FWHM in the spectrum") {
    std::vector<analytic::LineSpec> lines{{analytic::Shape::lorentzian, 1.0, kPi, 0.0, 4000.0}};
    auto sig = timedomain::synthesize_fid(lines, 1.0 / 8192.0, 32768);
    auto filled = timedomain::zero_fill(sig, 1u << 17);
    auto spec = transform(filled);

    analytic::SampledLine line;
    for (std::size_t j = 0; j < spec.bins.size(); ++j)
        if (std::abs(spec.freq_axis[j] - 4000.0) < 20.0) {
            line.grid.push_back(spec.freq_axis[j]);
            line.values.push_back(spec.bins[j].real());
        }
    CHECK(analytic::measure_fwhm(line) == doctest::Approx(1.0).epsilon(0.02));
}
