#include "newt/timedomain.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "newt/spectrum.hpp"

namespace newt::timedomain {

namespace {
constexpr double kPi = std::numbers::pi;
}

void TimeSignal::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("sample interval dt must be > 0");
    if (samples.empty()) throw std::invalid_argument("signal must hold at least one sample");
}

double fwhm_to_a(double fwhm) {
    if (!(fwhm > 0.0)) throw std::invalid_argument("FWHM must be > 0");
    return 1.0 / (std::sqrt(2.0) * kPi * fwhm);
}

void NoiseSpec::validate() const {
    if (target_snr.has_value() == noise_power.has_value())
        throw std::invalid_argument("set exactly one of target_snr / noise_power");
    if (target_snr && !(*target_snr > 0.0)) throw std::invalid_argument("target_snr must be > 0");
    if (noise_power && *noise_power < 0.0) throw std::invalid_argument("noise_power must be >= 0");
}

TimeSignal synthesize_fid(std::span<const analytic::LineSpec> lines, double dt, std::size_t n,
                          double global_phase) {
    if (lines.empty()) throw std::invalid_argument("need at least one line");
    if (n < 2) throw std::invalid_argument("need at least two samples");
    if (!(dt > 0.0)) throw std::invalid_argument("sample interval dt must be > 0");
    for (const auto& line : lines) line.validate();

    TimeSignal sig;
    sig.dt = dt;
    sig.samples.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double t = sig.time_at(m);
        std::complex<double> acc{0.0, 0.0};
        for (const auto& line : lines) {
            const double arg = line.phi + global_phase + 2.0 * kPi * line.center * t;
            acc += line.r * std::exp(-line.k * t) * std::complex<double>{std::cos(arg), std::sin(arg)};
        }
        sig.samples[m] = acc;
    }
    return sig;
}

TimeSignal add_white_noise(const TimeSignal& sig, const NoiseSpec& spec) {
    sig.validate();
    spec.validate();

    double variance = 0.0;
    if (spec.noise_power) {
        variance = *spec.noise_power;
    } else {
        // One calibration pass on the noiseless spectrum: the DFT real part
        // of white time-domain noise has per-bin variance n * sigma^2, so
        // sigma^2 = peak^2 / (target * n) puts the power ratio at target.
        const spectrum::Spectrum clean = spectrum::transform(sig);
        double peak = 0.0;
        for (const auto& b : clean.bins) peak = std::max(peak, std::abs(b.real()));
        const double n = static_cast<double>(sig.samples.size());
        variance = peak * peak / (*spec.target_snr * n);
    }
    if (variance == 0.0) return sig;

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
    TimeSignal out = sig;
    for (auto& s : out.samples) s += std::complex<double>{gauss(rng), gauss(rng)};
    return out;
}

TimeSignal compensate_decay(const TimeSignal& sig, double k_comp, double exp_bound) {
    sig.validate();
    if (!std::isfinite(k_comp)) throw std::invalid_argument("k_comp must be finite");
    TimeSignal out = sig;
    for (std::size_t m = 0; m < out.samples.size(); ++m) {
        const double arg = k_comp * out.time_at(m);
        if (std::abs(arg) > exp_bound) throw OverflowGuardError(arg);
        out.samples[m] *= std::exp(arg);
    }
    return out;
}

namespace {

// (a sin(t/a) - t cos(t/a)) / t^3 with the removable singularity at t = 0
// handled by its Taylor series (catastrophic cancellation otherwise).
double window_kernel(double t, double a) {
    const double x = t / a;
    // below |x| = 1e-2 the direct formula loses ~8 digits to cancellation;
    // the three-term series is accurate to ~2e-17 there
    if (std::abs(x) < 1e-2)
        return (1.0 / 3.0 - x * x / 30.0 + x * x * x * x / 840.0) / (a * a);
    return (a * std::sin(x) - t * std::cos(x)) / (t * t * t);
}

} // namespace

double window_value(double t, const WindowParams& p) {
    if (!(p.a > 0.0)) throw std::invalid_argument("window scale a must be > 0");
    return p.s * (2.0 * std::sqrt(2.0) * p.a / std::sqrt(kPi)) * window_kernel(t, p.a);
}

double normalized_window_value(double t, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("window scale a must be > 0");
    if (t == 0.0) return 1.0;
    return 3.0 * a * a * window_kernel(t, a);
}

std::vector<double> window_roots(double a, int count) {
    if (!(a > 0.0)) throw std::invalid_argument("window scale a must be > 0");
    if (count < 1) throw std::invalid_argument("count must be >= 1");

    // Roots of tan x = x, i.e. of g(x) = sin x - x cos x, one per bracket
    // ((n - 1/2) pi, (n + 1/2) pi); g alternates sign at the bracket ends.
    auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        double lo = (n - 0.5) * kPi;
        double hi = (n + 0.5) * kPi;
        double glo = g(lo);
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double gm = g(mid);
            if ((gm > 0.0) == (glo > 0.0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(a * 0.5 * (lo + hi));
    }
    return roots;
}

TimeSignal apply_window(const TimeSignal& sig, double a) {
    sig.validate();
    TimeSignal out = sig;
    for (std::size_t m = 0; m < out.samples.size(); ++m)
        out.samples[m] *= normalized_window_value(out.time_at(m), a);
    return out;
}

TimeSignal apply_gaussian_window(const TimeSignal& sig, double tau) {
    sig.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("gaussian window tau must be > 0");
    TimeSignal out = sig;
    for (std::size_t m = 0; m < out.samples.size(); ++m) {
        const double x = out.time_at(m) / tau;
        out.samples[m] *= std::exp(-x * x);
    }
    return out;
}

TimeSignal truncate_at_root(const TimeSignal& sig, double a, int root_index) {
    sig.validate();
    const double root_time = window_roots(a, root_index).back();
    if (root_time > sig.duration()) throw RootBeyondSignalError();
    TimeSignal out;
    out.dt = sig.dt;
    out.t0 = sig.t0;
    for (std::size_t m = 0; m < sig.samples.size() && sig.time_at(m) <= root_time; ++m)
        out.samples.push_back(sig.samples[m]);
    return out;
}

TimeSignal zero_fill(const TimeSignal& sig, std::size_t target_len) {
    sig.validate();
    if (target_len < sig.samples.size()) throw ShrinkForbiddenError();
    TimeSignal out = sig;
    out.samples.resize(target_len, {0.0, 0.0});
    return out;
}

} // namespace newt::timedomain
