#include "newt/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace newt::analytic {

namespace {
constexpr double kPi = std::numbers::pi;

double gaussian_sigma(double k) { return k / (2.0 * kPi * std::sqrt(2.0 * std::numbers::ln2)); }
} // namespace

void LineSpec::validate() const {
    if (!(r > 0.0)) throw NonpositiveRadiusError();
    if (!(k > 0.0)) throw NonpositiveDampingError();
}

double absorption(double nu, double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    const double w = 2.0 * kPi * nu;
    return 2.0 * r * k / (w * w + k * k);
}

double dispersion(double nu, double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    const double w = 2.0 * kPi * nu;
    return 2.0 * r * w / (w * w + k * k);
}

double phased_line(double omega, const LineSpec& spec) {
    spec.validate();
    if (spec.shape != Shape::lorentzian)
        throw ShapeMismatchError("phased_line is defined for Lorentzian lines only");
    const double w0 = 2.0 * kPi * spec.center;
    const double d = omega - w0;
    const double denom = d * d + spec.k * spec.k;
    return spec.r * std::cos(spec.phi) * spec.k / denom - spec.r * std::sin(spec.phi) * d / denom;
}

double gaussian(double u, double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    const double s = gaussian_sigma(k);
    return (2.0 * r / k) * std::exp(-u * u / (2.0 * s * s));
}

double truncated_parabola(double u, double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    const double val = -4.0 * kPi * kPi * r * u * u / (k * k * k) + 2.0 * r / k;
    return val > 0.0 ? val : 0.0;
}

double parabola_target(double omega, double s, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("line-width scale a must be > 0");
    const double val = 1.0 - (a * omega) * (a * omega);
    return val > 0.0 ? s * val : 0.0;
}

double evaluate(const LineSpec& spec, double nu) {
    spec.validate();
    const double d = nu - spec.center;
    const double cphi = std::cos(spec.phi);
    const double sphi = std::sin(spec.phi);
    switch (spec.shape) {
        case Shape::lorentzian:
            return cphi * absorption(d, spec.r, spec.k) - sphi * dispersion(d, spec.r, spec.k);
        case Shape::gaussian:
            if (std::abs(sphi) > 1e-12)
                throw ShapeMismatchError("gaussian lines support phi = 0 mod pi only");
            return cphi * gaussian(d, spec.r, spec.k);
        case Shape::truncated_parabola:
            if (std::abs(sphi) > 1e-12)
                throw ShapeMismatchError("parabolic lines support phi = 0 mod pi only");
            return cphi * truncated_parabola(d, spec.r, spec.k);
    }
    return 0.0;
}

double core_fraction(const LineSpec& spec, double delta) {
    spec.validate();
    if (!(delta > 0.0)) throw std::invalid_argument("window width delta must be > 0");
    if (spec.phi != 0.0) throw NonAbsorptiveError();

    const double x = delta / 2.0;
    switch (spec.shape) {
        case Shape::lorentzian:
            // total area is the analytic value r; windowed integral of A is
            // (2r/pi) arctan(2 pi x / k).
            return (2.0 / kPi) * std::atan(2.0 * kPi * x / spec.k);
        case Shape::gaussian:
            return std::erf(x / (std::sqrt(2.0) * gaussian_sigma(spec.k)));
        case Shape::truncated_parabola: {
            const double w = spec.k / (std::sqrt(2.0) * kPi);  // support half-width
            if (x >= w) return 1.0;
            const double t = x / w;
            return 1.5 * t - 0.5 * t * t * t;
        }
    }
    return 0.0;
}

SampledLine sum_lines(std::span<const LineSpec> specs, double grid_lo, double grid_hi,
                      std::size_t n_points) {
    if (specs.empty()) throw std::invalid_argument("sum_lines needs at least one line");
    if (n_points < 2 || !(grid_hi > grid_lo)) throw std::invalid_argument("invalid grid");
    SampledLine line;
    line.grid.resize(n_points);
    line.values.assign(n_points, 0.0);
    const double h = (grid_hi - grid_lo) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        line.grid[i] = grid_lo + h * static_cast<double>(i);
        for (const LineSpec& spec : specs) line.values[i] += evaluate(spec, line.grid[i]);
    }
    return line;
}

namespace {

// Quadratic vertex through three equally spaced samples; returns the offset
// from the middle abscissa and the interpolated value.
std::pair<double, double> refine_vertex(double h, double ym, double y0, double yp) {
    const double denom = ym - 2.0 * y0 + yp;
    if (denom == 0.0) return {0.0, y0};
    const double off = 0.5 * (ym - yp) / denom * h;
    const double val = y0 - 0.125 * (ym - yp) * (ym - yp) / denom;
    return {off, val};
}

} // namespace

std::vector<Extremum> find_extrema(const SampledLine& line) {
    if (line.values.size() < 3) throw std::invalid_argument("need at least 3 samples");
    std::vector<Extremum> out;
    const double h = line.grid[1] - line.grid[0];
    for (std::size_t i = 1; i + 1 < line.values.size(); ++i) {
        const double ym = line.values[i - 1];
        const double y0 = line.values[i];
        const double yp = line.values[i + 1];
        const bool max = y0 > ym && y0 > yp;
        const bool min = y0 < ym && y0 < yp;
        if (!max && !min) continue;
        const auto [off, val] = refine_vertex(h, ym, y0, yp);
        out.push_back({line.grid[i] + off, val, max});
    }
    return out;
}

double measure_fwhm(const SampledLine& line) {
    const auto it = std::max_element(line.values.begin(), line.values.end());
    const double peak = *it;
    if (!(peak > 0.0)) throw std::invalid_argument("global maximum must be above baseline 0");
    const std::size_t ip = static_cast<std::size_t>(it - line.values.begin());
    const double half = peak / 2.0;

    auto cross = [&](bool leftward) -> double {
        std::size_t i = ip;
        while (true) {
            const std::size_t j = leftward ? i - 1 : i + 1;
            if ((leftward && i == 0) || (!leftward && j >= line.values.size()))
                throw NoHalfCrossingError();
            if (line.values[j] <= half) {
                // linear interpolation between samples j and i
                const double frac = (line.values[i] - half) / (line.values[i] - line.values[j]);
                return line.grid[i] + frac * (line.grid[j] - line.grid[i]);
            }
            i = j;
        }
    };
    return cross(false) - cross(true);
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// tol is absolute and halves with each bisection (Lyness criterion).
double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = (a + m) / 2.0;
    const double rm = (m + b) / 2.0;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
    const double m = (a + b) / 2.0;
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    // coarse magnitude scan fixes the scale of the absolute tolerance
    double scale = std::abs(whole);
    for (int i = 0; i <= 64; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / 64.0;
        scale = std::max(scale, std::abs(f(x)) * (b - a) / 64.0);
    }
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, rel_tol * (scale + 1e-300), 50);
}

} // namespace newt::analytic
