#pragma once

// Newton hyperbolism transform of plane curves: converts Bloch-vector
// circles (and scaled ellipses) into phase-sensitive Lorentzian-family
// spectral lines. All operations are pure.

#include <cstddef>
#include <vector>

#include "newt/errors.hpp"

namespace newt::geometry {

inline constexpr double kYEpsilon = 1e-12;

/// sgn with the convention sgn(0) = +1.
inline double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

enum class GyroSign { positive, negative };

struct Point2 {
    double u = 0.0;
    double v = 0.0;
};

/// Transverse Bloch components of one observed transition.
struct TransitionState {
    double mx = 0.0;
    double my = 0.0;
    double k = 1.0;       // damping constant, Hz
    double center = 0.0;  // line center frequency, Hz
    GyroSign gyro_sign = GyroSign::positive;

    double radius() const;  // r = sqrt(mx^2 + my^2) / 2
    double phase() const;   // angle of (mx, my) in (-pi, pi]
    void validate() const;  // throws ZeroVectorError / NonpositiveDampingError
};

enum class EllipseKind { A, B, C, D };

enum class Stage { raw_circle, detector_mapped, mirrored, transformed, physical };

struct CurveMeta {
    TransitionState state;
    double power = 1.0;
    EllipseKind kind = EllipseKind::A;
    std::size_t n_theta = 0;
    std::size_t dropped = 0;  // singular theta samples removed
    std::size_t clipped = 0;  // physical-stage tail samples removed
};

struct PlaneCurve {
    std::vector<Point2> points;
    Stage stage = Stage::raw_circle;
    CurveMeta meta;
};

/// Unit-radius circle with the scaled Bloch vector (length 2) as diameter,
/// sampled at n_theta uniform angles in [0, 2pi).
PlaneCurve bloch_to_unit_circle(const TransitionState& state, std::size_t n_theta);

/// Detector-axis swap: the absorption component goes to the ordinate. For a
/// negative gyromagnetic ratio the abscissa is additionally negated.
Point2 detector_map(Point2 p, GyroSign gyro_sign);

/// Reflect the lower half-plane across the vertical axis.
Point2 half_plane_mirror(Point2 p);

/// Generalized hyperbolism (x, y) -> (sgn(y) * eta * x / |y|^power, y).
/// power = 1, eta = 1 is the classic Newton transform; power = 0, eta = 1
/// reduces to half_plane_mirror.
Point2 hyperbolism(Point2 p, double power, double eta);

/// Step-6 physical scaling: u -> k*u/(2pi) [Hz], v -> r*v/k.
Point2 physical_scale(Point2 p, double r, double k);

/// Parameterized ellipse point (kinds A-D conserve different Lorentzian
/// properties: FWHM, amplitude, integral area).
Point2 ellipse_point(EllipseKind kind, double theta, double phi, double r, double k);

/// Continuous parametric transform of the kind ellipse; power = 0 gives the
/// mirrored ellipse, power = 1 the Lorentzian for every kind.
Point2 continuous_transform_point(EllipseKind kind, double theta, double phi,
                                  double r, double k, double power);

/// Closed-form parametric point of the fully transformed (power = 1) Lorentzian.
Point2 lorentzian_curve_point(double theta, double phi, double r, double k);

/// Finite-support semi-ellipse replacement of the dispersion Lorentzian.
Point2 dispersion_semi_ellipse_point(double theta, double phi, double r, double k);

/// Piriform quartic, the power = -1 special case.
Point2 piriform_point(double theta, double eta_x, double eta_y);

struct ProtocolOptions {
    std::size_t n_theta = 2048;
    double eta = 1.0;
    bool clip_tails = true;
    double u_max_factor = 20.0;  // clip |u - center| beyond factor * FWHM
};

/// Runs the full six-step protocol and returns every intermediate stage:
/// raw-circle, detector-mapped, mirrored, transformed, physical. Singular
/// theta samples are dropped and counted in meta.
std::vector<PlaneCurve> run_protocol(const TransitionState& state, double power,
                                     EllipseKind kind, const ProtocolOptions& options = {});

/// Signed polygon (shoelace) area of a closed sampled curve.
double shoelace_area(const std::vector<Point2>& points);

} // namespace newt::geometry
