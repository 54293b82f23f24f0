#include "newt/geometry.hpp"

#include <cmath>
#include <numbers>

namespace newt::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
}

double TransitionState::radius() const { return std::sqrt(mx * mx + my * my) / 2.0; }

double TransitionState::phase() const { return std::atan2(my, mx); }

void TransitionState::validate() const {
    if (mx == 0.0 && my == 0.0) throw ZeroVectorError();
    if (!(k > 0.0)) throw NonpositiveDampingError();
    if (!std::isfinite(mx) || !std::isfinite(my) || !std::isfinite(k) || !std::isfinite(center))
        throw std::invalid_argument("transition state has non-finite fields");
}

PlaneCurve bloch_to_unit_circle(const TransitionState& state, std::size_t n_theta) {
    state.validate();
    if (n_theta < 8) throw std::invalid_argument("n_theta must be >= 8");

    // Scaled vector has length 2 and is the circle diameter, so the circle
    // center is the unit vector (cos phi, sin phi).
    const double phi = state.phase();
    PlaneCurve curve;
    curve.stage = Stage::raw_circle;
    curve.meta.state = state;
    curve.meta.n_theta = n_theta;
    curve.points.reserve(n_theta);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n_theta);
        curve.points.push_back({std::cos(phi) + std::cos(theta), std::sin(phi) + std::sin(theta)});
    }
    return curve;
}

Point2 detector_map(Point2 p, GyroSign gyro_sign) {
    const double x = gyro_sign == GyroSign::negative ? -p.v : p.v;
    return {x, p.u};
}

Point2 half_plane_mirror(Point2 p) { return {sgn(p.v) * p.u, p.v}; }

Point2 hyperbolism(Point2 p, double power, double eta) {
    if (power > 0.0 && std::abs(p.v) < kYEpsilon) throw SingularOrdinateError(p.v);
    return {sgn(p.v) * eta * p.u / std::pow(std::abs(p.v), power), p.v};
}

Point2 physical_scale(Point2 p, double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    return {k * p.u / (2.0 * kPi), r * p.v / k};
}

namespace {

// Shared abscissa/ordinate scales of the Table-1 ellipses relative to the
// dimensionless (sin(phi)+cos(theta), cos(phi)+sin(theta)) circle.
struct KindScales {
    double su;
    double sv;
};

KindScales ellipse_scales(EllipseKind kind, double r, double k) {
    switch (kind) {
        case EllipseKind::A: return {k / (2.0 * kPi), r / k};
        case EllipseKind::B: return {r / (2.0 * kPi), r / k};
        case EllipseKind::C: return {k / kPi, r / k};
        case EllipseKind::D: return {k / (2.0 * kPi), 2.0 * r / k};
    }
    return {};
}

// After the dimensionless hyperbolism u = sgn(c) * s / |c|^p, the physical
// coordinates of the kind ellipse's continuous transform reduce to one
// affine scale per axis (the eta_E factors of the transform family).
KindScales transform_scales(EllipseKind kind, double r, double k, double power) {
    switch (kind) {
        case EllipseKind::A: return {k / (2.0 * kPi), r / k};
        case EllipseKind::B: return {(r / (2.0 * kPi)) * std::pow(k / r, power), r / k};
        case EllipseKind::C: return {k / (std::pow(2.0, power) * kPi), r / k};
        case EllipseKind::D: return {k / (2.0 * kPi), std::pow(2.0, 1.0 - power) * r / k};
    }
    return {};
}

void check_rk(double r, double k) {
    if (!(k > 0.0)) throw NonpositiveDampingError();
    if (!(r > 0.0)) throw NonpositiveRadiusError();
}

} // namespace

Point2 ellipse_point(EllipseKind kind, double theta, double phi, double r, double k) {
    check_rk(r, k);
    const auto [su, sv] = ellipse_scales(kind, r, k);
    return {su * (std::sin(phi) + std::cos(theta)), sv * (std::cos(phi) + std::sin(theta))};
}

Point2 continuous_transform_point(EllipseKind kind, double theta, double phi,
                                  double r, double k, double power) {
    check_rk(r, k);
    const double s = std::sin(phi) + std::cos(theta);
    const double c = std::cos(phi) + std::sin(theta);
    if (power > 0.0 && std::abs(c) < kYEpsilon) throw SingularOrdinateError(c);
    const auto [su, sv] = transform_scales(kind, r, k, power);
    return {su * sgn(c) * s / std::pow(std::abs(c), power), sv * c};
}

Point2 lorentzian_curve_point(double theta, double phi, double r, double k) {
    check_rk(r, k);
    const double s = std::sin(phi) + std::cos(theta);
    const double c = std::cos(phi) + std::sin(theta);
    if (std::abs(c) < kYEpsilon) throw SingularOrdinateError(c);
    return {(k / (2.0 * kPi)) * s / c, (r / k) * c};
}

Point2 dispersion_semi_ellipse_point(double theta, double phi, double r, double k) {
    check_rk(r, k);
    const double st = std::sin(theta);
    return {(k / (2.0 * kPi)) * sgn(st) * (std::sin(phi) + std::cos(theta)), (r / k) * st};
}

Point2 piriform_point(double theta, double eta_x, double eta_y) {
    const double w = 1.0 + std::sin(theta);
    return {eta_x * std::cos(theta) * w, eta_y * w};
}

std::vector<PlaneCurve> run_protocol(const TransitionState& state, double power,
                                     EllipseKind kind, const ProtocolOptions& options) {
    state.validate();
    const double r = state.radius();
    const double k = state.k;

    std::vector<PlaneCurve> stages;
    stages.reserve(5);

    stages.push_back(bloch_to_unit_circle(state, options.n_theta));
    stages.front().meta.power = power;
    stages.front().meta.kind = kind;

    PlaneCurve mapped;
    mapped.stage = Stage::detector_mapped;
    mapped.meta = stages.front().meta;
    for (const Point2& p : stages.front().points)
        mapped.points.push_back(detector_map(p, state.gyro_sign));
    stages.push_back(std::move(mapped));

    PlaneCurve mirrored;
    mirrored.stage = Stage::mirrored;
    mirrored.meta = stages.back().meta;
    for (const Point2& p : stages.back().points) mirrored.points.push_back(half_plane_mirror(p));
    stages.push_back(std::move(mirrored));

    // Hyperbolism on the detector-mapped points; the sgn factor inside the
    // transform is exactly the Step-4 mirror, so the result matches applying
    // Step 5 to the mirrored stage.
    PlaneCurve transformed;
    transformed.stage = Stage::transformed;
    transformed.meta = stages[1].meta;
    for (const Point2& p : stages[1].points) {
        if (power > 0.0 && std::abs(p.v) < kYEpsilon) {
            ++transformed.meta.dropped;
            continue;
        }
        transformed.points.push_back(hyperbolism(p, power, options.eta));
    }
    stages.push_back(transformed);

    PlaneCurve physical;
    physical.stage = Stage::physical;
    physical.meta = transformed.meta;
    const auto [su, sv] = transform_scales(kind, r, k, power);
    const double u_max = options.u_max_factor * k / kPi;
    for (const Point2& p : transformed.points) {
        const Point2 q{su * p.u + state.center, sv * p.v};
        if (options.clip_tails && std::abs(q.u - state.center) > u_max) {
            ++physical.meta.clipped;
            continue;
        }
        physical.points.push_back(q);
    }
    if (physical.points.empty())
        throw std::runtime_error("protocol produced an empty physical curve");
    stages.push_back(std::move(physical));
    return stages;
}

double shoelace_area(const std::vector<Point2>& points) {
    double twice_area = 0.0;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = points[i];
        const Point2& b = points[(i + 1) % n];
        twice_area += a.u * b.v - b.u * a.v;
    }
    return twice_area / 2.0;
}

} // namespace newt::geometry
