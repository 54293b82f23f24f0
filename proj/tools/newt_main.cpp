// newt — Newton hyperbolism transform toolkit for FT-spectroscopy line shapes.
//
// Subcommands:
//   transform  geometric transform protocol and parametric curve family
//   simulate   FID synthesis + apodization pipeline + spectrum
//   analyze    shape comparisons, core fractions, overlap study
//   compare    apodization strategies side by side (clean and noisy)

#include <cmath>
#include <complex>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "newt/analytic.hpp"
#include "newt/geometry.hpp"
#include "newt/io.hpp"
#include "newt/spectrum.hpp"
#include "newt/timedomain.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace newt;

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonOpts {
    std::string out_dir = "out";
    bool svg = true;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out_dir, "output directory");
    cmd->add_flag("--svg,!--no-svg", c.svg, "emit SVG plots");
    cmd->add_option("--seed", c.seed, "RNG seed");
}

fs::path ensure_out(const CommonOpts& c) {
    fs::path dir(c.out_dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> parse_sweep(const std::string& s) {
    // "start:stop:step", inclusive of stop up to rounding
    std::vector<double> vals;
    double start, stop, step;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0.0)
        throw CLI::ValidationError("sweep", "expected start:stop:step with step > 0");
    for (double v = start; v <= stop + step * 1e-9; v += step) vals.push_back(v);
    return vals;
}

std::string num_tag(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    std::string s(buf);
    for (char& ch : s)
        if (ch == '.') ch = 'p';
    return s;
}

io::Table curve_table(const std::vector<geometry::Point2>& pts) {
    io::Table t;
    t.header = {"u", "v"};
    for (const auto& p : pts) t.rows.push_back({p.u, p.v});
    return t;
}

const char* stage_name(geometry::Stage s) {
    switch (s) {
        case geometry::Stage::raw_circle: return "raw_circle";
        case geometry::Stage::detector_mapped: return "detector_mapped";
        case geometry::Stage::mirrored: return "mirrored";
        case geometry::Stage::transformed: return "transformed";
        case geometry::Stage::physical: return "physical";
    }
    return "unknown";
}

const std::vector<std::string> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                           "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
                                           "#17becf"};

// ---------------------------------------------------------------- transform

struct TransformOpts {
    CommonOpts common;
    double mx = 2.0, my = 0.0;
    double damping = 1.0, center = 0.0;
    bool negative_gyro = false;
    std::string kind_str = "A";
    std::vector<double> p_values;
    std::string p_sweep;
    std::size_t n_theta = 2048;
};

geometry::EllipseKind parse_kind(const std::string& s) {
    if (s == "A") return geometry::EllipseKind::A;
    if (s == "B") return geometry::EllipseKind::B;
    if (s == "C") return geometry::EllipseKind::C;
    if (s == "D") return geometry::EllipseKind::D;
    throw CLI::ValidationError("--kind", "must be one of A, B, C, D");
}

int run_transform(const TransformOpts& opt) {
    const fs::path dir = ensure_out(opt.common);
    const auto kind = parse_kind(opt.kind_str);

    geometry::TransitionState state;
    state.mx = opt.mx;
    state.my = opt.my;
    state.k = opt.damping;
    state.center = opt.center;
    state.gyro_sign =
        opt.negative_gyro ? geometry::GyroSign::negative : geometry::GyroSign::positive;

    std::vector<double> ps = opt.p_values;
    if (!opt.p_sweep.empty()) {
        auto sweep = parse_sweep(opt.p_sweep);
        ps.insert(ps.end(), sweep.begin(), sweep.end());
    }
    if (ps.empty()) ps.push_back(1.0);

    std::vector<io::SvgCurve> overlay;
    std::size_t color = 0;
    for (double p : ps) {
        const std::string tag = "p" + num_tag(p);
        if (p == -1.0) {
            // piriform quartic special case, scaled like the kind-A ellipse
            std::vector<geometry::Point2> pts;
            const double eta_x = state.k / (2.0 * kPi);
            const double eta_y = state.radius() / state.k;
            for (std::size_t i = 0; i < opt.n_theta; ++i) {
                const double theta = 2.0 * kPi * static_cast<double>(i) /
                                     static_cast<double>(opt.n_theta);
                pts.push_back(geometry::piriform_point(theta, eta_x, eta_y));
            }
            io::write_csv(dir / ("transform_" + tag + "_piriform.csv"), curve_table(pts));
            overlay.push_back({pts, kPalette[color++ % kPalette.size()], tag});
            continue;
        }
        geometry::ProtocolOptions popt;
        popt.n_theta = opt.n_theta;
        const auto stages = geometry::run_protocol(state, p, kind, popt);
        for (const auto& stage : stages) {
            io::write_csv(dir / ("transform_" + tag + "_" + stage_name(stage.stage) + ".csv"),
                          curve_table(stage.points));
        }
        overlay.push_back(
            {stages.back().points, kPalette[color++ % kPalette.size()], tag});
        if (opt.common.svg) {
            std::vector<io::SvgCurve> per_p;
            per_p.push_back({stages.back().points, kPalette[0], tag});
            io::write_svg(dir / ("transform_" + tag + ".svg"), per_p);
        }
    }
    if (opt.common.svg) io::write_svg(dir / "transform_sweep.svg", overlay);
    return 0;
}

// ----------------------------------------------------------------- simulate

struct PipelineResult {
    timedomain::TimeSignal fid;       // after noise, before compensation
    timedomain::TimeSignal processed; // compensated + windowed + truncated + zero-filled
    spectrum::Spectrum spec;
};

struct PipelineParams {
    analytic::LineSpec line;
    double dt = 1.0 / 8192.0;
    std::size_t n = 32768;
    double fwhm = 1.0;
    double k_comp = 0.0;  // 0 means "equal to line.k"
    int root = 3;
    std::size_t zerofill = 1u << 17;
    std::optional<double> target_snr;
    std::uint64_t seed = 0;
};

PipelineResult run_pipeline(const PipelineParams& pp) {
    PipelineResult res;
    const std::vector<analytic::LineSpec> lines{pp.line};
    res.fid = timedomain::synthesize_fid(lines, pp.dt, pp.n);
    if (pp.target_snr) {
        timedomain::NoiseSpec noise;
        noise.seed = pp.seed;
        noise.target_snr = pp.target_snr;
        res.fid = timedomain::add_white_noise(res.fid, noise);
    }
    const double k_comp = pp.k_comp > 0.0 ? pp.k_comp : pp.line.k;
    const double a = timedomain::fwhm_to_a(pp.fwhm);
    auto sig = timedomain::compensate_decay(res.fid, k_comp);
    sig = timedomain::apply_window(sig, a);
    sig = timedomain::truncate_at_root(sig, a, pp.root);
    sig = timedomain::zero_fill(sig, pp.zerofill);
    res.processed = sig;
    res.spec = spectrum::transform(sig);
    return res;
}

io::Table signal_table(const timedomain::TimeSignal& sig) {
    io::Table t;
    t.header = {"t", "re", "im"};
    for (std::size_t m = 0; m < sig.samples.size(); ++m)
        t.rows.push_back({sig.time_at(m), sig.samples[m].real(), sig.samples[m].imag()});
    return t;
}

io::Table spectrum_table(const spectrum::Spectrum& spec) {
    io::Table t;
    t.header = {"nu", "re", "im"};
    for (std::size_t j = 0; j < spec.bins.size(); ++j)
        t.rows.push_back({spec.freq_axis[j], spec.bins[j].real(), spec.bins[j].imag()});
    return t;
}

// Peak position, FWHM, S/N and RMS residual against the parabolic target.
json summarize_spectrum(const spectrum::Spectrum& spec, const PipelineParams& pp) {
    analytic::SampledLine line;
    const double center = pp.line.center;
    const double window = 5.0 * pp.fwhm;
    for (std::size_t j = 0; j < spec.bins.size(); ++j) {
        if (std::abs(spec.freq_axis[j] - center) <= window) {
            line.grid.push_back(spec.freq_axis[j]);
            line.values.push_back(spec.bins[j].real());
        }
    }

    json out;
    out["center_hz"] = center;
    double peak = 0.0, peak_pos = center;
    for (std::size_t i = 0; i < line.values.size(); ++i)
        if (line.values[i] > peak) {
            peak = line.values[i];
            peak_pos = line.grid[i];
        }
    out["peak_position_hz"] = peak_pos;
    out["peak_amplitude"] = peak;
    try {
        out["measured_fwhm_hz"] = analytic::measure_fwhm(line);
    } catch (const std::exception& e) {
        out["measured_fwhm_hz"] = nullptr;
    }

    // RMS residual of the peak-normalized real part against the parabola on
    // its support.
    const double a = timedomain::fwhm_to_a(pp.fwhm);
    double ss = 0.0;
    std::size_t count = 0;
    const double half_support = 1.0 / (std::sqrt(2.0) * kPi * a) / (2.0 * kPi);
    for (std::size_t i = 0; i < line.grid.size(); ++i) {
        const double d = line.grid[i] - center;
        if (std::abs(d) > half_support) continue;
        const double want = analytic::parabola_target(2.0 * kPi * d, 1.0, a);
        const double got = peak > 0.0 ? line.values[i] / peak : 0.0;
        ss += (got - want) * (got - want);
        ++count;
    }
    if (count)
        out["rms_residual_vs_parabola"] = std::sqrt(ss / static_cast<double>(count));
    else
        out["rms_residual_vs_parabola"] = nullptr;

    if (pp.target_snr) {
        spectrum::FreqInterval peak_iv{center - 5.0, center + 5.0};
        spectrum::FreqInterval noise_iv{center - 2000.0, center - 1000.0};
        out["snr"] = spectrum::measure_snr(spec, peak_iv, noise_iv);
        out["target_snr"] = *pp.target_snr;
    }
    return out;
}

struct SimulateOpts {
    CommonOpts common;
    double center = 4000.0;
    double damping = kPi;
    double r = 1.0;
    double phi = 0.0;
    double rate = 8192.0;
    std::size_t n = 32768;
    double fwhm = 1.0;
    double k_comp = 0.0;
    std::string kcomp_sweep;
    int root = 3;
    std::string root_sweep;
    std::size_t zerofill = 1u << 17;
    double snr = 0.0;
};

int run_simulate(const SimulateOpts& opt) {
    const fs::path dir = ensure_out(opt.common);

    PipelineParams base;
    base.line = {analytic::Shape::lorentzian, opt.r, opt.damping, opt.phi, opt.center};
    base.dt = 1.0 / opt.rate;
    base.n = opt.n;
    base.fwhm = opt.fwhm;
    base.k_comp = opt.k_comp;
    base.root = opt.root;
    base.zerofill = opt.zerofill;
    base.seed = opt.common.seed;
    if (opt.snr > 0.0) base.target_snr = opt.snr;

    std::vector<PipelineParams> runs;
    std::vector<std::string> tags;
    if (!opt.root_sweep.empty()) {
        for (double rv : parse_sweep(opt.root_sweep)) {
            PipelineParams pp = base;
            pp.root = static_cast<int>(std::lround(rv));
            runs.push_back(pp);
            tags.push_back("root" + std::to_string(pp.root));
        }
    } else if (!opt.kcomp_sweep.empty()) {
        for (double kc : parse_sweep(opt.kcomp_sweep)) {
            PipelineParams pp = base;
            pp.k_comp = kc;
            runs.push_back(pp);
            tags.push_back("kcomp" + num_tag(kc));
        }
    } else {
        runs.push_back(base);
        tags.push_back("run");
    }

    std::vector<io::SvgCurve> overlay;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto res = run_pipeline(runs[i]);
        io::write_csv(dir / ("fid_" + tags[i] + ".csv"), signal_table(res.fid));
        io::write_csv(dir / ("spectrum_" + tags[i] + ".csv"), spectrum_table(res.spec));
        json summary = summarize_spectrum(res.spec, runs[i]);
        summary["root_index"] = runs[i].root;
        summary["k_comp_hz"] = runs[i].k_comp > 0.0 ? runs[i].k_comp : runs[i].line.k;
        io::write_text(dir / ("summary_" + tags[i] + ".json"), summary.dump(2) + "\n");

        if (opt.common.svg) {
            std::vector<geometry::Point2> pts;
            for (std::size_t j = 0; j < res.spec.bins.size(); ++j)
                if (std::abs(res.spec.freq_axis[j] - opt.center) <= 5.0 * opt.fwhm)
                    pts.push_back({res.spec.freq_axis[j], res.spec.bins[j].real()});
            overlay.push_back({pts, kPalette[i % kPalette.size()], tags[i]});
        }
    }
    if (opt.common.svg) io::write_svg(dir / "spectra.svg", overlay);
    return 0;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeOpts {
    CommonOpts common;
    double fwhm = 1.0;
    double delta_max = 4.0;
    double delta_step = 0.05;
    double separation = 0.3;
};

int run_analyze(const AnalyzeOpts& opt) {
    const fs::path dir = ensure_out(opt.common);
    const double k = kPi * opt.fwhm;  // damping giving the requested FWHM
    const double r = 1.0;

    analytic::LineSpec lor{analytic::Shape::lorentzian, r, k, 0.0, 0.0};
    analytic::LineSpec gau{analytic::Shape::gaussian, r, k, 0.0, 0.0};
    analytic::LineSpec par{analytic::Shape::truncated_parabola, r, k, 0.0, 0.0};

    // shape comparison on a +-4 FWHM window
    {
        io::Table t;
        t.header = {"u", "lorentzian", "gaussian", "parabola"};
        const double lim = 4.0 * opt.fwhm;
        for (int i = 0; i <= 2000; ++i) {
            const double u = -lim + 2.0 * lim * i / 2000.0;
            t.rows.push_back({u, analytic::absorption(u, r, k), analytic::gaussian(u, r, k),
                              analytic::truncated_parabola(u, r, k)});
        }
        io::write_csv(dir / "shapes.csv", t);
    }

    // core fraction table
    {
        io::Table t;
        t.header = {"delta", "chi_lorentzian", "chi_gaussian", "chi_parabola"};
        for (double d = opt.delta_step; d <= opt.delta_max + 1e-12; d += opt.delta_step)
            t.rows.push_back({d, analytic::core_fraction(lor, d), analytic::core_fraction(gau, d),
                              analytic::core_fraction(par, d)});
        io::write_csv(dir / "core_fractions.csv", t);
    }

    // overlap study: doublets at the requested separation
    json report;
    auto doublet_distance = [&](analytic::Shape shape) {
        std::vector<analytic::LineSpec> specs = {
            {shape, r, k, 0.0, -opt.separation / 2.0},
            {shape, r, k, 0.0, +opt.separation / 2.0},
        };
        auto line = analytic::sum_lines(specs, -2.0 * opt.fwhm - opt.separation,
                                        2.0 * opt.fwhm + opt.separation, 40001);
        io::write_csv(dir / (shape == analytic::Shape::lorentzian ? "doublet_lorentzian.csv"
                                                                  : "doublet_parabola.csv"),
                      [&] {
                          io::Table t;
                          t.header = {"u", "v"};
                          for (std::size_t i = 0; i < line.grid.size(); ++i)
                              t.rows.push_back({line.grid[i], line.values[i]});
                          return t;
                      }());
        const auto ext = analytic::find_extrema(line);
        std::vector<double> maxima;
        for (const auto& e : ext)
            if (e.is_maximum) maxima.push_back(e.position);
        if (maxima.size() < 2) return 0.0;
        return maxima.back() - maxima.front();
    };
    report["true_separation_hz"] = opt.separation;
    report["lorentzian_measured_separation_hz"] = doublet_distance(analytic::Shape::lorentzian);
    report["parabola_measured_separation_hz"] =
        doublet_distance(analytic::Shape::truncated_parabola);

    // pairwise overlap integral of a parabola triplet separated by
    // slightly more than 2 sqrt(2) FWHM: must vanish
    {
        const double sep = 2.0 * std::sqrt(2.0) * opt.fwhm * 1.001;
        const double half_support = k / (std::sqrt(2.0) * kPi);
        double overlap = 0.0;
        if (sep < 2.0 * half_support) {
            overlap = analytic::adaptive_simpson(
                [&](double u) {
                    return analytic::truncated_parabola(u + sep / 2.0, r, k) *
                           analytic::truncated_parabola(u - sep / 2.0, r, k);
                },
                -half_support, half_support, 1e-8);
        }
        report["triplet_pairwise_overlap_integral"] = overlap;
    }
    io::write_text(dir / "overlap_report.json", report.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ compare

struct CompareOpts {
    CommonOpts common;
    double center = 4000.0;
    double damping = kPi;
    double rate = 8192.0;
    std::size_t n = 32768;
    double fwhm = 1.0;
    double gauss_tau = 0.6;
    std::size_t zerofill = 1u << 17;
    double snr = 10.0;
};

int run_compare(const CompareOpts& opt) {
    const fs::path dir = ensure_out(opt.common);
    const double dt = 1.0 / opt.rate;
    const std::vector<analytic::LineSpec> lines{
        {analytic::Shape::lorentzian, 1.0, opt.damping, 0.0, opt.center}};

    auto base = timedomain::synthesize_fid(lines, dt, opt.n);
    timedomain::NoiseSpec noise;
    noise.seed = opt.common.seed;
    noise.target_snr = opt.snr;
    auto noisy = timedomain::add_white_noise(base, noise);

    const double a = timedomain::fwhm_to_a(opt.fwhm);
    struct Variant {
        std::string name;
        timedomain::TimeSignal sig;
    };
    auto parabolic = [&](const timedomain::TimeSignal& in, int root) {
        auto s = timedomain::compensate_decay(in, opt.damping);
        s = timedomain::apply_window(s, a);
        return timedomain::truncate_at_root(s, a, root);
    };
    auto build = [&](const timedomain::TimeSignal& in) {
        std::vector<Variant> v;
        v.push_back({"raw", in});
        v.push_back({"gaussian", timedomain::apply_gaussian_window(
                                     timedomain::compensate_decay(in, opt.damping), opt.gauss_tau)});
        v.push_back({"parabolic_root1", parabolic(in, 1)});
        v.push_back({"parabolic_root2", parabolic(in, 2)});
        return v;
    };

    json table;
    for (const bool with_noise : {false, true}) {
        const auto variants = build(with_noise ? noisy : base);
        for (const auto& variant : variants) {
            auto filled = timedomain::zero_fill(variant.sig, opt.zerofill);
            auto spec = spectrum::transform(filled);
            const std::string tag =
                std::string(with_noise ? "noisy_" : "clean_") + variant.name;
            io::write_csv(dir / ("spectrum_" + tag + ".csv"), spectrum_table(spec));
            spectrum::FreqInterval peak_iv{opt.center - 5.0, opt.center + 5.0};
            spectrum::FreqInterval noise_iv{opt.center - 2000.0, opt.center - 1000.0};
            table[tag]["snr"] = spectrum::measure_snr(spec, peak_iv, noise_iv);
        }
    }
    io::write_text(dir / "comparison.json", table.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton hyperbolism transform toolkit for FT-spectroscopy line shapes"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.allow_config_extras(false);

    TransformOpts topt;
    auto* t = app.add_subcommand("transform", "run the geometric transform protocol");
    add_common(t, topt.common);
    t->add_option("--mx", topt.mx, "transverse Bloch component M_x");
    t->add_option("--my", topt.my, "transverse Bloch component M_y");
    t->add_option("--damping", topt.damping, "damping constant k, Hz");
    t->add_option("--center", topt.center, "line center frequency, Hz");
    t->add_flag("--negative-gyro", topt.negative_gyro, "negative gyromagnetic ratio convention");
    t->add_option("--kind", topt.kind_str, "ellipse parametrization A|B|C|D");
    t->add_option("--p", topt.p_values, "transform parameter(s)");
    t->add_option("--p-sweep", topt.p_sweep, "sweep start:stop:step");
    t->add_option("--ntheta", topt.n_theta, "theta samples per curve");

    SimulateOpts sopt;
    auto* s = app.add_subcommand("simulate", "FID + apodization pipeline + spectrum");
    add_common(s, sopt.common);
    s->add_option("--center", sopt.center, "line frequency, Hz");
    s->add_option("--damping", sopt.damping, "damping constant k, Hz");
    s->add_option("--r", sopt.r, "amplitude radius");
    s->add_option("--phi", sopt.phi, "line phase, rad");
    s->add_option("--rate", sopt.rate, "sampling rate, Hz");
    s->add_option("--n", sopt.n, "samples before zero fill");
    s->add_option("--fwhm", sopt.fwhm, "target parabolic FWHM, Hz");
    s->add_option("--kcomp", sopt.k_comp, "compensation constant, Hz (default: equals damping)");
    s->add_option("--kcomp-sweep", sopt.kcomp_sweep, "compensation sweep start:stop:step");
    s->add_option("--root", sopt.root, "window root index for truncation");
    s->add_option("--root-sweep", sopt.root_sweep, "root sweep start:stop:step");
    s->add_option("--zerofill", sopt.zerofill, "zero-fill length");
    s->add_option("--snr", sopt.snr, "target frequency-domain S/N (0 = noiseless)");

    AnalyzeOpts aopt;
    auto* a = app.add_subcommand("analyze", "shape comparison, core fractions, overlap study");
    add_common(a, aopt.common);
    a->add_option("--fwhm", aopt.fwhm, "line FWHM, Hz");
    a->add_option("--delta-max", aopt.delta_max, "largest core-fraction window");
    a->add_option("--delta-step", aopt.delta_step, "core-fraction window step");
    a->add_option("--separation", aopt.separation, "doublet separation, Hz");

    CompareOpts copt;
    auto* c = app.add_subcommand("compare", "apodization strategies side by side");
    add_common(c, copt.common);
    c->add_option("--center", copt.center, "line frequency, Hz");
    c->add_option("--damping", copt.damping, "damping constant k, Hz");
    c->add_option("--rate", copt.rate, "sampling rate, Hz");
    c->add_option("--n", copt.n, "samples before zero fill");
    c->add_option("--fwhm", copt.fwhm, "target parabolic FWHM, Hz");
    c->add_option("--gauss-tau", copt.gauss_tau, "gaussian window time constant, s");
    c->add_option("--zerofill", copt.zerofill, "zero-fill length");
    c->add_option("--snr", copt.snr, "target frequency-domain S/N");

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return run_transform(topt);
        if (s->parsed()) return run_simulate(sopt);
        if (a->parsed()) return run_analyze(aopt);
        if (c->parsed()) return run_compare(copt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
