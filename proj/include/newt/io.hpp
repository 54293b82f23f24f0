#pragma once

// CSV / SVG emitters used by the CLI and golden-file tests. CSV numbers are
// serialized with 17 significant digits so parse(emit(x)) round-trips.

#include <filesystem>
#include <string>
#include <vector>

#include "newt/geometry.hpp"

namespace newt::io {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string format_number(double x);

std::string emit_csv(const Table& table);
void write_csv(const std::filesystem::path& path, const Table& table);
Table parse_csv(const std::string& text);
Table read_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

struct SvgCurve {
    std::vector<geometry::Point2> points;
    std::string color = "#1f77b4";
    std::string label;
};

/// Minimal polyline plot: axis box, ticks, one polyline per curve.
std::string render_svg(const std::vector<SvgCurve>& curves, int width = 640, int height = 480);
void write_svg(const std::filesystem::path& path, const std::vector<SvgCurve>& curves,
               int width = 640, int height = 480);

} // namespace newt::io
