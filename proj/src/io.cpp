#include "newt/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace newt::io {

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string emit_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    write_text(path, emit_csv(table));
}

Table parse_csv(const std::string& text) {
    Table table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        if (first) {
            while (std::getline(ls, field, ',')) table.header.push_back(field);
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ls, field, ',')) row.push_back(std::strtod(field.c_str(), nullptr));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_csv(ss.str());
}

std::string render_svg(const std::vector<SvgCurve>& curves, int width, int height) {
    double umin = std::numeric_limits<double>::infinity(), umax = -umin;
    double vmin = umin, vmax = -umin;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            umin = std::min(umin, p.u);
            umax = std::max(umax, p.u);
            vmin = std::min(vmin, p.v);
            vmax = std::max(vmax, p.v);
        }
    if (!(umax > umin)) umax = umin + 1.0;
    if (!(vmax > vmin)) vmax = vmin + 1.0;

    const double margin = 48.0;
    const double pw = width - 2.0 * margin;
    const double ph = height - 2.0 * margin;
    auto sx = [&](double u) { return margin + (u - umin) / (umax - umin) * pw; };
    auto sy = [&](double v) { return height - margin - (v - vmin) / (vmax - vmin) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
    s << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // four ticks per axis with labels
    for (int i = 0; i <= 4; ++i) {
        const double u = umin + (umax - umin) * i / 4.0;
        const double v = vmin + (vmax - vmin) * i / 4.0;
        s << "<line x1=\"" << sx(u) << "\" y1=\"" << (height - margin) << "\" x2=\"" << sx(u)
          << "\" y2=\"" << (height - margin + 5) << "\" stroke=\"#444\"/>\n";
        s << "<text x=\"" << sx(u) << "\" y=\"" << (height - margin + 18)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << static_cast<float>(u) << "</text>\n";
        s << "<line x1=\"" << (margin - 5) << "\" y1=\"" << sy(v) << "\" x2=\"" << margin
          << "\" y2=\"" << sy(v) << "\" stroke=\"#444\"/>\n";
        s << "<text x=\"" << (margin - 8) << "\" y=\"" << (sy(v) + 3)
          << "\" font-size=\"10\" text-anchor=\"end\">" << static_cast<float>(v) << "</text>\n";
    }

    int label_row = 0;
    for (const auto& c : curves) {
        if (c.points.empty()) continue;
        s << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.2\" points=\"";
        for (const auto& p : c.points) s << sx(p.u) << ',' << sy(p.v) << ' ';
        s << "\"/>\n";
        if (!c.label.empty()) {
            s << "<text x=\"" << (margin + 6) << "\" y=\"" << (margin + 14 + 14 * label_row)
              << "\" font-size=\"11\" fill=\"" << c.color << "\">" << c.label << "</text>\n";
            ++label_row;
        }
    }
    s << "</svg>\n";
    return s.str();
}

void write_svg(const std::filesystem::path& path, const std::vector<SvgCurve>& curves, int width,
               int height) {
    write_text(path, render_svg(curves, width, height));
}

} // namespace newt::io
