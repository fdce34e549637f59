#include "qwalk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr double kPlotSize = 520.0;
constexpr double kMarginLeft = 70.0, kMarginTop = 24.0, kMarginBottom = 56.0,
                 kMarginRight = 30.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::ofstream open_svg(const std::string& path, double width, double height) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot write to '" + path + "'");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return out;
}

void text(std::ofstream& out, double x, double y, const std::string& s,
          const char* anchor = "middle", const char* extra = "") {
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" "
        << "font-size=\"13\" text-anchor=\"" << anchor << "\" " << extra << ">" << s
        << "</text>\n";
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string format_level(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

void write_heatmap(const Distribution& dist, const std::string& path) {
    const int t = dist.spec.steps;
    const int l = dist.spec.extent();
    const double cell = kPlotSize / l;
    const double width = kMarginLeft + kPlotSize + kMarginRight;
    const double height = kMarginTop + kPlotSize + kMarginBottom;
    std::ofstream out = open_svg(path, width, height);

    const double pmax = std::max(dist.probabilities.maxCoeff(), 1e-300);
    for (int x = -t; x <= t; ++x)
        for (int y = -t; y <= t; ++y) {
            const double v = dist.at(x, y) / pmax;
            const int gray = static_cast<int>(std::lround(255.0 * (1.0 - v)));
            if (gray == 255) continue;  // background is already white
            out << "<rect x=\"" << num(kMarginLeft + (x + t) * cell) << "\" y=\""
                << num(kMarginTop + (t - y) * cell) << "\" width=\"" << num(cell)
                << "\" height=\"" << num(cell) << "\" fill=\"rgb(" << gray << ',' << gray << ','
                << gray << ")\"/>\n";
        }

    out << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop) << "\" width=\""
        << num(kPlotSize) << "\" height=\"" << num(kPlotSize)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const int v : {-t, 0, t}) {
        const double cx = kMarginLeft + (v + t + 0.5) * cell;
        const double cy = kMarginTop + (t - v + 0.5) * cell;
        text(out, cx, kMarginTop + kPlotSize + 18, std::to_string(v));
        text(out, kMarginLeft - 8, cy + 4, std::to_string(v), "end");
    }
    text(out, kMarginLeft + kPlotSize / 2, height - 14, "x");
    text(out, kMarginLeft - 40, kMarginTop + kPlotSize / 2, "y");
    out << "</svg>\n";
    if (!out) throw config_error("write failed on '" + path + "'");
}

struct SeriesGroup {
    std::string legend;
    std::vector<std::pair<int, double>> points;
};

std::vector<SeriesGroup> collect_groups(const std::vector<LabeledTable>& tables) {
    std::vector<SeriesGroup> groups;
    for (const LabeledTable& lt : tables) {
        if (!lt.table) throw config_error("emit_svg_lines: missing table");
        for (const SeriesPoint& row : lt.table->series) {
            std::string legend = lt.label.empty() ? "" : lt.label + " ";
            legend += to_string(row.measure);
            legend += " p=" + format_level(row.p);
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const SeriesGroup& g) { return g.legend == legend; });
            if (it == groups.end()) {
                groups.push_back({legend, {}});
                it = groups.end() - 1;
            }
            if (row.value) it->points.emplace_back(row.step, *row.value);
        }
    }
    return groups;
}

void write_lines(const std::vector<LabeledTable>& tables, const std::string& path) {
    const std::vector<SeriesGroup> groups = collect_groups(tables);
    if (groups.empty()) throw config_error("emit_svg_lines: no series data");

    int step_max = 1;
    double v_min = 0.0, v_max = 0.0;
    for (const SeriesGroup& g : groups)
        for (const auto& [s, v] : g.points) {
            step_max = std::max(step_max, s);
            v_min = std::min(v_min, v);
            v_max = std::max(v_max, v);
        }
    if (v_max <= v_min) v_max = v_min + 1.0;
    v_max *= 1.05;

    const double width = kMarginLeft + kPlotSize + kMarginRight + 130;
    const double height = kMarginTop + kPlotSize * 0.7 + kMarginBottom;
    const double plot_h = kPlotSize * 0.7;
    std::ofstream out = open_svg(path, width, height);

    auto sx = [&](double s) { return kMarginLeft + s / step_max * kPlotSize; };
    auto sy = [&](double v) { return kMarginTop + (v_max - v) / (v_max - v_min) * plot_h; };

    out << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop) << "\" width=\""
        << num(kPlotSize) << "\" height=\"" << num(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const int stride = std::max(1, (step_max + 9) / 10);
    for (int s = 0; s <= step_max; s += stride) {
        text(out, sx(s), kMarginTop + plot_h + 18, std::to_string(s));
        out << "<line x1=\"" << num(sx(s)) << "\" y1=\"" << num(kMarginTop + plot_h)
            << "\" x2=\"" << num(sx(s)) << "\" y2=\"" << num(kMarginTop + plot_h + 4)
            << "\" stroke=\"black\"/>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double v = v_min + (v_max - v_min) * i / 4.0;
        text(out, kMarginLeft - 8, sy(v) + 4, short_num(v), "end");
        out << "<line x1=\"" << num(kMarginLeft - 4) << "\" y1=\"" << num(sy(v)) << "\" x2=\""
            << num(kMarginLeft) << "\" y2=\"" << num(sy(v)) << "\" stroke=\"black\"/>\n";
    }
    text(out, kMarginLeft + kPlotSize / 2, height - 14, "step");
    text(out, 16, kMarginTop + plot_h / 2, "value", "middle",
         ("transform=\"rotate(-90 16 " + num(kMarginTop + plot_h / 2) + ")\"").c_str());

    int color = 0;
    double legend_y = kMarginTop + 14;
    for (const SeriesGroup& g : groups) {
        const char* stroke = kPalette[color % kPaletteSize];
        ++color;
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [s, v] : g.points) out << num(sx(s)) << ',' << num(sy(v)) << ' ';
        out << "\"/>\n";
        const double lx = kMarginLeft + kPlotSize + 12;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(legend_y - 4) << "\" x2=\""
            << num(lx + 22) << "\" y2=\"" << num(legend_y - 4) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"1.6\"/>\n";
        text(out, lx + 28, legend_y, g.legend, "start");
        legend_y += 18;
    }
    out << "</svg>\n";
    if (!out) throw config_error("write failed on '" + path + "'");
}

}  // namespace

std::vector<std::string> emit_svg(const ResultTable& table, SvgKind kind,
                                  const std::string& path) {
    std::vector<std::string> written;
    if (kind == SvgKind::heatmap) {
        if (table.distributions.empty())
            throw config_error("emit_svg: heatmap requested but table has no distribution");
        if (table.distributions.size() == 1) {
            write_heatmap(table.distributions.front().second, path);
            written.push_back(path);
        } else {
            for (const auto& [p, dist] : table.distributions) {
                const std::string file = with_suffix(path, "_p" + format_level(p));
                write_heatmap(dist, file);
                written.push_back(file);
            }
        }
    } else {
        if (table.series.empty())
            throw config_error("emit_svg: line plot requested but table has no series");
        written.push_back(emit_svg_lines({{"", &table}}, path));
    }
    return written;
}

std::string emit_svg_lines(const std::vector<LabeledTable>& tables, const std::string& path) {
    write_lines(tables, path);
    return path;
}

}  // namespace qwalk
