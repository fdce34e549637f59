#include "qwalk/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

std::string format_level(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot write to '" + path + "'");
    return out;
}

void write_distribution(const Distribution& dist, const std::string& path) {
    validate(dist, 1e-10);
    std::ofstream out = open_for_write(path);
    out << "x,y,p\n";
    const int t = dist.spec.steps;
    for (int x = -t; x <= t; ++x)
        for (int y = -t; y <= t; ++y)
            out << x << ',' << y << ',' << format_value(dist.at(x, y)) << '\n';
    if (!out) throw config_error("write failed on '" + path + "'");
}

void write_series(const std::vector<SeriesPoint>& series, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "step,p,measure,value\n";
    for (const SeriesPoint& row : series) {
        out << row.step << ',' << format_level(row.p) << ',' << to_string(row.measure) << ',';
        if (row.value) out << format_value(*row.value);
        out << '\n';
    }
    if (!out) throw config_error("write failed on '" + path + "'");
}

}  // namespace

std::vector<std::string> emit_csv(const ResultTable& table, const std::string& path) {
    if (table.series.empty() && table.distributions.empty())
        throw config_error("emit_csv: empty result table");
    std::vector<std::string> written;
    if (!table.series.empty()) {
        write_series(table.series, path);
        written.push_back(path);
    }
    if (!table.distributions.empty()) {
        const std::string base = table.series.empty() ? path : with_suffix(path, "_dist");
        if (table.distributions.size() == 1) {
            write_distribution(table.distributions.front().second, base);
            written.push_back(base);
        } else {
            for (const auto& [p, dist] : table.distributions) {
                const std::string file = with_suffix(base, "_p" + format_level(p));
                write_distribution(dist, file);
                written.push_back(file);
            }
        }
    }
    return written;
}

double csv_probability_sum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "x,y,p")
        throw config_error("'" + path + "' is not a distribution table");
    double sum = 0.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto last = line.rfind(',');
        if (last == std::string::npos) throw config_error("malformed row in '" + path + "'");
        sum += std::stod(line.substr(last + 1));
    }
    return sum;
}

}  // namespace qwalk
