#pragma once

#include <string>
#include <vector>

#include "qwalk/experiment.hpp"

namespace qwalk {

enum class SvgKind { heatmap, lines };

// Standalone vector images without any plotting dependency.  Heatmaps map
// probability onto a monotone grayscale ramp (white = 0, black = maximum);
// line plots draw one polyline per (label, noise level, measure) with a
// legend.  Undefined values leave gaps.
struct LabeledTable {
    std::string label;
    const ResultTable* table = nullptr;
};

// One heatmap file per distribution (suffixed `_p<level>` when the table
// holds several); one lines file for a series table.  Returns paths written.
std::vector<std::string> emit_svg(const ResultTable& table, SvgKind kind,
                                  const std::string& path);

// Overlay of several series tables in a single lines plot.
std::string emit_svg_lines(const std::vector<LabeledTable>& tables, const std::string& path);

}  // namespace qwalk
