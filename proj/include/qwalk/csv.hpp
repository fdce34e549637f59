#pragma once

#include <string>
#include <vector>

#include "qwalk/experiment.hpp"

namespace qwalk {

// Writes the table as UTF-8, newline-terminated CSV with 12 fixed decimals.
// Distribution tables use the header `x,y,p` with integer coordinates;
// series tables use `step,p,measure,value` (value empty when undefined).
// Multiple distributions in one table go to per-level files suffixed
// `_p<level>`; a table carrying both kinds writes the distributions with a
// `_dist` suffix.  Returns the paths written.
std::vector<std::string> emit_csv(const ResultTable& table, const std::string& path);

// Minimal reader for round-trip checks: sums the probability column of a
// distribution CSV.
double csv_probability_sum(const std::string& path);

}  // namespace qwalk
