#pragma once

#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/noise.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Coin with a deterministic flip folded in: flip * coin.
CoinOperator absorb_bitflip(const CoinOperator& coin);
CoinOperator absorb_phaseflip(const CoinOperator& coin);

struct SymmetryReport {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Distribution-level checks that maximal per-step or per-axis flip noise on a
// two-state walk reproduces the noiseless evolution, and that the flips can
// be absorbed into the shift (and, for the coined walk, into the coin).
std::vector<SymmetryReport> verify_twostate_symmetry(const WalkScheme& scheme, int steps);

// Distribution-level check that the four-state flip channel at full strength
// does NOT reproduce the noiseless evolution: the report passes when the
// distributions differ by more than 0.01 and purity drops below 1 - 1e-6.
SymmetryReport verify_grover_breakdown(int k, int steps);

// A single deterministic flip (k = 1) on the four-state walk can be folded
// into the coin; the distributions agree within 1e-10.
SymmetryReport single_flip_absorption_check(int steps = 5);

}  // namespace qwalk
