#pragma once

#include <Eigen/Core>
#include <vector>

#include "qwalk/state.hpp"

namespace qwalk {

enum class Subsystem { coin, x, y };

// Two-sided split of (a subset of) the coin/x/y factors.  Factors listed in
// neither side are traced out before any bipartite quantity is computed.
struct Bipartition {
    std::vector<Subsystem> side_a;
    std::vector<Subsystem> side_b;

    static Bipartition particle_position() { return {{Subsystem::coin}, {Subsystem::x, Subsystem::y}}; }
    static Bipartition x_y() { return {{Subsystem::x}, {Subsystem::y}}; }
};

Eigen::Index subsystem_dim(const HilbertSpec& spec, Subsystem s);
Eigen::Index subsystem_dim(const HilbertSpec& spec, const std::vector<Subsystem>& subs);

// Reduced operator on the listed factors, with tensor ordering exactly as
// listed (so a straddling bipartition can be brought to A⊗B form).  The
// remaining factors are traced out.
Eigen::MatrixXcd reduce_subsystems(const DensityOperator& rho, const std::vector<Subsystem>& order);

// Partial trace keeping `keep` in canonical coin, x, y order.
Eigen::MatrixXcd partial_trace(const DensityOperator& rho, const std::vector<Subsystem>& keep);

void check_bipartition(const Bipartition& split);

}  // namespace qwalk
