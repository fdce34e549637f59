#include "qwalk/partial_trace.hpp"

#include <algorithm>
#include <array>

#include "qwalk/errors.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {
namespace {

constexpr std::array<Subsystem, 3> kCanonical = {Subsystem::coin, Subsystem::x, Subsystem::y};

int position_of(Subsystem s) {
    return s == Subsystem::coin ? 0 : (s == Subsystem::x ? 1 : 2);
}

// flat strides of the coin/x/y factors in the coin-major layout
std::array<Eigen::Index, 3> strides(const HilbertSpec& spec) {
    const Eigen::Index l = spec.extent();
    return {l * l, l, 1};
}

std::array<Eigen::Index, 3> factor_dims(const HilbertSpec& spec) {
    const Eigen::Index l = spec.extent();
    return {spec.coin_dim, l, l};
}

// Flat offsets contributed by one group of factors, enumerated row-major in
// the order given.  Offsets from disjoint factor groups add up to a full
// flat index.
std::vector<Eigen::Index> group_offsets(const HilbertSpec& spec,
                                        const std::vector<Subsystem>& group) {
    const auto dims = factor_dims(spec);
    const auto strd = strides(spec);
    std::vector<Eigen::Index> offsets{0};
    for (const Subsystem s : group) {
        const int f = position_of(s);
        std::vector<Eigen::Index> next;
        next.reserve(offsets.size() * dims[f]);
        for (const Eigen::Index base : offsets)
            for (Eigen::Index i = 0; i < dims[f]; ++i) next.push_back(base + i * strd[f]);
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

Eigen::Index subsystem_dim(const HilbertSpec& spec, Subsystem s) {
    return factor_dims(spec)[position_of(s)];
}

Eigen::Index subsystem_dim(const HilbertSpec& spec, const std::vector<Subsystem>& subs) {
    Eigen::Index d = 1;
    for (const Subsystem s : subs) d *= subsystem_dim(spec, s);
    return d;
}

Eigen::MatrixXcd reduce_subsystems(const DensityOperator& rho,
                                   const std::vector<Subsystem>& order) {
    if (order.empty()) throw config_error("reduce_subsystems: empty keep list");
    std::vector<Subsystem> sorted = order;
    std::sort(sorted.begin(), sorted.end(),
              [](Subsystem a, Subsystem b) { return position_of(a) < position_of(b); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw config_error("reduce_subsystems: repeated subsystem");

    std::vector<Subsystem> traced;
    for (const Subsystem s : kCanonical)
        if (std::find(order.begin(), order.end(), s) == order.end()) traced.push_back(s);

    const auto kept_off = group_offsets(rho.spec, order);
    const auto traced_off = group_offsets(rho.spec, traced);
    const Eigen::Index k = static_cast<Eigen::Index>(kept_off.size());

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c) {
            Complex sum = 0.0;
            for (const Eigen::Index t : traced_off)
                sum += rho.matrix(kept_off[r] + t, kept_off[c] + t);
            out(r, c) = sum;
        }
    return out;
}

Eigen::MatrixXcd partial_trace(const DensityOperator& rho, const std::vector<Subsystem>& keep) {
    std::vector<Subsystem> canonical;
    for (const Subsystem s : kCanonical)
        if (std::find(keep.begin(), keep.end(), s) != keep.end()) canonical.push_back(s);
    if (canonical.size() != keep.size())
        throw config_error("partial_trace: keep list has repeats or unknown entries");
    return reduce_subsystems(rho, canonical);
}

void check_bipartition(const Bipartition& split) {
    if (split.side_a.empty() || split.side_b.empty())
        throw config_error("bipartition: both sides must be nonempty");
    for (const Subsystem s : split.side_a)
        if (std::find(split.side_b.begin(), split.side_b.end(), s) != split.side_b.end())
            throw config_error("bipartition: sides must be disjoint");
}

}  // namespace qwalk
