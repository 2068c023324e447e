#pragma once

#include <cstdint>
#include <vector>

#include "pindot/plane.hpp"

namespace pindot {

/// Per-direction second moments sum_t i(l_{theta,t})^2 and their total.
/// For any point set the total equals |E|^2 + q|E| exactly.
struct MomentProfile {
    std::vector<std::pair<Direction, std::uint64_t>> per_direction;  // canonical order
    std::uint64_t total = 0;
};

/// |l intersect E|.
std::uint64_t incidence_count(const PointSet& E, Line line);

/// sum_t i(l_{theta,t})^2, computed by bucketing the dot products of E
/// against v_theta and summing squared bucket sizes.
std::uint64_t directional_second_moment(const PointSet& E, Direction theta);

/// sum over all q(q+1) lines of i(l)^2; equals |E|^2 + q|E|.
std::uint64_t total_second_moment(const PointSet& E);

/// sum over all lines of i(l); equals |E|(q+1).
std::uint64_t first_moment(const PointSet& E);

MomentProfile moment_profile(const PointSet& E);

}  // namespace pindot
