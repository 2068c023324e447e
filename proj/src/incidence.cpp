#include "pindot/incidence.hpp"

namespace pindot {

namespace {

// Multiplicities of dot(u, v_theta) over u in E, indexed by value code.
std::vector<std::uint32_t> dot_buckets(const PointSet& E, Direction theta) {
    const Field& f = E.field();
    const Point v = direction_vector(f, theta);
    std::vector<std::uint32_t> buckets(f.q(), 0);
    for (const Point& u : E.members()) ++buckets[dot(f, u, v)];
    return buckets;
}

}  // namespace

std::uint64_t incidence_count(const PointSet& E, Line line) {
    const Field& f = E.field();
    std::uint64_t n = 0;
    for (const Point& u : E.members())
        if (on_line(f, u, line)) ++n;
    return n;
}

std::uint64_t directional_second_moment(const PointSet& E, Direction theta) {
    std::uint64_t sum = 0;
    for (std::uint32_t b : dot_buckets(E, theta)) sum += static_cast<std::uint64_t>(b) * b;
    return sum;
}

std::uint64_t total_second_moment(const PointSet& E) {
    std::uint64_t total = 0;
    for (const Direction& theta : all_directions(E.field())) total += directional_second_moment(E, theta);
    return total;
}

std::uint64_t first_moment(const PointSet& E) {
    std::uint64_t total = 0;
    for (const Direction& theta : all_directions(E.field()))
        for (std::uint32_t b : dot_buckets(E, theta)) total += b;
    return total;
}

MomentProfile moment_profile(const PointSet& E) {
    MomentProfile profile;
    for (const Direction& theta : all_directions(E.field())) {
        const std::uint64_t m = directional_second_moment(E, theta);
        profile.per_direction.emplace_back(theta, m);
        profile.total += m;
    }
    return profile;
}

}  // namespace pindot
