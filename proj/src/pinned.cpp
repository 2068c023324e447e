#include "pindot/pinned.hpp"

#include <algorithm>
#include <stdexcept>

namespace pindot {

namespace {

void require_above_threshold(const PointSet& E, const char* what) {
    if (E.size() <= E.field().q())
        throw std::invalid_argument(std::string(what) + " requires |E| > q, got |E| = " + std::to_string(E.size()) +
                                    " over GF(" + std::to_string(E.field().q()) + ")");
}

// Nonzero vector orthogonal to v_theta: (theta, -1) finite, (1, 0) infinite.
Point normal_vector(const Field& f, Direction theta) {
    if (theta.is_infinite()) return Point{1, 0};
    return Point{theta.theta(), f.neg(1)};
}

}  // namespace

DirectionChoice best_direction(const PointSet& E) {
    if (E.empty()) throw std::invalid_argument("best_direction requires a nonempty set");
    DirectionChoice best{Direction::finite(0), 0};
    bool first = true;
    for (const Direction& theta : all_directions(E.field())) {
        const std::uint64_t m = directional_second_moment(E, theta);
        if (first || m < best.moment) {  // strict: scanning canonically keeps the first minimizer
            best = DirectionChoice{theta, m};
            first = false;
        }
    }
    return best;
}

GoodVector good_vector(const PointSet& E, const PointSet& F) {
    require_same_field(E.field(), F.field(), "good_vector");
    require_above_threshold(E, "good_vector");

    const std::uint64_t size = E.size();
    DirectionChoice best;
    bool found = false;
    for (const Direction& theta : directions_determined(F)) {
        const std::uint64_t m = directional_second_moment(E, theta);
        if (!found || m < best.moment) {
            best = DirectionChoice{theta, m};
            found = true;
        }
    }
    if (!found || best.moment * E.field().q() >= 2 * size * size)
        throw std::runtime_error("good_vector: no qualifying direction determined by F");

    for (const Point& v : F.members()) {
        if (v.x == 0 && v.y == 0) continue;
        if (direction_of(F.field(), v) == best.direction) return GoodVector{v, dot_set(E, v)};
    }
    throw std::logic_error("good_vector: determined direction lost its representative");  // unreachable
}

PointPair pair_with_direction(const PointSet& E, Direction theta) {
    if (E.empty()) throw std::invalid_argument("pair_with_direction requires a nonempty set");
    const Field& f = E.field();
    const Point n = normal_vector(f, theta);

    // Points share a bucket exactly when their difference is parallel to
    // v_theta. Members arrive in canonical order, so each bucket's first two
    // entries are the lexicographically first pair.
    std::vector<Point> first(f.q()), second(f.q());
    std::vector<std::uint8_t> count(f.q(), 0);
    for (const Point& u : E.members()) {
        const Elem t = dot(f, u, n);
        if (count[t] == 0) {
            first[t] = u;
            count[t] = 1;
        } else if (count[t] == 1) {
            second[t] = u;
            count[t] = 2;
        }
    }
    for (Elem t = 0; t < f.q(); ++t)
        if (count[t] == 2) return PointPair{first[t], second[t]};
    throw std::runtime_error("pair_with_direction: direction not determined by E - E");
}

DirectionCoverage direction_coverage(const PointSet& E) {
    const Field& f = E.field();
    const std::vector<Direction> determined = directions_determined(difference_set(E));
    DirectionCoverage coverage;
    std::size_t i = 0;
    for (const Direction& theta : all_directions(f)) {
        if (i < determined.size() && determined[i] == theta)
            ++i;
        else
            coverage.missing.push_back(theta);
    }
    coverage.all_determined = coverage.missing.empty();
    return coverage;
}

PinnedWitness pinned_pair(const PointSet& E) {
    require_above_threshold(E, "pinned_pair");
    const Field& f = E.field();

    const DirectionChoice choice = best_direction(E);
    const PointPair pair = pair_with_direction(E, choice.direction);  // succeeds: q buckets, |E| > q points

    PinnedWitness witness;
    witness.x = pair.u;
    witness.y = pair.w;
    witness.direction = choice.direction;
    witness.moment = choice.moment;
    const Point d{f.sub(witness.y.x, witness.x.x), f.sub(witness.y.y, witness.x.y)};
    witness.dot_values = dot_set(E, d);
    return witness;
}

}  // namespace pindot
