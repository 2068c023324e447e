#pragma once

#include <cstdint>
#include <vector>

#include "pindot/incidence.hpp"
#include "pindot/plane.hpp"

namespace pindot {

/// Outcome of the pinned-pair search: x, y in E with y - x parallel to
/// v_direction, the selected direction's second moment, and the pinned dot
/// products dot_set(E, y - x). Whenever |E| > q the dot set covers more
/// than half the field: |dot_values| >= floor(q/2) + 1.
struct PinnedWitness {
    Point x, y;
    Direction direction;
    std::uint64_t moment = 0;
    std::vector<Elem> dot_values;  // ascending
};

struct DirectionChoice {
    Direction direction;
    std::uint64_t moment = 0;
};

/// The direction minimizing the directional second moment over all q+1
/// directions; ties broken by canonical direction order. The minimum never
/// exceeds (|E|^2 + q|E|) / (q+1). Throws on empty E.
DirectionChoice best_direction(const PointSet& E);

struct GoodVector {
    Point v;
    std::vector<Elem> dot_values;
};

/// Scans the directions determined by F in canonical order, picks the one of
/// minimal second moment against E, and returns the first member of F
/// realizing it, together with dot_set(E, v). Requires |E| > q; throws a
/// "no qualifying direction" error if no determined direction has
/// q * moment < 2|E|^2 (impossible when F determines all directions).
GoodVector good_vector(const PointSet& E, const PointSet& F);

struct PointPair {
    Point u, w;
};

/// Two distinct points of E whose difference is a nonzero multiple of
/// v_theta, found by bucketing E on the normal n_theta ((theta, -1) for
/// finite theta, (1, 0) for infinity). The first bucket in value order with
/// two or more points yields the lexicographically first pair. Always
/// succeeds when |E| > q; otherwise may throw "direction not determined".
PointPair pair_with_direction(const PointSet& E, Direction theta);

/// Which of the q+1 directions the difference set E - E determines.
/// When |E| > q every direction is determined and missing is empty.
struct DirectionCoverage {
    bool all_determined = false;
    std::vector<Direction> missing;  // canonical order
};
DirectionCoverage direction_coverage(const PointSet& E);

/// The full pinned-pair algorithm: take the best direction, extract a pair
/// of E realizing it from the difference set, and collect the pinned dot
/// products. Requires |E| > q (hard error below the threshold).
PinnedWitness pinned_pair(const PointSet& E);

}  // namespace pindot
