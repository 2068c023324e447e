#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pindot/ffield.hpp"

namespace pindot {

/// A point of F_q^2. The default ordering (x code, then y code) is the
/// canonical order used for iteration and tie-breaking everywhere.
struct Point {
    Elem x = 0;
    Elem y = 0;
    auto operator<=>(const Point&) const = default;
};

/// An element of F union {infinity}. Finite directions order ascending by
/// code, infinity last; the representation makes that the natural ordering.
struct Direction {
    static constexpr std::uint32_t kInfinityCode = 0xffffffffu;

    std::uint32_t code = kInfinityCode;

    static Direction finite(Elem theta) { return Direction{theta}; }
    static Direction infinity() { return Direction{kInfinityCode}; }

    bool is_infinite() const { return code == kInfinityCode; }
    Elem theta() const { return code; }  // pre: finite

    auto operator<=>(const Direction&) const = default;
};

/// The line { w : w . v_theta = t }; the (theta, t) labels enumerate each of
/// the q(q+1) lines of F_q^2 exactly once.
struct Line {
    Direction theta;
    Elem t = 0;
    auto operator<=>(const Line&) const = default;
};

/// Duplicate-free set of points over one field. Immutable after
/// construction; members() iterates in canonical (x, y) code order.
class PointSet {
public:
    explicit PointSet(Field field) : field_(std::move(field)) {}

    /// Sorts and deduplicates; throws if any coordinate is out of range.
    PointSet(Field field, std::vector<Point> points);

    const Field& field() const { return field_; }
    std::span<const Point> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Point pt) const;

private:
    Field field_;
    std::vector<Point> members_;
};

/// u . v = u1 v1 + u2 v2.
Elem dot(const Field& f, Point u, Point v);

/// (1, theta) for finite theta, (0, 1) for infinity.
Point direction_vector(const Field& f, Direction theta);

/// Direction of a nonzero vector: Finite(y/x) when x != 0, else infinity.
/// Throws std::invalid_argument on the zero vector.
/// Round trip: direction_of(lambda * direction_vector(theta)) = theta.
Direction direction_of(const Field& f, Point v);

/// All q+1 directions in canonical order (finite codes ascending, then inf).
std::vector<Direction> all_directions(const Field& f);

bool on_line(const Field& f, Point w, Line line);

/// The unique line containing two distinct points; throws on equal points.
Line line_through(const Field& f, Point u, Point w);

/// { u . v : u in E }, ascending codes. Empty for empty E.
std::vector<Elem> dot_set(const PointSet& E, Point v);

/// { u - w : u, w in E }.
PointSet difference_set(const PointSet& E);

/// Directions of the nonzero members of F, canonical order, deduplicated.
/// The zero vector determines nothing.
std::vector<Direction> directions_determined(const PointSet& F);

/// Exhaustive audit of the (theta, t) line labeling: q(q+1) pairwise
/// distinct lines of q points each, every point on exactly q+1 of them,
/// every distinct point pair on exactly one. Intended for small q.
struct PlaneAudit {
    std::uint64_t line_count = 0;
    bool lines_distinct = false;
    bool line_sizes_ok = false;
    bool point_degrees_ok = false;
    bool pair_uniqueness_ok = false;
    bool ok() const { return lines_distinct && line_sizes_ok && point_degrees_ok && pair_uniqueness_ok; }
};
PlaneAudit audit_plane(const Field& f);

/// Throws std::invalid_argument unless both fields are the same (p, k).
void require_same_field(const Field& a, const Field& b, const char* what);

}  // namespace pindot
