#include "pindot/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace pindot {

void require_same_field(const Field& a, const Field& b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": field mismatch (GF(" + std::to_string(a.q()) +
                                    ") vs GF(" + std::to_string(b.q()) + "))");
}

PointSet::PointSet(Field field, std::vector<Point> points) : field_(std::move(field)), members_(std::move(points)) {
    for (const Point& pt : members_) {
        field_.check_elem(pt.x, "point x");
        field_.check_elem(pt.y, "point y");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PointSet::contains(Point pt) const { return std::binary_search(members_.begin(), members_.end(), pt); }

Elem dot(const Field& f, Point u, Point v) { return f.add(f.mul(u.x, v.x), f.mul(u.y, v.y)); }

Point direction_vector(const Field& f, Direction theta) {
    if (theta.is_infinite()) return Point{0, 1};
    f.check_elem(theta.theta(), "direction");
    return Point{1, theta.theta()};
}

Direction direction_of(const Field& f, Point v) {
    f.check_elem(v.x, "vector x");
    f.check_elem(v.y, "vector y");
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("the zero vector has no direction");
    if (v.x == 0) return Direction::infinity();
    return Direction::finite(f.mul(v.y, f.inv(v.x)));
}

std::vector<Direction> all_directions(const Field& f) {
    std::vector<Direction> out;
    out.reserve(f.q() + 1);
    for (Elem t = 0; t < f.q(); ++t) out.push_back(Direction::finite(t));
    out.push_back(Direction::infinity());
    return out;
}

bool on_line(const Field& f, Point w, Line line) { return dot(f, w, direction_vector(f, line.theta)) == line.t; }

Line line_through(const Field& f, Point u, Point w) {
    if (u == w) throw std::invalid_argument("line_through requires two distinct points");
    const Point d{f.sub(u.x, w.x), f.sub(u.y, w.y)};
    // v_theta must be orthogonal to the travel direction d.
    Direction theta = d.y == 0 ? Direction::infinity() : Direction::finite(f.neg(f.mul(d.x, f.inv(d.y))));
    return Line{theta, dot(f, u, direction_vector(f, theta))};
}

std::vector<Elem> dot_set(const PointSet& E, Point v) {
    const Field& f = E.field();
    f.check_elem(v.x, "vector x");
    f.check_elem(v.y, "vector y");
    std::vector<bool> seen(f.q(), false);
    for (const Point& u : E.members()) seen[dot(f, u, v)] = true;
    std::vector<Elem> out;
    for (Elem t = 0; t < f.q(); ++t)
        if (seen[t]) out.push_back(t);
    return out;
}

PointSet difference_set(const PointSet& E) {
    const Field& f = E.field();
    std::vector<Point> diffs;
    diffs.reserve(E.size() * E.size());
    for (const Point& u : E.members())
        for (const Point& w : E.members()) diffs.push_back(Point{f.sub(u.x, w.x), f.sub(u.y, w.y)});
    return PointSet(f, std::move(diffs));
}

std::vector<Direction> directions_determined(const PointSet& F) {
    const Field& f = F.field();
    std::vector<bool> seen(f.q() + 1, false);  // slot q = infinity
    for (const Point& v : F.members()) {
        if (v.x == 0 && v.y == 0) continue;
        const Direction d = direction_of(f, v);
        seen[d.is_infinite() ? f.q() : d.theta()] = true;
    }
    std::vector<Direction> out;
    for (Elem t = 0; t < f.q(); ++t)
        if (seen[t]) out.push_back(Direction::finite(t));
    if (seen[f.q()]) out.push_back(Direction::infinity());
    return out;
}

PlaneAudit audit_plane(const Field& f) {
    const std::uint32_t q = f.q();
    PlaneAudit audit;

    // Materialize each line as a sorted list of cell indices.
    std::vector<std::vector<std::uint32_t>> lines;
    lines.reserve(static_cast<std::size_t>(q) * (q + 1));
    for (const Direction& theta : all_directions(f)) {
        for (Elem t = 0; t < q; ++t) {
            std::vector<std::uint32_t> cells;
            for (Elem x = 0; x < q; ++x)
                for (Elem y = 0; y < q; ++y)
                    if (on_line(f, Point{x, y}, Line{theta, t})) cells.push_back(x * q + y);
            lines.push_back(std::move(cells));
        }
    }
    audit.line_count = lines.size();

    audit.line_sizes_ok = std::all_of(lines.begin(), lines.end(),
                                      [&](const auto& cells) { return cells.size() == q; });

    std::vector<std::vector<std::uint32_t>> sorted_lines = lines;
    std::sort(sorted_lines.begin(), sorted_lines.end());
    audit.lines_distinct =
        std::adjacent_find(sorted_lines.begin(), sorted_lines.end()) == sorted_lines.end() &&
        lines.size() == static_cast<std::size_t>(q) * (q + 1);

    std::vector<std::uint32_t> degree(static_cast<std::size_t>(q) * q, 0);
    for (const auto& cells : lines)
        for (std::uint32_t c : cells) ++degree[c];
    audit.point_degrees_ok = std::all_of(degree.begin(), degree.end(),
                                         [&](std::uint32_t d) { return d == q + 1; });

    audit.pair_uniqueness_ok = true;
    for (std::uint32_t a = 0; a < q * q && audit.pair_uniqueness_ok; ++a) {
        for (std::uint32_t b = a + 1; b < q * q; ++b) {
            std::uint32_t count = 0;
            for (const auto& cells : lines)
                if (std::binary_search(cells.begin(), cells.end(), a) &&
                    std::binary_search(cells.begin(), cells.end(), b))
                    ++count;
            if (count != 1) {
                audit.pair_uniqueness_ok = false;
                break;
            }
        }
    }
    return audit;
}

}  // namespace pindot
