#include "pindot/pinned.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pindot/harness.hpp"

using namespace pindot;

namespace {

PointSet running_example() {
    Field f(3, 1);
    return PointSet(f, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

PointSet gf2_subset(unsigned mask) {
    Field f(2, 1);
    std::vector<Point> cells = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    std::vector<Point> pts;
    for (unsigned i = 0; i < 4; ++i)
        if (mask & (1u << i)) pts.push_back(cells[i]);
    return PointSet(f, pts);
}

void check_witness_shape(const PointSet& E, const PinnedWitness& w) {
    const Field& f = E.field();
    CHECK(E.contains(w.x));
    CHECK(E.contains(w.y));
    CHECK(w.x != w.y);
    Point d{f.sub(w.y.x, w.x.x), f.sub(w.y.y, w.x.y)};
    CHECK(direction_of(f, d) == w.direction);
    CHECK(w.dot_values == dot_set(E, d));
    CHECK(w.moment == directional_second_moment(E, w.direction));
}

}  // namespace

TEST_CASE("best direction of the running example, ties broken canonically") {
    auto [theta, moment] = best_direction(running_example());
    CHECK(theta == Direction::finite(1));  // ties with Finite(2) at moment 6
    CHECK(moment == 6);
}

TEST_CASE("best direction degenerate cases") {
    Field f(3, 1);
    auto single = best_direction(PointSet(f, {{2, 1}}));
    CHECK(single.direction == Direction::finite(0));
    CHECK(single.moment == 1);

    PointSet plane = sample_point_set(f, 9, 0, 0);
    auto full = best_direction(plane);
    CHECK(full.direction == Direction::finite(0));
    CHECK(full.moment == 27);  // q^3: every bucket holds a full line

    CHECK_THROWS_AS(best_direction(PointSet(f)), std::invalid_argument);
}

TEST_CASE("good_vector follows the minimal determined direction") {
    PointSet E = running_example();
    Field f(3, 1);

    GoodVector only(good_vector(E, PointSet(f, {{2, 2}})));
    CHECK(only.v == Point{2, 2});
    CHECK(only.dot_values == std::vector<Elem>{0, 1, 2});

    std::vector<Point> nonzero;
    for (Elem x = 0; x < 3; ++x)
        for (Elem y = 0; y < 3; ++y)
            if (x || y) nonzero.push_back({x, y});
    GoodVector all(good_vector(E, PointSet(f, nonzero)));
    CHECK(all.v == Point{1, 1});
    CHECK(all.dot_values.size() == 3);
}

TEST_CASE("good_vector errors") {
    Field f(3, 1);
    PointSet small(f, {{0, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(good_vector(small, PointSet(f, {{1, 1}})), std::invalid_argument);

    // E contains a full line normal to v_(1,0); that direction's moment 17
    // violates q * moment < 2|E|^2, and F determines nothing else.
    Field g(2, 2);
    PointSet line_plus(g, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}});
    PointSet F(g, {{1, 0}});
    CHECK_THROWS_WITH_AS(good_vector(line_plus, F), doctest::Contains("no qualifying direction"),
                         std::runtime_error);
}

TEST_CASE("pair_with_direction buckets on the normal vector") {
    PointSet E = running_example();
    PointPair pair = pair_with_direction(E, Direction::finite(0));
    CHECK(pair.u == Point{0, 0});
    CHECK(pair.w == Point{1, 0});

    Field f2(2, 1);
    PointSet column(f2, {{0, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(pair_with_direction(column, Direction::finite(0)),
                         doctest::Contains("not determined"), std::runtime_error);

    PointSet plane = sample_point_set(f2, 4, 0, 0);
    PointPair vert = pair_with_direction(plane, Direction::infinity());
    CHECK(vert.u == Point{0, 0});
    CHECK(vert.w == Point{0, 1});
}

TEST_CASE("pair difference is a nonzero multiple of the direction vector") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}, {5, 1}, {3, 2}, {13, 1}}) {
        Field f(p, k);
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
            PointSet E = sample_point_set(f, f.q() + 1, 0x9a9a, trial);
            for (Direction theta : all_directions(f)) {
                PointPair pair = pair_with_direction(E, theta);
                CHECK(pair.u != pair.w);
                CHECK(E.contains(pair.u));
                CHECK(E.contains(pair.w));
                Point d{f.sub(pair.w.x, pair.u.x), f.sub(pair.w.y, pair.u.y)};
                CHECK(direction_of(f, d) == theta);
            }
        }
    }
}

TEST_CASE("direction coverage of the difference set") {
    Field f(2, 1);
    PointSet column(f, {{0, 0}, {0, 1}});
    DirectionCoverage cov = direction_coverage(column);
    CHECK_FALSE(cov.all_determined);
    REQUIRE(cov.missing.size() == 2);
    CHECK(cov.missing[0] == Direction::finite(0));
    CHECK(cov.missing[1] == Direction::finite(1));

    for (unsigned mask = 0; mask < 16; ++mask) {
        PointSet E = gf2_subset(mask);
        if (E.size() < 3) continue;
        DirectionCoverage c = direction_coverage(E);
        CHECK(c.all_determined);
        CHECK(c.missing.empty());
    }

    DirectionCoverage none = direction_coverage(PointSet(f));
    CHECK_FALSE(none.all_determined);
    CHECK(none.missing.size() == 3);
}

TEST_CASE("pinned pair on the running example") {
    PinnedWitness w = pinned_pair(running_example());
    CHECK(w.direction == Direction::finite(1));
    CHECK(w.x == Point{0, 0});
    CHECK(w.y == Point{1, 1});
    CHECK(w.moment == 6);
    CHECK(w.dot_values == std::vector<Elem>{0, 1, 2});
    check_witness_shape(running_example(), w);
}

TEST_CASE("pinned pair full GF(2) plane") {
    Field f(2, 1);
    PointSet plane = gf2_subset(0xf);
    PinnedWitness w = pinned_pair(plane);
    CHECK(w.direction == Direction::finite(0));
    CHECK(w.x == Point{0, 0});
    CHECK(w.y == Point{1, 0});
    CHECK(w.dot_values == std::vector<Elem>{0, 1});
    check_witness_shape(plane, w);
}

TEST_CASE("pinned pair requires |E| > q") {
    Field f(3, 1);
    CHECK_THROWS_AS(pinned_pair(PointSet(f, {{0, 0}, {1, 0}, {0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(pinned_pair(PointSet(f)), std::invalid_argument);
}

TEST_CASE("exhaustive GF(2) ground truth") {
    for (unsigned mask = 0; mask < 16; ++mask) {
        PointSet E = gf2_subset(mask);
        if (E.size() <= 2) {
            CHECK_THROWS_AS(pinned_pair(E), std::invalid_argument);
            continue;
        }
        PinnedWitness w = pinned_pair(E);
        check_witness_shape(E, w);
        CHECK(w.dot_values.size() >= 2);  // floor(q/2) + 1
        // The witness meets the threshold whenever the brute-force optimum does.
        CHECK(oracles::max_pinned_dot_count(E) >= 2);
    }
}

TEST_CASE("threshold, average bound, and Cauchy-Schwarz chain on random sets") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        Field f(p, k);
        const std::uint64_t q = f.q();
        for (std::uint64_t sz : {q + 1, 2 * q}) {
            for (std::uint64_t trial = 0; trial < 15; ++trial) {
                PointSet E = sample_point_set(f, sz, 0x7777, trial + 100 * sz);
                PinnedWitness w = pinned_pair(E);
                check_witness_shape(E, w);
                const std::uint64_t n = E.size();
                CHECK(w.dot_values.size() >= q / 2 + 1);
                CHECK(w.moment * (q + 1) <= n * n + q * n);  // average argument
                CHECK(n * n <= w.moment * w.dot_values.size());  // Cauchy-Schwarz
                CHECK(q * w.moment < 2 * n * n);

                // A pinned dot set has the same size as the one against the
                // unit direction vector, by the scaling law.
                Point v = direction_vector(f, w.direction);
                CHECK(dot_set(E, v).size() == w.dot_values.size());
            }
        }
    }
}
