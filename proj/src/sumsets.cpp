#include "pindot/sumsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace pindot {

namespace {

std::vector<Elem> mask_to_members(const std::vector<bool>& mask) {
    std::vector<Elem> out;
    for (Elem t = 0; t < mask.size(); ++t)
        if (mask[t]) out.push_back(t);
    return out;
}

std::uint32_t isqrt(std::uint32_t n) {
    std::uint32_t r = 0;
    while ((r + 1) * static_cast<std::uint64_t>(r + 1) <= n) ++r;
    return r;
}

}  // namespace

ScalarSet::ScalarSet(Field field, std::vector<Elem> members) : field_(std::move(field)), members_(std::move(members)) {
    for (Elem a : members_) field_.check_elem(a, "member");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ScalarSet::contains(Elem a) const { return std::binary_search(members_.begin(), members_.end(), a); }

ScalarSet sumset(const ScalarSet& S, const ScalarSet& T) {
    require_same_field(S.field(), T.field(), "sumset");
    const Field& f = S.field();
    std::vector<bool> mask(f.q(), false);
    for (Elem s : S.members())
        for (Elem t : T.members()) mask[f.add(s, t)] = true;
    return ScalarSet(f, mask_to_members(mask));
}

ScalarSet productset(const ScalarSet& A, const ScalarSet& B) {
    require_same_field(A.field(), B.field(), "productset");
    const Field& f = A.field();
    std::vector<bool> mask(f.q(), false);
    for (Elem a : A.members())
        for (Elem b : B.members()) mask[f.mul(a, b)] = true;
    return ScalarSet(f, mask_to_members(mask));
}

ScalarSet iterated_sumset(const ScalarSet& S, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("iterated_sumset requires n >= 1");
    ScalarSet acc = S;
    for (std::uint32_t i = 1; i < n; ++i) acc = sumset(acc, S);
    return acc;
}

bool complete_pair_check(const ScalarSet& S) { return sumset(S, S).size() == S.field().q(); }

PointSet sumset(const PointSet& E, const PointSet& F) {
    require_same_field(E.field(), F.field(), "sumset");
    const Field& f = E.field();
    std::vector<Point> sums;
    sums.reserve(E.size() * F.size());
    for (const Point& u : E.members())
        for (const Point& v : F.members()) sums.push_back(Point{f.add(u.x, v.x), f.add(u.y, v.y)});
    return PointSet(f, std::move(sums));
}

PointSet cartesian_square(const ScalarSet& A) {
    std::vector<Point> pts;
    pts.reserve(A.size() * A.size());
    for (Elem a : A.members())
        for (Elem b : A.members()) pts.push_back(Point{a, b});
    return PointSet(A.field(), std::move(pts));
}

PinnedSumWitness full_field_pinned_sum(const PointSet& E) {
    const Field& f = E.field();
    const PinnedWitness witness = pinned_pair(E);  // enforces |E| > q
    const ScalarSet S(f, witness.dot_values);
    if (sumset(S, S).size() != f.q())
        throw std::logic_error("full_field_pinned_sum: S + S failed to cover the field");
    return PinnedSumWitness{witness.x, witness.y};
}

PointSet subfield_example(std::uint32_t p) {
    const Field f(p, 2);  // validates primality and the cardinality cap
    return cartesian_square(ScalarSet(f, f.subfield_elements(1)));
}

bool glibichuk_check(const ScalarSet& A) {
    const Field& f = A.field();
    for (Elem a : A.members())
        if (!A.contains(f.neg(a))) throw std::invalid_argument("glibichuk_check requires a symmetric set (-A = A)");
    if (A.size() <= isqrt(f.q()))
        throw std::invalid_argument("glibichuk_check requires |A| > sqrt(q), got |A| = " + std::to_string(A.size()) +
                                    " over GF(" + std::to_string(f.q()) + ")");

    const PointSet E = cartesian_square(A);
    const PinnedSumWitness pinned = full_field_pinned_sum(E);
    const Point d{f.sub(pinned.y.x, pinned.x.x), f.sub(pinned.y.y, pinned.x.y)};
    const bool pinned_sum_covers = dot_set(sumset(E, E), d).size() == f.q();

    const ScalarSet AA = productset(A, A);
    const bool eightfold_covers = iterated_sumset(AA, 8).size() == f.q();
    return pinned_sum_covers && eightfold_covers;
}

ScalarSet mult_subgroup(const Field& f, std::uint32_t m) {
    if (m < 1 || (f.q() - 1) % m != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(m) + " does not divide q-1 = " +
                                    std::to_string(f.q() - 1));
    std::vector<Elem> members;
    for (Elem x = 1; x < f.q(); ++x)
        if (f.pow(x, m) == 1) members.push_back(x);
    return ScalarSet(f, std::move(members));
}

ProductSumStats aa_plus_aa_stats(const ScalarSet& A) {
    if (A.empty()) throw std::invalid_argument("aa_plus_aa_stats requires a nonempty set");
    const Field& f = A.field();
    const ScalarSet AA = productset(A, A);
    ProductSumStats stats;
    stats.card_aa_aa = sumset(AA, AA).size();
    const std::uint64_t cubed = static_cast<std::uint64_t>(A.size()) * A.size() * A.size();
    stats.hi_bound = std::min<std::uint64_t>(f.q(), cubed / f.q());
    stats.subgroup = AA == A;
    return stats;
}

}  // namespace pindot
