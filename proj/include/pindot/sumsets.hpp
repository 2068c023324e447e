#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pindot/pinned.hpp"
#include "pindot/plane.hpp"

namespace pindot {

/// Duplicate-free set of field elements, members ascending. Immutable.
class ScalarSet {
public:
    explicit ScalarSet(Field field) : field_(std::move(field)) {}

    /// Sorts and deduplicates; throws on out-of-range codes.
    ScalarSet(Field field, std::vector<Elem> members);

    const Field& field() const { return field_; }
    std::span<const Elem> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Elem a) const;
    bool operator==(const ScalarSet& o) const { return field_ == o.field_ && members_ == o.members_; }

private:
    Field field_;
    std::vector<Elem> members_;
};

/// { s + t : s in S, t in T }. Empty when either side is empty.
ScalarSet sumset(const ScalarSet& S, const ScalarSet& T);

/// { a * b : a in A, b in B }.
ScalarSet productset(const ScalarSet& A, const ScalarSet& B);

/// S + S + ... + S with n >= 1 terms.
ScalarSet iterated_sumset(const ScalarSet& S, std::uint32_t n);

/// True iff S + S covers the whole field; guaranteed whenever 2|S| > q.
bool complete_pair_check(const ScalarSet& S);

/// { u + v : u in E, v in F } as a point set.
PointSet sumset(const PointSet& E, const PointSet& F);

/// A x A.
PointSet cartesian_square(const ScalarSet& A);

/// Pinned pair (x, y) of E whose dot set S = E.(y-x) satisfies S + S = F,
/// hence (E+E).(y-x) = F. The coverage is verified by direct computation
/// before returning. Requires |E| > q.
struct PinnedSumWitness {
    Point x, y;
};
PinnedSumWitness full_field_pinned_sum(const PointSet& E);

/// The extremal construction: over GF(p^2), the Cartesian square of the
/// prime subfield. |E| = q exactly, and every pinned dot set over x != y
/// has size p = sqrt(q), so the |E| > q threshold cannot be weakened.
PointSet subfield_example(std::uint32_t p);

/// For symmetric A (-A = A) with |A| > sqrt(q): checks that the pinned sum
/// construction on A x A covers the field and, independently, that the
/// 8-fold sumset of AA is the whole field. Throws on asymmetric A or
/// |A| <= sqrt(q).
bool glibichuk_check(const ScalarSet& A);

/// { x in F* : x^m = 1 } for m | q-1; exactly m elements.
ScalarSet mult_subgroup(const Field& f, std::uint32_t m);

/// |AA + AA| next to the reference curve min(q, |A|^3/q); subgroup flags
/// AA = A. Measurement only, asserts nothing.
struct ProductSumStats {
    std::uint64_t card_aa_aa = 0;
    std::uint64_t hi_bound = 0;
    bool subgroup = false;
};
ProductSumStats aa_plus_aa_stats(const ScalarSet& A);

}  // namespace pindot
