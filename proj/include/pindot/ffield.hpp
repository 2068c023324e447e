#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pindot {

/// Canonical element encoding: the polynomial sum(c_i X^i) is the integer
/// sum(c_i p^i), so elements of GF(p^k) are exactly the codes 0..q-1.
/// Code 0 is the additive identity, code 1 the multiplicative identity.
using Elem = std::uint32_t;

/// Exact arithmetic for GF(p^k).
///
/// The modulus polynomial is canonical: the monic irreducible of degree k
/// whose coefficient tuple (c_{k-1},...,c_0) is lexicographically smallest,
/// found by increasing search with exhaustive trial division. Two Field
/// objects with equal (p, k) therefore represent the identical field model.
///
/// Multiplication, inverse and pow run on log/antilog tables built once at
/// construction; mul_reduce() is the table-free reference path kept for
/// cross-checking. Instances are immutable and cheap to copy (the tables are
/// shared), and every operation is a pure function safe for concurrent use.
class Field {
public:
    /// Cardinality cap; keeps every intermediate exact in native integers.
    static constexpr std::uint64_t kMaxCardinality = 1u << 20;

    /// Builds GF(p^k). Throws std::invalid_argument for non-prime p, k < 1,
    /// or p^k above the cap.
    Field(std::uint32_t p, std::uint32_t k);

    /// Parses the "p,k" field designation used in files and CLI flags.
    static Field parse(std::string_view text);

    std::uint32_t p() const { return t_->p; }
    std::uint32_t k() const { return t_->k; }
    std::uint32_t q() const { return t_->q; }

    /// Modulus coefficients c_0..c_k (ascending degree, c_k = 1).
    /// For k = 1 this is the unused convention X, i.e. {0, 1}.
    const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

    /// The "p,k" designation.
    std::string label() const;

    bool operator==(const Field& o) const { return p() == o.p() && k() == o.k(); }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error for a = 0.
    Elem inv(Elem a) const;
    /// a^e for nonnegative e; pow(0, 0) = 1.
    Elem pow(Elem a, std::uint64_t e) const;

    /// Reference multiplication: schoolbook polynomial product reduced by the
    /// modulus. Agrees with mul() everywhere (tested); not used in hot paths.
    Elem mul_reduce(Elem a, Elem b) const;

    /// All q element codes in increasing order.
    std::vector<Elem> elements() const;

    /// The p^d elements fixed by x -> x^(p^d), i.e. the subfield GF(p^d),
    /// in increasing code order. Throws std::invalid_argument unless d | k.
    std::vector<Elem> subfield_elements(std::uint32_t d) const;

    /// Validates an element code, naming `what` in the error.
    void check_elem(Elem a, const char* what) const;

private:
    struct Tables {
        std::uint32_t p, k, q;
        std::vector<std::uint32_t> modulus;  // ascending degree, size k+1
        std::vector<Elem> exp;               // exp[i] = g^i, i in 0..q-2
        std::vector<std::uint32_t> log;      // log[exp[i]] = i; log[0] unused
    };

    // Polynomial multiplication with reduction; works before tables exist.
    static Elem mul_with(const Tables& t, Elem a, Elem b);

    std::shared_ptr<const Tables> t_;
};

/// True for 2 and every odd prime; deterministic trial division.
bool is_prime(std::uint64_t n);

}  // namespace pindot
