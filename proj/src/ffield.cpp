#include "pindot/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace pindot {

namespace {

// Coefficients of a polynomial over F_p, ascending degree. Dense, may carry
// trailing zeros; degree() looks past them.
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// In-place remainder of a modulo the monic divisor b.
void mod_by(Poly& a, const Poly& b, std::uint32_t p) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const std::uint64_t f = a[da];  // b is monic, no leading inverse needed
        for (int i = 0; i <= db; ++i) {
            const std::uint32_t s = static_cast<std::uint32_t>(f * b[i] % p);
            a[da - db + i] = (a[da - db + i] + p - s) % p;
        }
    }
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
    Poly c(len, 0);
    for (std::uint32_t i = 0; i < len && code != 0; ++i) {
        c[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return c;
}

Elem code_from_poly(const Poly& c, std::uint32_t p, std::uint32_t len) {
    std::uint64_t code = 0;
    for (std::uint32_t i = len; i-- > 0;) code = code * p + (i < c.size() ? c[i] : 0);
    return static_cast<Elem>(code);
}

// Trial division by every monic polynomial of degree 1..k/2. For degree 2
// and 3 this reduces to the usual no-root test.
bool is_irreducible(const Poly& m, std::uint32_t p) {
    const int k = degree(m);
    for (int d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div = poly_from_code(v, p, static_cast<std::uint32_t>(d));
            div.push_back(1);  // monic of degree d
            Poly rem = m;
            mod_by(rem, div, p);
            if (degree(rem) < 0) return false;
        }
    }
    return true;
}

// Lexicographically smallest (c_{k-1},...,c_0) monic irreducible of degree k.
// The tuple order equals numeric order of the base-p value with c_{k-1} as
// the most significant digit.
Poly canonical_modulus(std::uint32_t p, std::uint32_t k, std::uint64_t q) {
    if (k == 1) return {0, 1};
    for (std::uint64_t v = 0; v < q; ++v) {
        Poly m(k + 1, 0);
        m[k] = 1;
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) {  // c_0 is the least significant digit of v
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable: one always exists
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxCardinality)
            throw std::invalid_argument("field cardinality " + std::to_string(p) + "^" + std::to_string(k) +
                                        " exceeds cap 2^20");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = canonical_modulus(p, k, q);

    // Find a generator of the multiplicative group: the smallest code whose
    // order is q-1, certified via the prime factors of q-1.
    const std::uint32_t n = t->q - 1;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = n;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    auto pow_reduce = [&](Elem a, std::uint32_t e) {
        Elem r = 1;
        Elem base = a;
        while (e != 0) {
            if (e & 1) r = mul_with(*t, r, base);
            base = mul_with(*t, base, base);
            e >>= 1;
        }
        return r;
    };
    Elem g = 1;
    if (n > 1) {
        for (g = 2; g < t->q; ++g) {
            bool ok = true;
            for (std::uint32_t r : prime_factors)
                if (pow_reduce(g, n / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
    }

    t->exp.resize(n);
    t->log.assign(t->q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = mul_with(*t, x, g);
    }

    t_ = std::move(t);
}

// Table-free polynomial multiplication against a Tables instance; used both
// during construction (before the tables exist) and as the reference path.
Elem Field::mul_with(const Tables& t, Elem a, Elem b) {
    if (a == 0 || b == 0) return 0;
    if (t.k == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % t.p);
    Poly pa = poly_from_code(a, t.p, t.k);
    Poly pb = poly_from_code(b, t.p, t.k);
    Poly prod(2 * t.k, 0);
    for (std::uint32_t i = 0; i < t.k; ++i) {
        if (pa[i] == 0) continue;
        for (std::uint32_t j = 0; j < t.k; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % t.p);
    }
    mod_by(prod, t.modulus, t.p);
    return code_from_poly(prod, t.p, t.k);
}

Field Field::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("field designation must be \"p,k\", got \"" + std::string(text) + "\"");
    auto parse_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("bad number in field designation: \"" + std::string(s) + "\"");
        return v;
    };
    return Field(parse_u32(text.substr(0, comma)), parse_u32(text.substr(comma + 1)));
}

std::string Field::label() const { return std::to_string(p()) + "," + std::to_string(k()); }

void Field::check_elem(Elem a, const char* what) const {
    if (a >= q()) throw std::invalid_argument(std::string(what) + " code " + std::to_string(a) + " out of range for GF(" +
                                              std::to_string(q()) + ")");
}

Elem Field::add(Elem a, Elem b) const {
    check_elem(a, "operand");
    check_elem(b, "operand");
    const std::uint32_t p = t_->p;
    if (t_->k == 1) {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Elem out = 0;
    std::uint32_t scale = 1;
    while (a != 0 || b != 0) {
        std::uint32_t d = a % p + b % p;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    check_elem(a, "operand");
    const std::uint32_t p = t_->p;
    if (t_->k == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Elem out = 0;
    std::uint32_t scale = 1;
    while (a != 0) {
        const std::uint32_t d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        a /= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    check_elem(a, "operand");
    check_elem(b, "operand");
    if (a == 0 || b == 0) return 0;
    const std::uint32_t n = t_->q - 1;
    std::uint32_t s = t_->log[a] + t_->log[b];
    if (s >= n) s -= n;
    return t_->exp[s];
}

Elem Field::inv(Elem a) const {
    check_elem(a, "operand");
    if (a == 0) throw std::domain_error("multiplicative inverse of zero");
    const std::uint32_t n = t_->q - 1;
    const std::uint32_t l = t_->log[a];
    return t_->exp[l == 0 ? 0 : n - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    check_elem(a, "operand");
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint32_t n = t_->q - 1;
    const std::uint64_t l = static_cast<std::uint64_t>(t_->log[a]) * (e % n) % n;
    return t_->exp[l];
}

Elem Field::mul_reduce(Elem a, Elem b) const {
    check_elem(a, "operand");
    check_elem(b, "operand");
    return mul_with(*t_, a, b);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q());
    for (std::uint32_t i = 0; i < q(); ++i) out[i] = i;
    return out;
}

std::vector<Elem> Field::subfield_elements(std::uint32_t d) const {
    if (d < 1 || k() % d != 0)
        throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(k()));
    std::uint64_t frob = 1;
    for (std::uint32_t i = 0; i < d; ++i) frob *= p();
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < q(); ++x)
        if (pow(x, frob) == x) out.push_back(x);
    return out;  // ascending by construction
}

}  // namespace pindot
