#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pindot/plane.hpp"
#include "pindot/sumsets.hpp"

namespace pindot {

/// SplitMix64 (Steele, Lea, Flood 2014). This generator is part of the
/// reproducibility contract: every sampled set is a pure function of
/// (seed, purpose, trial index, field), so the algorithm and its constants
/// are fixed forever.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; unbiased for every bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// The SplitMix64 output permutation as a stateless mixer.
std::uint64_t mix64(std::uint64_t z);

/// Independent sampling streams drawn from one campaign seed.
enum class StreamPurpose : std::uint64_t {
    kPointSet = 0,
    kScalarSet = 1,
    kSymmetricSet = 2,
};

/// Seed for the (purpose, trial, field) stream: the campaign seed and each
/// component folded through mix64. Documented and fixed, like the generator.
std::uint64_t stream_seed(std::uint64_t seed, StreamPurpose purpose, std::uint64_t trial_index, const Field& f);

/// n distinct uniform points, drawn by a seeded Fisher-Yates prefix over the
/// canonical q^2-cell enumeration (cell c is the point (c / q, c % q)).
/// Throws std::invalid_argument when n > q^2.
PointSet sample_point_set(const Field& f, std::uint64_t n, std::uint64_t seed, std::uint64_t trial_index);

/// n distinct uniform field elements; same scheme over the q codes.
ScalarSet sample_scalar_set(const Field& f, std::uint64_t n, std::uint64_t seed, std::uint64_t trial_index);

/// Uniform over the symmetric sets (-A = A) of size exactly n. In odd
/// characteristic a symmetric set is 0 (iff n is odd) plus (n - z) / 2
/// negation pairs, so the sampler draws a uniform pair subset; in
/// characteristic 2 negation fixes everything and any set qualifies.
/// Throws std::invalid_argument when no symmetric set of size n exists.
ScalarSet sample_symmetric_set(const Field& f, std::uint64_t n, std::uint64_t seed, std::uint64_t trial_index);

/// Number of symmetric subsets of size n (0 when none).
std::uint64_t count_symmetric_sets(const Field& f, std::uint64_t n);

/// All symmetric subsets of size n, deterministic order. Intended for
/// exhaustive verification at desk scale; throws if the count exceeds limit.
std::vector<ScalarSet> symmetric_sets_of_size(const Field& f, std::uint64_t n, std::uint64_t limit = 1000000);

/// FNV-1a over the canonical cell indices (x * q + y), each folded in as
/// 8 little-endian bytes. Fixed forever; identifies trials in reports.
std::uint64_t point_set_digest(const PointSet& E);
std::uint64_t scalar_set_digest(const ScalarSet& S);
std::string to_hex(std::uint64_t value);

/// Set-size expression: "q+1", "q", "2q", or an explicit integer.
struct SizeExpr {
    enum class Kind { kQPlusOne, kQ, kTwoQ, kLiteral };

    Kind kind = Kind::kQPlusOne;
    std::uint64_t literal = 0;

    static SizeExpr parse(const std::string& text);
    std::uint64_t eval(std::uint64_t q) const;
    std::string str() const;
};

enum class Check {
    kIdentity = 0,
    kTheorem,
    kImp,
    kCorollary,
    kSharpness,
    kGlibichuk,
    kLines,
};

inline constexpr std::array<Check, 7> kAllChecks = {
    Check::kIdentity, Check::kTheorem,   Check::kImp,   Check::kCorollary,
    Check::kSharpness, Check::kGlibichuk, Check::kLines,
};

std::string check_name(Check check);
Check parse_check(const std::string& name);
/// Comma-separated names -> canonical order, deduplicated.
std::vector<Check> parse_checks(const std::string& csv);

struct CampaignConfig {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;  // (p, k)
    std::uint64_t trials = 1;
    SizeExpr set_size;
    std::vector<Check> checks;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on an unusable config: no field, no
    /// check, zero trials, an invalid (p, k), a set size exceeding q^2, or
    /// the sharpness check on a field that is not a prime square.
    void validate() const;

    static CampaignConfig from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

/// One check on one trial. mode is "theorem" when the run is backed by a
/// proved statement (failure is a defect) and "sub_threshold" when the
/// hypotheses do not hold and the record is best-effort measurement data.
struct CheckResult {
    Check check = Check::kIdentity;
    bool pass = false;
    std::string mode;
    nlohmann::ordered_json detail;
};

struct TrialRecord {
    std::uint32_t p = 0, k = 0;
    std::uint64_t q = 0;
    std::uint64_t trial = 0;
    std::uint64_t size = 0;   // |E| actually sampled
    std::string digest;       // point_set_digest hex
    std::vector<CheckResult> checks;
    nlohmann::ordered_json set;  // the members, embedded iff some check failed
    bool any_fail = false;
};

struct CheckSummary {
    Check check = Check::kIdentity;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::string expected_pass_rate;  // "100%" for theorem mode, else "n/a"
};

struct Report {
    CampaignConfig config;
    std::vector<TrialRecord> trials;  // ordered by (field, trial)
    std::vector<CheckSummary> summary;

    bool any_theorem_fail() const;
    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

/// Runs trials * fields slots, each a pure function of (config, field,
/// trial), on `jobs` worker threads. Records are assembled by (field, trial)
/// index, so the report is byte-identical for any job count.
Report run_campaign(const CampaignConfig& config, unsigned jobs = 1);

}  // namespace pindot
