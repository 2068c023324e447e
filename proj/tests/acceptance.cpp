// Acceptance gate: one line per criterion, exit 0 only if every one passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pindot/harness.hpp"
#include "pindot/incidence.hpp"
#include "pindot/io.hpp"
#include "pindot/pinned.hpp"
#include "pindot/sumsets.hpp"

using namespace pindot;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool g_all_ok = true;

void report(int id, const char* name, bool ok, const std::string& note) {
    std::printf("[%2d] %s  %-38s %s\n", id, ok ? "PASS" : "FAIL", name, note.c_str());
    g_all_ok = g_all_ok && ok;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kIdentityFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
};
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kTheoremFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1},
};

constexpr std::uint64_t kIdentitySeed = 101;
constexpr std::uint64_t kCampaignSeed = 20240814;
constexpr std::uint64_t kOracleSeed = 8080;

void criterion_1() {
    auto start = Clock::now();
    std::uint64_t checked = 0, exact = 0;
    for (auto [p, k] : kIdentityFields) {
        Field f(p, k);
        const std::uint64_t q = f.q();
        const std::uint64_t sizes[] = {1, q / 2, q, q + 1, 2 * q};
        for (std::uint64_t trial = 0; trial < 200; ++trial) {
            PointSet E = sample_point_set(f, sizes[trial % 5], kIdentitySeed, trial);
            const std::uint64_t n = E.size();
            ++checked;
            if (total_second_moment(E) == n * n + q * n) ++exact;
        }
    }
    Field f2(2, 1);
    const Point cells[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<Point> pts;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i)) pts.push_back(cells[i]);
        PointSet E(f2, pts);
        const std::uint64_t n = E.size();
        ++checked;
        if (total_second_moment(E) == n * n + 2 * n) ++exact;
    }
    double ms = ms_since(start);
    char note[128];
    std::snprintf(note, sizeof note, "%llu/%llu exact, %.0f ms", (unsigned long long)exact,
                  (unsigned long long)checked, ms);
    report(1, "second-moment identity", exact == checked && ms < 10000, note);
}

struct CampaignOutcome {
    Report report;
    double ms = 0;
};

CampaignOutcome run_main_campaign() {
    CampaignConfig config;
    config.fields = kTheoremFields;
    config.trials = 500;
    config.set_size = SizeExpr::parse("q+1");
    config.checks = parse_checks("theorem,imp,corollary");
    config.seed = kCampaignSeed;
    auto start = Clock::now();
    Report r = run_campaign(config, 1);
    return {std::move(r), ms_since(start)};
}

void criterion_2(const CampaignOutcome& outcome) {
    std::uint64_t total = 0, good = 0;
    for (const auto& rec : outcome.report.trials) {
        const auto& cr = rec.checks[0];  // theorem
        ++total;
        const std::uint64_t threshold = rec.q / 2 + 1;
        if (cr.pass && cr.mode == "theorem" &&
            cr.detail["witness"]["dot_count"].get<std::uint64_t>() >= threshold)
            ++good;
    }
    char note[128];
    std::snprintf(note, sizeof note, "%llu/%llu witnesses above q/2, %.0f ms", (unsigned long long)good,
                  (unsigned long long)total, outcome.ms);
    report(2, "pinned dot set beats q/2 at |E| = q+1", good == total && total == 4000 && outcome.ms < 30000, note);
}

void criterion_3(const CampaignOutcome& outcome) {
    std::uint64_t total = 0, good = 0;
    for (const auto& rec : outcome.report.trials) {
        const auto& cr = rec.checks[1];  // imp
        ++total;
        if (cr.pass && cr.detail["all_determined"].get<bool>() && cr.detail["missing"].empty()) ++good;
    }
    char note[64];
    std::snprintf(note, sizeof note, "%llu/%llu all q+1 directions", (unsigned long long)good,
                  (unsigned long long)total);
    report(3, "difference set determines every direction", good == total && total == 4000, note);
}

void criterion_4(const CampaignOutcome& outcome) {
    std::uint64_t total = 0, good = 0;
    for (const auto& rec : outcome.report.trials) {
        const auto& cr = rec.checks[2];  // corollary
        ++total;
        if (cr.pass && cr.detail["full_field"].get<bool>()) ++good;
    }
    char note[64];
    std::snprintf(note, sizeof note, "%llu/%llu cover the field", (unsigned long long)good,
                  (unsigned long long)total);
    report(4, "pinned sumset (E+E).(y-x) = F", good == total && total == 4000, note);
}

void criterion_5() {
    auto start = Clock::now();
    bool ok = true;
    std::uint64_t pairs = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PointSet E = subfield_example(p);
        const Field& f = E.field();
        ok = ok && E.size() == f.q() && f.q() == p * p;
        for (Point x : E.members())
            for (Point y : E.members()) {
                if (x == y) continue;
                ++pairs;
                Point d{f.sub(y.x, x.x), f.sub(y.y, x.y)};
                ok = ok && dot_set(E, d).size() == p;
            }
    }
    double ms = ms_since(start);
    char note[96];
    std::snprintf(note, sizeof note, "%llu pinned pairs, min = max = p, %.0f ms", (unsigned long long)pairs, ms);
    report(5, "subfield square is extremal", ok && pairs == 12 + 72 + 600 && ms < 20000, note);
}

void criterion_6() {
    bool ok = true;
    std::uint64_t total = 0;
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {5, 2}}) {
        Field f(p, k);
        const std::uint64_t n = (p == 3 ? 4 : 6);  // floor(sqrt(q)) + 1
        const std::uint64_t count = count_symmetric_sets(f, n);
        ok = ok && count <= 10000;  // exhaustive per the size of the family
        auto sets = symmetric_sets_of_size(f, n);
        ok = ok && sets.size() == count;
        for (const ScalarSet& A : sets) {
            ++total;
            ok = ok && glibichuk_check(A);
            ScalarSet AA = productset(A, A);
            ok = ok && iterated_sumset(AA, 8).size() == f.q();
        }
    }
    char note[96];
    std::snprintf(note, sizeof note, "%llu symmetric sets, 8-fold sumset = F", (unsigned long long)total);
    report(6, "8-fold sumset of AA covers F", ok && total == 6 + 220, note);
}

void criterion_7() {
    bool ok = true;
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field f(p, k);
        PlaneAudit audit = audit_plane(f);
        ok = ok && audit.ok() && audit.line_count == static_cast<std::uint64_t>(f.q()) * (f.q() + 1);
    }
    report(7, "q(q+1) lines, degrees q+1, unique pairs", ok, "exhaustive for q = 2..9");
}

void criterion_8() {
    std::uint64_t total = 0, agree = 0;
    for (auto [p, k] : kIdentityFields) {
        Field f(p, k);
        SplitMix64 rng(kOracleSeed + f.q());
        auto dirs = all_directions(f);
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            PointSet E = sample_point_set(f, 1 + trial % (2 * f.q()), kOracleSeed, trial);
            Direction theta = dirs[rng.next_below(dirs.size())];
            ++total;
            if (directional_second_moment(E, theta) == oracles::per_line_second_moment(E, theta)) ++agree;
        }
    }
    char note[64];
    std::snprintf(note, sizeof note, "%llu/%llu instances agree", (unsigned long long)agree,
                  (unsigned long long)total);
    report(8, "bucketing equals per-line enumeration", agree == total && total == 900, note);
}

void criterion_9(const CampaignOutcome& outcome) {
    std::uint64_t total = 0, good = 0;
    for (const auto& rec : outcome.report.trials) {
        const auto& witness = rec.checks[0].detail["witness"];
        const std::uint64_t moment = witness["moment"].get<std::uint64_t>();
        const std::uint64_t dots = witness["dot_count"].get<std::uint64_t>();
        const std::uint64_t n = rec.size;
        ++total;
        if (n * n <= moment * dots && rec.q * moment < 2 * n * n) ++good;
    }
    char note[64];
    std::snprintf(note, sizeof note, "%llu/%llu chains hold", (unsigned long long)good, (unsigned long long)total);
    report(9, "Cauchy-Schwarz chain on every witness", good == total && total == 4000, note);
}

void criterion_10(const CampaignOutcome& outcome) {
    CampaignConfig config;
    config.fields = kTheoremFields;
    config.trials = 500;
    config.set_size = SizeExpr::parse("q+1");
    config.checks = parse_checks("theorem,imp,corollary");
    config.seed = kCampaignSeed;
    const std::string base = outcome.report.to_json().dump(2);
    const std::string serial = run_campaign(config, 1).to_json().dump(2);
    const std::string parallel = run_campaign(config, 8).to_json().dump(2);
    const bool ok = base == serial && serial == parallel;
    char note[64];
    std::snprintf(note, sizeof note, "%zu-byte reports identical", base.size());
    report(10, "byte-identical rerun, serial vs parallel", ok, note);
}

}  // namespace

int main() {
    auto start = Clock::now();
    criterion_1();
    CampaignOutcome campaign = run_main_campaign();
    criterion_2(campaign);
    criterion_3(campaign);
    criterion_4(campaign);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(campaign);
    criterion_10(campaign);
    double ms = ms_since(start);
    std::printf("acceptance: %s in %.1f s\n", g_all_ok ? "all 10 criteria PASS" : "FAILURES above", ms / 1000.0);
    if (ms >= 60000) {
        std::printf("acceptance: runtime budget of 60 s exceeded\n");
        return 1;
    }
    return g_all_ok ? 0 : 1;
}
