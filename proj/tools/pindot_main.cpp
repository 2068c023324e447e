#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pindot/harness.hpp"
#include "pindot/incidence.hpp"
#include "pindot/io.hpp"
#include "pindot/pinned.hpp"
#include "pindot/sumsets.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pindot;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
    out << text;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

int cmd_verify(const CampaignConfig& config, unsigned jobs, const std::string& out_path, const std::string& format) {
    Report report = run_campaign(config, jobs);
    if (format == "csv")
        emit(report.to_csv(), out_path);
    else
        emit(report.to_json().dump(2) + "\n", out_path);
    return report.any_theorem_fail() ? 1 : 0;
}

int cmd_pinned(const std::string& in_path, const std::string& out_path) {
    PointSet E = read_point_set_file(in_path);
    PinnedWitness w = pinned_pair(E);
    emit(witness_to_json(w).dump(2) + "\n", out_path);
    return w.dot_values.size() >= E.field().q() / 2 + 1 ? 0 : 1;
}

int cmd_identity(const std::string& in_path, const std::string& out_path) {
    PointSet E = read_point_set_file(in_path);
    const std::uint64_t size = E.size();
    const std::uint64_t expected = size * size + E.field().q() * size;
    MomentProfile profile = moment_profile(E);
    ordered_json j;
    j["field"] = E.field().label();
    j["size"] = size;
    j["total_second_moment"] = profile.total;
    j["expected"] = expected;
    j["match"] = profile.total == expected;
    j["per_direction"] = moment_profile_to_json(profile);
    emit(j.dump(2) + "\n", out_path);
    return profile.total == expected ? 0 : 1;
}

int cmd_extremal(std::uint32_t p, const std::string& out_path) {
    PointSet E = subfield_example(p);
    const Field& f = E.field();
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (Point x : E.members())
        for (Point y : E.members()) {
            if (x == y) continue;
            Point d{f.sub(y.x, x.x), f.sub(y.y, x.y)};
            std::uint64_t n = dot_set(E, d).size();
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
    const bool ok = E.size() == f.q() && lo == p && hi == p;
    ordered_json j;
    j["p"] = p;
    j["field"] = f.label();
    j["set_size"] = E.size();
    j["pinned_min"] = lo;
    j["pinned_max"] = hi;
    j["expected"] = p;
    j["ok"] = ok;
    j["set"] = point_set_to_json(E);
    emit(j.dump(2) + "\n", out_path);
    return ok ? 0 : 1;
}

int cmd_glibichuk(const std::string& field_text, std::uint64_t size, bool size_given, std::uint64_t seed,
                  const std::string& out_path) {
    Field f = Field::parse(field_text);
    const std::uint64_t n = size_given ? size : isqrt(f.q()) + 1;
    ScalarSet A = sample_symmetric_set(f, n, seed, 0);
    const bool ok = glibichuk_check(A);
    ordered_json j;
    j["field"] = f.label();
    j["size"] = A.size();
    j["a"] = std::vector<Elem>(A.members().begin(), A.members().end());
    j["result"] = ok;
    emit(j.dump(2) + "\n", out_path);
    return ok ? 0 : 1;
}

int cmd_stats(const std::string& field_text, const std::string& in_path, std::uint64_t size, bool size_given,
              std::uint64_t trials, std::uint64_t seed, const std::string& out_path) {
    ordered_json rows = ordered_json::array();
    auto describe = [](const ScalarSet& A) {
        ProductSumStats st = aa_plus_aa_stats(A);
        ordered_json row;
        row["a_digest"] = to_hex(scalar_set_digest(A));
        row["a_size"] = A.size();
        row["card_aa_aa"] = st.card_aa_aa;
        row["hi_bound"] = st.hi_bound;
        row["subgroup"] = st.subgroup;
        return row;
    };
    ordered_json j;
    if (!in_path.empty()) {
        ScalarSet A = read_scalar_set_file(in_path);
        j["field"] = A.field().label();
        rows.push_back(describe(A));
    } else {
        if (field_text.empty()) throw std::invalid_argument("stats needs --field or --in");
        Field f = Field::parse(field_text);
        const std::uint64_t n = size_given ? size : isqrt(f.q()) + 1;
        j["field"] = f.label();
        for (std::uint64_t t = 0; t < trials; ++t) rows.push_back(describe(sample_scalar_set(f, n, seed, t)));
    }
    j["rows"] = std::move(rows);
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pinned dot products over finite planes: verification campaigns and demos"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::vector<std::string> field_texts;
    std::string config_path, size_text = "q+1", checks_text = "identity,theorem,imp,corollary";
    std::uint64_t trials = 100, seed = 0;
    unsigned jobs = 1;
    std::string out_path, format = "json";
    auto* field_opt = verify->add_option("--field", field_texts, "field designation p,k (repeatable)");
    verify->add_option("--trials", trials, "trials per field");
    verify->add_option("--size", size_text, "set size: q+1, q, 2q, or an integer");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--checks", checks_text, "comma-separated subset of identity,theorem,imp,corollary,sharpness,glibichuk,lines");
    auto* config_opt = verify->add_option("--config", config_path, "campaign config JSON file");
    config_opt->excludes(field_opt);
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // pinned
    auto* pinned_cmd = app.add_subcommand("pinned", "pinned-pair witness for one point set");
    std::string pinned_in, pinned_out;
    pinned_cmd->add_option("--in", pinned_in, "point set file")->required();
    pinned_cmd->add_option("--out", pinned_out, "output file (default stdout)");

    // identity
    auto* identity_cmd = app.add_subcommand("identity", "second-moment identity for one point set");
    std::string identity_in, identity_out;
    identity_cmd->add_option("--in", identity_in, "point set file")->required();
    identity_cmd->add_option("--out", identity_out, "output file (default stdout)");

    // extremal
    auto* extremal_cmd = app.add_subcommand("extremal", "subfield sharpness demo over GF(p^2)");
    std::uint32_t extremal_p = 2;
    std::string extremal_out;
    extremal_cmd->add_option("--p", extremal_p, "prime p")->required();
    extremal_cmd->add_option("--out", extremal_out, "output file (default stdout)");

    // glibichuk
    auto* glib_cmd = app.add_subcommand("glibichuk", "8-fold sumset check for a sampled symmetric set");
    std::string glib_field, glib_out;
    std::uint64_t glib_size = 0, glib_seed = 0;
    glib_cmd->add_option("--field", glib_field, "field designation p,k")->required();
    auto* glib_size_opt = glib_cmd->add_option("--size", glib_size, "symmetric set size (default floor(sqrt(q))+1)");
    glib_cmd->add_option("--seed", glib_seed, "sampling seed");
    glib_cmd->add_option("--out", glib_out, "output file (default stdout)");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "|AA+AA| statistics over sampled scalar sets");
    std::string stats_field, stats_in, stats_out;
    std::uint64_t stats_size = 0, stats_trials = 10, stats_seed = 0;
    auto* stats_field_opt = stats_cmd->add_option("--field", stats_field, "field designation p,k");
    auto* stats_in_opt = stats_cmd->add_option("--in", stats_in, "scalar set file (instead of sampling)");
    stats_in_opt->excludes(stats_field_opt);
    auto* stats_size_opt = stats_cmd->add_option("--size", stats_size, "set size (default floor(sqrt(q))+1)");
    stats_cmd->add_option("--trials", stats_trials, "sampled sets");
    stats_cmd->add_option("--seed", stats_seed, "sampling seed");
    stats_cmd->add_option("--out", stats_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) {
            CampaignConfig config;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::runtime_error(config_path + ": cannot open for reading");
                config = CampaignConfig::from_json(nlohmann::json::parse(in));
            } else {
                if (field_texts.empty()) throw std::invalid_argument("verify needs --field or --config");
                for (const auto& text : field_texts) {
                    Field f = Field::parse(text);
                    config.fields.emplace_back(f.p(), f.k());
                }
                config.trials = trials;
                config.set_size = SizeExpr::parse(size_text);
                config.checks = parse_checks(checks_text);
                config.seed = seed;
            }
            return cmd_verify(config, jobs, out_path, format);
        }
        if (app.got_subcommand(pinned_cmd)) return cmd_pinned(pinned_in, pinned_out);
        if (app.got_subcommand(identity_cmd)) return cmd_identity(identity_in, identity_out);
        if (app.got_subcommand(extremal_cmd)) return cmd_extremal(extremal_p, extremal_out);
        if (app.got_subcommand(glib_cmd))
            return cmd_glibichuk(glib_field, glib_size, glib_size_opt->count() > 0, glib_seed, glib_out);
        if (app.got_subcommand(stats_cmd))
            return cmd_stats(stats_field, stats_in, stats_size, stats_size_opt->count() > 0, stats_trials, stats_seed,
                             stats_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
