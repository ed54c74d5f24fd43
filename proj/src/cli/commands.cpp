#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

#include "cogcap/channel_family.hpp"
#include "cogcap/channel_io.hpp"
#include "cogcap/classifier.hpp"
#include "cogcap/cli/cli.hpp"
#include "cogcap/cli/hierarchy.hpp"
#include "cogcap/cli/report.hpp"
#include "cogcap/errors.hpp"
#include "cogcap/rng.hpp"

namespace cogcap::cli {

namespace {

constexpr std::uint64_t kBatchTag = 0x68696572;

std::uint64_t require_seed(const RunConfig& c, const char* what) {
    if (!c.seed) throw UsageError(std::string(what) + " draws random channels and needs --seed");
    return *c.seed;
}

double parse_param(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw UsageError("family parameter '" + s + "' is not a number");
    return v;
}

Channel family_channel(const RunConfig& c, const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UsageError("missing family name");
    const std::string& name = tokens[0];
    std::vector<double> params;
    for (std::size_t i = 1; i < tokens.size(); ++i) params.push_back(parse_param(tokens[i]));
    auto no_params = [&] {
        if (!params.empty()) throw UsageError("family " + name + " takes no parameters");
    };
    if (name == "noiseless_product") return no_params(), noiseless_product_channel();
    if (name == "noiseless_pair") return no_params(), noiseless_pair_channel();
    if (name == "zero_capacity") return no_params(), zero_capacity_channel();
    const auto id = parse_family(name);
    if (!id) throw UsageError("unknown family '" + name + "'");
    ChannelFamily spec{*id, params, 0};
    if (*id == FamilyId::random) spec.seed = require_seed(c, "family random");
    try {
        return make_family(spec);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
}

std::string source_label(const RunConfig& c) {
    if (!c.channel_path.empty()) return c.channel_path;
    std::string s;
    for (const auto& t : c.family) s += (s.empty() ? "" : " ") + t;
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_or(const RunConfig& c, const char* fallback) {
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "csv" && f != "report") throw UsageError("unknown format '" + f + "' (csv or report)");
    return f;
}

Budget budget_for(const RunConfig& c) {
    Budget b = c.budget;
    b.seed = c.seed.value_or(0);
    b.aux_card = c.aux_hi;
    return b;
}

void require_single_aux(const RunConfig& c) {
    if (c.aux_lo != c.aux_hi) throw UsageError("--aux-card ranges are only supported by classify");
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_aux_range(const std::string& text) {
    auto parse = [&](std::string_view s) {
        std::size_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1)
            throw UsageError("bad --aux-card value '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse(text);
        return {v, v};
    }
    const auto lo = parse(std::string_view(text).substr(0, dots));
    const auto hi = parse(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw UsageError("empty --aux-card range '" + text + "'");
    return {lo, hi};
}

Channel resolve_channel(const RunConfig& c) {
    if (!c.channel_path.empty() && !c.family.empty()) throw UsageError("give either --channel or --family, not both");
    if (!c.channel_path.empty()) return load_channel(c.channel_path);
    if (!c.family.empty()) return family_channel(c, c.family);
    throw UsageError("a channel is required (--channel PATH or --family NAME ARGS...)");
}

std::string cmd_classify(const RunConfig& c) {
    const std::string fmt = format_or(c, "report");
    const Channel channel = resolve_channel(c);
    std::vector<std::pair<std::size_t, ClassificationProfile>> runs;
    for (std::size_t k = c.aux_lo; k <= c.aux_hi; ++k) {
        Budget b = budget_for(c);
        b.aux_card = k;
        runs.emplace_back(k, classify(channel, b));
    }

    if (fmt == "csv") {
        std::string out = "aux_card,condition,verdict,worst_gap\n";
        for (const auto& [k, p] : runs)
            for (const auto& r : p.reports)
                out += std::to_string(k) + "," + std::string(condition_name(r.id)) + "," +
                       std::string(verdict_name(r.verdict)) + "," + format_double(r.worst_gap) + "\n";
        return out;
    }

    Json reports = Json::array();
    for (const auto& [k, p] : runs) {
        Json j = to_json(p);
        reports.push_back({{"aux_card", k}, {"conditions", j["conditions"]}, {"alarms", j["alarms"]}});
    }
    Json doc = {{"command", "classify"}, {"channel", source_label(c)}, {"budget", to_json(budget_for(c))},
                {"reports", reports}};
    if (runs.size() > 1) {
        // Gaps over auxiliary scopes can only decrease as |U| grows.
        Json sat = Json::array();
        for (std::size_t i = 0; i < kAllConditions.size(); ++i) {
            if (regime_condition(kAllConditions[i]).scope != Scope::auxiliary) continue;
            Json gaps = Json::array();
            bool monotone = true;
            for (std::size_t r = 0; r < runs.size(); ++r) {
                const double g = runs[r].second.reports[i].worst_gap;
                gaps.push_back(g);
                if (r > 0 && g > runs[r - 1].second.reports[i].worst_gap + 1e-9) monotone = false;
            }
            sat.push_back({{"condition", condition_name(kAllConditions[i])},
                           {"worst_gaps", gaps},
                           {"monotone_nonincreasing", monotone}});
        }
        doc["saturation"] = sat;
    }
    return dump(doc);
}

std::string cmd_region(const RunConfig& c) {
    const std::string fmt = format_or(c, "csv");
    require_single_aux(c);
    if (c.region.empty()) throw UsageError("region needs a region id");
    const auto id = parse_region(c.region);
    if (!id) throw UsageError("unknown region id '" + c.region + "'");
    if (c.angles < 3) throw UsageError("--angles must be at least 3");
    const Channel channel = resolve_channel(c);
    const RateRegion region = compute_region(channel, *id, c.angles, budget_for(c));
    if (fmt == "csv") return region_csv(*id, region);
    Json doc = {{"command", "region"},
                {"channel", source_label(c)},
                {"budget", to_json(budget_for(c))},
                {"angles", c.angles},
                {"result", to_json(*id, region, true)},
                {"active_constraints", to_json(analyze_constraints(*id, region))}};
    return dump(doc);
}

std::string cmd_hierarchy(const RunConfig& c, bool& mandated_ok) {
    format_or(c, "report");
    if (c.format == "csv") throw UsageError("hierarchy only writes reports");
    require_single_aux(c);
    if (c.batch < 1) throw UsageError("--batch must be at least 1");
    if (c.angles < 3) throw UsageError("--angles must be at least 3");

    std::vector<Channel> channels;
    Json origin;
    if (!c.channel_path.empty() || !c.family.empty()) {
        if (c.batch != 1) throw UsageError("--batch applies to random channels only");
        channels.push_back(resolve_channel(c));
        origin = source_label(c);
    } else {
        const std::uint64_t seed = require_seed(c, "hierarchy");
        for (std::size_t i = 0; i < c.batch; ++i) channels.push_back(random_channel(derive_seed(seed, {kBatchTag, i})));
        origin = "random";
    }

    const Budget budget = budget_for(c);
    Json items = Json::array();
    std::map<std::string, std::size_t> holding;
    std::size_t checks = 0, failed = 0, alarms = 0, not_ok = 0;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const HierarchyResult r = run_hierarchy(channels[i], budget, c.angles);
        for (const auto& rep : r.profile.reports)
            if (rep.verdict == Verdict::holds) ++holding[std::string(condition_name(rep.id))];
        checks += r.checks.size();
        for (const auto& ch : r.checks) failed += ch.pass ? 0 : 1;
        alarms += r.profile.alarms.size();
        not_ok += r.mandated_ok() ? 0 : 1;
        Json j = to_json(r);
        Json item = {{"index", i}, {"channel", to_json(channels[i])}};
        for (auto it = j.begin(); it != j.end(); ++it) item[it.key()] = it.value();
        items.push_back(std::move(item));
    }
    Json held = Json::object();
    for (ConditionId id : kAllConditions) held[std::string(condition_name(id))] = holding[std::string(condition_name(id))];
    mandated_ok = not_ok == 0;
    Json doc = {{"command", "hierarchy"},
                {"source", origin},
                {"seed", c.seed.value_or(0)},
                {"budget", to_json(budget)},
                {"angles", c.angles},
                {"channels", items},
                {"summary",
                 {{"channels", channels.size()},
                  {"holding", held},
                  {"checks", checks},
                  {"failed_checks", failed},
                  {"alarms", alarms},
                  {"channels_with_failures", not_ok}}}};
    return dump(doc);
}

std::string cmd_generate(const RunConfig& c) {
    if (!c.channel_path.empty()) throw UsageError("generate takes a family, not --channel");
    return format_channel(family_channel(c, c.family));
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        std::string text;
        int code = kExitOk;
        if (c.command == "classify") {
            text = cmd_classify(c);
        } else if (c.command == "region") {
            text = cmd_region(c);
        } else if (c.command == "hierarchy") {
            bool ok = true;
            text = cmd_hierarchy(c, ok);
            if (!ok) code = kExitMandatedFailure;
        } else if (c.command == "generate") {
            text = cmd_generate(c);
        } else {
            throw UsageError("unknown command '" + c.command + "'");
        }
        if (c.out.empty()) {
            out << text;
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw FormatError("cannot open " + c.out + " for writing");
            f << text;
            if (!f) throw FormatError("failed writing " + c.out);
        }
        if (code == kExitMandatedFailure) err << "cogcap: mandated hierarchy check failed\n";
        return code;
    } catch (const std::exception& e) {
        err << "cogcap: " << e.what() << "\n";
        return kExitError;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity regimes and rate regions of cognitive interference channels", "cogcap"};
    app.require_subcommand(1);

    RunConfig c;
    std::uint64_t seed = 0;
    std::string aux = "4";
    std::string region_flag;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--channel", c.channel_path, "Channel file (JSON)");
        sub->add_option("--family", c.family, "Channel family name followed by its parameters")->expected(1, -1);
        sub->add_option("--seed", seed, "Random seed");
        sub->add_option("--restarts", c.budget.restarts, "Local refinements per search")->check(CLI::PositiveNumber);
        sub->add_option("--grid-res", c.budget.grid_res, "Seeding grid resolution")->check(CLI::PositiveNumber);
        sub->add_option("--max-iters", c.budget.max_iters, "Iterations per refinement")->check(CLI::PositiveNumber);
        sub->add_option("--aux-card", aux, "Auxiliary cardinality N or range A..B");
        sub->add_option("--threads", c.budget.threads, "Worker threads (0: automatic)");
        sub->add_option("--out", c.out, "Output path (default: standard output)");
        sub->add_option("--format", c.format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
    };
    auto* classify_cmd = app.add_subcommand("classify", "Decide which regime conditions hold");
    common(classify_cmd);
    auto* region_cmd = app.add_subcommand("region", "Compute a rate region boundary");
    common(region_cmd);
    region_cmd->add_option("--angles", c.angles, "Number of support directions");
    region_cmd->add_option("--region", region_flag, "Region id");
    region_cmd->add_option("region_id", c.region, "Region id (C_I, C_II, C_III, C_III_prime, C_IV, R_o, R_o_prime)");
    auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Check the inclusion hierarchy on a batch of channels");
    common(hierarchy_cmd);
    hierarchy_cmd->add_option("--angles", c.angles, "Number of support directions");
    hierarchy_cmd->add_option("--batch", c.batch, "Number of seeded random channels");
    auto* generate_cmd = app.add_subcommand("generate", "Write a channel file");
    common(generate_cmd);
    std::vector<std::string> positional_family;
    generate_cmd->add_option("family_spec", positional_family, "Family name followed by its parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    try {
        auto* sub = app.get_subcommand(c.command);
        if (sub->count("--seed")) c.seed = seed;
        std::tie(c.aux_lo, c.aux_hi) = parse_aux_range(aux);
        if (!region_flag.empty()) {
            if (!c.region.empty() && c.region != region_flag) throw UsageError("conflicting region ids");
            c.region = region_flag;
        }
        if (!positional_family.empty()) {
            if (!c.family.empty()) throw UsageError("give the family either positionally or with --family");
            c.family = positional_family;
        }
    } catch (const UsageError& e) {
        err << "cogcap: " << e.what() << "\n";
        return kExitError;
    }
    return execute(c, out, err);
}

}  // namespace cogcap::cli
