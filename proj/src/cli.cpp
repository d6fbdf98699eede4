#include "threegap/cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "threegap/alpha_parse.hpp"
#include "threegap/error.hpp"
#include "threegap/format.hpp"
#include "threegap/gap_oracle.hpp"
#include "threegap/gap_predictor.hpp"
#include "threegap/metric_mc.hpp"
#include "threegap/quadratic.hpp"
#include "threegap/version.hpp"

namespace threegap {

namespace {

using Json = nlohmann::ordered_json;

std::vector<long long> parse_checkpoints(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad checkpoint value '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty checkpoint list");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 1) throw UsageError("checkpoints must be >= 1");
        if (i > 0 && out[i] <= out[i - 1]) throw UsageError("checkpoints must be strictly increasing");
    }
    return out;
}

std::optional<std::string> env_value(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

long long to_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad integer '" + text + "' for " + what);
    }
}

std::string iso_utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string join_args(const std::vector<std::string>& argv) {
    std::string out;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<Json> rows;  // each row a Json array matching columns

    void add(Json row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

void write_csv(std::ostream& os, const Table& table, const std::vector<std::pair<std::string, std::string>>& manifest) {
    for (const auto& [key, value] : manifest) os << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ",";
        os << table.columns[i];
    }
    os << "\n";
    for (const Json& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << cell_text(row[i]);
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table, const std::vector<std::pair<std::string, std::string>>& manifest) {
    Json doc;
    if (!manifest.empty()) {
        Json m;
        for (const auto& [key, value] : manifest) m[key] = value;
        doc["manifest"] = std::move(m);
    }
    doc["columns"] = table.columns;
    Json rows = Json::array();
    for (const Json& row : table.rows) rows.push_back(row);
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

// verbs that draw samples rather than take --alpha
bool is_mc_verb(const std::string& verb) {
    return verb == "mc-levy" || verb == "mc-census" || verb == "mc-freq";
}

unsigned mc_freq_depth(long long n_max) {
    // smallest m with F_{m+1} > n_max: every accepted sample then has
    // q_m > n_max, so the census never reads past the sampled prefix
    Int a = 0, b = 1;  // F_0, F_1
    unsigned m = 0;
    while (b <= int_from(n_max)) {
        Int c = a + b;
        a = b;
        b = std::move(c);
        ++m;
    }
    return m;
}

}  // namespace

Command parse_command(const std::vector<std::string>& argv) {
    CLI::App app{"exact gap structure of the points <k alpha> on the unit circle", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

    Command cmd;
    cmd.argv_echo = argv;

    std::string config_path;
    bool seed_set = false, digits_set = false, count_set = false, bits_set = false;
    unsigned precision_bits = 128;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cmd.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cmd.out_path, "write the report to this file instead of stdout");
        sub->add_option("--digits", cmd.digits, "decimal places for rounded columns")
            ->check(CLI::Range(0, 200))
            ->each([&](const std::string&) { digits_set = true; });
        sub->add_flag("--no-manifest", cmd.no_manifest, "omit the run manifest header");
        sub->add_option("--config", config_path, "JSON file with default knob values");
    };
    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", cmd.alpha_text, "alpha as p/q, (p+sqrt d)/q, or [0;a1,...]")
            ->required();
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", cmd.seed, "sampling seed")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--count", cmd.count, "number of samples")
            ->each([&](const std::string&) { count_set = true; });
        sub->add_option("--precision-bits", precision_bits, "bits of each sampled value")
            ->each([&](const std::string&) { bits_set = true; });
    };

    long long n = 0, n_max = 0, n_lo = 0, n_hi = 0;
    std::string checkpoints_text;

    auto* sub_expand = app.add_subcommand("expand", "continued fraction digits of alpha");
    add_alpha(sub_expand);
    add_common(sub_expand);

    auto* sub_conv = app.add_subcommand("convergents", "convergents p_n/q_n up to index n");
    add_alpha(sub_conv);
    sub_conv->add_option("--n", n, "largest convergent index")->required();
    add_common(sub_conv);

    auto* sub_gaps = app.add_subcommand("gaps", "exact gap lengths of <k alpha>, k < N");
    add_alpha(sub_gaps);
    sub_gaps->add_option("--n", n, "number of points N")->required();
    add_common(sub_gaps);

    auto* sub_predict = app.add_subcommand("predict", "neighbor indices u2, uN and the two-gap test");
    add_alpha(sub_predict);
    sub_predict->add_option("--n", n, "number of points N")->required();
    add_common(sub_predict);

    auto* sub_twogaps = app.add_subcommand("twogaps", "all N <= nmax with exactly two gap lengths");
    add_alpha(sub_twogaps);
    sub_twogaps->add_option("--nmax", n_max, "largest N to scan")->required();
    add_common(sub_twogaps);

    auto* sub_freq = app.add_subcommand("freq", "two-gap counts and ratio bounds at checkpoints");
    add_alpha(sub_freq);
    sub_freq->add_option("--checkpoints", checkpoints_text, "comma separated N values, increasing")
        ->required();
    add_common(sub_freq);

    auto* sub_closed = app.add_subcommand("closed-form", "denominator growth from the period block");
    add_alpha(sub_closed);
    sub_closed->add_option("--n", n, "largest index to evaluate")->required();
    add_common(sub_closed);

    auto* sub_levy = app.add_subcommand("mc-levy", "sampled ln(q_n)/n statistics");
    add_sampling(sub_levy);
    sub_levy->add_option("--n", n, "CF depth n")->required();
    add_common(sub_levy);

    auto* sub_census = app.add_subcommand("mc-census", "sampled large-digit (a_n >= n^2) census");
    add_sampling(sub_census);
    sub_census->add_option("--n-lo", n_lo, "window start")->required();
    sub_census->add_option("--n-hi", n_hi, "window end")->required();
    add_common(sub_census);

    auto* sub_mcfreq = app.add_subcommand("mc-freq", "sampled two-gap counts up to nmax");
    add_sampling(sub_mcfreq);
    sub_mcfreq->add_option("--nmax", n_max, "largest N to scan")->required();
    add_common(sub_mcfreq);

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{std::string(kToolName) + " " + kVersion + "\n"};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cmd.verb = app.get_subcommands().front()->get_name();
    if (sub_conv->parsed() || sub_gaps->parsed() || sub_predict->parsed() ||
        sub_closed->parsed() || sub_levy->parsed()) {
        cmd.n = n;
    }
    if (sub_twogaps->parsed() || sub_mcfreq->parsed()) cmd.n_max = n_max;
    if (sub_census->parsed()) {
        cmd.n_lo = n_lo;
        cmd.n_hi = n_hi;
    }
    if (sub_freq->parsed()) cmd.checkpoints = parse_checkpoints(checkpoints_text);
    if (bits_set) cmd.precision_bits = precision_bits;

    // precedence below explicit flags: environment, then --config file
    if (!seed_set) {
        if (auto v = env_value("THREEGAP_SEED")) {
            long long s = to_ll(*v, "THREEGAP_SEED");
            if (s < 0) throw UsageError("THREEGAP_SEED must be >= 0");
            cmd.seed = static_cast<std::uint64_t>(s);
            seed_set = true;
        }
    }
    if (!digits_set) {
        if (auto v = env_value("THREEGAP_DIGITS")) {
            long long d = to_ll(*v, "THREEGAP_DIGITS");
            if (d < 0 || d > 200) throw UsageError("THREEGAP_DIGITS must be in [0,200]");
            cmd.digits = static_cast<int>(d);
            digits_set = true;
        }
    }
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw UsageError("cannot open config file " + config_path);
        Json cfg;
        try {
            in >> cfg;
        } catch (const std::exception& e) {
            throw UsageError("bad config file " + config_path + ": " + e.what());
        }
        if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
        try {
            for (auto& [key, value] : cfg.items()) {
                if (key == "seed") {
                    if (!seed_set) cmd.seed = value.get<std::uint64_t>();
                } else if (key == "digits") {
                    if (!digits_set) cmd.digits = value.get<int>();
                } else if (key == "count") {
                    if (!count_set) cmd.count = value.get<std::size_t>();
                } else if (key == "precision_bits") {
                    if (!bits_set) cmd.precision_bits = value.get<unsigned>();
                } else {
                    throw UsageError("unknown config key '" + key + "'");
                }
            }
        } catch (const Json::exception& e) {
            throw UsageError("bad config value in " + config_path + ": " + e.what());
        }
    }
    if (cmd.digits < 0 || cmd.digits > 200) throw UsageError("digits must be in [0,200]");
    return cmd;
}

namespace {

struct VerbOutput {
    Table table;
    std::optional<std::string> alpha_echo;
    bool sampled = false;
    unsigned resolved_bits = 0;
    unsigned resolved_depth = 0;
};

std::string rat(const Rational& r) { return rational_string(r); }

VerbOutput run_expand(const Command&, const AlphaSource& src) {
    VerbOutput out;
    out.table.columns = {"position", "digit", "role"};
    const CFExpansion& cf = src.cf();
    std::size_t pos = 1;
    for (const Int& a : cf.preperiod()) {
        const char* role = cf.is_periodic() ? "preperiod" : (cf.is_truncated() ? "prefix" : "digit");
        out.table.add(Json::array({pos++, a.get_str(), role}));
    }
    for (const Int& a : cf.period()) {
        out.table.add(Json::array({pos++, a.get_str(), "period"}));
    }
    return out;
}

VerbOutput run_convergents(const Command& cmd, const AlphaSource& src) {
    if (*cmd.n < 0) throw UsageError("--n must be >= 0");
    VerbOutput out;
    out.table.columns = {"n", "p", "q"};
    for (const Convergent& c : convergents(src.cf(), *cmd.n)) {
        out.table.add(Json::array({c.n, c.p.get_str(), c.q.get_str()}));
    }
    return out;
}

VerbOutput run_gaps(const Command& cmd, const AlphaSource& src) {
    if (*cmd.n < 1) throw UsageError("--n must be >= 1");
    GapReport rep = gap_report(src, *cmd.n);
    VerbOutput out;
    out.table.columns = {"N", "distinct_count", "gap_value_exact", "gap_value_decimal",
                         "multiplicity"};
    for (std::size_t i = 0; i < rep.gaps.size(); ++i) {
        out.table.add(Json::array({rep.n_points, rep.gaps.size(), rat(rep.gaps[i]),
                                   decimal_string(rep.gaps[i], cmd.digits),
                                   rep.multiplicities[i]}));
    }
    return out;
}

VerbOutput run_predict(const Command& cmd, const AlphaSource& src) {
    if (*cmd.n < 1) throw UsageError("--n must be >= 1");
    TwoGapPrediction pred = predict_uvals(src.cf(), *cmd.n);
    VerbOutput out;
    out.table.columns = {"N", "scenario", "n", "i", "u2", "uN", "is_two_gap"};
    Json i_cell;
    if (pred.i) i_cell = pred.i->get_str();
    out.table.add(Json::array({pred.n_points, scenario_name(pred.scenario), pred.n, i_cell,
                               pred.u2.get_str(), pred.un.get_str(), pred.is_two_gap}));
    return out;
}

VerbOutput run_twogaps(const Command& cmd, const AlphaSource& src) {
    if (*cmd.n_max < 2) throw UsageError("--nmax must be >= 2");
    VerbOutput out;
    out.table.columns = {"N"};
    for (long long v : two_gap_set_up_to(src.cf(), *cmd.n_max)) {
        out.table.add(Json::array({v}));
    }
    return out;
}

VerbOutput run_freq(const Command& cmd, const AlphaSource& src) {
    VerbOutput out;
    out.table.columns = {"N", "count", "ratio_exact", "ratio_decimal", "upper_bound_exact"};
    for (const FrequencyRow& row : frequency_trace(src.cf(), cmd.checkpoints)) {
        out.table.add(Json::array({row.n_points, row.count, rat(row.ratio),
                                   decimal_string(row.ratio, cmd.digits), rat(row.upper_bound)}));
    }
    return out;
}

VerbOutput run_closed_form(const Command& cmd, const AlphaSource& src) {
    const CFExpansion& cf = src.cf();
    if (!cf.is_periodic()) {
        throw RequiresPeriodicError("closed-form growth needs an eventually periodic expansion");
    }
    long start = std::max<long>(static_cast<long>(cf.preperiod_length()), 1);
    if (*cmd.n < start) {
        throw UsageError("--n must be >= " + std::to_string(start) +
                         " (first index past the preperiod)");
    }
    ConvergentTable table(cf);
    VerbOutput out;
    out.table.columns = {"n",
                         "j",
                         "l",
                         "q_prev_closed_form",
                         "q_prev_recurrence",
                         "digit_sum_exact",
                         "digit_sum_decimal"};
    for (long idx = start; idx <= *cmd.n; ++idx) {
        PeriodDecomposition dec = period_decomposition(cf, idx);
        Int closed = q_closed_form(cf, idx);
        Rational ds = digit_sum_over_q(cf, idx);
        out.table.add(Json::array({idx, dec.j, dec.l, closed.get_str(),
                                   table.q(idx - 1).get_str(), rat(ds),
                                   decimal_string(ds, cmd.digits)}));
    }
    return out;
}

VerbOutput run_mc_levy(const Command& cmd) {
    if (*cmd.n < 1) throw UsageError("--n must be >= 1");
    VerbOutput out;
    out.sampled = true;
    out.resolved_bits = cmd.precision_bits.value_or(128);
    out.resolved_depth = static_cast<unsigned>(*cmd.n);
    SampleSpec spec{cmd.seed, cmd.count, out.resolved_bits, out.resolved_depth};
    SampleBatch batch = sample_alpha(spec);
    out.table.columns = {"sample_id", "n", "ln_qn_over_n"};
    for (std::size_t i = 0; i < batch.samples.size(); ++i) {
        double v = levy_statistic(batch.samples[i], *cmd.n);
        out.table.add(Json::array({i, *cmd.n, decimal_string(v, cmd.digits)}));
    }
    return out;
}

VerbOutput run_mc_census(const Command& cmd) {
    if (*cmd.n_lo < 1 || *cmd.n_hi < *cmd.n_lo) {
        throw UsageError("need 1 <= --n-lo <= --n-hi");
    }
    VerbOutput out;
    out.sampled = true;
    out.resolved_bits = cmd.precision_bits.value_or(128);
    out.resolved_depth = static_cast<unsigned>(*cmd.n_hi);
    SampleSpec spec{cmd.seed, cmd.count, out.resolved_bits, out.resolved_depth};
    SampleBatch batch = sample_alpha(spec);
    MetricReport rep = large_digit_census(batch.samples, *cmd.n_lo, *cmd.n_hi);
    out.table.columns = {"sample_id", "hit"};
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        out.table.add(Json::array({i, rep.values[i] != 0.0 ? 1 : 0}));
    }
    return out;
}

VerbOutput run_mc_freq(const Command& cmd) {
    if (*cmd.n_max < 2) throw UsageError("--nmax must be >= 2");
    VerbOutput out;
    out.sampled = true;
    out.resolved_depth = mc_freq_depth(*cmd.n_max);
    out.resolved_bits = cmd.precision_bits.value_or(4 * out.resolved_depth + 128);
    SampleSpec spec{cmd.seed, cmd.count, out.resolved_bits, out.resolved_depth};
    SampleBatch batch = sample_alpha(spec);
    out.table.columns = {"sample_id", "count", "ratio_exact", "ratio_decimal"};
    for (std::size_t i = 0; i < batch.samples.size(); ++i) {
        auto events = two_gap_set_up_to(batch.samples[i], *cmd.n_max);
        long long count = static_cast<long long>(events.size());
        Rational ratio = make_rational(int_from(count), int_from(*cmd.n_max));
        out.table.add(Json::array(
            {i, count, rat(ratio), decimal_string(ratio, cmd.digits)}));
    }
    return out;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
    VerbOutput result;
    std::optional<AlphaSource> src;

    if (!is_mc_verb(cmd.verb)) {
        try {
            src = parse_alpha(cmd.alpha_text);
        } catch (const InvalidInputError& e) {
            throw UsageError(std::string("alpha: ") + e.what());
        }
    }

    if (cmd.verb == "expand") result = run_expand(cmd, *src);
    else if (cmd.verb == "convergents") result = run_convergents(cmd, *src);
    else if (cmd.verb == "gaps") result = run_gaps(cmd, *src);
    else if (cmd.verb == "predict") result = run_predict(cmd, *src);
    else if (cmd.verb == "twogaps") result = run_twogaps(cmd, *src);
    else if (cmd.verb == "freq") result = run_freq(cmd, *src);
    else if (cmd.verb == "closed-form") result = run_closed_form(cmd, *src);
    else if (cmd.verb == "mc-levy") result = run_mc_levy(cmd);
    else if (cmd.verb == "mc-census") result = run_mc_census(cmd);
    else if (cmd.verb == "mc-freq") result = run_mc_freq(cmd);
    else throw UsageError("unknown verb " + cmd.verb);

    if (src) result.alpha_echo = src->describe();

    std::vector<std::pair<std::string, std::string>> manifest;
    if (!cmd.no_manifest) {
        manifest.emplace_back("tool", std::string(kToolName) + " " + kVersion);
        manifest.emplace_back("command", join_args(cmd.argv_echo));
        if (result.alpha_echo) manifest.emplace_back("alpha", *result.alpha_echo);
        if (result.sampled) {
            manifest.emplace_back("seed", std::to_string(cmd.seed));
            manifest.emplace_back("count", std::to_string(cmd.count));
            manifest.emplace_back("precision_bits", std::to_string(result.resolved_bits));
            manifest.emplace_back("max_index", std::to_string(result.resolved_depth));
        }
        manifest.emplace_back("digits", std::to_string(cmd.digits));
        manifest.emplace_back("timestamp", iso_utc_now());
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cmd.out_path.empty()) {
        file.open(cmd.out_path);
        if (!file) throw UsageError("cannot open output file " + cmd.out_path);
        sink = &file;
    }
    if (cmd.format == "json") {
        write_json(*sink, result.table, manifest);
    } else {
        write_csv(*sink, result.table, manifest);
    }
    (void)err;
    return 0;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        Command cmd = parse_command(args);
        return execute(cmd, std::cout, std::cerr);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace threegap
