#include "offload/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "offload/catalog.hpp"
#include "offload/decision.hpp"
#include "offload/model.hpp"
#include "offload/netsim.hpp"
#include "offload/timing.hpp"
#include "offload/validation.hpp"
#include "offload/workload.hpp"

namespace offload::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- value parsing -------------------------------------------------------

// Plain double, whole string must parse.
double parse_number(const std::string& text, const std::string& flag) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw UsageError("invalid number for " + flag + ": '" + text + "'");
    }
}

// Number with an optional decimal SI suffix (k, M, G).
double parse_rate(const std::string& text, const std::string& flag) {
    if (text.empty()) {
        throw UsageError("empty value for " + flag);
    }
    double scale = 1.0;
    std::string digits = text;
    switch (text.back()) {
        case 'k':
        case 'K':
            scale = 1e3;
            digits.pop_back();
            break;
        case 'M':
            scale = 1e6;
            digits.pop_back();
            break;
        case 'G':
            scale = 1e9;
            digits.pop_back();
            break;
        default:
            break;
    }
    return parse_number(digits, flag) * scale;
}

// Preset name or a rate with optional SI suffix.
Processor parse_processor(const std::string& spec, const std::string& flag) {
    if (auto preset = presets::find(spec)) {
        return *preset;
    }
    Processor proc{spec, parse_rate(spec, flag)};
    if (!validate(proc).empty()) {
        throw UsageError("invalid processor for " + flag + ": '" + spec + "'");
    }
    return proc;
}

// rate[:queue_delay]
NetworkHop parse_hop(const std::string& spec, const std::string& flag) {
    NetworkHop hop;
    const std::size_t colon = spec.find(':');
    hop.trans_rate = parse_rate(spec.substr(0, colon), flag);
    if (colon != std::string::npos) {
        hop.queue_delay = parse_number(spec.substr(colon + 1), flag);
    }
    if (!validate(hop).empty()) {
        throw UsageError("invalid hop for " + flag + ": '" + spec + "'");
    }
    return hop;
}

NetworkPath parse_path(const std::vector<std::string>& specs) {
    NetworkPath path;
    for (const std::string& spec : specs) {
        path.hops.push_back(parse_hop(spec, "--hop"));
    }
    return path;
}

// --- rendering -----------------------------------------------------------

std::string sig(double value, int digits = 6) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

json hop_json(const NetworkHop& hop) {
    return {{"trans_rate_bps", hop.trans_rate}, {"queue_delay_s", hop.queue_delay}};
}

json path_json(const NetworkPath& path) {
    json hops = json::array();
    for (const NetworkHop& hop : path.hops) {
        hops.push_back(hop_json(hop));
    }
    return hops;
}

json processor_json(const Processor& proc) {
    return {{"name", proc.name}, {"exec_rate_ips", proc.exec_rate}};
}

json breakdown_json(const TimeBreakdown& breakdown) {
    return {{"compute_s", breakdown.compute},
            {"transfer_s", breakdown.transfer},
            {"per_hop_overhead_s", breakdown.per_hop_overhead},
            {"total_s", breakdown.total}};
}

struct Envelope {
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> warnings;

    json document(const std::string& command) const {
        return {{"command", command},
                {"inputs", inputs},
                {"results", results},
                {"warnings", warnings}};
    }
};

void print_warnings(std::ostream& out, const Envelope& envelope) {
    for (const std::string& warning : envelope.warnings) {
        out << "warning: " << warning << "\n";
    }
}

// --- decide --------------------------------------------------------------

struct DecideArgs {
    std::string local_spec;
    std::string remote_spec;
    std::vector<std::string> hop_specs;
    double instructions = 0.0;
    double input_bits = 0.0;
    double output_bits = 0.0;
    double mtu_bits = kDefaultMtuBits;
    bool as_json = false;
};

int run_decide(const DecideArgs& args, std::ostream& out) {
    const Processor local = parse_processor(args.local_spec, "--local");
    const Processor remote = parse_processor(args.remote_spec, "--remote");
    const NetworkPath path = parse_path(args.hop_specs);
    const ComputeJob job{args.instructions, args.input_bits, args.output_bits};
    if (const Violations v = validate(job); !v.empty()) {
        throw UsageError("invalid job: " + describe(v));
    }
    const CloudResource resource{remote, path, 1};

    const TimeBreakdown local_time = completion_time_local(job, local);
    const TimeBreakdown remote_time = completion_time_remote(job, resource, args.mtu_bits);
    const OffloadDecision decision = offload_favorable(job, local, resource, args.mtu_bits);

    const double comm_time = remote_time.transfer + remote_time.per_hop_overhead;
    const double rate_ratio = rlr(remote, local);

    Envelope envelope;
    envelope.inputs = {{"local", processor_json(local)},
                       {"remote", processor_json(remote)},
                       {"hops", path_json(path)},
                       {"job",
                        {{"instructions", job.instructions},
                         {"input_bits", job.input_bits},
                         {"output_bits", job.output_bits},
                         {"total_bits", job.total_bits()}}},
                       {"mtu_bits", args.mtu_bits}};
    envelope.results = {{"favorable", decision.favorable},
                        {"verdict", decision.favorable ? "OFFLOAD" : "LOCAL"},
                        {"local", breakdown_json(local_time)},
                        {"remote", breakdown_json(remote_time)},
                        {"margin_s", decision.margin},
                        {"rlr", rate_ratio}};

    bool ccr_defined = comm_time > 0.0;
    double ccr_value = 0.0;
    double threshold = 0.0;
    if (ccr_defined) {
        ccr_value = ccr(remote_time.compute, comm_time);
        threshold = rlr_threshold(ccr_value);
        envelope.results["ccr"] = ccr_value;
        envelope.results["rlr_threshold"] = threshold;
        envelope.results["rlr_above_threshold"] = rate_ratio > threshold;
    } else {
        envelope.results["ccr"] = nullptr;
        envelope.results["rlr_threshold"] = nullptr;
        envelope.results["rlr_above_threshold"] = rate_ratio > 1.0;
        envelope.warnings.push_back(
            "communication time is zero; CCR undefined, offload favorable"
            " exactly when rlr > 1");
    }

    if (args.as_json) {
        out << envelope.document("decide").dump(2) << "\n";
        return kExitOk;
    }
    print_warnings(out, envelope);
    out << "decision          " << (decision.favorable ? "OFFLOAD" : "LOCAL") << "\n";
    out << "local total       " << sig(local_time.total) << " s\n";
    out << "remote total      " << sig(remote_time.total) << " s\n";
    out << "  compute         " << sig(remote_time.compute) << " s\n";
    out << "  transfer        " << sig(remote_time.transfer) << " s\n";
    out << "  hop overhead    " << sig(remote_time.per_hop_overhead) << " s\n";
    out << "margin            " << sig(decision.margin) << " s\n";
    if (ccr_defined) {
        out << "ccr               " << sig(ccr_value) << "\n";
    } else {
        out << "ccr               undefined (communication time is zero)\n";
    }
    out << "rlr               " << sig(rate_ratio) << "\n";
    if (ccr_defined) {
        out << "required rlr      " << sig(threshold) << " (exclusive), satisfied: "
            << (rate_ratio > threshold ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
    std::string axis;
    std::string min_spec;
    std::string max_spec;
    int points = 25;
    std::string local_spec;
    std::string remote_spec;
    std::string gamma_spec;
    std::string fc_spec;
    bool as_json = false;
};

int run_sweep(const SweepArgs& args, std::ostream& out) {
    const double min_value = parse_rate(args.min_spec, "--min");
    const double max_value = parse_rate(args.max_spec, "--max");
    if (!(min_value > 0.0) || !(max_value > min_value)) {
        throw UsageError("sweep range requires 0 < min < max");
    }
    if (args.points < 2) {
        throw UsageError("--points must be >= 2");
    }
    const Processor local = parse_processor(args.local_spec, "--local");

    const bool needs_remote = args.axis != "remote";
    const bool needs_gamma = args.axis != "gamma";
    const bool needs_fc = args.axis != "fc";
    Processor remote;
    double gamma = 0.0;
    double fc = 0.0;
    if (needs_remote) {
        if (args.remote_spec.empty()) {
            throw UsageError("--remote is required for axis " + args.axis);
        }
        remote = parse_processor(args.remote_spec, "--remote");
    }
    if (needs_gamma) {
        if (args.gamma_spec.empty()) {
            throw UsageError("--gamma is required for axis " + args.axis);
        }
        gamma = parse_rate(args.gamma_spec, "--gamma");
        if (!(gamma > 0.0)) {
            throw UsageError("--gamma must be > 0");
        }
    }
    if (needs_fc) {
        if (args.fc_spec.empty()) {
            throw UsageError("--fc is required for axis " + args.axis);
        }
        fc = parse_number(args.fc_spec, "--fc");
        if (!(fc >= 0.0) || !std::isfinite(fc)) {
            throw UsageError("--fc must be finite and >= 0");
        }
    }
    // A job carrying exactly the requested bits-per-instruction ratio.
    const ComputeJob ratio_job{1.0, fc, 0.0};

    Envelope envelope;
    envelope.inputs = {{"axis", args.axis},
                       {"min", min_value},
                       {"max", max_value},
                       {"points", args.points},
                       {"local", processor_json(local)}};
    if (needs_remote) {
        envelope.inputs["remote"] = processor_json(remote);
    }
    if (needs_gamma) {
        envelope.inputs["bottleneck_rate_bps"] = gamma;
    }
    if (needs_fc) {
        envelope.inputs["fc_bits_per_instruction"] = fc;
    }

    // Crossover first: an infeasible gamma sweep is an error, the rest
    // degrade to an annotation.
    bool has_crossover = false;
    double crossover = 0.0;
    std::string crossover_note;
    if (args.axis == "gamma") {
        if (!(rate_delta(local, remote) > 0.0)) {
            throw InfeasibleError(
                "remote not faster: no finite rate suffices (rate delta <= 0)");
        }
        if (fc > 0.0) {
            crossover = required_bottleneck_rate(ratio_job, local, remote);
            has_crossover = true;
        } else {
            crossover_note = "fc is zero: every positive rate is favorable";
        }
    } else if (args.axis == "remote") {
        try {
            crossover = required_remote_rate(ratio_job, local, gamma);
            has_crossover = true;
        } catch (const std::domain_error& e) {
            crossover_note = e.what();
        }
    } else {  // fc axis
        const double cap = capacity(local, remote, gamma).capacity;
        if (cap > 0.0) {
            crossover = cap;
            has_crossover = true;
        } else {
            crossover_note = "capacity is non-positive: no job benefits";
        }
    }

    struct Row {
        double value;
        double cap;
        bool favorable;
        bool is_crossover;
    };
    std::vector<Row> rows;
    const double ratio = max_value / min_value;
    for (int i = 0; i < args.points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(args.points - 1);
        const double value = min_value * std::pow(ratio, t);
        Row row{value, 0.0, false, false};
        if (args.axis == "gamma") {
            row.cap = capacity(local, remote, value).capacity;
            row.favorable = row.cap > fc;
        } else if (args.axis == "remote") {
            const Processor candidate{"remote", value};
            row.cap = capacity(local, candidate, gamma).capacity;
            row.favorable = row.cap > fc;
        } else {
            row.cap = capacity(local, remote, gamma).capacity;
            row.favorable = value < row.cap;
        }
        rows.push_back(row);
    }
    if (has_crossover) {
        if (crossover >= min_value && crossover <= max_value) {
            Row row{crossover, 0.0, false, true};
            if (args.axis == "gamma") {
                row.cap = capacity(local, remote, crossover).capacity;
                row.favorable = row.cap > fc;
            } else if (args.axis == "remote") {
                const Processor candidate{"remote", crossover};
                row.cap = capacity(local, candidate, gamma).capacity;
                row.favorable = row.cap > fc;
            } else {
                row.cap = capacity(local, remote, gamma).capacity;
                row.favorable = crossover < row.cap;
            }
            const auto insert_at = std::find_if(
                rows.begin(), rows.end(),
                [&](const Row& r) { return r.value >= crossover; });
            rows.insert(insert_at, row);
        } else {
            envelope.warnings.push_back("crossover " + sig(crossover) +
                                        " lies outside the sweep range");
        }
    } else if (!crossover_note.empty()) {
        envelope.warnings.push_back("no crossover: " + crossover_note);
    }

    const char* axis_label = args.axis == "gamma" ? "bottleneck rate (bits/s)"
                             : args.axis == "remote"
                                 ? "remote rate (instructions/s)"
                                 : "job F/C (bits/instruction)";
    json row_array = json::array();
    for (const Row& row : rows) {
        row_array.push_back({{"value", row.value},
                             {"capacity_bits_per_instruction", row.cap},
                             {"favorable", row.favorable},
                             {"crossover", row.is_crossover}});
    }
    envelope.results = {{"axis_label", axis_label}, {"rows", row_array}};
    envelope.results["crossover"] = has_crossover ? json(crossover) : json(nullptr);

    if (args.as_json) {
        out << envelope.document("sweep").dump(2) << "\n";
        return kExitOk;
    }
    print_warnings(out, envelope);
    const int axis_width =
        std::max<int>(26, static_cast<int>(std::string(axis_label).size()) + 2);
    out << std::left << std::setw(axis_width) << axis_label << std::setw(30)
        << "capacity (bits/instruction)" << "verdict\n";
    for (const Row& row : rows) {
        std::string value_text = sig(row.value);
        if (row.is_crossover) {
            value_text += " <- crossover";
        }
        out << std::left << std::setw(axis_width) << value_text << std::setw(30)
            << sig(row.cap) << (row.favorable ? "OFFLOAD" : "LOCAL") << "\n";
    }
    return kExitOk;
}

// --- tables --------------------------------------------------------------

int run_tables(bool as_json, std::ostream& out) {
    const std::vector<double> ccr_values = {1e-6, 1e-3, 0.01, 0.1, 1.0, 1e3, 1e6};
    const std::vector<Processor> locals = {presets::msp430(), presets::a9()};
    const std::vector<Processor> remotes = {presets::celeron(), presets::core_i3(),
                                            presets::xeon()};

    Envelope envelope;
    json threshold_rows = json::array();
    for (double value : ccr_values) {
        threshold_rows.push_back({{"ccr", value}, {"required_rlr", rlr_threshold(value)}});
    }
    json rlr_rows = json::array();
    json delta_rows = json::array();
    for (const Processor& local : locals) {
        json rlr_row = {{"local", local.name}};
        json delta_row = {{"local", local.name}};
        for (const Processor& remote : remotes) {
            rlr_row[remote.name] = rlr(remote, local);
            delta_row[remote.name] = rate_delta(local, remote);
        }
        rlr_rows.push_back(rlr_row);
        delta_rows.push_back(delta_row);
    }
    json catalog = json::array();
    for (const Processor& proc : presets::all()) {
        catalog.push_back(processor_json(proc));
    }
    envelope.inputs = {{"catalog", catalog}};
    envelope.results = {{"required_rlr_by_ccr", threshold_rows},
                        {"rlr_by_processor_pair", rlr_rows},
                        {"rate_delta_by_processor_pair", delta_rows}};

    if (as_json) {
        out << envelope.document("tables").dump(2) << "\n";
        return kExitOk;
    }

    out << "Required remote-to-local rate ratio by compute-to-communication ratio\n";
    out << "  " << std::left << std::setw(12) << "ccr" << "required rlr (exclusive)\n";
    for (double value : ccr_values) {
        out << "  " << std::left << std::setw(12) << sig(value)
            << sig(rlr_threshold(value), 7);
        if (value == 1e-6) {
            out << "  (~1e6 when rounded)";
        }
        out << "\n";
    }
    out << "\nRemote-to-local rate ratios, preset catalog\n";
    out << "  " << std::left << std::setw(16) << "local \\ remote";
    for (const Processor& remote : remotes) {
        out << std::setw(13) << remote.name;
    }
    out << "\n";
    for (const Processor& local : locals) {
        out << "  " << std::left << std::setw(16) << local.name;
        for (const Processor& remote : remotes) {
            out << std::setw(13) << sig(rlr(remote, local));
        }
        out << "\n";
    }
    out << "\nPer-instruction time deltas 1/e - 1/E (sec/instruction)\n";
    out << "  " << std::left << std::setw(16) << "local \\ remote";
    for (const Processor& remote : remotes) {
        out << std::setw(13) << remote.name;
    }
    out << "\n";
    for (const Processor& local : locals) {
        out << "  " << std::left << std::setw(16) << local.name;
        for (const Processor& remote : remotes) {
            out << std::setw(13) << sig(rate_delta(local, remote), 3);
        }
        out << "\n";
    }
    return kExitOk;
}

// --- trace ---------------------------------------------------------------

struct TraceArgs {
    std::string file;
    std::string assumed_rate_spec;
    std::string capacity_spec;
    std::string local_spec;
    std::string remote_spec;
    std::string gamma_spec;
    bool as_json = false;
};

int run_trace(const TraceArgs& args, std::ostream& out) {
    const double assumed_rate = parse_rate(args.assumed_rate_spec, "--assumed-rate");
    if (!(assumed_rate > 0.0)) {
        throw UsageError("--assumed-rate must be > 0");
    }

    const bool has_capacity = !args.capacity_spec.empty();
    const bool has_system = !args.local_spec.empty() || !args.remote_spec.empty() ||
                            !args.gamma_spec.empty();
    if (has_capacity == has_system) {
        throw UsageError(
            "provide either --capacity or the full --local/--remote/--gamma triple");
    }
    double cap = 0.0;
    Envelope envelope;
    envelope.inputs = {{"file", args.file}, {"assumed_rate_ips", assumed_rate}};
    if (has_capacity) {
        cap = parse_number(args.capacity_spec, "--capacity");
    } else {
        if (args.local_spec.empty() || args.remote_spec.empty() ||
            args.gamma_spec.empty()) {
            throw UsageError(
                "provide either --capacity or the full --local/--remote/--gamma triple");
        }
        const Processor local = parse_processor(args.local_spec, "--local");
        const Processor remote = parse_processor(args.remote_spec, "--remote");
        const double gamma = parse_rate(args.gamma_spec, "--gamma");
        cap = capacity(local, remote, gamma).capacity;
        envelope.inputs["local"] = processor_json(local);
        envelope.inputs["remote"] = processor_json(remote);
        envelope.inputs["bottleneck_rate_bps"] = gamma;
    }
    envelope.inputs["capacity_bits_per_instruction"] = cap;

    std::ifstream input(args.file);
    if (!input) {
        throw UsageError("cannot open trace file '" + args.file + "'");
    }
    const ParseResult parsed = parse_trace(input);
    for (const ParseDiagnostic& diagnostic : parsed.diagnostics) {
        envelope.warnings.push_back("line " + std::to_string(diagnostic.line) + ": " +
                                    diagnostic.message);
    }
    if (parsed.records.empty()) {
        throw UsageError("no valid rows in trace file '" + args.file + "'");
    }

    const std::vector<AppStats> stats = aggregate_by_app(parsed.records, assumed_rate);
    const std::vector<AppClassification> verdicts = classify_apps(stats, cap);

    json app_rows = json::array();
    for (std::size_t i = 0; i < stats.size(); ++i) {
        app_rows.push_back({{"app_name", stats[i].app_name},
                            {"count", stats[i].count},
                            {"min_fc", stats[i].min_fc},
                            {"avg_fc", stats[i].avg_fc},
                            {"max_fc", stats[i].max_fc},
                            {"verdict", to_string(verdicts[i].verdict)}});
    }
    envelope.results = {{"record_count", parsed.records.size()},
                        {"skipped_rows", parsed.diagnostics.size()},
                        {"apps", app_rows}};

    if (args.as_json) {
        out << envelope.document("trace").dump(2) << "\n";
        return kExitOk;
    }
    print_warnings(out, envelope);
    out << "capacity " << sig(cap) << " bits/instruction, assumed rate "
        << sig(assumed_rate) << " instructions/s\n";
    out << std::left << std::setw(16) << "app" << std::setw(8) << "jobs"
        << std::setw(14) << "min F/C" << std::setw(14) << "avg F/C"
        << std::setw(14) << "max F/C" << "verdict\n";
    for (std::size_t i = 0; i < stats.size(); ++i) {
        out << std::left << std::setw(16) << stats[i].app_name << std::setw(8)
            << stats[i].count << std::setw(14) << sig(stats[i].min_fc)
            << std::setw(14) << sig(stats[i].avg_fc) << std::setw(14)
            << sig(stats[i].max_fc) << to_string(verdicts[i].verdict) << "\n";
    }
    return kExitOk;
}

// --- validate ------------------------------------------------------------

struct ValidateArgs {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double mtu_bits = kDefaultMtuBits;
    std::string dump_events;
    bool as_json = false;
};

// A deterministic showcase run whose packet-level event trace can be dumped
// for inspection.
void dump_showcase_events(const ValidateArgs& args) {
    std::ofstream trace(args.dump_events);
    if (!trace) {
        throw UsageError("cannot open event trace file '" + args.dump_events + "'");
    }
    std::mt19937_64 rng(args.seed);
    std::uniform_real_distribution<double> exponent(3.0, 9.0);
    NetworkPath path;
    for (int i = 0; i < 4; ++i) {
        path.hops.push_back({std::pow(10.0, exponent(rng)), 0.0, 0.0, 0.0});
    }
    simulate_train(6.0 * args.mtu_bits, path, args.mtu_bits, &trace);
}

int run_validate(const ValidateArgs& args, std::ostream& out) {
    if (args.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    const ModelValidationReport report =
        run_model_validation(args.trials, args.seed, args.mtu_bits);

    if (!args.dump_events.empty()) {
        dump_showcase_events(args);
    }

    Envelope envelope;
    envelope.inputs = {{"trials", args.trials},
                       {"seed", args.seed},
                       {"mtu_bits", args.mtu_bits}};
    json gaps = json::array();
    for (const GapObservation& obs : report.hetero_observations) {
        gaps.push_back({{"file_bits", obs.file_bits},
                        {"hop_count", obs.hop_count},
                        {"closed_form_s", obs.closed_form},
                        {"simulated_s", obs.simulated},
                        {"gap_s", obs.gap}});
    }
    envelope.results = {
        {"equal_rate",
         {{"trials", report.equal_rate_trials},
          {"max_rel_error", report.equal_rate_max_rel_error},
          {"ok", report.equal_rate_ok}}},
        {"single_packet",
         {{"trials", report.single_packet_trials},
          {"max_abs_gap_s", report.single_packet_max_abs_gap},
          {"ok", report.single_packet_ok}}},
        {"heterogeneous",
         {{"trials", report.hetero_observations.size()},
          {"min_gap_s", report.hetero_min_gap},
          {"mean_gap_s", report.hetero_mean_gap},
          {"max_gap_s", report.hetero_max_gap},
          {"negative_count", report.hetero_negative_count},
          {"observations", gaps}}},
        {"ok", report.all_ok()}};

    if (args.as_json) {
        out << envelope.document("validate").dump(2) << "\n";
        return report.all_ok() ? kExitOk : kExitInfeasible;
    }
    out << "equal-rate identity   " << (report.equal_rate_ok ? "ok" : "FAILED")
        << " (" << report.equal_rate_trials << " trials, max rel error "
        << sig(report.equal_rate_max_rel_error, 3) << ")\n";
    out << "single-packet gap     " << (report.single_packet_ok ? "ok" : "FAILED")
        << " (" << report.single_packet_trials << " trials, max |gap| "
        << sig(report.single_packet_max_abs_gap, 3) << " s)\n";
    out << "heterogeneous gaps    " << report.hetero_observations.size()
        << " trials, min " << sig(report.hetero_min_gap) << " s, mean "
        << sig(report.hetero_mean_gap) << " s, max " << sig(report.hetero_max_gap)
        << " s, negative " << report.hetero_negative_count << "\n";
    return report.all_ok() ? kExitOk : kExitInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Completion-time models and feasibility analysis for computation offloading"};
    app.require_subcommand(1);

    DecideArgs decide_args;
    CLI::App* decide = app.add_subcommand(
        "decide", "Compare local and remote completion time for one job");
    decide->add_option("--local", decide_args.local_spec,
                       "Local processor: preset name or rate (SI suffix ok)")
        ->required();
    decide->add_option("--remote", decide_args.remote_spec, "Remote processor")
        ->required();
    decide->add_option("--hop", decide_args.hop_specs,
                       "Hop as rate[:queue_delay], first = nearest the client")
        ->required();
    decide->add_option("--instructions", decide_args.instructions,
                       "Job size in instructions")
        ->required();
    decide->add_option("--input-bits", decide_args.input_bits, "Input data size");
    decide->add_option("--output-bits", decide_args.output_bits, "Output data size");
    decide->add_option("--mtu-bits", decide_args.mtu_bits, "Packet size limit");
    decide->add_flag("--json", decide_args.as_json, "Machine-readable output");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep capacity and verdict along one system axis");
    sweep->add_option("--axis", sweep_args.axis, "gamma | remote | fc")
        ->required()
        ->check(CLI::IsMember({"gamma", "remote", "fc"}));
    sweep->add_option("--min", sweep_args.min_spec, "Axis minimum (SI suffix ok)")->required();
    sweep->add_option("--max", sweep_args.max_spec, "Axis maximum (SI suffix ok)")->required();
    sweep->add_option("--points", sweep_args.points, "Grid points (log-spaced)");
    sweep->add_option("--local", sweep_args.local_spec, "Local processor")->required();
    sweep->add_option("--remote", sweep_args.remote_spec, "Remote processor");
    sweep->add_option("--gamma", sweep_args.gamma_spec, "Bottleneck rate, bits/s");
    sweep->add_option("--fc", sweep_args.fc_spec, "Job bits/instruction ratio");
    sweep->add_flag("--json", sweep_args.as_json, "Machine-readable output");

    bool tables_json = false;
    CLI::App* tables = app.add_subcommand(
        "tables", "Print the preset rate-ratio and threshold tables");
    tables->add_flag("--json", tables_json, "Machine-readable output");

    TraceArgs trace_args;
    CLI::App* trace = app.add_subcommand(
        "trace", "Aggregate a job trace CSV and classify applications");
    trace->add_option("file", trace_args.file, "Trace CSV path")->required();
    trace->add_option("--assumed-rate", trace_args.assumed_rate_spec,
                      "Assumed execution rate, instructions/s")
        ->required();
    trace->add_option("--capacity", trace_args.capacity_spec,
                      "System capacity, bits/instruction");
    trace->add_option("--local", trace_args.local_spec, "Local processor");
    trace->add_option("--remote", trace_args.remote_spec, "Remote processor");
    trace->add_option("--gamma", trace_args.gamma_spec, "Bottleneck rate, bits/s");
    trace->add_flag("--json", trace_args.as_json, "Machine-readable output");

    ValidateArgs validate_args;
    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "Check the closed-form transfer model against the simulator");
    validate_cmd->add_option("--trials", validate_args.trials, "Cases per batch");
    validate_cmd->add_option("--seed", validate_args.seed, "RNG seed");
    validate_cmd->add_option("--mtu-bits", validate_args.mtu_bits, "Packet size limit");
    validate_cmd->add_option("--dump-events", validate_args.dump_events,
                             "Write a showcase packet event trace to this file");
    validate_cmd->add_flag("--json", validate_args.as_json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (decide->parsed()) {
            return run_decide(decide_args, out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_args, out);
        }
        if (tables->parsed()) {
            return run_tables(tables_json, out);
        }
        if (trace->parsed()) {
            return run_trace(trace_args, out);
        }
        if (validate_cmd->parsed()) {
            return run_validate(validate_args, out);
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace offload::cli
