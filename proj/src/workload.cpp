#include "offload/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace offload {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

bool parse_int64(const std::string& text, std::int64_t& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_uint64(const std::string& text, std::uint64_t& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

ParseResult parse_trace(std::istream& input) {
    if (input.bad()) {
        throw std::runtime_error("unreadable trace stream");
    }
    ParseResult result;
    std::string line;
    std::size_t line_number = 0;

    if (!std::getline(input, line)) {
        result.diagnostics.push_back({1, "missing header"});
        return result;
    }
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kTraceHeader) {
        result.diagnostics.push_back({line_number, "missing header"});
        return result;
    }

    while (std::getline(input, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6) {
            result.diagnostics.push_back(
                {line_number, "expected 6 fields, got " + std::to_string(fields.size())});
            continue;
        }
        TraceRecord record;
        record.job_id = fields[0];
        record.app_name = fields[1];
        if (record.app_name.empty()) {
            result.diagnostics.push_back({line_number, "app_name must be non-empty"});
            continue;
        }
        if (!parse_int64(fields[2], record.job_size) || record.job_size < 1) {
            result.diagnostics.push_back({line_number, "job_size must be an integer >= 1"});
            continue;
        }
        if (!parse_uint64(fields[3], record.bytes_written)) {
            result.diagnostics.push_back(
                {line_number, "bytes_written must be a non-negative integer"});
            continue;
        }
        if (!parse_uint64(fields[4], record.bytes_read)) {
            result.diagnostics.push_back(
                {line_number, "bytes_read must be a non-negative integer"});
            continue;
        }
        if (!parse_double(fields[5], record.exec_time) ||
            !std::isfinite(record.exec_time) || !(record.exec_time > 0.0)) {
            result.diagnostics.push_back({line_number, "exec_time must be > 0"});
            continue;
        }
        result.records.push_back(std::move(record));
    }
    if (input.bad()) {
        throw std::runtime_error("unreadable trace stream");
    }
    return result;
}

void write_trace(std::ostream& output, std::span<const TraceRecord> records) {
    output << kTraceHeader << '\n';
    char exec[64];
    for (const TraceRecord& record : records) {
        std::snprintf(exec, sizeof(exec), "%.17g", record.exec_time);
        output << record.job_id << ',' << record.app_name << ','
               << record.job_size << ',' << record.bytes_written << ','
               << record.bytes_read << ',' << exec << '\n';
    }
}

double derive_inverse_intensity(const TraceRecord& record, double assumed_rate) {
    if (!std::isfinite(assumed_rate) || !(assumed_rate > 0.0)) {
        throw std::invalid_argument("assumed_rate must be finite and > 0");
    }
    if (!(record.exec_time > 0.0)) {
        throw std::invalid_argument("exec_time must be > 0");
    }
    const double bits = 8.0 * (static_cast<double>(record.bytes_read) +
                               static_cast<double>(record.bytes_written));
    const double instructions = record.exec_time * assumed_rate;
    return bits / instructions;
}

std::vector<AppStats> aggregate_by_app(std::span<const TraceRecord> records,
                                       double assumed_rate) {
    struct Accumulator {
        std::size_t count = 0;
        double min = std::numeric_limits<double>::infinity();
        double max = -std::numeric_limits<double>::infinity();
        double sum = 0.0;
    };
    std::map<std::string, Accumulator> by_app;
    for (const TraceRecord& record : records) {
        const double fc = derive_inverse_intensity(record, assumed_rate);
        Accumulator& acc = by_app[record.app_name];
        ++acc.count;
        acc.min = std::min(acc.min, fc);
        acc.max = std::max(acc.max, fc);
        acc.sum += fc;
    }
    std::vector<AppStats> stats;
    stats.reserve(by_app.size());
    for (const auto& [name, acc] : by_app) {
        AppStats entry;
        entry.app_name = name;
        entry.count = acc.count;
        entry.min_fc = acc.min;
        // Accumulated rounding must not push the mean outside [min, max].
        entry.avg_fc = std::clamp(acc.sum / static_cast<double>(acc.count),
                                  acc.min, acc.max);
        entry.max_fc = acc.max;
        stats.push_back(std::move(entry));
    }
    return stats;
}

const char* to_string(OffloadVerdict verdict) {
    switch (verdict) {
        case OffloadVerdict::none:
            return "none";
        case OffloadVerdict::some:
            return "some";
        case OffloadVerdict::all:
            return "all";
    }
    return "unknown";
}

std::vector<AppClassification> classify_apps(std::span<const AppStats> stats,
                                             double capacity) {
    std::vector<AppClassification> verdicts;
    verdicts.reserve(stats.size());
    for (const AppStats& app : stats) {
        AppClassification entry;
        entry.app_name = app.app_name;
        if (app.max_fc < capacity) {
            entry.verdict = OffloadVerdict::all;
        } else if (app.min_fc >= capacity) {
            entry.verdict = OffloadVerdict::none;
        } else {
            entry.verdict = OffloadVerdict::some;
        }
        verdicts.push_back(std::move(entry));
    }
    return verdicts;
}

}  // namespace offload
