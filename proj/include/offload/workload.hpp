#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace offload {

// Header every trace file must carry, byte for byte.
inline constexpr const char* kTraceHeader =
    "job_id,app_name,job_size,bytes_written,bytes_read,exec_time_s";

// One job from an HPC accounting trace. job_size (allocation units) is
// preserved but takes no part in any derivation.
struct TraceRecord {
    std::string job_id;
    std::string app_name;
    std::int64_t job_size = 1;
    std::uint64_t bytes_written = 0;
    std::uint64_t bytes_read = 0;
    double exec_time = 0.0;  // sec
};

// A row the parser had to skip, with the 1-based line number.
struct ParseDiagnostic {
    std::size_t line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<TraceRecord> records;
    std::vector<ParseDiagnostic> diagnostics;
};

// Reads trace CSV. Malformed rows become diagnostics, not errors; valid
// rows come back in file order. Throws only when the stream itself is
// unreadable.
ParseResult parse_trace(std::istream& input);

// Writes records back out in the same CSV format. exec_time round-trips
// exactly through parse_trace.
void write_trace(std::ostream& output, std::span<const TraceRecord> records);

// Bits moved per instruction executed: 8*(bytes_read + bytes_written) over
// exec_time * assumed_rate.
double derive_inverse_intensity(const TraceRecord& record, double assumed_rate);

// Per-application spread of derived bits-per-instruction values.
struct AppStats {
    std::string app_name;
    std::size_t count = 0;
    double min_fc = 0.0;
    double avg_fc = 0.0;  // unweighted per-job mean
    double max_fc = 0.0;
};

// Groups records by app_name; output sorted by app_name.
std::vector<AppStats> aggregate_by_app(std::span<const TraceRecord> records,
                                       double assumed_rate);

// Whether offloading helps all, some, or none of an application's jobs at
// a given system capacity. Ordered so that a rising capacity can only move
// a verdict upward.
enum class OffloadVerdict { none, some, all };

const char* to_string(OffloadVerdict verdict);

struct AppClassification {
    std::string app_name;
    OffloadVerdict verdict = OffloadVerdict::none;
};

// all  <=> max_fc <  capacity
// none <=> min_fc >= capacity
std::vector<AppClassification> classify_apps(std::span<const AppStats> stats,
                                             double capacity);

}  // namespace offload
