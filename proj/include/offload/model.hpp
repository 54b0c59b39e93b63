#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace offload {

// Canonical units everywhere in the core: instructions, bits, seconds,
// meters, bits/sec, instructions/sec. Human-facing unit suffixes (Kbps,
// MIPS, ...) are handled at the CLI boundary only.

// An execution resource rated by instruction throughput.
struct Processor {
    std::string name;
    double exec_rate = 0.0;  // instructions/sec
};

// One network hop: the transmission channel plus the fixed delays paid
// whenever a packet crosses it.
struct NetworkHop {
    double trans_rate = 0.0;   // bits/sec
    double queue_delay = 0.0;  // sec
    double proc_delay = 0.0;   // sec
    double length = 0.0;       // meters
};

// Ordered hop sequence from the client toward a compute resource.
struct NetworkPath {
    std::vector<NetworkHop> hops;
};

// A computational job: instructions to execute and the bits that must move
// in each direction if it runs remotely.
struct ComputeJob {
    double instructions = 0.0;
    double input_bits = 0.0;
    double output_bits = 0.0;

    double total_bits() const { return input_bits + output_bits; }
};

// A file split for transmission: full-size packets followed by a remainder
// packet. When the file is an exact multiple of the full size, the
// remainder packet is itself full-size.
struct PacketTrain {
    double full_packet_bits = 0.0;    // S
    long long full_packet_count = 0;  // packets of size S ahead of the last
    double last_packet_bits = 0.0;    // N, 0 < N <= S

    double total_bits() const {
        return static_cast<double>(full_packet_count) * full_packet_bits +
               last_packet_bits;
    }
    long long packet_count() const { return full_packet_count + 1; }
};

// A remote processor reachable over a path, positioned in a tiered
// deployment (1 = nearest tier).
struct CloudResource {
    Processor processor;
    NetworkPath path;
    int tier_index = 1;
};

// Outcome of comparing local and remote completion time.
struct OffloadDecision {
    bool favorable = false;
    double local_time = 0.0;   // sec
    double remote_time = 0.0;  // sec
    double margin = 0.0;       // sec, local_time - remote_time
};

// One failed invariant. Violations are data, not failures: validate()
// reports them all instead of throwing.
struct Violation {
    std::string field;
    std::string message;
};

using Violations = std::vector<Violation>;

Violations validate(const Processor& proc);
Violations validate(const NetworkHop& hop);
Violations validate(const NetworkPath& path);
Violations validate(const ComputeJob& job);
Violations validate(const PacketTrain& train);
Violations validate(const CloudResource& resource);
Violations validate(const OffloadDecision& decision);

// Joins violations into "field: message; field: message".
std::string describe(const Violations& violations);

// Throws std::invalid_argument listing every violation. Core operations
// call this on entry; valid inputs pass through untouched.
template <typename T>
void require_valid(const T& entity) {
    const Violations v = validate(entity);
    if (!v.empty()) {
        throw std::invalid_argument(describe(v));
    }
}

// Minimum transmission rate over the path's hops (the path must be valid).
double bottleneck_rate(const NetworkPath& path);

// Sum of per-hop queueing delays over the path.
double total_queue_delay(const NetworkPath& path);

}  // namespace offload
