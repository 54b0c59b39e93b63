#pragma once

#include <optional>
#include <span>

#include "offload/model.hpp"
#include "offload/timing.hpp"

namespace offload {

// bottleneck_rate * (1/local - 1/remote): the bits-per-instruction budget
// the offloading system can absorb before transfer outweighs the compute
// speedup. Negative when the remote processor is slower.
struct CapacityReport {
    double capacity = 0.0;        // bits/instruction
    double bottleneck_rate = 0.0; // bits/sec
    double local_rate = 0.0;      // instructions/sec
    double remote_rate = 0.0;     // instructions/sec
};

// Job-size-agnostic per-path delay: sum over hops of
// queue_delay + packet_bits/trans_rate, with packet_bits pinned to the MTU.
struct HopOverhead {
    double value = 0.0;  // sec
};

// Computing-to-communication ratio. Throws "infinite CCR" when comm_time
// is zero; callers treat that case as always-offload whenever rlr > 1.
double ccr(double compute_time, double comm_time);

// Remote-to-local execution rate ratio.
double rlr(const Processor& remote, const Processor& local);

// Minimal rate ratio (exclusive bound) that makes offloading favorable at
// the given ccr: 1/ccr + 1.
double rlr_threshold(double ccr_value);

HopOverhead hop_overhead(const NetworkPath& path,
                         double packet_bits = kDefaultMtuBits);

// Full completion-time comparison. Favorable requires a strictly smaller
// remote total; exact ties resolve to "do not offload".
OffloadDecision offload_favorable(const ComputeJob& job, const Processor& local,
                                  const CloudResource& resource,
                                  double mtu_bits = kDefaultMtuBits);

CapacityReport capacity(const Processor& local, const Processor& remote,
                        double bottleneck_rate);

// 1/local_rate - 1/remote_rate, in sec/instruction.
double rate_delta(const Processor& local, const Processor& remote);

// (input_bits + output_bits) / instructions, bits per instruction.
double inverse_intensity(const ComputeJob& job);

// Uncongested-network test: capacity strictly exceeds the job's
// bits-per-instruction ratio.
bool simplified_favorable(const ComputeJob& job, const Processor& local,
                          const Processor& remote, double bottleneck_rate);

// Infimum bottleneck rate making simplified_favorable true. Throws when the
// remote processor is not faster than the local one.
double required_bottleneck_rate(const ComputeJob& job, const Processor& local,
                                const Processor& remote);

// Infimum remote rate making simplified_favorable true. Throws when the
// transfer alone already exceeds the local compute time.
double required_remote_rate(const ComputeJob& job, const Processor& local,
                            double bottleneck_rate);

// Chosen execution site: empty tier_index means run locally.
struct Placement {
    std::optional<int> tier_index;
    TimeBreakdown breakdown;

    bool is_local() const { return !tier_index.has_value(); }
};

// Minimizes total completion time over {local} + resources. Ties resolve
// toward local, then toward the lowest tier_index.
Placement best_placement(const ComputeJob& job, const Processor& local,
                         std::span<const CloudResource> resources,
                         double mtu_bits = kDefaultMtuBits);

// Three algebraic phrasings of the same offload test. They must return the
// same verdict on every input; the validation suite sweeps them against
// each other.
bool favorable_by_completion(const ComputeJob& job, const Processor& local,
                             const CloudResource& resource,
                             double mtu_bits = kDefaultMtuBits);
// C * (E/e - 1) > E * comm_time
bool favorable_by_speedup(const ComputeJob& job, const Processor& local,
                          const CloudResource& resource,
                          double mtu_bits = kDefaultMtuBits);
// rlr > rlr_threshold(ccr) with ccr computed from the remote compute time
bool favorable_by_rate_ratio(const ComputeJob& job, const Processor& local,
                             const CloudResource& resource,
                             double mtu_bits = kDefaultMtuBits);

}  // namespace offload
