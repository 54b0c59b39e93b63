#include "offload/decision.hpp"

#include <cmath>
#include <stdexcept>

namespace offload {

double ccr(double compute_time, double comm_time) {
    if (!std::isfinite(compute_time) || !(compute_time > 0.0)) {
        throw std::invalid_argument("compute_time must be finite and > 0");
    }
    if (!std::isfinite(comm_time) || comm_time < 0.0) {
        throw std::invalid_argument("comm_time must be finite and >= 0");
    }
    if (comm_time == 0.0) {
        throw std::domain_error("infinite CCR");
    }
    return compute_time / comm_time;
}

double rlr(const Processor& remote, const Processor& local) {
    require_valid(remote);
    require_valid(local);
    return remote.exec_rate / local.exec_rate;
}

double rlr_threshold(double ccr_value) {
    if (!std::isfinite(ccr_value) || !(ccr_value > 0.0)) {
        throw std::invalid_argument("ccr_value must be finite and > 0");
    }
    return 1.0 / ccr_value + 1.0;
}

HopOverhead hop_overhead(const NetworkPath& path, double packet_bits) {
    require_valid(path);
    if (!std::isfinite(packet_bits) || packet_bits < 0.0) {
        throw std::invalid_argument("packet_bits must be finite and >= 0");
    }
    HopOverhead overhead;
    for (const NetworkHop& hop : path.hops) {
        overhead.value += hop.queue_delay + packet_bits / hop.trans_rate;
    }
    return overhead;
}

OffloadDecision offload_favorable(const ComputeJob& job, const Processor& local,
                                  const CloudResource& resource, double mtu_bits) {
    const TimeBreakdown local_time = completion_time_local(job, local);
    const TimeBreakdown remote_time = completion_time_remote(job, resource, mtu_bits);
    OffloadDecision decision;
    decision.local_time = local_time.total;
    decision.remote_time = remote_time.total;
    decision.margin = decision.local_time - decision.remote_time;
    decision.favorable = decision.margin > 0.0;
    return decision;
}

CapacityReport capacity(const Processor& local, const Processor& remote,
                        double bottleneck_rate) {
    require_valid(local);
    require_valid(remote);
    if (!std::isfinite(bottleneck_rate) || !(bottleneck_rate > 0.0)) {
        throw std::invalid_argument("bottleneck_rate must be finite and > 0");
    }
    CapacityReport report;
    report.bottleneck_rate = bottleneck_rate;
    report.local_rate = local.exec_rate;
    report.remote_rate = remote.exec_rate;
    report.capacity = bottleneck_rate * rate_delta(local, remote);
    return report;
}

double rate_delta(const Processor& local, const Processor& remote) {
    require_valid(local);
    require_valid(remote);
    return 1.0 / local.exec_rate - 1.0 / remote.exec_rate;
}

double inverse_intensity(const ComputeJob& job) {
    require_valid(job);
    return job.total_bits() / job.instructions;
}

bool simplified_favorable(const ComputeJob& job, const Processor& local,
                          const Processor& remote, double bottleneck_rate) {
    return capacity(local, remote, bottleneck_rate).capacity > inverse_intensity(job);
}

double required_bottleneck_rate(const ComputeJob& job, const Processor& local,
                                const Processor& remote) {
    const double delta = rate_delta(local, remote);
    if (!(delta > 0.0)) {
        throw std::domain_error("remote not faster: no finite rate suffices");
    }
    return inverse_intensity(job) / delta;
}

double required_remote_rate(const ComputeJob& job, const Processor& local,
                            double bottleneck_rate) {
    require_valid(local);
    if (!std::isfinite(bottleneck_rate) || !(bottleneck_rate > 0.0)) {
        throw std::invalid_argument("bottleneck_rate must be finite and > 0");
    }
    const double transfer_per_instruction = inverse_intensity(job) / bottleneck_rate;
    const double budget = 1.0 / local.exec_rate - transfer_per_instruction;
    if (!(budget > 0.0)) {
        throw std::domain_error("transfer alone exceeds local compute time");
    }
    return 1.0 / budget;
}

Placement best_placement(const ComputeJob& job, const Processor& local,
                         std::span<const CloudResource> resources,
                         double mtu_bits) {
    Placement best;
    best.breakdown = completion_time_local(job, local);
    for (const CloudResource& resource : resources) {
        const TimeBreakdown remote = completion_time_remote(job, resource, mtu_bits);
        const bool better =
            remote.total < best.breakdown.total ||
            (remote.total == best.breakdown.total && !best.is_local() &&
             resource.tier_index < *best.tier_index);
        if (better) {
            best.tier_index = resource.tier_index;
            best.breakdown = remote;
        }
    }
    return best;
}

bool favorable_by_completion(const ComputeJob& job, const Processor& local,
                             const CloudResource& resource, double mtu_bits) {
    return offload_favorable(job, local, resource, mtu_bits).favorable;
}

bool favorable_by_speedup(const ComputeJob& job, const Processor& local,
                          const CloudResource& resource, double mtu_bits) {
    require_valid(local);
    const double comm_time =
        train_transfer_time(job.total_bits(), resource.path, mtu_bits);
    const double remote_rate = resource.processor.exec_rate;
    const double speedup = rlr(resource.processor, local);
    return job.instructions * (speedup - 1.0) > remote_rate * comm_time;
}

bool favorable_by_rate_ratio(const ComputeJob& job, const Processor& local,
                             const CloudResource& resource, double mtu_bits) {
    const double comm_time =
        train_transfer_time(job.total_bits(), resource.path, mtu_bits);
    const double ratio = rlr(resource.processor, local);
    if (comm_time == 0.0) {
        // Nothing to move: offloading wins exactly when the remote is faster.
        return ratio > 1.0;
    }
    const double remote_compute = compute_time(job, resource.processor);
    return ratio > rlr_threshold(ccr(remote_compute, comm_time));
}

}  // namespace offload
