#include "offload/timing.hpp"

#include <cmath>
#include <stdexcept>

namespace offload {

double compute_time(const ComputeJob& job, const Processor& proc) {
    require_valid(job);
    require_valid(proc);
    return job.instructions / proc.exec_rate;
}

double single_packet_hop_time(double packet_bits, const NetworkHop& hop,
                              bool include_minor) {
    require_valid(hop);
    if (!std::isfinite(packet_bits) || packet_bits < 0.0) {
        throw std::invalid_argument("packet_bits must be finite and >= 0");
    }
    const double base = hop.queue_delay + packet_bits / hop.trans_rate;
    if (!include_minor) {
        return base;
    }
    return hop.proc_delay + base + hop.length / kPropagationSpeedMps;
}

double end_to_end_packet_time(double packet_bits, const NetworkPath& path) {
    require_valid(path);
    double total = 0.0;
    for (const NetworkHop& hop : path.hops) {
        total += single_packet_hop_time(packet_bits, hop);
    }
    return total;
}

PacketTrain packetize(double file_bits, double mtu_bits) {
    if (!std::isfinite(file_bits) || file_bits < 0.0) {
        throw std::invalid_argument("file_bits must be finite and >= 0");
    }
    if (file_bits == 0.0) {
        throw std::invalid_argument("empty file");
    }
    if (!std::isfinite(mtu_bits) || !(mtu_bits > 0.0)) {
        throw std::invalid_argument("mtu_bits must be finite and > 0");
    }
    const double packets = std::ceil(file_bits / mtu_bits);
    if (packets >= 9.0e18) {
        throw std::invalid_argument("packet count exceeds representable range");
    }
    PacketTrain train;
    train.full_packet_bits = mtu_bits;
    train.full_packet_count = static_cast<long long>(packets) - 1;
    if (train.full_packet_count < 0) {
        train.full_packet_count = 0;
    }
    train.last_packet_bits =
        file_bits - static_cast<double>(train.full_packet_count) * mtu_bits;
    // Guard against a rounded-up quotient leaving an empty remainder.
    if (train.last_packet_bits <= 0.0 && train.full_packet_count > 0) {
        train.full_packet_count -= 1;
        train.last_packet_bits =
            file_bits - static_cast<double>(train.full_packet_count) * mtu_bits;
    }
    return train;
}

TransferSplit split_transfer_time(double file_bits, const NetworkPath& path,
                                  double mtu_bits) {
    require_valid(path);
    if (!std::isfinite(file_bits) || file_bits < 0.0) {
        throw std::invalid_argument("file_bits must be finite and >= 0");
    }
    TransferSplit split;
    if (file_bits == 0.0) {
        split.per_hop_overhead = total_queue_delay(path);
        return split;
    }
    const PacketTrain train = packetize(file_bits, mtu_bits);
    if (train.full_packet_count == 0) {
        // A lone packet pays queueing + its own transmission at every hop;
        // the train formula would charge its bottleneck crossing twice.
        double transfer = 0.0;
        double overhead = 0.0;
        for (const NetworkHop& hop : path.hops) {
            transfer += file_bits / hop.trans_rate;
            overhead += hop.queue_delay;
        }
        split.transfer = transfer;
        split.per_hop_overhead = overhead;
        return split;
    }
    split.transfer = file_bits / bottleneck_rate(path);
    double overhead = 0.0;
    for (const NetworkHop& hop : path.hops) {
        overhead += hop.queue_delay + train.last_packet_bits / hop.trans_rate;
    }
    split.per_hop_overhead = overhead;
    return split;
}

double train_transfer_time(double file_bits, const NetworkPath& path,
                           double mtu_bits) {
    const TransferSplit split = split_transfer_time(file_bits, path, mtu_bits);
    return split.transfer + split.per_hop_overhead;
}

TimeBreakdown completion_time_local(const ComputeJob& job, const Processor& local) {
    TimeBreakdown breakdown;
    breakdown.compute = compute_time(job, local);
    breakdown.total = breakdown.compute;
    return breakdown;
}

TimeBreakdown completion_time_remote(const ComputeJob& job,
                                     const CloudResource& resource,
                                     double mtu_bits) {
    require_valid(job);
    require_valid(resource);
    const TransferSplit split =
        split_transfer_time(job.total_bits(), resource.path, mtu_bits);
    TimeBreakdown breakdown;
    breakdown.compute = compute_time(job, resource.processor);
    breakdown.transfer = split.transfer;
    breakdown.per_hop_overhead = split.per_hop_overhead;
    breakdown.total = breakdown.compute + breakdown.transfer + breakdown.per_hop_overhead;
    return breakdown;
}

}  // namespace offload
