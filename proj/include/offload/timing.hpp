#pragma once

#include "offload/model.hpp"

namespace offload {

inline constexpr double kSpeedOfLightMps = 299792458.0;
// Signal propagation in guided media runs at about two thirds of c.
inline constexpr double kPropagationSpeedMps = 2.0 * kSpeedOfLightMps / 3.0;
// 1500-byte Ethernet frame.
inline constexpr double kDefaultMtuBits = 12000.0;

// Completion time split into its additive parts. total is accumulated as
// compute + transfer + per_hop_overhead, left to right.
struct TimeBreakdown {
    double compute = 0.0;           // sec
    double transfer = 0.0;          // sec, file through the bottleneck
    double per_hop_overhead = 0.0;  // sec, queueing + last-packet hop terms
    double total = 0.0;             // sec
};

// The transfer/overhead parts of a file transfer, kept separate so that
// completion_time_remote decomposes into exactly the same addends.
struct TransferSplit {
    double transfer = 0.0;
    double per_hop_overhead = 0.0;
};

// instructions / exec_rate.
double compute_time(const ComputeJob& job, const Processor& proc);

// Time for one packet across one hop. With include_minor set, all four
// delay terms are summed (processing, queueing, transmission, propagation
// at kPropagationSpeedMps); otherwise only queueing + transmission.
double single_packet_hop_time(double packet_bits, const NetworkHop& hop,
                              bool include_minor = false);

// Sum of queueing + transmission over every hop of the path.
double end_to_end_packet_time(double packet_bits, const NetworkPath& path);

// Splits a file into full-size packets plus a remainder packet. Files that
// are an exact multiple of mtu_bits get a full-size remainder packet.
// Throws on file_bits == 0 ("empty file"); callers short-circuit that case.
PacketTrain packetize(double file_bits, double mtu_bits);

// Per-file communication time:
//   file_bits == 0          -> sum of queue delays only
//   single packet (F <= mtu)-> per-hop sum of (queue_delay + F/rate)
//   train                   -> F/bottleneck + per-hop (queue_delay + N/rate)
TransferSplit split_transfer_time(double file_bits, const NetworkPath& path,
                                  double mtu_bits = kDefaultMtuBits);
double train_transfer_time(double file_bits, const NetworkPath& path,
                           double mtu_bits = kDefaultMtuBits);

TimeBreakdown completion_time_local(const ComputeJob& job, const Processor& local);

TimeBreakdown completion_time_remote(const ComputeJob& job,
                                     const CloudResource& resource,
                                     double mtu_bits = kDefaultMtuBits);

}  // namespace offload
