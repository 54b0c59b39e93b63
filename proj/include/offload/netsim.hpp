#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "offload/model.hpp"
#include "offload/timing.hpp"

namespace offload {

enum class SimEventKind {
    packet_arrival_at_hop,
    packet_departure_from_hop,
};

const char* to_string(SimEventKind kind);

struct SimEvent {
    double time = 0.0;  // sec
    SimEventKind kind = SimEventKind::packet_arrival_at_hop;
    int packet_index = 0;
    int hop_index = 0;
};

struct SimResult {
    double completion = 0.0;  // last bit of the last packet at destination
    std::vector<double> per_packet_arrivals;
    std::size_t event_count = 0;
};

// Closed form vs. simulation for one case.
struct GapReport {
    double closed_form = 0.0;
    double simulated = 0.0;
    double gap = 0.0;  // closed_form - simulated
};

// Store-and-forward, per-packet event simulation of a packet train. A
// packet starts on hop j+1 only once it has fully arrived there, has waited
// that hop's queue_delay, and the link is free (FIFO). Transmitting s bits
// on hop j takes s/trans_rate(j); packets leave the source back-to-back.
// When event_trace is non-null every processed event is written to it, one
// JSON object per line.
SimResult simulate_train(double file_bits, const NetworkPath& path,
                         double mtu_bits = kDefaultMtuBits,
                         std::ostream* event_trace = nullptr);

// Evaluates the closed-form transfer time against the simulator. The two
// place queueing delay differently per packet, so this comparison is only
// defined for paths with zero queue_delay; anything else throws.
GapReport compare_models(double file_bits, const NetworkPath& path,
                         double mtu_bits = kDefaultMtuBits);

}  // namespace offload
