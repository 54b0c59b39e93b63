#include "offload/netsim.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace offload {

const char* to_string(SimEventKind kind) {
    switch (kind) {
        case SimEventKind::packet_arrival_at_hop:
            return "packet-arrival-at-hop";
        case SimEventKind::packet_departure_from_hop:
            return "packet-departure-from-hop";
    }
    return "unknown";
}

namespace {

// Departures sort ahead of arrivals on a full tie so a freed link is seen
// before the next packet queues behind it.
int kind_rank(SimEventKind kind) {
    return kind == SimEventKind::packet_departure_from_hop ? 0 : 1;
}

struct EventAfter {
    bool operator()(const SimEvent& a, const SimEvent& b) const {
        return std::make_tuple(a.time, a.hop_index, a.packet_index, kind_rank(a.kind)) >
               std::make_tuple(b.time, b.hop_index, b.packet_index, kind_rank(b.kind));
    }
};

struct Waiting {
    int packet_index;
    double eligible_time;  // arrival + queue_delay
};

struct HopState {
    std::deque<Waiting> queue;
    bool busy = false;
};

void write_event_line(std::ostream& out, const SimEvent& event) {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "{\"time\":%.17g,\"kind\":\"%s\",\"packet_index\":%d,"
                  "\"hop_index\":%d}",
                  event.time, to_string(event.kind), event.packet_index,
                  event.hop_index);
    out << line << '\n';
}

}  // namespace

SimResult simulate_train(double file_bits, const NetworkPath& path,
                         double mtu_bits, std::ostream* event_trace) {
    require_valid(path);
    if (file_bits == 0.0) {
        throw std::invalid_argument("empty file");
    }
    const PacketTrain train = packetize(file_bits, mtu_bits);
    if (train.packet_count() > 10'000'000) {
        throw std::invalid_argument("packet count too large to simulate");
    }
    const int packet_count = static_cast<int>(train.packet_count());
    const int hop_count = static_cast<int>(path.hops.size());

    std::vector<double> packet_bits(static_cast<std::size_t>(packet_count),
                                    train.full_packet_bits);
    packet_bits.back() = train.last_packet_bits;

    std::priority_queue<SimEvent, std::vector<SimEvent>, EventAfter> events;
    std::vector<HopState> hops(static_cast<std::size_t>(hop_count));

    SimResult result;
    result.per_packet_arrivals.assign(static_cast<std::size_t>(packet_count), 0.0);

    // The whole train is ready at the source at t = 0; the first link
    // serializes it back-to-back.
    for (int p = 0; p < packet_count; ++p) {
        events.push({0.0, SimEventKind::packet_arrival_at_hop, p, 0});
    }

    auto start_next = [&](int hop_index, double now) {
        HopState& hop = hops[static_cast<std::size_t>(hop_index)];
        if (hop.busy || hop.queue.empty()) {
            return;
        }
        const Waiting next = hop.queue.front();
        hop.queue.pop_front();
        hop.busy = true;
        const double start = std::max(now, next.eligible_time);
        const double service =
            packet_bits[static_cast<std::size_t>(next.packet_index)] /
            path.hops[static_cast<std::size_t>(hop_index)].trans_rate;
        events.push({start + service, SimEventKind::packet_departure_from_hop,
                     next.packet_index, hop_index});
    };

    while (!events.empty()) {
        const SimEvent event = events.top();
        events.pop();
        ++result.event_count;
        if (event_trace != nullptr) {
            write_event_line(*event_trace, event);
        }
        HopState& hop = hops[static_cast<std::size_t>(event.hop_index)];
        if (event.kind == SimEventKind::packet_arrival_at_hop) {
            const double eligible =
                event.time +
                path.hops[static_cast<std::size_t>(event.hop_index)].queue_delay;
            hop.queue.push_back({event.packet_index, eligible});
            start_next(event.hop_index, event.time);
        } else {
            hop.busy = false;
            if (event.hop_index + 1 < hop_count) {
                events.push({event.time, SimEventKind::packet_arrival_at_hop,
                             event.packet_index, event.hop_index + 1});
            } else {
                result.per_packet_arrivals[static_cast<std::size_t>(
                    event.packet_index)] = event.time;
            }
            start_next(event.hop_index, event.time);
        }
    }

    result.completion = result.per_packet_arrivals.back();
    return result;
}

GapReport compare_models(double file_bits, const NetworkPath& path,
                         double mtu_bits) {
    require_valid(path);
    for (const NetworkHop& hop : path.hops) {
        if (hop.queue_delay != 0.0) {
            throw std::invalid_argument(
                "compare_models requires zero queue_delay on every hop");
        }
    }
    GapReport report;
    report.closed_form = train_transfer_time(file_bits, path, mtu_bits);
    report.simulated = simulate_train(file_bits, path, mtu_bits).completion;
    report.gap = report.closed_form - report.simulated;
    return report;
}

}  // namespace offload
