#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "offload/netsim.hpp"
#include "offload/timing.hpp"

namespace offload {

// One closed-form-vs-simulation comparison from the heterogeneous sweep.
// Every observation is kept; the sign of the gap on heterogeneous paths is
// reported, never asserted.
struct GapObservation {
    double file_bits = 0.0;
    int hop_count = 0;
    double closed_form = 0.0;  // sec
    double simulated = 0.0;    // sec
    double gap = 0.0;          // sec, closed_form - simulated
};

struct ModelValidationReport {
    std::uint64_t seed = 0;
    double mtu_bits = kDefaultMtuBits;

    // Equal-rate paths with whole-packet files: the closed form must exceed
    // the simulation by exactly one last-packet transmission.
    std::size_t equal_rate_trials = 0;
    double equal_rate_max_rel_error = 0.0;
    bool equal_rate_ok = false;

    // Files that fit in one packet: both models collapse to the same
    // per-hop sum, so the gap must be exactly zero.
    std::size_t single_packet_trials = 0;
    double single_packet_max_abs_gap = 0.0;
    bool single_packet_ok = false;

    // Heterogeneous-rate sweep, recorded without any sign assertion.
    std::vector<GapObservation> hetero_observations;
    double hetero_min_gap = 0.0;
    double hetero_mean_gap = 0.0;
    double hetero_max_gap = 0.0;
    std::size_t hetero_negative_count = 0;

    bool all_ok() const { return equal_rate_ok && single_packet_ok; }
};

// Runs `trials` seeded cases per batch. Identical (trials, seed, mtu_bits)
// always produce an identical report.
ModelValidationReport run_model_validation(std::size_t trials, std::uint64_t seed,
                                           double mtu_bits = kDefaultMtuBits);

}  // namespace offload
