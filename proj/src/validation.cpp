#include "offload/validation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace offload {

namespace {

double log_uniform_rate(std::mt19937_64& rng, double lo_exp, double hi_exp) {
    std::uniform_real_distribution<double> exponent(lo_exp, hi_exp);
    return std::pow(10.0, exponent(rng));
}

NetworkPath equal_rate_path(int hop_count, double rate) {
    NetworkPath path;
    path.hops.assign(static_cast<std::size_t>(hop_count), NetworkHop{rate, 0.0, 0.0, 0.0});
    return path;
}

NetworkPath random_path(std::mt19937_64& rng, int hop_count) {
    NetworkPath path;
    path.hops.reserve(static_cast<std::size_t>(hop_count));
    for (int i = 0; i < hop_count; ++i) {
        path.hops.push_back(NetworkHop{log_uniform_rate(rng, 3.0, 9.0), 0.0, 0.0, 0.0});
    }
    return path;
}

}  // namespace

ModelValidationReport run_model_validation(std::size_t trials, std::uint64_t seed,
                                           double mtu_bits) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    ModelValidationReport report;
    report.seed = seed;
    report.mtu_bits = mtu_bits;
    std::mt19937_64 rng(seed);

    std::uniform_int_distribution<int> hop_dist(1, 10);
    std::uniform_int_distribution<int> count_dist(2, 100);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Whole-packet trains over identical hops: gap must be one last-packet
    // transmission, N/rate, with N = mtu.
    report.equal_rate_trials = trials;
    report.equal_rate_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const int hops = hop_dist(rng);
        const int packets = count_dist(rng);
        const double rate = log_uniform_rate(rng, 3.0, 9.0);
        const NetworkPath path = equal_rate_path(hops, rate);
        const double file_bits = static_cast<double>(packets) * mtu_bits;
        const GapReport gap = compare_models(file_bits, path, mtu_bits);
        const double expected = mtu_bits / rate;
        const double rel_error = std::fabs(gap.gap - expected) / expected;
        report.equal_rate_max_rel_error =
            std::max(report.equal_rate_max_rel_error, rel_error);
        if (!(rel_error <= 1e-12)) {
            report.equal_rate_ok = false;
        }
    }

    // Single-packet files: both models degenerate to the per-hop sum.
    report.single_packet_trials = trials;
    report.single_packet_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const int hops = hop_dist(rng);
        const NetworkPath path = random_path(rng, hops);
        const double file_bits = (1.0 - unit(rng)) * mtu_bits;  // (0, mtu]
        const GapReport gap = compare_models(file_bits, path, mtu_bits);
        report.single_packet_max_abs_gap =
            std::max(report.single_packet_max_abs_gap, std::fabs(gap.gap));
        if (gap.gap != 0.0) {
            report.single_packet_ok = false;
        }
    }

    // Heterogeneous rates: record the gap distribution as-is.
    report.hetero_observations.reserve(trials);
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const int hops = hop_dist(rng);
        const NetworkPath path = random_path(rng, hops);
        const int full_packets = count_dist(rng) - 1;
        const double last_bits = (1.0 - unit(rng)) * mtu_bits;
        const double file_bits =
            static_cast<double>(full_packets) * mtu_bits + last_bits;
        const GapReport gap = compare_models(file_bits, path, mtu_bits);
        GapObservation obs;
        obs.file_bits = file_bits;
        obs.hop_count = hops;
        obs.closed_form = gap.closed_form;
        obs.simulated = gap.simulated;
        obs.gap = gap.gap;
        if (t == 0) {
            report.hetero_min_gap = obs.gap;
            report.hetero_max_gap = obs.gap;
        } else {
            report.hetero_min_gap = std::min(report.hetero_min_gap, obs.gap);
            report.hetero_max_gap = std::max(report.hetero_max_gap, obs.gap);
        }
        if (obs.gap < 0.0) {
            ++report.hetero_negative_count;
        }
        sum += obs.gap;
        report.hetero_observations.push_back(obs);
    }
    report.hetero_mean_gap = sum / static_cast<double>(trials);

    return report;
}

}  // namespace offload
