#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "offload/catalog.hpp"
#include "offload/decision.hpp"

using namespace offload;

namespace {

NetworkPath uniform_path(int hops, double rate, double queue_delay = 0.0) {
    NetworkPath path;
    path.hops.assign(static_cast<std::size_t>(hops),
                     NetworkHop{rate, queue_delay, 0.0, 0.0});
    return path;
}

NetworkPath random_path(std::mt19937_64& rng, int max_hops = 8,
                        double max_delay = 0.05) {
    std::uniform_int_distribution<int> hop_count(1, max_hops);
    std::uniform_real_distribution<double> exponent(3.0, 9.0);
    std::uniform_real_distribution<double> delay(0.0, max_delay);
    NetworkPath path;
    const int n = hop_count(rng);
    for (int i = 0; i < n; ++i) {
        path.hops.push_back({std::pow(10.0, exponent(rng)), delay(rng), 0.0, 0.0});
    }
    return path;
}

// Independent full evaluation used as the placement oracle: walk every
// candidate, recompute totals, apply the tie rules by hand.
Placement brute_force_placement(const ComputeJob& job, const Processor& local,
                                const std::vector<CloudResource>& resources,
                                double mtu_bits) {
    Placement best;
    best.breakdown = completion_time_local(job, local);
    for (const CloudResource& resource : resources) {
        const TimeBreakdown t = completion_time_remote(job, resource, mtu_bits);
        if (t.total < best.breakdown.total) {
            best.tier_index = resource.tier_index;
            best.breakdown = t;
        } else if (t.total == best.breakdown.total && !best.is_local() &&
                   resource.tier_index < *best.tier_index) {
            best.tier_index = resource.tier_index;
            best.breakdown = t;
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("decision") {

TEST_CASE("ccr") {
    CHECK(ccr(10.0, 10.0) == 1.0);
    CHECK(ccr(1.0, 1000.0) == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK(ccr(62.5, 0.0625) == doctest::Approx(1000.0).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(ccr(1.0, 0.0), "infinite CCR", std::domain_error);
    CHECK_THROWS_AS(ccr(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("rlr against the preset catalog") {
    CHECK(rlr(presets::celeron(), presets::msp430()) ==
          doctest::Approx(401.875).epsilon(5e-5));
    CHECK(rlr(presets::xeon(), presets::msp430()) ==
          doctest::Approx(8512.5).epsilon(5e-5));
    CHECK(rlr(presets::core_i3(), presets::a9()) ==
          doctest::Approx(10.222).epsilon(5e-5));
    const Processor same{"same", 2e9};
    CHECK(rlr(same, same) == 1.0);
}

TEST_CASE("rlr_threshold is 1/ccr + 1") {
    CHECK(rlr_threshold(1e-3) == doctest::Approx(1001.0).epsilon(1e-12));
    CHECK(rlr_threshold(0.1) == doctest::Approx(11.0).epsilon(1e-12));
    CHECK(rlr_threshold(1e6) == doctest::Approx(1.000001).epsilon(1e-12));
    CHECK(rlr_threshold(1e-6) == doctest::Approx(1000001.0).epsilon(1e-12));
    CHECK_THROWS_AS(rlr_threshold(0.0), std::invalid_argument);
}

TEST_CASE("hop_overhead pins the packet size") {
    const NetworkPath path = uniform_path(2, 1e6, 0.01);
    CHECK(hop_overhead(path, 12000.0).value ==
          doctest::Approx(0.02 + 0.024).epsilon(1e-12));
    CHECK(hop_overhead(path, 0.0).value == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("offload_favorable compares completion times") {
    const CloudResource celeron{presets::celeron(), uniform_path(2, 1e6), 1};
    const OffloadDecision decision =
        offload_favorable({1e9, 36000, 0}, presets::msp430(), celeron, 12000);
    CHECK(decision.favorable);
    // 62.5 - (1e9/6.43e9 + 0.06), evaluated by hand.
    CHECK(decision.margin == doctest::Approx(62.28447900466563).epsilon(1e-12));
    CHECK(decision.local_time == doctest::Approx(62.5).epsilon(1e-15));
    CHECK(validate(decision).empty());

    // Equal rates and positive data: never favorable.
    const Processor local{"local", 16e6};
    const CloudResource peer{{"peer", 16e6}, uniform_path(1, 1e6), 1};
    CHECK_FALSE(offload_favorable({1e9, 100, 0}, local, peer, 12000).favorable);

    // Pure compute speedup with nothing to move.
    const CloudResource fast{{"fast", 32e6}, uniform_path(1, 1e6), 1};
    CHECK(offload_favorable({1e9, 0, 0}, local, fast, 12000).favorable);

    // Exact tie resolves to local.
    const CloudResource same{{"same", 16e6}, uniform_path(1, 1e6), 1};
    const OffloadDecision tie = offload_favorable({1e9, 0, 0}, local, same, 12000);
    CHECK(tie.margin == 0.0);
    CHECK_FALSE(tie.favorable);
}

TEST_CASE("capacity thresholds") {
    CHECK(capacity(presets::msp430(), presets::celeron(), 1e3).capacity ==
          doctest::Approx(6.234447900466563e-05).epsilon(1e-12));
    CHECK(capacity(presets::msp430(), presets::celeron(), 1e6).capacity ==
          doctest::Approx(0.06234447900466562).epsilon(1e-12));
    CHECK(capacity(presets::a9(), presets::celeron(), 1e3).capacity ==
          doctest::Approx(1.2225678244340762e-07).epsilon(1e-12));
    // Slower remote yields a negative capacity, reported as-is.
    CHECK(capacity(presets::celeron(), presets::msp430(), 1e6).capacity < 0.0);

    // Sign of the capacity tracks whether the remote is faster.
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> proc_exp(6.0, 12.0);
    std::uniform_real_distribution<double> rate_exp(3.0, 9.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Processor local{"l", std::pow(10.0, proc_exp(rng))};
        const Processor remote{"r", std::pow(10.0, proc_exp(rng))};
        const CapacityReport report =
            capacity(local, remote, std::pow(10.0, rate_exp(rng)));
        CHECK((report.capacity > 0.0) == (report.remote_rate > report.local_rate));
    }
}

TEST_CASE("rate_delta cells") {
    CHECK(rate_delta(presets::msp430(), presets::celeron()) ==
          doctest::Approx(6.23e-8).epsilon(1e-3));
    CHECK(rate_delta(presets::a9(), presets::celeron()) ==
          doctest::Approx(1.22e-10).epsilon(1e-2));
    const Processor same{"same", 5e9};
    CHECK(rate_delta(same, same) == 0.0);
}

TEST_CASE("inverse_intensity") {
    CHECK(inverse_intensity({1e9, 1000, 0}) == doctest::Approx(1e-6).epsilon(1e-15));
    CHECK(inverse_intensity({1.0, 0, 0}) == 0.0);
    CHECK(inverse_intensity({1e9, 1.0e6, 0.01e6}) ==
          doctest::Approx(1.01e-3).epsilon(1e-15));
}

TEST_CASE("simplified_favorable compares capacity and intensity") {
    const ComputeJob namd2_like{1e9, 1.01e6, 0};  // F/C = 1.01e-3
    CHECK(simplified_favorable(namd2_like, presets::msp430(), presets::celeron(), 1e6));
    const ComputeJob light{1e9, 1000, 0};  // F/C = 1e-6
    CHECK_FALSE(simplified_favorable(light, presets::a9(), presets::celeron(), 1e3));
    const Processor same{"same", 1e9};
    CHECK_FALSE(simplified_favorable(light, same, same, 1e9));
}

TEST_CASE("required_bottleneck_rate inverts the capacity test") {
    const ComputeJob job{1.0, 6.23e-5, 0};
    const double expected = 6.23e-5 / (1.0 / 16e6 - 1.0 / 6.43e9);
    const double rate = required_bottleneck_rate(job, presets::msp430(), presets::celeron());
    CHECK(rate == doctest::Approx(expected).epsilon(1e-15));
    CHECK(rate == doctest::Approx(999.2865606485813).epsilon(1e-12));
    // Round trip: at the returned rate the capacity equals the intensity.
    CHECK(capacity(presets::msp430(), presets::celeron(), rate).capacity ==
          doctest::Approx(6.23e-5).epsilon(1e-12));

    const ComputeJob a9_job{1.0, 1.22e-4, 0};
    CHECK(required_bottleneck_rate(a9_job, presets::a9(), presets::celeron()) ==
          doctest::Approx(1e6).epsilon(3e-3));

    const Processor same{"same", 1e9};
    CHECK_THROWS_WITH_AS(required_bottleneck_rate(job, same, same),
                         "remote not faster: no finite rate suffices",
                         std::domain_error);
}

TEST_CASE("required_remote_rate inverts the capacity test") {
    const ComputeJob job{1.0, 3.125e-5, 0};
    const double rate = required_remote_rate(job, presets::msp430(), 1e3);
    CHECK(rate == doctest::Approx(3.2e7).epsilon(1e-12));
    // Verify 1e3 * (1/16e6 - 1/3.2e7) recovers the intensity.
    CHECK(1e3 * (1.0 / 16e6 - 1.0 / rate) ==
          doctest::Approx(3.125e-5).epsilon(1e-12));

    // Nothing to transfer: any rate above local works.
    const ComputeJob empty{1e9, 0, 0};
    CHECK(required_remote_rate(empty, presets::msp430(), 1e3) ==
          doctest::Approx(16e6).epsilon(1e-12));

    // Transfer alone exceeds local compute: 1e-4/1e3 = 1e-7 > 1/16e6.
    const ComputeJob heavy{1.0, 1e-4, 0};
    CHECK_THROWS_WITH_AS(required_remote_rate(heavy, presets::msp430(), 1e3),
                         "transfer alone exceeds local compute time",
                         std::domain_error);
}

TEST_CASE("best_placement basics") {
    const ComputeJob job{1e9, 36000, 0};
    const Processor local = presets::msp430();

    CHECK(best_placement(job, local, {}, 12000).is_local());

    const std::vector<CloudResource> peer = {
        {{"peer", 16e6}, uniform_path(1, 1e6), 1}};
    CHECK(best_placement(job, local, peer, 12000).is_local());

    const std::vector<CloudResource> tiers = {
        {{"near", 1e9}, uniform_path(1, 1e6), 1},
        {{"far", 136.2e9}, uniform_path(5, 1e6), 5}};
    const Placement placement = best_placement(job, local, tiers, 12000);
    CHECK_FALSE(placement.is_local());
}

TEST_CASE("best_placement matches exhaustive search") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> exponent(6.0, 12.0);
    std::uniform_real_distribution<double> file(0.0, 1e7);
    std::uniform_real_distribution<double> instructions(1.0, 1e11);
    for (int trial = 0; trial < 500; ++trial) {
        const Processor local{"local", std::pow(10.0, exponent(rng))};
        std::vector<CloudResource> resources;
        for (int tier = 1; tier <= 5; ++tier) {
            resources.push_back(
                {{"tier", std::pow(10.0, exponent(rng))}, random_path(rng), tier});
        }
        const ComputeJob job{instructions(rng), file(rng), file(rng)};
        const Placement got = best_placement(job, local, resources, 12000);
        const Placement want = brute_force_placement(job, local, resources, 12000);
        CHECK(got.is_local() == want.is_local());
        if (!got.is_local()) {
            CHECK(*got.tier_index == *want.tier_index);
        }
        CHECK(got.breakdown.total == want.breakdown.total);
    }
}

TEST_CASE("the three favorability phrasings agree") {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> proc_exp(6.0, 11.0);
    std::uniform_real_distribution<double> instr_exp(6.0, 12.0);
    std::uniform_real_distribution<double> file_exp(0.0, 9.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const Processor local{"local", std::pow(10.0, proc_exp(rng))};
        const CloudResource resource{
            {"remote", std::pow(10.0, proc_exp(rng))}, random_path(rng), 1};
        const ComputeJob job{std::pow(10.0, instr_exp(rng)),
                             std::pow(10.0, file_exp(rng)), 0.0};
        const bool eq1 = favorable_by_completion(job, local, resource, 12000);
        const bool eq2 = favorable_by_speedup(job, local, resource, 12000);
        const bool eq3 = favorable_by_rate_ratio(job, local, resource, 12000);
        CHECK(eq1 == eq2);
        CHECK(eq2 == eq3);
    }
}

TEST_CASE("scaling both processor rates preserves the ratio comparisons") {
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> proc_exp(6.0, 11.0);
    std::uniform_int_distribution<int> pow2(-8, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const double e = std::pow(10.0, proc_exp(rng));
        const double big_e = std::pow(10.0, proc_exp(rng));
        const double k = std::ldexp(1.0, pow2(rng));  // exact power of two
        const Processor local{"l", e};
        const Processor remote{"r", big_e};
        const Processor local_k{"l", e * k};
        const Processor remote_k{"r", big_e * k};
        CHECK(rlr(remote, local) == rlr(remote_k, local_k));
        // Scaling job size and data together preserves the intensity.
        const ComputeJob job{1e9, 4096.0, 1024.0};
        const ComputeJob job_k{1e9 * k, 4096.0 * k, 1024.0 * k};
        CHECK(inverse_intensity(job) == inverse_intensity(job_k));
    }
}

TEST_CASE("capacity is bounded by rate over local speed") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> proc_exp(6.0, 12.0);
    std::uniform_real_distribution<double> rate_exp(3.0, 9.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double e = std::pow(10.0, proc_exp(rng));
        const double gamma = std::pow(10.0, rate_exp(rng));
        const Processor local{"l", e};
        const double bound = gamma / e;
        // However fast the remote gets, capacity stays below gamma/e ...
        for (double factor : {1.5, 10.0, 1e3, 1e9}) {
            const Processor remote{"r", e * factor};
            CHECK(capacity(local, remote, gamma).capacity < bound);
        }
        // ... so a job at or past that bound never benefits.
        const ComputeJob job{1.0, bound, 0.0};
        for (double factor : {2.0, 1e2, 1e6, 1e12}) {
            const Processor remote{"r", e * factor};
            CHECK_FALSE(simplified_favorable(job, local, remote, gamma));
        }
    }
}

TEST_CASE("verdict is monotone in link rate and data size") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> proc_exp(6.0, 11.0);
    std::uniform_real_distribution<double> instr_exp(6.0, 12.0);
    std::uniform_real_distribution<double> scale(1.0, 100.0);
    std::uniform_int_distribution<int> count(1, 50);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double mtu = 12000.0;
    for (int trial = 0; trial < 300; ++trial) {
        const Processor local{"local", std::pow(10.0, proc_exp(rng))};
        CloudResource resource{
            {"remote", std::pow(10.0, proc_exp(rng))}, random_path(rng), 1};
        const double remainder = (1.0 - unit(rng)) * mtu;
        const double full = count(rng);
        const ComputeJob job{std::pow(10.0, instr_exp(rng)),
                             full * mtu + remainder, 0.0};
        const bool before = favorable_by_completion(job, local, resource, mtu);
        if (!before) {
            continue;
        }
        // Speed up every hop: still favorable.
        CloudResource faster = resource;
        const double k = scale(rng);
        for (NetworkHop& hop : faster.path.hops) {
            hop.trans_rate *= k;
        }
        CHECK(favorable_by_completion(job, local, faster, mtu));
        // Drop whole packets: still favorable.
        ComputeJob lighter = job;
        lighter.input_bits = remainder;  // keep the remainder, drop full packets
        CHECK(favorable_by_completion(lighter, local, resource, mtu));
        // Shrink the remainder: still favorable.
        ComputeJob trimmed = job;
        trimmed.input_bits = full * mtu + remainder * 0.5;
        CHECK(favorable_by_completion(trimmed, local, resource, mtu));
    }
}

}  // TEST_SUITE
