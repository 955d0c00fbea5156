#ifndef SLOWLIGHT_SOURCE_HPP
#define SLOWLIGHT_SOURCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "slowlight/envelope.hpp"

namespace slowlight {

// Timings and probabilities of one photon-generation cycle:
// prep -> guard -> extraction pulse -> post-extract delay -> cooling ->
// guard, with an extended cooling block every cycles_per_block cycles.
struct PulseSequenceConfig {
    double prep_duration = 1e-6;        // s, state preparation light
    double extract_duration = 20e-9;    // s, extraction pulse
    double post_extract_delay = 940e-9; // s
    double cooling_duration = 500e-9;   // s, per-cycle cooling
    double guard_off = 40e-9;           // s, all beams off, applied twice
    std::uint64_t cycles_per_block = 10000;
    double block_cooling = 1e-3;        // s, extended cooling per block

    double branch_to_ground = 0.75;     // P -> ground branching (blue photon)
    double p_excite = 0.9;              // per re-pumping attempt; free parameter
    double emission_lifetime = 8e-9;    // s; free parameter
    double collection_eff = 0.35;
    double conversion_eff = 0.177;
    double cell_transmission = 1.0;
    double detector_eff = 1.0;

    // Blue photons emitted later than this after the extraction TTL are not
    // retained. 0 means auto: extract_duration + post_extract_delay.
    double measurement_window = 0.0;

    double resolved_window() const;
    double cycle_period() const;           // sum of the six per-cycle durations
    double detection_probability() const;  // product of the four efficiencies

    // Throws DomainError on non-positive durations or probabilities outside
    // [0,1]. Returns true (a configuration warning, not an error) when the
    // lifetime is so long that emission_lifetime >= 10x the measurement
    // window would truncate most photons.
    bool validate_and_warn() const;
};

enum class PhotonKind : std::uint8_t { blue_493, red_650 };

struct EmissionEvent {
    std::uint64_t cycle = 0;  // global cycle index
    double time = 0.0;        // absolute s from the start of the run
    PhotonKind kind = PhotonKind::blue_493;
    bool detected = false;    // survived efficiency thinning (blue only)
};

// Per-block RNG seed: a single splitmix64 finalizer step keyed by the block
// index, so any block can be simulated independently of the others.
std::uint64_t block_seed(std::uint64_t master_seed, std::uint64_t block);

// Monte Carlo run over n_blocks blocks of cycles_per_block cycles. Events are
// returned in (block, cycle, time) order; a given (config, seed) produces the
// identical stream regardless of thread count. threads == 0 uses the OpenMP
// default.
std::vector<EmissionEvent> simulate(const PulseSequenceConfig& config,
                                    std::uint64_t n_blocks, std::uint64_t seed,
                                    int threads = 0);

// Single-threaded reference used by tests and the benchmark.
std::vector<EmissionEvent> simulate_serial(const PulseSequenceConfig& config,
                                           std::uint64_t n_blocks, std::uint64_t seed);

// Cycle repetition rate in Hz with the block cooling amortized across
// cycles_per_block.
double repetition_rate(const PulseSequenceConfig& config);

// Histogram of detected blue events relative to each cycle's extraction TTL.
// Total counts equal the detected blue count; all-zero counts are a valid
// (flagged-empty) result, not an error.
ArrivalHistogram bin_events(std::span<const EmissionEvent> events,
                            const PulseSequenceConfig& config,
                            double bin_width = 512e-12);

}  // namespace slowlight

#endif
