#ifndef SLOWLIGHT_ENVELOPE_HPP
#define SLOWLIGHT_ENVELOPE_HPP

#include <cstdint>
#include <vector>

namespace slowlight {

enum class Normalization { raw, area };

// Sampled photon intensity versus time on a uniform grid. samples[k] is the
// intensity at t_start + k*dt.
struct TemporalEnvelope {
    std::vector<double> samples;  // nonnegative intensity
    double dt = 0.0;              // s per sample
    double t_start = 0.0;         // s
    Normalization norm = Normalization::raw;
};

// TCSPC-style binned arrival counts; bin k covers
// [t0 + k*bin_width, t0 + (k+1)*bin_width).
struct ArrivalHistogram {
    std::vector<std::uint64_t> counts;
    double bin_width = 512e-12;  // s
    double t0 = 0.0;             // s
};

double envelope_area(const TemporalEnvelope& env);     // integral of intensity dt
double envelope_centroid(const TemporalEnvelope& env); // first moment, absolute s
double envelope_peak_time(const TemporalEnvelope& env);

// FWHM with linear interpolation at the half-max crossings nearest the peak.
// Throws DomainError when a half-max crossing is missing on either side.
double width_fwhm(const TemporalEnvelope& env);

enum class DelayMethod { peak, centroid, xcorr };

// Time by which `delayed` lags `reference`. xcorr uses the argmax of the
// discrete cross-correlation with parabolic sub-bin interpolation; `delayed`
// is resampled onto the reference dt first when the steps differ. Throws
// DomainError on empty or all-zero envelopes.
double extract_delay(const TemporalEnvelope& reference,
                     const TemporalEnvelope& delayed,
                     DelayMethod method = DelayMethod::xcorr);

// Area-normalized envelope from binned counts (sample points at bin
// centers). With subtract_background, the mean of the lowest-decile bins is
// removed first (clamped at zero). Throws DomainError when total counts are
// zero.
TemporalEnvelope histogram_to_envelope(const ArrivalHistogram& hist,
                                       bool subtract_background = false);

// Multinomial sampling of shot_count arrival times from the envelope
// distribution, deterministic under a fixed seed.
ArrivalHistogram envelope_to_histogram(const TemporalEnvelope& env, double bin_width,
                                       std::uint64_t shot_count, std::uint64_t seed);

}  // namespace slowlight

#endif
