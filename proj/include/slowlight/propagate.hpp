#ifndef SLOWLIGHT_PROPAGATE_HPP
#define SLOWLIGHT_PROPAGATE_HPP

#include "slowlight/dispersion.hpp"
#include "slowlight/envelope.hpp"

namespace slowlight {

struct PropagationReport {
    double analytic_delay = 0.0;     // L*(omega0/c)*dn_r/ddelta at the carrier, s
    double bandwidth = 0.0;          // FWHM of the input power spectrum, rad/s
    bool narrowband_warning = false; // bandwidth >= omega_s/10
    std::size_t fft_size = 0;
};

// Sends the envelope through the dispersive cell: the field amplitude
// sqrt(intensity) is taken to frequency space, each component at detuning
// delta = carrier_detuning + nu is multiplied by
// exp(i*(omega0/c)*(n(delta) - 1)*L) (the vacuum phase is divided out), and
// the result is squared back to intensity. The grid is zero-padded to a
// power of two at least 4x the input and wide enough to hold 5x the analytic
// group delay; GridError when that would exceed 2^24 samples or when the
// Nyquist range does not span 10x the envelope half-bandwidth. Output
// preserves dt and t_start and is renormalized to unit area when the input
// carries the area tag.
TemporalEnvelope propagate(const TemporalEnvelope& env, const MediumState& medium,
                           const ResonanceDoublet& doublet, double carrier_detuning = 0.0,
                           GroupVelocityMode mode = GroupVelocityMode::eq3_as_written,
                           PropagationReport* report = nullptr);

}  // namespace slowlight

#endif
