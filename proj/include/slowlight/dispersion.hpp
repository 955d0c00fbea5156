#ifndef SLOWLIGHT_DISPERSION_HPP
#define SLOWLIGHT_DISPERSION_HPP

#include <complex>

#include "slowlight/constants.hpp"

namespace slowlight {

// The two hyperfine absorption lines of the D2 manifold and the derived
// midpoint quantities. Detuning delta is measured from the transmission
// maximum between the peaks; the peaks sit at delta = -delta_plus and
// delta = +delta_minus. All frequencies are angular (rad/s).
struct ResonanceDoublet {
    double g1 = constants::default_g1;   // relative strength, lower peak
    double g2 = constants::default_g2;   // relative strength, upper peak
    double gamma = 0.0;                  // homogeneous linewidth
    double omega_s = 0.0;                // half the peak splitting
    double omega0 = 0.0;                 // carrier at peak transmission
    double delta_shift = 0.0;            // strength-weighted midpoint shift
    double delta_plus = 0.0;             // omega_s + delta_shift
    double delta_minus = 0.0;            // omega_s - delta_shift

    // Builds the doublet and derives delta_shift/delta_plus/delta_minus such
    // that delta_plus/delta_minus = (g1/g2)^(1/3). Throws DomainError when
    // g1, g2, gamma or omega_s are out of range (gamma must stay well below
    // the splitting).
    static ResonanceDoublet make(double g1, double g2, double gamma,
                                 double omega_s, double omega0);
};

enum class GroupVelocityMode {
    eq3_as_written,  // v_g = (omega0/c * dn_r/domega)^-1, the paper-fit form
    full_index       // v_g = c / (n_r + omega * dn_r/domega)
};

// Vapour cell physical state at one temperature.
struct MediumState {
    double temperature = 0.0;     // K
    double number_density = 0.0;  // atoms/m^3
    double strength = 0.0;        // resonance strength A, rad/s
    double length = constants::default_cell_length_m;  // m
};

// Complex refractive index n(delta) of the two-resonance medium.
//
// Sign convention: with plane waves exp(i(kz - wt)) and k = n*omega/c, the
// imaginary part returned here is >= 0 for strength_a >= 0, so the field
// decays along z and transmission() <= 1. This is the single place the
// convention is fixed; absorption and propagation both derive from it.
std::complex<double> complex_index(double delta, const ResonanceDoublet& doublet,
                                   double strength_a);

// Closed-form d n_r / d omega at detuning delta (the derivative of the real
// part of complex_index with respect to angular frequency).
double index_real_derivative(double delta, const ResonanceDoublet& doublet,
                             double strength_a);

// Group velocity (m/s). Throws DomainError when dn_r/domega <= 0 at the
// requested detuning (anomalous-dispersion region) and, in full_index mode,
// when the full denominator is non-positive.
double group_velocity(double delta, const ResonanceDoublet& doublet, double strength_a,
                      GroupVelocityMode mode = GroupVelocityMode::eq3_as_written,
                      double c = constants::speed_of_light);

// Intensity absorption coefficient alpha = 2*(omega0/c)*|n_i(delta)|, 1/m.
// Uses the fixed carrier omega0 (delta/omega0 < 1e-5 for all relevant
// detunings).
double absorption_coefficient(double delta, const ResonanceDoublet& doublet,
                              double strength_a,
                              double c = constants::speed_of_light);

// exp(-alpha * L), in [0, 1].
double transmission(double delta, const MediumState& medium,
                    const ResonanceDoublet& doublet,
                    double c = constants::speed_of_light);

// Delay relative to vacuum traversal of the cell, seconds. In eq3 mode the
// reciprocal of Eq-3-style v_g already excludes the vacuum 1/c term, so the
// delay is L/v_g; in full_index mode it is L/v_g - L/c. Both forms are
// exactly linear in the strength A. A == 0 returns 0 (vacuum limit) instead
// of propagating the group_velocity domain error.
double group_delay(const MediumState& medium, const ResonanceDoublet& doublet,
                   double delta,
                   GroupVelocityMode mode = GroupVelocityMode::eq3_as_written,
                   double c = constants::speed_of_light);

}  // namespace slowlight

#endif
