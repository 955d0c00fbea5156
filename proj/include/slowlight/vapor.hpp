#ifndef SLOWLIGHT_VAPOR_HPP
#define SLOWLIGHT_VAPOR_HPP

#include <span>
#include <string>
#include <vector>

#include "slowlight/constants.hpp"
#include "slowlight/dispersion.hpp"

namespace slowlight {

// Two-branch vapor-pressure correlation, log10(P/torr) = a - b/T, switching
// coefficients at the melting point. Coefficients live in config, not in the
// logic; the calibration scale absorbs correlation error.
struct VaporModel {
    double a_solid = constants::default_vp_a_solid;
    double b_solid = constants::default_vp_b_solid;      // K
    double a_liquid = constants::default_vp_a_liquid;
    double b_liquid = constants::default_vp_b_liquid;    // K
    double melting_point = constants::default_melting_point;  // K
    double isotope_fraction = 1.0;  // enriched cell
};

double vapor_pressure_pa(double temperature, const VaporModel& model);

// Atom number density N = isotope_fraction * P(T) / (kB T), atoms/m^3.
// Valid for 250 K <= T <= 500 K; throws DomainError outside the window.
double number_density(double temperature, const VaporModel& model,
                      double k_boltzmann = constants::boltzmann);

// Resonance strength A = N |mu|^2 / (2 eps0 hbar (g1+g2)), rad/s.
double resonance_strength(double number_density, double dipole_moment,
                          double g1, double g2,
                          double eps0 = constants::epsilon0,
                          double hbar = constants::hbar);

// Everything needed to map a cell temperature to a group delay.
struct DelayModel {
    ResonanceDoublet doublet;
    VaporModel vapor;
    double dipole_moment = constants::default_dipole_moment;  // C m
    double cell_length = constants::default_cell_length_m;    // m
    GroupVelocityMode mode = GroupVelocityMode::eq3_as_written;
    double scale = 1.0;  // calibration multiplier on A(T)

    double strength_at(double temperature) const;
    MediumState medium_at(double temperature) const;
    double delay_at(double temperature, double delta = 0.0) const;
};

struct Observation {
    double temperature = 0.0;  // K
    double delay = 0.0;        // s
};

struct CalibrationResult {
    double scale = 0.0;                   // fitted multiplier on A(T)
    std::vector<double> model_delays;     // unscaled model delay per observation, s
    std::vector<double> residuals;        // scale*model - observed, s
    std::string method = "least-squares-scale";
};

// Closed-form least squares for the single scale factor s minimizing
// sum(s*m_i - d_i)^2: s = sum(m_i d_i)/sum(m_i^2). Throws DomainError when
// there are no observations or all model delays vanish.
CalibrationResult calibrate_scale(std::span<const Observation> observations,
                                  const DelayModel& model);

}  // namespace slowlight

#endif
