#ifndef SLOWLIGHT_CONSTANTS_HPP
#define SLOWLIGHT_CONSTANTS_HPP

namespace slowlight::constants {

// CODATA 2018
inline constexpr double speed_of_light = 299792458.0;        // m/s
inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double epsilon0 = 8.8541878128e-12;         // F/m
inline constexpr double boltzmann = 1.380649e-23;            // J/K
inline constexpr double pi = 3.141592653589793238462643;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double torr_to_pa = 133.322387415;

// 87Rb D2 defaults: the two ground-state hyperfine absorption peaks are
// split by the 6.834682... GHz clock frequency; the carrier sits at the
// D2 line centre (780.241 nm). Linewidth is the D2 natural linewidth.
inline constexpr double default_g1 = 7.0 / 16.0;
inline constexpr double default_g2 = 9.0 / 16.0;
inline constexpr double default_peak_splitting_hz = 6.834682610904e9;
inline constexpr double default_carrier_hz = 384.2304844685e12;
inline constexpr double default_linewidth_hz = 6.07e6;
inline constexpr double default_cell_length_m = 0.075;
inline constexpr double default_dipole_moment = 3.584e-29;   // C m, effective far-detuned value

// Two-branch vapor pressure correlation, log10(P/torr) = a - b/T
inline constexpr double default_vp_a_solid = 7.738;
inline constexpr double default_vp_b_solid = 4215.0;         // K
inline constexpr double default_vp_a_liquid = 7.193;
inline constexpr double default_vp_b_liquid = 4040.0;        // K
inline constexpr double default_melting_point = 312.45;      // K

}  // namespace slowlight::constants

#endif
