// risthz - outage analysis for RIS-assisted terahertz links
// Copyright (C) 2026 the risthz contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Physical-layer building blocks of a single hop: turbulence statistics,
// beam misalignment statistics, molecular absorption, deterministic path
// amplitude, and the receiver noise/SNR bookkeeping. Everything here is a
// pure function of its arguments; composing hops into a cascade lives in
// chain.hpp.

#pragma once

#include <optional>
#include <vector>

#include "risthz/errors.hpp"

namespace risthz::channel
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K

// Scintillation strength of a plane wave over a homogeneous path:
// 1.23 Cn^2 k^(7/6) d^(11/6) with k the free-space wavenumber.
double rytov_variance(double cn2, double freq_hz, double dist_m);

// Dimensionless receiver-aperture parameter sqrt(pi r^2 / (2 lambda d))
// controlling how much aperture averaging suppresses the fading.
double aperture_param(double radius_m, double wavelength_m, double dist_m);

// Shape parameters of the unit-mean gamma-gamma fading factor.
struct gg_shape
{
    double alpha = 0.0; // large-scale cell count
    double beta = 0.0;  // small-scale cell count
};

// Aperture-averaged shape parameters. Returns nullopt when the turbulence
// is negligible (rytov_var <= 1e-6): the fade factor then degenerates to
// its deterministic mean and must be folded out of the cascade.
std::optional<gg_shape> gg_params(double rytov_var, double aperture_param);

// Fraction of beam power collected by a centered circular aperture of
// radius `radius_m` from a Gaussian beam of waist `waist_m`.
double pointing_fraction(double radius_m, double waist_m);

// Misalignment fading parameters: the collected-power ceiling `fraction`
// and the jitter exponent `xi` (equivalent-beam radius squared over four
// times the jitter variance). The fade is supported on (0, fraction].
struct pointing_spec
{
    double fraction = 0.0; // A0, the maximum collected fraction
    double xi = 0.0;       // jitter exponent
};

// Returns nullopt when jitter_m == 0: the factor degenerates to the
// constant `pointing_fraction` and must be folded out of the cascade.
std::optional<pointing_spec> pointing_params(double radius_m, double waist_m, double jitter_m);

// Saturation water-vapor partial pressure (Buck) scaled by relative
// humidity, in Pa.
double water_vapor_pressure(double temp_k, double rel_humidity_pct);

// Built-in molecular absorption coefficient in Np/m for the 275-400 GHz
// window: a Van Vleck-Weisskopf sum over the dominant water-vapor lines
// plus an empirical continuum, calibrated at 300 GHz / 273 K / 50% RH /
// 101325 Pa. Intended for scenario realism (factor-level fidelity), not
// metrology. Throws std::domain_error outside the window.
double absorption_simplified(double freq_hz, double temp_k, double rel_humidity_pct,
                             double pressure_pa);

// User-supplied absorption spectrum, linearly interpolated.
struct absorption_table
{
    std::vector<double> freq_hz; // strictly increasing
    std::vector<double> kappa;   // Np/m, same length
};

// Linear interpolation; throws std::domain_error outside the table range
// or for a malformed table.
double absorption_lookup(const absorption_table &table, double freq_hz);

// Deterministic amplitude gain of one hop: free-space spreading times
// the endpoint amplitude factor times molecular loss,
//   (c / (4 pi f d)) * amp_gain * exp(-kappa d / 2).
// `amp_gain` carries the square roots of the endpoint power gains (and the
// reflection amplitude when the hop starts at a reflecting surface).
double path_amplitude(double freq_hz, double dist_m, double kappa_abs, double amp_gain);

// One amplification stage of the receiver front end.
struct rf_stage
{
    double gain_db = 0.0;
    double noise_figure_db = 0.0;
};

// Cascaded noise factor F1 + (F2-1)/G1 + (F3-1)/(G1 G2) + ... (linear).
double friis_noise_factor(const std::vector<rf_stage> &stages);

// Total noise power kB T B F in watts.
double noise_power(double temp_k, double bandwidth_hz, double noise_factor);

// Signal-to-distortion-and-noise ratio of a link with end-to-end amplitude
// `amp`, transmit power `tx_power_w`, aggregate hardware error-vector
// magnitude squared `kappa_sq`, and receiver noise `noise_w`:
//   amp^2 P / (amp^2 kappa^2 P + N).
double sdnr(double amp, double tx_power_w, double kappa_sq, double noise_w);

// Hardware-imposed spectral-efficiency ceiling log2(1 + 1/kappa^2) with
// kappa^2 = kappa_t^2 + kappa_r^2; +infinity for ideal hardware.
double se_ceiling(double kappa_t, double kappa_r);

// SNR threshold of a target spectral efficiency: 2^eff - 1.
double threshold_snr(double spectral_efficiency);

} // namespace risthz::channel
