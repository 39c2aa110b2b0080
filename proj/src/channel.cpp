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

#include "risthz/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "risthz/specfun.hpp"

namespace risthz::channel
{

namespace
{

constexpr double kPi = 3.141592653589793238462643383279502884;

// negligible-scintillation cutoff below which the gamma-gamma factor is
// treated as its deterministic mean
constexpr double kRytovFloor = 1e-6;

void require_positive(double v, const char *what)
{
    if (!(v > 0.0))
    {
        std::ostringstream os;
        os << what << " must be positive (got " << v << ")";
        throw std::domain_error(os.str());
    }
}

} // namespace

double rytov_variance(double cn2, double freq_hz, double dist_m)
{
    if (cn2 < 0.0)
        throw std::domain_error("structure constant must be non-negative");
    require_positive(freq_hz, "frequency");
    require_positive(dist_m, "distance");
    const double k = 2.0 * kPi * freq_hz / kSpeedOfLight;
    return 1.23 * cn2 * std::pow(k, 7.0 / 6.0) * std::pow(dist_m, 11.0 / 6.0);
}

double aperture_param(double radius_m, double wavelength_m, double dist_m)
{
    if (radius_m < 0.0)
        throw std::domain_error("aperture radius must be non-negative");
    require_positive(wavelength_m, "wavelength");
    require_positive(dist_m, "distance");
    return std::sqrt(kPi * radius_m * radius_m / (2.0 * wavelength_m * dist_m));
}

std::optional<gg_shape> gg_params(double rytov_var, double aperture_param)
{
    if (rytov_var < 0.0)
        throw std::domain_error("scintillation variance must be non-negative");
    if (aperture_param < 0.0)
        throw std::domain_error("aperture parameter must be non-negative");
    if (rytov_var <= kRytovFloor)
        return std::nullopt;
    const double s2 = rytov_var;
    const double d2 = aperture_param * aperture_param;
    const double s125 = std::pow(s2, 6.0 / 5.0);
    const double lx = 0.49 * s2 / std::pow(1.0 + 0.65 * d2 + 1.11 * s125, 7.0 / 6.0);
    const double ly =
        0.51 * s2 * std::pow(1.0 + 0.69 * s125, -5.0 / 6.0) / (1.0 + 0.9 * d2 + 0.62 * d2 * s125);
    gg_shape out;
    out.alpha = 1.0 / std::expm1(lx);
    out.beta = 1.0 / std::expm1(ly);
    return out;
}

double pointing_fraction(double radius_m, double waist_m)
{
    require_positive(radius_m, "aperture radius");
    require_positive(waist_m, "beam waist");
    const double v = std::sqrt(kPi / 2.0) * radius_m / waist_m;
    const double e = specfun::erf(v);
    return e * e;
}

std::optional<pointing_spec> pointing_params(double radius_m, double waist_m, double jitter_m)
{
    require_positive(radius_m, "aperture radius");
    require_positive(waist_m, "beam waist");
    if (jitter_m < 0.0)
        throw std::domain_error("jitter deviation must be non-negative");
    if (jitter_m == 0.0)
        return std::nullopt;
    const double v = std::sqrt(kPi / 2.0) * radius_m / waist_m;
    const double erf_v = specfun::erf(v);
    pointing_spec out;
    out.fraction = erf_v * erf_v;
    const double weq_sq =
        waist_m * waist_m * std::sqrt(kPi) * erf_v / (2.0 * v * std::exp(-v * v));
    out.xi = weq_sq / (4.0 * jitter_m * jitter_m);
    return out;
}

double water_vapor_pressure(double temp_k, double rel_humidity_pct)
{
    require_positive(temp_k, "temperature");
    if (rel_humidity_pct < 0.0 || rel_humidity_pct > 100.0)
        throw std::domain_error("relative humidity must lie in [0, 100]");
    const double t = temp_k - 273.15; // Celsius
    const double sat = 611.21 * std::exp((18.678 - t / 234.5) * t / (t + 257.14));
    return rel_humidity_pct / 100.0 * sat;
}

double absorption_simplified(double freq_hz, double temp_k, double rel_humidity_pct,
                             double pressure_pa)
{
    if (freq_hz < 275e9 || freq_hz > 400e9)
        throw std::domain_error("built-in absorption model covers 275-400 GHz only");
    require_positive(pressure_pa, "pressure");
    const double e_pa = water_vapor_pressure(temp_k, rel_humidity_pct);
    if (e_pa >= pressure_pa)
        throw std::domain_error("water-vapor partial pressure exceeds total pressure");

    // dominant water-vapor lines: center (GHz), relative strength
    static constexpr double kLines[][2] = {
        {183.310087, 2.371}, {321.22563, 0.0462}, {325.152888, 1.624}, {380.197353, 11.94},
        {448.001085, 9.0},   {556.935985, 503.0}, {752.033113, 239.0}};
    // overall line scale and foreign-continuum scale, calibrated so the
    // model returns 1.7e-4 Np/m at 300 GHz, 273 K, 50% RH, 101325 Pa
    // (70% resonant, 30% continuum at the calibration point)
    constexpr double kLineScale = 4.717721004014e-3;
    constexpr double kContForeign = 1.319363188143e-4;
    constexpr double kContSelfRatio = 20.0;

    const double f = freq_hz * 1e-9; // GHz
    const double e_hpa = e_pa / 100.0;
    const double pd_hpa = (pressure_pa - e_pa) / 100.0;
    const double theta = 300.0 / temp_k;
    const double width = (0.00281 * pd_hpa + 0.0139 * e_hpa) * std::pow(theta, 0.75);

    double lines = 0.0;
    for (const auto &ln : kLines)
    {
        const double f0 = ln[0];
        const double dm = f - f0;
        const double dp = f + f0;
        const double shape = (f / f0) * (f / f0) / kPi *
                             (width / (dm * dm + width * width) + width / (dp * dp + width * width));
        lines += ln[1] * shape;
    }
    lines *= kLineScale * e_hpa * std::pow(theta, 3.5) * std::exp(1.0 - theta);

    const double cont = e_hpa * f * f * theta * theta * theta *
                        (kContForeign * (pd_hpa + kContSelfRatio * e_hpa)) * 1e-9;
    return lines + cont;
}

double absorption_lookup(const absorption_table &table, double freq_hz)
{
    const auto &fs = table.freq_hz;
    const auto &ks = table.kappa;
    if (fs.size() < 2 || fs.size() != ks.size())
        throw std::domain_error("absorption table needs two or more (frequency, kappa) rows");
    if (!std::is_sorted(fs.begin(), fs.end()) ||
        std::adjacent_find(fs.begin(), fs.end()) != fs.end())
        throw std::domain_error("absorption table frequencies must be strictly increasing");
    if (freq_hz < fs.front() || freq_hz > fs.back())
    {
        std::ostringstream os;
        os << "frequency " << freq_hz << " Hz outside table range [" << fs.front() << ", "
           << fs.back() << "]";
        throw std::domain_error(os.str());
    }
    const auto it = std::upper_bound(fs.begin(), fs.end(), freq_hz);
    const std::size_t hi = std::min<std::size_t>(it - fs.begin(), fs.size() - 1);
    const std::size_t lo = hi - 1;
    const double w = (freq_hz - fs[lo]) / (fs[hi] - fs[lo]);
    return ks[lo] + w * (ks[hi] - ks[lo]);
}

double path_amplitude(double freq_hz, double dist_m, double kappa_abs, double amp_gain)
{
    require_positive(freq_hz, "frequency");
    require_positive(dist_m, "distance");
    if (kappa_abs < 0.0)
        throw std::domain_error("absorption coefficient must be non-negative");
    require_positive(amp_gain, "amplitude gain");
    return kSpeedOfLight / (4.0 * kPi * freq_hz * dist_m) * amp_gain *
           std::exp(-0.5 * kappa_abs * dist_m);
}

double friis_noise_factor(const std::vector<rf_stage> &stages)
{
    if (stages.empty())
        throw std::domain_error("receiver chain needs at least one stage");
    double f_total = 0.0;
    double gain_acc = 1.0;
    bool first = true;
    for (const auto &st : stages)
    {
        const double f_lin = std::pow(10.0, st.noise_figure_db / 10.0);
        if (f_lin < 1.0)
            throw std::domain_error("noise figure below 0 dB");
        f_total += first ? f_lin : (f_lin - 1.0) / gain_acc;
        gain_acc *= std::pow(10.0, st.gain_db / 10.0);
        first = false;
    }
    return f_total;
}

double noise_power(double temp_k, double bandwidth_hz, double noise_factor)
{
    require_positive(temp_k, "temperature");
    require_positive(bandwidth_hz, "bandwidth");
    if (noise_factor < 1.0)
        throw std::domain_error("noise factor must be at least 1");
    return kBoltzmann * temp_k * bandwidth_hz * noise_factor;
}

double sdnr(double amp, double tx_power_w, double kappa_sq, double noise_w)
{
    if (amp < 0.0)
        throw std::domain_error("amplitude must be non-negative");
    if (tx_power_w < 0.0)
        throw std::domain_error("transmit power must be non-negative");
    if (kappa_sq < 0.0)
        throw std::domain_error("squared error-vector magnitude must be non-negative");
    require_positive(noise_w, "noise power");
    const double sig = amp * amp * tx_power_w;
    return sig / (sig * kappa_sq + noise_w);
}

double se_ceiling(double kappa_t, double kappa_r)
{
    const double k2 = kappa_t * kappa_t + kappa_r * kappa_r;
    if (k2 == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::log2(1.0 + 1.0 / k2);
}

double threshold_snr(double spectral_efficiency)
{
    require_positive(spectral_efficiency, "spectral efficiency");
    return std::exp2(spectral_efficiency) - 1.0;
}

} // namespace risthz::channel
