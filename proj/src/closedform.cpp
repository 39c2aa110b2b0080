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

#include "risthz/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace risthz::closedform
{

namespace
{

// ln P[W > x] bounded by the k-th moment (Markov), minimized over a dyadic
// ladder of orders. All moments of the cascade exist: gamma-gamma factors
// have gamma-ratio moments and misalignment factors are bounded.
double log_upper_tail_bound(const chain_spec &chain, double log_x)
{
    double best = std::numeric_limits<double>::infinity();
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0})
    {
        double lm = 0.0; // ln E[W^k]
        for (const auto &h : chain.hops)
        {
            lm += k * std::log(h.amplitude);
            if (h.turbulence)
            {
                const double a = h.turbulence->alpha;
                const double b = h.turbulence->beta;
                lm += specfun::ln_gamma(a + k) - specfun::ln_gamma(a) + specfun::ln_gamma(b + k) -
                      specfun::ln_gamma(b) - k * std::log(a * b);
            }
            if (h.pointing)
                lm += std::log(h.pointing->xi) - std::log(h.pointing->xi + k) +
                      k * std::log(h.pointing->fraction);
        }
        best = std::min(best, lm - k * log_x);
    }
    return best;
}

// ln P[W <= x] bounded by a negative moment of fractional order below
// every shape parameter.
double log_lower_tail_bound(const chain_spec &chain, double log_x)
{
    double kmax = std::numeric_limits<double>::infinity();
    for (const auto &h : chain.hops)
    {
        if (h.turbulence)
            kmax = std::min({kmax, h.turbulence->alpha, h.turbulence->beta});
        if (h.pointing)
            kmax = std::min(kmax, h.pointing->xi);
    }
    const double k = 0.5 * kmax;
    double lm = 0.0; // ln E[W^-k]
    for (const auto &h : chain.hops)
    {
        lm -= k * std::log(h.amplitude);
        if (h.turbulence)
        {
            const double a = h.turbulence->alpha;
            const double b = h.turbulence->beta;
            lm += specfun::ln_gamma(a - k) - specfun::ln_gamma(a) + specfun::ln_gamma(b - k) -
                  specfun::ln_gamma(b) + k * std::log(a * b);
        }
        if (h.pointing)
            lm += std::log(h.pointing->xi) - std::log(h.pointing->xi - k) -
                  k * std::log(h.pointing->fraction);
    }
    return lm + k * log_x;
}

} // namespace

double gg_pdf(const channel::gg_shape &shape, double x)
{
    if (x <= 0.0)
        return 0.0;
    const double a = shape.alpha;
    const double b = shape.beta;
    const double h = 0.5 * (a + b);
    const double lg = std::log(2.0) + h * std::log(a * b) + (h - 1.0) * std::log(x) -
                      specfun::ln_gamma(a) - specfun::ln_gamma(b);
    const double kv = specfun::bessel_k(a - b, 2.0 * std::sqrt(a * b * x));
    return std::exp(lg) * kv;
}

double gg_cdf(const channel::gg_shape &shape, double x, const specfun::meijer_g_options &opt)
{
    if (x <= 0.0)
        return 0.0;
    specfun::meijer_g_spec g;
    g.m = 2;
    g.n = 1;
    g.a = {1.0};
    g.b = {shape.alpha, shape.beta, 0.0};
    const auto r = specfun::meijer_g(g, shape.alpha * shape.beta * x, opt);
    const double v = r.mantissa * std::exp(r.log_scale - specfun::ln_gamma(shape.alpha) -
                                           specfun::ln_gamma(shape.beta));
    return std::clamp(v, 0.0, 1.0);
}

double pointing_pdf(const channel::pointing_spec &spec, double x)
{
    if (x <= 0.0 || x > spec.fraction)
        return 0.0;
    return spec.xi / spec.fraction * std::pow(x / spec.fraction, spec.xi - 1.0);
}

double pointing_cdf(const channel::pointing_spec &spec, double x)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= spec.fraction)
        return 1.0;
    return std::pow(x / spec.fraction, spec.xi);
}

cascade_dist build_cascade(const chain_spec &chain)
{
    chain.validate();
    cascade_dist out;
    std::vector<double> alphas, betas, xis;
    out.log_constant = 0.0;
    out.log_arg_scale = 0.0;
    out.log_prefactor = 0.0;
    for (const auto &h : chain.hops)
    {
        out.log_constant += std::log(h.amplitude);
        if (h.turbulence)
        {
            alphas.push_back(h.turbulence->alpha);
            betas.push_back(h.turbulence->beta);
            out.log_arg_scale += std::log(h.turbulence->alpha * h.turbulence->beta);
            out.log_prefactor -=
                specfun::ln_gamma(h.turbulence->alpha) + specfun::ln_gamma(h.turbulence->beta);
        }
        if (h.pointing)
        {
            xis.push_back(h.pointing->xi);
            out.log_arg_scale -= std::log(h.pointing->fraction);
            out.log_prefactor += std::log(h.pointing->xi);
        }
    }
    out.log_arg_scale -= out.log_constant;
    out.deterministic = alphas.empty() && xis.empty();

    // density: G^{m,0}_{P,m}( K x | {xi+1};  {alpha},{beta},{xi} )
    auto &pdf = out.pdf_spec;
    for (double xi : xis)
        pdf.a.push_back(xi + 1.0);
    pdf.b = alphas;
    pdf.b.insert(pdf.b.end(), betas.begin(), betas.end());
    pdf.b.insert(pdf.b.end(), xis.begin(), xis.end());
    pdf.m = pdf.b.size();
    pdf.n = 0;

    // distribution: G^{m,1}_{P+1,m+1}( K x | 1,{xi+1};  {alpha},{beta},{xi},0 )
    auto &cdf = out.cdf_spec;
    cdf.a = {1.0};
    cdf.a.insert(cdf.a.end(), pdf.a.begin(), pdf.a.end());
    cdf.b = pdf.b;
    cdf.b.push_back(0.0);
    cdf.m = pdf.m;
    cdf.n = 1;
    return out;
}

double pdf_cascade(const chain_spec &chain, double x, const specfun::meijer_g_options &opt)
{
    const cascade_dist d = build_cascade(chain);
    if (d.deterministic)
        throw evaluation_error("cascade is deterministic: the amplitude has no density");
    if (x <= 0.0)
        return 0.0;
    const auto r = specfun::meijer_g(d.pdf_spec, std::exp(d.log_arg_scale + std::log(x)), opt);
    const double v = r.mantissa * std::exp(r.log_scale + d.log_prefactor - std::log(x));
    return std::max(v, 0.0);
}

double cdf_cascade(const chain_spec &chain, double x, const specfun::meijer_g_options &opt)
{
    const cascade_dist d = build_cascade(chain);
    if (x <= 0.0)
        return 0.0;
    if (d.deterministic)
        return std::log(x) >= d.log_constant ? 1.0 : 0.0;
    const double log_x = std::log(x);
    if (log_upper_tail_bound(chain, log_x) < std::log(1e-18))
        return 1.0;
    if (log_lower_tail_bound(chain, log_x) < std::log(1e-300))
        return 0.0;
    const auto r = specfun::meijer_g(d.cdf_spec, std::exp(d.log_arg_scale + log_x), opt);
    const double v = r.mantissa * std::exp(r.log_scale + d.log_prefactor);
    return std::clamp(v, 0.0, 1.0);
}

double outage_probability(const chain_spec &chain, const link_budget &budget,
                          double threshold_snr, const specfun::meijer_g_options &opt)
{
    chain.validate();
    if (!(budget.tx_power_w > 0.0) || !(budget.noise_w > 0.0))
        throw std::domain_error("transmit power and noise power must be positive");
    if (!(threshold_snr > 0.0))
        throw std::domain_error("SNR threshold must be positive");
    const double ceiling_margin = threshold_snr * chain.kappa_sq();
    if (ceiling_margin >= 1.0)
        return 1.0; // distortion alone caps the SDNR below the threshold
    const double amp_thr =
        std::sqrt(threshold_snr * budget.noise_w / (budget.tx_power_w * (1.0 - ceiling_margin)));
    return cdf_cascade(chain, amp_thr, opt);
}

} // namespace risthz::closedform
