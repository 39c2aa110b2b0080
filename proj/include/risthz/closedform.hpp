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

// Exact distribution of the end-to-end amplitude and the outage
// probability it implies. The product of all random fade factors has a
// Mellin transform that is a ratio of gamma functions, so its density and
// distribution function are single Meijer G evaluations; the deterministic
// amplitude product only shifts the argument scale.

#pragma once

#include "risthz/chain.hpp"
#include "risthz/specfun.hpp"

namespace risthz::closedform
{

// Density of the unit-mean gamma-gamma fade factor (direct Bessel form).
// Zero for x <= 0.
double gg_pdf(const channel::gg_shape &shape, double x);

// Distribution function of the same factor (single Meijer G evaluation).
double gg_cdf(const channel::gg_shape &shape, double x,
              const specfun::meijer_g_options &opt = {});

// Density ξ x^(ξ-1) / A0^ξ of the misalignment fade on (0, A0]; zero outside.
double pointing_pdf(const channel::pointing_spec &spec, double x);

// Distribution function (x/A0)^ξ of the misalignment fade, clamped to [0,1].
double pointing_cdf(const channel::pointing_spec &spec, double x);

// Mellin structure of the end-to-end amplitude distribution.
struct cascade_dist
{
    specfun::meijer_g_spec cdf_spec; // G^{m,1}_{P+1, m+1}
    specfun::meijer_g_spec pdf_spec; // G^{m,0}_{P, m}
    double log_arg_scale = 0.0;      // ln K: evaluate G at K * x
    double log_prefactor = 0.0;      // ln of the gamma/xi prefactor
    double log_constant = 0.0;       // ln of the deterministic amplitude product
    bool deterministic = false;      // no random factor survives
};

// Assembles the Meijer G parameter blocks for a validated chain.
cascade_dist build_cascade(const chain_spec &chain);

// Density of the end-to-end amplitude W at x (zero for x <= 0).
// Throws evaluation_error for a fully deterministic cascade.
double pdf_cascade(const chain_spec &chain, double x,
                   const specfun::meijer_g_options &opt = {});

// P[W <= x], clamped to [0, 1]. Far tails where a gamma-product moment
// bound already pins the value below 1e-18 (or the complementary bound
// pins it above 1 - 1e-18) short-circuit to exact 0 or 1.
double cdf_cascade(const chain_spec &chain, double x,
                   const specfun::meijer_g_options &opt = {});

// Outage probability P[SDNR < threshold] under an absolute power budget.
// Exactly 1 if and only if the hardware distortion ceiling is at or below
// the threshold (threshold * kappa_sq >= 1); otherwise the amplitude
// distribution function evaluated at the equivalent amplitude threshold
//   sqrt(threshold * noise / (power * (1 - threshold * kappa_sq))).
double outage_probability(const chain_spec &chain, const link_budget &budget,
                          double threshold_snr, const specfun::meijer_g_options &opt = {});

} // namespace risthz::closedform
