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

// Statistical model of a multi-hop link. The end-to-end amplitude is
//   W = prod_i amplitude_i * prod_i h_turb,i * prod_i h_point,i
// where each hop contributes a deterministic amplitude and up to two
// unit-interval-free random fade factors. Factors that a scenario renders
// deterministic (negligible scintillation, zero jitter, enormous jitter
// exponent) are folded into `amplitude` by whoever builds the hop and do
// not appear as random factors here.

#pragma once

#include <optional>
#include <vector>

#include "risthz/channel.hpp"

namespace risthz
{

// One hop, reduced to its statistical parameters.
struct chain_hop
{
    // deterministic amplitude gain: spreading, endpoint gains, molecular
    // loss, and any folded-out degenerate fade means
    double amplitude = 1.0;
    // unit-mean gamma-gamma fade, absent when degenerate
    std::optional<channel::gg_shape> turbulence;
    // misalignment fade on (0, fraction], absent when degenerate
    std::optional<channel::pointing_spec> pointing;
};

// Transmit power and receiver noise, fixing the absolute scale of the SNR.
struct link_budget
{
    double tx_power_w = 1.0;
    double noise_w = 1.0;
};

struct chain_spec
{
    std::vector<chain_hop> hops;
    double kappa_t = 0.0; // transmitter error-vector magnitude
    double kappa_r = 0.0; // receiver error-vector magnitude

    // Aggregate hardware distortion. Kept as this single expression so the
    // result is bit-identical under swapping the two terminals.
    double kappa_sq() const noexcept { return kappa_t * kappa_t + kappa_r * kappa_r; }

    // ln of the deterministic amplitude product over all hops.
    double log_amplitude() const;

    std::size_t turbulence_factors() const noexcept;
    std::size_t pointing_factors() const noexcept;

    // Throws std::domain_error on structurally invalid parameters (no hops,
    // non-positive amplitudes or shapes, fractions outside (0, 1], ...).
    void validate() const;
};

} // namespace risthz
