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

#include "risthz/chain.hpp"

#include <cmath>
#include <sstream>

namespace risthz
{

double chain_spec::log_amplitude() const
{
    double acc = 0.0;
    for (const auto &h : hops)
        acc += std::log(h.amplitude);
    return acc;
}

std::size_t chain_spec::turbulence_factors() const noexcept
{
    std::size_t n = 0;
    for (const auto &h : hops)
        n += h.turbulence.has_value();
    return n;
}

std::size_t chain_spec::pointing_factors() const noexcept
{
    std::size_t n = 0;
    for (const auto &h : hops)
        n += h.pointing.has_value();
    return n;
}

void chain_spec::validate() const
{
    if (hops.empty())
        throw std::domain_error("chain needs at least one hop");
    std::size_t idx = 0;
    for (const auto &h : hops)
    {
        std::ostringstream at;
        at << "hop " << idx << ": ";
        if (!(h.amplitude > 0.0) || !std::isfinite(h.amplitude))
            throw std::domain_error(at.str() + "amplitude must be positive and finite");
        if (h.turbulence)
        {
            if (!(h.turbulence->alpha > 0.0) || !std::isfinite(h.turbulence->alpha) ||
                !(h.turbulence->beta > 0.0) || !std::isfinite(h.turbulence->beta))
                throw std::domain_error(at.str() + "fade shape parameters must be positive");
        }
        if (h.pointing)
        {
            if (!(h.pointing->fraction > 0.0) || h.pointing->fraction > 1.0)
                throw std::domain_error(at.str() + "collected fraction must lie in (0, 1]");
            if (!(h.pointing->xi > 0.0) || !std::isfinite(h.pointing->xi))
                throw std::domain_error(at.str() + "jitter exponent must be positive and finite");
        }
        ++idx;
    }
    if (kappa_t < 0.0 || kappa_r < 0.0 || !std::isfinite(kappa_t) || !std::isfinite(kappa_r))
        throw std::domain_error("error-vector magnitudes must be non-negative and finite");
}

} // namespace risthz
