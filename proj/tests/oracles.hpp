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

// Reference implementations used only by the tests. Everything here is
// deliberately independent of the library code paths it checks: different
// algorithms, or the C standard library where it already provides the
// function.

#pragma once

#include <functional>

namespace oracles
{

// Adaptive Simpson quadrature with Richardson extrapolation.
// `tol` is an absolute tolerance on the result.
double integrate(const std::function<double(double)> &f, double a, double b, double tol);

// log-gamma by the Stirling series with Bernoulli numbers, argument
// shifted upward until the series converges to full double precision.
double stirling_ln_gamma(double x);

// Maclaurin series of erf, adequate for |x| <= 1.5.
double erf_taylor(double x);

// K_nu(x) from its integral representation
//     K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,
// evaluated in log space so large orders do not overflow.
double bessel_k_integral(double nu, double x);

// Density of the unit-mean gamma-gamma distribution with shape (alpha, beta),
// written with std::lgamma / std::cyl_bessel_k only.
double gamma_gamma_pdf(double alpha, double beta, double x);

// CDF of the same distribution by direct quadrature of the density.
double gamma_gamma_cdf(double alpha, double beta, double x, double tol = 1e-10);

} // namespace oracles
