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

// Self-contained real/complex special-function kernel. Everything the
// closed-form outage expressions need lives here: principal-branch
// log-gamma, the error function, the modified Bessel function of the
// second kind for real order, and a Meijer G evaluator based on numerical
// integration of the Mellin-Barnes contour integral.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "risthz/errors.hpp"

namespace risthz::specfun
{

using cplx = std::complex<double>;

// Principal-branch log-gamma, analytic on C minus the real ray (-inf, 0].
// Throws std::domain_error on the poles (non-positive real integers).
cplx ln_gamma(cplx z);

// Real log-gamma for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

// ln|Gamma(x)| for real non-pole x of either sign; +inf at the poles.
double ln_abs_gamma(double x);

// Error function, odd, |erf| < 1 for finite x. Absolute error below 1e-14.
double erf(double x);

// Modified Bessel function of the second kind K_nu(x) for real order nu and
// x > 0. Symmetric in the order: K_{-nu} = K_{nu}. Throws std::domain_error
// for x <= 0 and std::overflow_error when the result exceeds double range.
double bessel_k(double nu, double x);

// Parameter block of G^{m,n}_{p,q}(z | a; b). The first m entries of `b`
// and the first n entries of `a` are the "left" groups that generate the
// two pole families of the contour integrand.
struct meijer_g_spec
{
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> a;
    std::vector<double> b;

    std::size_t p() const noexcept { return a.size(); }
    std::size_t q() const noexcept { return b.size(); }

    // Checks structural constraints: m <= q, n <= p, q >= p, and
    // m + n > (p + q)/2 so the contour integral converges for every
    // finite z > 0. Throws std::domain_error with a diagnostic.
    void validate() const;
};

struct meijer_g_options
{
    double rel_tol = 1e-8;        // relative accuracy target
    std::size_t max_panels = 20000; // refinement budget (Gauss-Kronrod panels)
    double contour_margin = 0.05; // minimum distance kept from either pole family
};

// Result in split representation: value = mantissa * exp(log_scale).
// The split form survives parameter ranges where the raw value would
// overflow or underflow a double (large gamma prefactors).
struct meijer_g_result
{
    double mantissa = 0.0;
    double log_scale = 0.0;
    double rel_err = 0.0;     // estimated relative error of the value
    std::size_t panels = 0;   // quadrature panels spent
    double contour_re = 0.0;  // Re(s) of the vertical contour used

    double value() const { return mantissa * std::exp(log_scale); }
    double log_abs_value() const;
};

// Evaluates G^{m,n}_{p,q}(z | a; b) for z > 0 by adaptive Gauss-Kronrod
// quadrature along a vertical Mellin-Barnes contour. The contour abscissa
// is chosen inside the pole-free strip at the point where the integrand
// magnitude is smallest (a saddle-point proxy), which keeps cancellation
// in check even for exponentially small results.
//
// Throws std::domain_error for invalid specs or z <= 0,
// evaluation_error when no straight contour separates the pole families,
// and tolerance_error (carrying the best estimate) when the panel budget
// is exhausted before the accuracy target is met.
meijer_g_result meijer_g(const meijer_g_spec &spec, double z, const meijer_g_options &opt = {});

} // namespace risthz::specfun
