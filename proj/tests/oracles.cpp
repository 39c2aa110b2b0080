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

#include "oracles.hpp"

#include <cmath>

namespace oracles
{

namespace
{

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)> &f, double a, double m, double b, double fa,
             double fm, double fb, double whole, double tol, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0 * tol)
        return left + right + diff / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b, double tol)
{
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    return adapt(f, a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 60);
}

double stirling_ln_gamma(double x)
{
    // ln Gamma(x) = ln Gamma(x + n) - sum_{k=0}^{n-1} ln(x + k)
    double shift = 0.0;
    while (x < 25.0)
    {
        shift -= std::log(x);
        x += 1.0;
    }
    // B_2 .. B_14 over 2k(2k-1)
    static const double bern[7] = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                   5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
    double s = 0.91893853320467274178 + (x - 0.5) * std::log(x) - x;
    double xp = x;
    for (int k = 1; k <= 7; ++k)
    {
        s += bern[k - 1] / (2.0 * k * (2.0 * k - 1.0) * xp);
        xp *= x * x;
    }
    return s + shift;
}

double erf_taylor(double x)
{
    double term = x;
    double sum = x;
    for (int k = 1; k < 80; ++k)
    {
        term *= -x * x / k;
        sum += term / (2.0 * k + 1.0);
    }
    return sum * 1.1283791670955125739; // 2/sqrt(pi)
}

double bessel_k_integral(double nu, double x)
{
    nu = std::fabs(nu);
    // truncation point: exponent of the integrand below -750
    double tmax = 5.0;
    while (-x * std::cosh(tmax) + nu * tmax > -750.0)
        tmax += 1.0;
    const auto integrand = [&](double t) {
        const double u = nu * t;
        const double lcosh = u + std::log1p(std::exp(-2.0 * u)) - 0.6931471805599453;
        const double e = -x * std::cosh(t) + lcosh;
        return e < -745.0 ? 0.0 : std::exp(e);
    };
    return integrate(integrand, 0.0, tmax, 1e-13);
}

double gamma_gamma_pdf(double alpha, double beta, double x)
{
    if (x <= 0.0)
        return 0.0;
    const double ab = alpha * beta;
    const double h = 0.5 * (alpha + beta);
    const double lg = h * std::log(ab) + (h - 1.0) * std::log(x) + std::log(2.0) -
                      std::lgamma(alpha) - std::lgamma(beta);
    return std::exp(lg) * std::cyl_bessel_k(std::fabs(alpha - beta), 2.0 * std::sqrt(ab * x));
}

double gamma_gamma_cdf(double alpha, double beta, double x, double tol)
{
    if (x <= 0.0)
        return 0.0;
    return integrate([&](double t) { return gamma_gamma_pdf(alpha, beta, t); }, 0.0, x, tol);
}

} // namespace oracles
