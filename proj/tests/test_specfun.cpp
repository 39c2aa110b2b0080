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

#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "risthz/specfun.hpp"

namespace sf = risthz::specfun;
using sf::cplx;

namespace
{

double rel_diff(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_SUITE("specfun")
{

TEST_CASE("ln_gamma matches fixed real-axis references")
{
    CHECK(std::fabs(sf::ln_gamma(1.0)) <= 1e-15);
    CHECK(std::fabs(sf::ln_gamma(2.0)) <= 1e-15);
    CHECK(rel_diff(sf::ln_gamma(0.5), 0.5 * std::log(M_PI)) <= 1e-15);
    double ln9fact = 0.0; // Gamma(10) = 9!
    for (int k = 2; k <= 9; ++k)
        ln9fact += std::log(static_cast<double>(k));
    CHECK(rel_diff(sf::ln_gamma(10.0), ln9fact) <= 1e-14);
}

TEST_CASE("ln_gamma tracks the Stirling oracle and the recurrence")
{
    for (int i = 0; i <= 46; ++i)
    {
        const double x = 0.5 * std::pow(10.0, i / 20.0); // 0.5 .. ~100
        const double ref = oracles::stirling_ln_gamma(x);
        // both sides carry an absolute rounding floor near 1e-14 (the oracle
        // accumulates up to 25 shift terms), so the bound is absolute there
        CHECK(std::fabs(sf::ln_gamma(x) - ref) <= 5e-14 * std::max(1.0, std::fabs(ref)));
        const double resid = sf::ln_gamma(x + 1.0) - sf::ln_gamma(x) - std::log(x);
        CHECK(std::fabs(resid) <= 1e-12 * std::max(1.0, std::fabs(sf::ln_gamma(x + 1.0))));
    }
}

TEST_CASE("complex ln_gamma reproduces reference points")
{
    // high-precision references for the principal branch
    const struct
    {
        cplx z, ref;
    } cases[] = {
        {{2.5, 3.0}, {-1.4709546103488416913, 2.8226156382607994500}},
        {{0.5, 10.0}, {-14.789024734744293451, 13.030020034911089851}},
        {{-3.7, 0.1}, {-1.4509604302988111297, -12.640147646308920912}},
        {{-20.25, -4.0}, {-53.437641694502355071, 53.032987098677264091}},
    };
    for (const auto &tc : cases)
    {
        const cplx got = sf::ln_gamma(tc.z);
        CHECK(std::abs(got - tc.ref) <= 1e-12 * std::abs(tc.ref));
    }
}

TEST_CASE("complex ln_gamma is conjugate-symmetric and consistent with the recurrence")
{
    const std::vector<cplx> pts = {{2.5, 3.0}, {0.5, 10.0}, {-3.7, 0.1}, {0.1, -0.2}, {7.0, -40.0}};
    for (const cplx &z : pts)
    {
        const cplx a = sf::ln_gamma(std::conj(z));
        const cplx b = std::conj(sf::ln_gamma(z));
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
        // exp removes any branch offset: Gamma(z+1)/Gamma(z) = z
        const cplx ratio = std::exp(sf::ln_gamma(z + 1.0) - sf::ln_gamma(z));
        CHECK(std::abs(ratio - z) <= 1e-12 * std::abs(z));
    }
}

TEST_CASE("ln_gamma rejects poles; ln_abs_gamma covers the negative axis")
{
    CHECK_THROWS_AS((void)sf::ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::ln_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::ln_gamma(-0.5), std::domain_error); // real overload needs x > 0
    CHECK_THROWS_AS((void)sf::ln_gamma(cplx(-3.0, 0.0)), std::domain_error);

    CHECK(std::isinf(sf::ln_abs_gamma(-3.0)));
    CHECK(std::isinf(sf::ln_abs_gamma(0.0)));
    CHECK(rel_diff(sf::ln_abs_gamma(-2.5), -0.056243716497674050673) <= 1e-12);
    CHECK(rel_diff(sf::ln_abs_gamma(-0.5), 1.2655121234846453965) <= 1e-13);
    CHECK(sf::ln_abs_gamma(3.5) == sf::ln_gamma(3.5));
}

TEST_CASE("erf reference values, symmetry, and limits")
{
    CHECK(sf::erf(0.0) == 0.0);
    CHECK(rel_diff(sf::erf(0.5), 0.52049987781304653768) <= 1e-14);
    CHECK(rel_diff(sf::erf(1.0), 0.84270079294971486934) <= 1e-14);
    CHECK(rel_diff(sf::erf(2.0), 0.99532226501895273416) <= 1e-14);
    CHECK(rel_diff(sf::erf(3.0), 0.99997790950300141456) <= 1e-14);
    CHECK(std::fabs(sf::erf(1.0) - oracles::erf_taylor(1.0)) <= 5e-16);
    for (double x : {0.3, 1.7, 2.9})
        CHECK(sf::erf(-x) == -sf::erf(x));
    CHECK(std::fabs(sf::erf(6.0) - 1.0) <= 1e-15);
    double prev = sf::erf(-3.0);
    for (double x = -2.9; x < 3.05; x += 0.1)
    {
        const double cur = sf::erf(x);
        CHECK(cur > prev);
        prev = cur;
    }
    for (double x = 0.05; x < 6.0; x += 0.1)
        CHECK(std::fabs(sf::erf(x) - std::erf(x)) <= 1.5e-15);
}

TEST_CASE("bessel_k reference values")
{
    // series branch (x <= 2) and continued-fraction branch (x > 2)
    CHECK(rel_diff(sf::bessel_k(0.0, 1.0), 0.42102443824070833334) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(1.0, 2.0), 0.13986588181652242728) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(2.3, 1.7), 0.54454547687836345365) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(0.3, 0.1), 2.8050564750215723107) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(5.0, 2.0), 9.4310491005964674428) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(7.2, 4.0), 1.9380809126545765003) <= 1e-13);
    CHECK(rel_diff(sf::bessel_k(10.5, 30.0), 1.2790443691531980458e-13) <= 1e-13);
    // half-integer closed form K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    CHECK(rel_diff(sf::bessel_k(0.5, 1.0), std::sqrt(M_PI / 2.0) * std::exp(-1.0)) <= 1e-14);
}

TEST_CASE("bessel_k agrees with its integral representation")
{
    const double pairs[][2] = {{2.3, 1.7}, {0.5, 1.0}, {7.2, 4.0}, {0.0, 0.3}};
    for (const auto &p : pairs)
        CHECK(rel_diff(sf::bessel_k(p[0], p[1]), oracles::bessel_k_integral(p[0], p[1])) <= 1e-9);
}

TEST_CASE("bessel_k order symmetry, domain, and monotonic decay")
{
    for (double nu : {0.3, 1.0, 4.6})
        for (double x : {0.4, 3.0})
            CHECK(sf::bessel_k(-nu, x) == sf::bessel_k(nu, x));
    CHECK_THROWS_AS((void)sf::bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::bessel_k(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::bessel_k(150.0, 0.1), std::overflow_error);
    for (double nu : {0.0, 0.5, 3.3})
    {
        double prev = sf::bessel_k(nu, 0.05);
        for (double x = 0.15; x < 12.0; x += 0.25)
        {
            const double cur = sf::bessel_k(nu, x);
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    for (double nu : {0.0, 0.3, 1.0, 2.7, 5.0, 10.5})
        for (double x : {0.1, 0.5, 1.9, 2.1, 5.0, 10.0, 30.0})
            CHECK(rel_diff(sf::bessel_k(nu, x), std::cyl_bessel_k(nu, x)) <= 1e-10);
}

TEST_CASE("meijer_g reproduces its classical reductions")
{
    const double zs[] = {0.01, 0.1, 1.0, 10.0, 100.0};

    sf::meijer_g_spec expo;
    expo.m = 1;
    expo.n = 0;
    expo.b = {0.0};
    for (double z : zs)
    {
        const auto r = sf::meijer_g(expo, z);
        CHECK(rel_diff(r.value() , std::exp(-z)) <= 1e-8);
        CHECK(r.rel_err <= 1e-8);
        CHECK(r.panels > 0);
        CHECK(r.contour_re < 0.0); // all contour poles sit at b + l >= 0
    }

    sf::meijer_g_spec bessel;
    bessel.m = 2;
    bessel.n = 0;
    bessel.b = {0.5, -0.5};
    for (double z : zs)
        CHECK(rel_diff(sf::meijer_g(bessel, z).value(),
                       2.0 * std::cyl_bessel_k(1.0, 2.0 * std::sqrt(z))) <= 1e-8);

    sf::meijer_g_spec rational; // G^{1,1}_{1,1}(z | 1; 1) = z/(1+z)
    rational.m = 1;
    rational.n = 1;
    rational.a = {1.0};
    rational.b = {1.0};
    for (double z : zs)
        CHECK(rel_diff(sf::meijer_g(rational, z).value(), z / (1.0 + z)) <= 1e-8);
}

TEST_CASE("meijer_g evaluates the gamma-gamma distribution function")
{
    const double shapes[][2] = {{1.31, 1.31}, {4.34, 1.31}, {8.20, 9.71}, {9.71, 9.71}};
    for (const auto &s : shapes)
    {
        const double alpha = s[0];
        const double beta = s[1];
        sf::meijer_g_spec cdf;
        cdf.m = 2;
        cdf.n = 1;
        cdf.a = {1.0};
        cdf.b = {alpha, beta, 0.0};
        for (double x : {0.3, 1.0})
        {
            const auto r = sf::meijer_g(cdf, alpha * beta * x);
            const double got =
                r.mantissa * std::exp(r.log_scale - std::lgamma(alpha) - std::lgamma(beta));
            const double want = oracles::gamma_gamma_cdf(alpha, beta, x, 1e-11);
            CHECK(rel_diff(got, want) <= 1e-6);
            CHECK(got > 0.0);
            CHECK(got < 1.0);
        }
    }
}

TEST_CASE("meijer_g split representation survives underflowing magnitudes")
{
    // G^{2,0}_{0,2}(z | ; 200.5, 199.5) = 2 z^200 K_1(2 sqrt(z)), far below
    // double range at z = 1e-8 yet exactly representable in split form
    sf::meijer_g_spec g;
    g.m = 2;
    g.n = 0;
    g.b = {200.5, 199.5};
    const auto r = sf::meijer_g(g, 1e-8);
    CHECK(std::isfinite(r.mantissa));
    CHECK(std::fabs(r.log_abs_value() - -3674.9258086011594235) <= 1e-5);
    CHECK(r.value() == 0.0); // underflows as a plain double
}

TEST_CASE("meijer_g rejects invalid parameter blocks")
{
    sf::meijer_g_spec g;

    g = {};
    g.m = 2;
    g.b = {0.0}; // m > q
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), std::domain_error);

    g = {};
    g.m = 1;
    g.n = 1;
    g.b = {0.0}; // n > p
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), std::domain_error);

    g = {};
    g.m = 1;
    g.a = {1.0, 2.0};
    g.b = {0.0}; // q < p
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), std::domain_error);

    g = {};
    g.m = 1;
    g.a = {0.5};
    g.b = {0.0}; // m + n = (p + q)/2: divergent contour
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), std::domain_error);

    g = {};
    g.m = 1;
    g.n = 1;
    g.a = {1.0};
    g.b = {0.0}; // pole families collide: a - 1 - b = 0
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), std::domain_error);

    g = {};
    g.m = 1;
    g.b = {0.0};
    CHECK_THROWS_AS((void)sf::meijer_g(g, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)sf::meijer_g(g, -1.0), std::domain_error);
}

TEST_CASE("meijer_g reports when no straight contour separates the poles")
{
    sf::meijer_g_spec g; // max(a) - 1 = 2 exceeds min(b) = 0.5
    g.m = 1;
    g.n = 1;
    g.a = {3.0};
    g.b = {0.5};
    CHECK_THROWS_AS((void)sf::meijer_g(g, 1.0), risthz::evaluation_error);
}

TEST_CASE("meijer_g surrenders honestly when the accuracy target is unreachable")
{
    sf::meijer_g_spec expo;
    expo.m = 1;
    expo.n = 0;
    expo.b = {0.0};
    sf::meijer_g_options opt;
    opt.rel_tol = 1e-15; // below the cancellation floor of the quadrature
    opt.max_panels = 2;
    try
    {
        (void)sf::meijer_g(expo, 1.0, opt);
        FAIL("expected tolerance_error");
    }
    catch (const risthz::tolerance_error &e)
    {
        CHECK(e.rel_error() > 0.0);
        CHECK(std::fabs(e.best_estimate() - std::exp(-1.0)) <= 0.3 * std::exp(-1.0));
    }
}

} // TEST_SUITE
