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

#include "risthz/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace risthz::specfun
{

namespace
{

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogPi = 1.1447298858494001741434273513530587;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos approximation, g = 607/128, 15 coefficients. Relative error of
// the resulting log-gamma stays below ~1e-14 throughout Re(z) >= 0.5.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos core, valid for Re(z) >= 0.5.
cplx ln_gamma_lanczos(cplx z)
{
    const cplx zm1 = z - 1.0;
    cplx sum(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k)
        sum += kLanczos[k] / (zm1 + static_cast<double>(k));
    const cplx base = zm1 + (kLanczosG + 0.5);
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(base) - base + std::log(sum);
}

double ln_gamma_lanczos(double x)
{
    const double xm1 = x - 1.0;
    double sum = kLanczos[0];
    for (int k = 1; k < 15; ++k)
        sum += kLanczos[k] / (xm1 + static_cast<double>(k));
    const double base = xm1 + kLanczosG + 0.5;
    return kHalfLog2Pi + (xm1 + 0.5) * std::log(base) - base + std::log(sum);
}

// log(sin(pi z)) evaluated without forming exp(pi |Im z|). Branch follows
// from the logarithms used here; exponentiation restores sin exactly.
cplx log_sin_pi(cplx z)
{
    if (z.imag() < 0.0)
        return std::conj(log_sin_pi(std::conj(z)));
    // Im z >= 0: sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) i / 2
    const cplx i_pi_z = cplx(0.0, kPi) * z;
    const cplx w = std::exp(2.0 * i_pi_z); // |w| <= 1
    return -i_pi_z + std::log(1.0 - w) + cplx(-0.6931471805599453094172321214581766, 0.5 * kPi);
}

// ln|sin(pi x)| for real x; -inf at integers.
double ln_abs_sin_pi(double x)
{
    double r = x - std::floor(x);
    if (r > 0.5)
        r = 1.0 - r;
    const double s = std::sin(kPi * r);
    return s > 0.0 ? std::log(s) : -std::numeric_limits<double>::infinity();
}

} // namespace

cplx ln_gamma(cplx z)
{
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw std::domain_error("ln_gamma: pole at non-positive integer argument");
    if (z.real() < 0.5)
        return kLogPi - log_sin_pi(z) - ln_gamma_lanczos(1.0 - z);
    return ln_gamma_lanczos(z);
}

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: real argument must be positive");
    if (x < 0.5)
        return kLogPi - std::log(std::sin(kPi * x)) - ln_gamma_lanczos(1.0 - x);
    return ln_gamma_lanczos(x);
}

double ln_abs_gamma(double x)
{
    if (is_nonpositive_integer(x))
        return std::numeric_limits<double>::infinity();
    if (x > 0.0)
        return ln_gamma(x);
    // reflection: |Gamma(x)| = pi / (|sin(pi x)| Gamma(1 - x))
    return kLogPi - ln_abs_sin_pi(x) - ln_gamma_lanczos(1.0 - x);
}

// ---------------------------------------------------------------------------
// erf
// ---------------------------------------------------------------------------

namespace
{

// Scaled Maclaurin series with all-positive terms, used for |x| <= 2:
// erf(x) = 2x e^{-x^2}/sqrt(pi) * sum_k (2x^2)^k / (1*3*...*(2k+1))
double erf_series(double x)
{
    const double x2 = x * x;
    const double t2 = 2.0 * x2;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k)
    {
        term *= t2 / (2.0 * k + 1.0);
        sum += term;
        if (term < sum * kEps)
            break;
    }
    return 2.0 * x * std::exp(-x2) / kSqrtPi * sum;
}

// Upper incomplete gamma ratio Q(a, x) = Gamma(a,x)/Gamma(a) by modified
// Lentz continued fraction; reliable for x > a + 1.
double gamma_q_cf(double a, double x)
{
    const double fpmin = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps)
            return std::exp(-x + a * std::log(x) - ln_gamma(a)) * h;
    }
    throw evaluation_error("gamma_q_cf: continued fraction did not converge");
}

} // namespace

double erf(double x)
{
    const double ax = std::fabs(x);
    double r;
    if (ax <= 2.0)
        r = erf_series(ax);
    else
        r = 1.0 - gamma_q_cf(0.5, ax * ax); // erfc(x) = Q(1/2, x^2)
    return x < 0.0 ? -r : r;
}

// ---------------------------------------------------------------------------
// bessel_k
// ---------------------------------------------------------------------------

namespace
{

// gam1(mu) = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu), |mu| <= 1/2,
// evaluated through sinh of the log-gamma difference so the mu -> 0
// cancellation never surfaces.
void temme_gammas(double mu, double &gam1, double &gam2, double &gampl, double &gammi)
{
    const double lgp = ln_gamma(1.0 + mu); // |args| in [0.5, 1.5]
    const double lgm = ln_gamma(1.0 - mu);
    gampl = std::exp(-lgp);
    gammi = std::exp(-lgm);
    gam2 = 0.5 * (gampl + gammi);

    double w_over_mu; // w = (lgp - lgm)/2, expanded for small mu
    double w;
    if (std::fabs(mu) < 0.1)
    {
        constexpr double z3 = 1.2020569031595942854; // zeta(3)
        constexpr double z5 = 1.0369277551433699263;
        constexpr double z7 = 1.0083492773819228268;
        constexpr double eg = 0.57721566490153286061; // Euler gamma
        const double mu2 = mu * mu;
        w_over_mu = -(eg + mu2 * (z3 / 3.0 + mu2 * (z5 / 5.0 + mu2 * z7 / 7.0)));
        w = w_over_mu * mu;
    }
    else
    {
        w = 0.5 * (lgp - lgm);
        w_over_mu = w / mu;
    }
    const double sinhc = std::fabs(w) < 1e-4 ? 1.0 + w * w / 6.0 : std::sinh(w) / w;
    gam1 = std::exp(-0.5 * (lgp + lgm)) * w_over_mu * sinhc;
}

// Temme's series for K_mu and K_{mu+1}, |mu| <= 1/2 and x <= 2.
void bessel_k_temme(double mu, double x, double &kmu, double &kmu1)
{
    const double x2 = 0.5 * x;
    const double mu2 = mu * mu;
    const double pimu = kPi * mu;
    const double fact = std::fabs(pimu) < 1e-15 ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::fabs(e) < 1e-15 ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i < 30000; ++i)
    {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::fabs(del) < std::fabs(sum) * kEps)
        {
            kmu = sum;
            kmu1 = sum1 * (2.0 / x);
            return;
        }
    }
    throw evaluation_error("bessel_k: series did not converge");
}

// Steed/Thompson-Barnett continued fraction CF2 for x > 2.
void bessel_k_cf2(double mu, double x, double &kmu, double &kmu1)
{
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 30000; ++i)
    {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) <= kEps)
        {
            h = a1 * h;
            kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
            kmu1 = kmu * (mu + x + 0.5 - h) / x;
            return;
        }
    }
    throw evaluation_error("bessel_k: continued fraction did not converge");
}

} // namespace

double bessel_k(double nu, double x)
{
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: argument must be positive");
    nu = std::fabs(nu); // K_{-nu} = K_{nu}
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl; // in [-1/2, 1/2]
    double kmu, kmu1;
    if (x <= 2.0)
        bessel_k_temme(mu, x, kmu, kmu1);
    else
        bessel_k_cf2(mu, x, kmu, kmu1);
    // stable upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m
    for (int i = 1; i <= nl; ++i)
    {
        const double knext = kmu + (2.0 * (mu + i) / x) * kmu1;
        kmu = kmu1;
        kmu1 = knext;
        if (!std::isfinite(kmu))
            throw std::overflow_error("bessel_k: result exceeds double range");
    }
    return kmu;
}

// ---------------------------------------------------------------------------
// Meijer G via Mellin-Barnes quadrature
// ---------------------------------------------------------------------------

void meijer_g_spec::validate() const
{
    const std::size_t pp = p();
    const std::size_t qq = q();
    if (m > qq || n > pp)
        throw std::domain_error("meijer_g: need m <= q and n <= p");
    if (qq < pp)
        throw std::domain_error("meijer_g: q >= p required");
    for (double v : a)
        if (!std::isfinite(v))
            throw std::domain_error("meijer_g: non-finite top parameter");
    for (double v : b)
        if (!std::isfinite(v))
            throw std::domain_error("meijer_g: non-finite bottom parameter");
    const double delta = static_cast<double>(m) + static_cast<double>(n) -
                         0.5 * static_cast<double>(pp + qq);
    if (!(delta > 0.0))
        throw std::domain_error("meijer_g: m + n must exceed (p + q)/2 for a convergent contour");
    // A bottom parameter equal to a top parameter shifted down by a
    // non-negative integer places a pole on both sides of every contour.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j)
        {
            const double d = a[k] - 1.0 - b[j];
            const double r = std::round(d);
            if (r >= -0.5 && std::fabs(d - r) < 1e-9)
            {
                std::ostringstream os;
                os << "meijer_g: pole families collide (a[" << k << "]=" << a[k] << ", b[" << j
                   << "]=" << b[j] << " differ by integer " << r + 1.0 << ")";
                throw std::domain_error(os.str());
            }
        }
}

double meijer_g_result::log_abs_value() const
{
    return log_scale + std::log(std::fabs(mantissa));
}

namespace
{

// Log of the Mellin-Barnes integrand at s:
//   sum ln Gamma(b_j - s)  (j < m)    + sum ln Gamma(1 - a_k + s)  (k < n)
// - sum ln Gamma(1 - b_j + s) (j >= m) - sum ln Gamma(a_k - s)     (k >= n)
// + s ln z
cplx mb_log_integrand(const meijer_g_spec &sp, double log_z, cplx s)
{
    cplx acc = s * log_z;
    for (std::size_t j = 0; j < sp.b.size(); ++j)
        acc += (j < sp.m) ? ln_gamma(sp.b[j] - s) : -ln_gamma(1.0 - sp.b[j] + s);
    for (std::size_t k = 0; k < sp.a.size(); ++k)
        acc += (k < sp.n) ? ln_gamma(1.0 - sp.a[k] + s) : -ln_gamma(sp.a[k] - s);
    return acc;
}

// Same quantity on the real axis using ln|Gamma|; +inf on a numerator pole,
// -inf on a denominator pole (an integrand zero).
double mb_log_abs_real(const meijer_g_spec &sp, double log_z, double c)
{
    double acc = c * log_z;
    for (std::size_t j = 0; j < sp.b.size(); ++j)
        acc += (j < sp.m) ? ln_abs_gamma(sp.b[j] - c) : -ln_abs_gamma(1.0 - sp.b[j] + c);
    for (std::size_t k = 0; k < sp.a.size(); ++k)
        acc += (k < sp.n) ? ln_abs_gamma(1.0 - sp.a[k] + c) : -ln_abs_gamma(sp.a[k] - c);
    return acc;
}

// Contour quality proxy: integrand magnitude at t = 0 and t = 1. The t = 1
// probe masks the spurious dips that denominator zeros put on the real axis.
double contour_score(const meijer_g_spec &sp, double log_z, double c)
{
    const double on_axis = mb_log_abs_real(sp, log_z, c);
    const double off_axis = mb_log_integrand(sp, log_z, cplx(c, 1.0)).real();
    return std::max(on_axis, off_axis);
}

// Exponent of the |t|^kappa growth along the contour (Stirling), used to
// locate the magnitude peak t_peak = kappa / (pi delta).
double poly_exponent(const meijer_g_spec &sp, double c)
{
    double kappa = 0.0;
    for (std::size_t j = 0; j < sp.b.size(); ++j)
        kappa += (j < sp.m) ? (sp.b[j] - c - 0.5) : -(0.5 - sp.b[j] + c);
    for (std::size_t k = 0; k < sp.a.size(); ++k)
        kappa += (k < sp.n) ? (0.5 - sp.a[k] + c) : -(sp.a[k] - c - 0.5);
    return kappa;
}

double golden_min(const std::function<double(double)> &f, double lo, double hi)
{
    constexpr double invphi = 0.6180339887498948482;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-10 * (1.0 + std::fabs(lo)); ++it)
    {
        if (f1 <= f2)
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
        else
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

double choose_contour(const meijer_g_spec &sp, double log_z, double lo, double hi, double margin)
{
    const auto score = [&](double c) { return contour_score(sp, log_z, c); };

    double wlo, whi;
    const bool lo_finite = std::isfinite(lo);
    const bool hi_finite = std::isfinite(hi);
    if (lo_finite && hi_finite)
    {
        const double gap = hi - lo;
        const double m = std::min(margin, 0.25 * gap);
        wlo = lo + m;
        whi = hi - m;
    }
    else if (hi_finite)
    {
        // expand leftward until the magnitude stops improving (saddle passed)
        whi = hi - margin;
        double w = 4.0;
        while (w < 2.0e5 && score(hi - w) + 1e-9 < score(hi - 0.5 * w))
            w *= 2.0;
        wlo = hi - w;
    }
    else if (lo_finite)
    {
        wlo = lo + margin;
        double w = 4.0;
        while (w < 2.0e5 && score(lo + w) + 1e-9 < score(lo + 0.5 * w))
            w *= 2.0;
        whi = lo + w;
    }
    else
    {
        wlo = -8.0;
        whi = 8.0;
    }

    // coarse grid, then golden-section refinement around the best cell
    constexpr int kGrid = 64;
    int best = 0;
    double best_score = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i)
    {
        const double c = wlo + (whi - wlo) * i / kGrid;
        const double s = score(c);
        if (s < best_score)
        {
            best_score = s;
            best = i;
        }
    }
    const double cell = (whi - wlo) / kGrid;
    const double glo = std::max(wlo, wlo + cell * (best - 1));
    const double ghi = std::min(whi, wlo + cell * (best + 1));
    return golden_min(score, glo, ghi);
}

struct mb_segment
{
    double a = 0.0, b = 0.0;
    double val = 0.0, absval = 0.0, err = 0.0;
    bool operator<(const mb_segment &o) const { return err < o.err; }
};

// 15-point Gauss-Kronrod rule with the usual error heuristic.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
mb_segment gk15(const F &f, double a, double b)
{
    mb_segment seg;
    seg.a = a;
    seg.b = b;
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 3; ++j)
    {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 4; ++j)
    {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    seg.val = resk * hlgth;
    seg.absval = resabs * hlgth;
    resasc *= hlgth;
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (seg.absval > std::numeric_limits<double>::min() / (50.0 * kEps))
        abserr = std::max(50.0 * kEps * seg.absval, abserr);
    seg.err = abserr;
    return seg;
}

} // namespace

meijer_g_result meijer_g(const meijer_g_spec &sp, double z, const meijer_g_options &opt)
{
    sp.validate();
    if (!(z > 0.0))
        throw std::domain_error("meijer_g: argument must be positive");

    const double delta = static_cast<double>(sp.m) + static_cast<double>(sp.n) -
                         0.5 * static_cast<double>(sp.p() + sp.q());
    const double log_z = std::log(z);

    // pole-free vertical strip: max(a_k) - 1 < Re(s) < min(b_j)
    double lo = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < sp.n; ++k)
        lo = std::max(lo, sp.a[k] - 1.0);
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sp.m; ++j)
        hi = std::min(hi, sp.b[j]);
    if (std::isfinite(lo) && std::isfinite(hi) && !(hi - lo > 1e-9))
    {
        std::ostringstream os;
        os << "meijer_g: pole families interleave with no vertical gap (max a-1 = " << lo
           << " >= min b = " << hi << ")";
        throw evaluation_error(os.str());
    }

    const double c = choose_contour(sp, log_z, lo, hi, opt.contour_margin);

    // log scale: largest integrand magnitude over a probe set, so subsequent
    // exponentials stay inside double range
    const double t_peak = std::max(0.0, poly_exponent(sp, c)) / (kPi * delta);
    double ls = mb_log_abs_real(sp, log_z, c);
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, std::max(1.0, t_peak), 2.0 * t_peak + 1.0})
    {
        const double v = mb_log_integrand(sp, log_z, cplx(c, t)).real();
        if (std::isfinite(v))
            ls = std::isfinite(ls) ? std::max(ls, v) : v;
    }
    if (!std::isfinite(ls))
        ls = 0.0;

    const auto f = [&](double t) {
        const cplx lam = mb_log_integrand(sp, log_z, cplx(c, t));
        return std::exp(lam - ls).real();
    };
    const auto mag = [&](double t) {
        return std::exp(mb_log_integrand(sp, log_z, cplx(c, t)).real() - ls);
    };
    // one panel should not span more than roughly one oscillation period
    const double pq = static_cast<double>(sp.p() + sp.q());
    const auto width_hint = [&](double t) {
        return std::clamp(2.0 * kPi / (1.0 + std::fabs(log_z) + pq * std::log(2.0 + t)), 0.05, 4.0);
    };

    std::priority_queue<mb_segment> heap;
    double sum_val = 0.0, sum_abs = 0.0, sum_err = 0.0;
    std::size_t panels = 0;
    const auto push = [&](mb_segment &&s) {
        sum_val += s.val;
        sum_abs += s.absval;
        sum_err += s.err;
        heap.push(std::move(s));
        ++panels;
    };
    const auto push_range = [&](double t0, double t1) {
        while (t0 < t1)
        {
            const double w = std::min(width_hint(t0), t1 - t0);
            push(gk15(f, t0, t0 + w));
            t0 += w;
        }
    };

    constexpr double kTmax = 1.0e5;
    double T = std::max(2.0 * t_peak + 10.0, 12.0 / (kPi * delta));
    push_range(0.0, T);

    double tail = 0.0;
    std::size_t split_budget = opt.max_panels;
    while (true)
    {
        // truncation: extend while the contour tail is still relevant
        const double tail_mag = mag(T);
        tail = tail_mag / (kPi * delta);
        if (tail > 1e-16 * std::max(std::fabs(sum_val), 1e-300) && T < kTmax)
        {
            const double B = std::min(std::max(4.0, 0.5 * T), kTmax - T);
            push_range(T, T + B);
            T += B;
            continue;
        }
        const double round_err = 4.0 * kEps * sum_abs;
        const double total_err = sum_err + tail + round_err;
        const double target = opt.rel_tol * std::fabs(sum_val);
        if (total_err <= target)
            break;
        if (panels >= split_budget || heap.empty())
        {
            meijer_g_result best;
            best.mantissa = sum_val / kPi;
            best.log_scale = ls;
            best.rel_err = total_err / std::max(std::fabs(sum_val), 1e-300);
            best.panels = panels;
            best.contour_re = c;
            std::ostringstream os;
            os << "meijer_g: accuracy target " << opt.rel_tol << " not reached (estimated "
               << best.rel_err << " after " << panels << " panels)";
            throw tolerance_error(os.str(), best.value(), best.rel_err);
        }
        if (sum_err <= 0.25 * (tail + round_err))
        {
            // quadrature error is no longer the bottleneck
            if (tail > round_err && T < kTmax)
            {
                const double B = std::min(std::max(4.0, 0.5 * T), kTmax - T);
                push_range(T, T + B);
                T += B;
                continue;
            }
            meijer_g_result best;
            best.mantissa = sum_val / kPi;
            best.log_scale = ls;
            best.rel_err = total_err / std::max(std::fabs(sum_val), 1e-300);
            best.panels = panels;
            best.contour_re = c;
            throw tolerance_error("meijer_g: accuracy limited by cancellation on the contour",
                                  best.value(), best.rel_err);
        }
        mb_segment worst = heap.top();
        heap.pop();
        sum_val -= worst.val;
        sum_abs -= worst.absval;
        sum_err -= worst.err;
        --panels;
        const double mid = 0.5 * (worst.a + worst.b);
        push(gk15(f, worst.a, mid));
        push(gk15(f, mid, worst.b));
    }

    meijer_g_result res;
    res.mantissa = sum_val / kPi;
    res.log_scale = ls;
    const double round_err = 4.0 * kEps * sum_abs;
    res.rel_err = (sum_err + tail + round_err) / std::max(std::fabs(sum_val), 1e-300);
    res.panels = panels;
    res.contour_re = c;
    return res;
}

} // namespace risthz::specfun
