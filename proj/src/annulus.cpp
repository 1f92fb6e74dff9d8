#include "bergkern/annulus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bergkern/fd.hpp"

namespace bergkern::annulus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kSeriesTermCap = 1'000'000;

elliptic::Weierstrass engine_for(double omega1) {
    return elliptic::Weierstrass{elliptic::RectLattice(omega1)};
}

void require_radius(double x) {
    if (!(x > 0.0) || !(x < 1.0)) {
        throw DomainError("annulus: radii must lie in (0, 1)");
    }
}

void require_radii(double r, double s) {
    require_radius(r);
    require_radius(s);
}

} // namespace

AnnulusPoint::AnnulusPoint(cplx zeta_, cplx z_) : zeta(zeta_), z(z_) {
    const double r = std::abs(zeta);
    const double s = std::abs(z);
    if (!(r > 0.0) || !(r < s) || !(s < 1.0)) {
        std::ostringstream os;
        os << "AnnulusPoint: need 0 < |zeta| < |z| < 1, got |zeta|=" << r << " |z|=" << s;
        throw DomainError(os.str());
    }
    u = -2.0 * std::log(s);
    omega1 = -std::log(r);
}

double closed_form_value(double zeta_abs, double z_abs) {
    require_radii(zeta_abs, z_abs);
    const double omega1 = -std::log(zeta_abs);
    const double u = -2.0 * std::log(z_abs);
    const auto we = engine_for(omega1);
    const auto qp = we.quasi_periods();
    return (we.wp_real(u) + qp.c) / (kPi * z_abs * z_abs);
}

KernelValue kernel_closed(const AnnulusPoint& p) {
    const double value = closed_form_value(std::abs(p.zeta), std::abs(p.z));
    if (!(value > 0.0)) {
        throw NumericalError("kernel_closed: non-positive kernel value");
    }
    return {value, KernelMethod::closed};
}

double laurent_monomial_norm(int n, double r) {
    require_radius(r);
    if (n == -1) {
        return -2.0 * kPi * std::log(r);
    }
    return kPi * (1.0 - std::pow(r, 2.0 * n + 2.0)) / (n + 1.0);
}

// Tail bounds for the Laurent kernel K(r, s) = sum_n s^{2n} / ||z^n||^2.
//
// Positive side, n >= N >= 1 with x = s^2:
//   a_n = (n+1) s^{2n} / (pi (1 - r^{2n+2})) <= (n+1) x^n / (pi (1 - r^2)),
//   sum_{n>=N} (n+1) x^n = x^N ((N+1) - N x) / (1-x)^2.
//
// Negative side, n = -k-1 with k >= K >= 1 and y = (r/s)^2:
//   b_k = k (r/s)^{2k} / (pi s^2 (1 - r^{2k})) <= k y^k / (pi s^2 (1 - r^2)),
//   sum_{k>=K} k y^k = y^K (K - (K-1) y) / (1-y)^2.
SeriesWindow series_window(double r, double s, double eps) {
    if (!(r < s)) {
        throw DomainError("series_window: need r < s");
    }
    require_radii(r, s);
    if (!(eps > 0.0)) {
        throw DomainError("series_window: eps must be positive");
    }
    const double x = s * s;
    const double y = (r / s) * (r / s);
    const double common = 1.0 / (kPi * (1.0 - r * r));
    for (int n = 1;; ++n) {
        if (2L * n + 1L > kSeriesTermCap) {
            throw NonConvergence("series_window: term cap exceeded");
        }
        const double pos = common * std::pow(x, n + 1.0) * ((n + 2.0) - (n + 1.0) * x) /
                           ((1.0 - x) * (1.0 - x));
        const double neg = (common / (s * s)) * std::pow(y, double(n)) * (n - (n - 1.0) * y) /
                           ((1.0 - y) * (1.0 - y));
        const double tail = pos + neg;
        if (tail < eps) {
            return {n, tail};
        }
    }
}

double series_value(double r, double s, int n) {
    require_radii(r, s);
    // n >= 0 terms as (n+1) s^{2n} / (pi (1 - r^{2n+2})); n = -k-1 terms in
    // the ratio form k (r/s)^{2k} / (pi s^2 (1 - r^{2k})), whose powers only
    // underflow, never overflow.
    long double acc = n >= 1 ? 1.0L / laurent_monomial_norm(-1, r) / ((long double)s * s) : 0.0L;
    const long double x = (long double)s * s;
    const long double y = ((long double)r / s) * ((long double)r / s);
    long double xpow = 1.0L, ypow = y;
    for (int k = 0; k <= n; ++k) {
        acc += (k + 1.0L) * xpow / (kPi * (1.0L - std::pow((long double)r, 2.0L * k + 2.0L)));
        xpow *= x;
    }
    for (int k = 1; k + 1 <= n; ++k) {
        acc += k * ypow / (kPi * x * (1.0L - std::pow((long double)r, 2.0L * k)));
        ypow *= y;
    }
    return double(acc);
}

KernelValue kernel_series(double r, double s, double eps) {
    if (!(r < s)) {
        throw DomainError("kernel_series: need r < s < 1");
    }
    const auto win = series_window(r, s, eps);
    return {series_value(r, s, win.n), KernelMethod::series};
}

double levi_zeta_component(const AnnulusPoint& p) {
    const auto we = engine_for(p.omega1);
    const double c = we.quasi_periods().c;
    const double pu = we.wp_real(p.u);
    const double pom = we.wp_real(p.omega1);
    const double num = (2.0 * pu - pom + c) * (pom + c);
    const double den = 4.0 * p.omega1 * p.omega1 * (pu + c) * (pu + c);
    return std::exp(2.0 * p.omega1) * num / den;
}

double default_fd_step(const AnnulusPoint& p) {
    const double r = std::abs(p.zeta);
    const double s = std::abs(p.z);
    return 1e-4 * std::min(r, s - r);
}

namespace {

void require_stencil(const AnnulusPoint& p, double h) {
    const double r = std::abs(p.zeta);
    const double s = std::abs(p.z);
    if (!(h > 0.0) || r - h <= 0.0 || r + h >= s) {
        std::ostringstream os;
        os << "stencil of half width " << h << " leaves 0 < |zeta| < |z| at |zeta|=" << r;
        throw StencilOutOfDomain(os.str());
    }
}

// log K as a function of zeta at fixed |z|, on the chosen evaluator. The
// series variant sums over one window fixed across the whole stencil, so
// the differentiated function is a single smooth partial sum rather than a
// sum whose truncation degree jumps between stencil points.
fd::Field1 log_kernel_field(const AnnulusPoint& p, double h, KernelMethod method) {
    const double s = std::abs(p.z);
    if (method == KernelMethod::closed) {
        return [s](cplx zeta) { return std::log(closed_form_value(std::abs(zeta), s)); };
    }
    const double r_hi = std::abs(p.zeta) + h;
    const int window = series_window(r_hi, s, 1e-12).n;
    return [s, window](cplx zeta) { return std::log(series_value(std::abs(zeta), s, window)); };
}

} // namespace

double levi_zeta_fd(const AnnulusPoint& p, double h, KernelMethod method) {
    if (h <= 0.0) {
        h = default_fd_step(p);
    }
    require_stencil(p, h);
    const auto f = log_kernel_field(p, h, method);
    const double d1 = fd::wirtinger_mixed_1d(f, p.zeta, h);
    const double d2 = fd::wirtinger_mixed_1d(f, p.zeta, h / 2.0);
    if (std::abs(d1 - d2) > 1e-5 * std::max(std::abs(d2), 1e-300)) {
        return (4.0 * d2 - d1) / 3.0;
    }
    return d2;
}

RemarkResidual remark_identity_residual(const AnnulusPoint& p, double h) {
    if (h <= 0.0) {
        h = default_fd_step(p);
    }
    require_stencil(p, h);
    const double s = std::abs(p.z);
    const fd::Field1 K = [s](cplx zeta) { return closed_form_value(std::abs(zeta), s); };
    const double lhs = fd::wirtinger_mixed_1d(K, p.zeta, h);
    const cplx dK = fd::wirtinger_first_1d(K, p.zeta, h);
    const double rhs = std::norm(dK); // (dK/dzeta)(dK/dzetabar) = |dK/dzeta|^2 for real K
    return {lhs, rhs, lhs - rhs};
}

DecayProfile boundary_decay_profile(cplx zeta, Approach approach, std::span<const int> ks) {
    if (ks.empty()) {
        throw DomainError("boundary_decay_profile: ks must be nonempty");
    }
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (ks[i] <= ks[i - 1]) {
            throw DomainError("boundary_decay_profile: ks must be strictly increasing");
        }
    }
    const double r = std::abs(zeta);
    require_radius(r);

    DecayProfile profile{approach, {}};
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (const int k : ks) {
        const double step = std::pow(10.0, -double(k));
        const double s = approach == Approach::outer ? 1.0 - step : r + step * (1.0 - r);
        if (!(s > r) || !(s < 1.0)) {
            std::ostringstream os;
            os << "boundary_decay_profile: row k=" << k << " leaves the annulus (|z|=" << s << ")";
            throw DomainError(os.str());
        }
        const AnnulusPoint p(zeta, cplx(s, 0.0));
        const double levi = levi_zeta_component(p);
        const double ratio = profile.rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                  : levi / prev;
        profile.rows.push_back({s, p.u, levi, ratio});
        prev = levi;
    }
    return profile;
}

} // namespace bergkern::annulus
