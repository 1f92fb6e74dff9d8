#include "bergkern/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bergkern::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;

// Realness tolerance for values that must be real on rectangular lattices.
constexpr double kImagTol = 1e-12;

} // namespace

RectLattice::RectLattice(double omega1_) : omega1(omega1_) {
    if (!std::isfinite(omega1) || omega1 <= 0.0) {
        throw DomainError("RectLattice: omega1 must be positive and finite");
    }
}

RectLattice RectLattice::from_zeta(cplx zeta) {
    const double r = std::abs(zeta);
    if (!(r > 0.0) || !(r < 1.0)) {
        throw DomainError("RectLattice::from_zeta: need 0 < |zeta| < 1");
    }
    return RectLattice(-std::log(r));
}

Weierstrass::Weierstrass(RectLattice lat, detail::EvalMode mode) : lat_(lat) {
    switch (mode) {
    case detail::EvalMode::direct:
        swapped_ = false;
        break;
    case detail::EvalMode::swapped:
        swapped_ = true;
        break;
    case detail::EvalMode::automatic:
    default:
        swapped_ = lat_.omega1 > kPi;
        break;
    }
    om_w_ = swapped_ ? kPi * kPi / lat_.omega1 : lat_.omega1;
    q_ = std::exp(-kPi * kPi / om_w_);

    // (-1)^n q^{(n+1/2)^2}; terms beyond the working precision are dropped.
    // The series argument satisfies |Im v| <= pi^2/(2 om_w), so term n of any
    // of the theta sums is bounded by q^{n^2 - 1/4} relative to term 0.
    const double logq = -kPi * kPi / om_w_;
    nterms_ = coef_.size();
    for (std::size_t n = 0; n < coef_.size(); ++n) {
        const double e = (n + 0.5) * (n + 0.5) * logq;
        coef_[n] = (n % 2 == 0 ? 1.0 : -1.0) * std::exp(e);
        const double rel = std::exp((double(n) * double(n) - 0.25) * logq);
        if (n > 0 && rel * std::pow(2.0 * double(n) + 1.0, 3) < 1e-22) {
            nterms_ = n + 1;
            break;
        }
    }

    // eta1 on the working lattice from the theta constants:
    // eta1 = -(pi^2/(12 om)) theta1'''(0)/theta1'(0).
    double t1p = 0.0, t1ppp = 0.0;
    for (std::size_t n = 0; n < nterms_; ++n) {
        const double f = 2.0 * double(n) + 1.0;
        t1p += coef_[n] * f;
        t1ppp -= coef_[n] * f * f * f;
    }
    eta1_w_ = -(kPi * kPi / (12.0 * om_w_)) * (t1ppp / t1p);

    // On swap, zeta_w(omega1) maps to the imaginary quasi-period of the
    // working lattice; combining homogeneity with the Legendre relation
    // gives eta(omega1) = 1/2 - eta1(pi^2/omega1).
    eta_ = swapped_ ? 0.5 - eta1_w_ : eta1_w_;
    eta3_ = cplx(0.0, kPi * (eta_ - 0.5) / lat_.omega1);
}

Reduced Weierstrass::reduce(cplx u) const {
    const double om = lat_.omega1;
    const double m = std::floor((u.real() + om) / (2.0 * om));
    const double n = std::floor((u.imag() + kPi) / (2.0 * kPi));
    const cplx u_red(u.real() - 2.0 * m * om, u.imag() - 2.0 * n * kPi);
    const cplx shift = 2.0 * m * eta_ + 2.0 * n * eta3_;
    return {u_red, shift};
}

double Weierstrass::pole_distance(cplx u) const {
    const cplx r = reduce(u).u_red;
    double d = std::numeric_limits<double>::infinity();
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            const cplx w(2.0 * m * lat_.omega1, 2.0 * n * kPi);
            d = std::min(d, std::abs(r - w));
        }
    }
    return d;
}

cplx Weierstrass::reduced_checked(cplx u) const {
    const cplx r = reduce(u).u_red;
    double d = std::numeric_limits<double>::infinity();
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            const cplx w(2.0 * m * lat_.omega1, 2.0 * n * kPi);
            d = std::min(d, std::abs(r - w));
        }
    }
    if (d < kPoleGuard) {
        std::ostringstream os;
        os << "argument within " << kPoleGuard << " of a lattice point (distance " << d << ")";
        throw PoleProximity(os.str());
    }
    return r;
}

Weierstrass::ThetaRatios Weierstrass::theta_ratios(cplx v) const {
    // theta1(v)    =  2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1)v)
    // theta1'(v)   =  2 sum  ...  (2n+1)   cos((2n+1)v)
    // theta1''(v)  = -2 sum  ...  (2n+1)^2 sin((2n+1)v)
    // theta1'''(v) = -2 sum  ...  (2n+1)^3 cos((2n+1)v)
    const cplx s1 = std::sin(v), c1 = std::cos(v);
    const cplx s2 = 2.0 * s1 * c1, c2 = c1 * c1 - s1 * s1;
    cplx sn = s1, cn = c1;
    cplx t0{}, t1{}, t2{}, t3{};
    for (std::size_t n = 0; n < nterms_; ++n) {
        const double f = 2.0 * double(n) + 1.0;
        const double a = coef_[n];
        t0 += a * sn;
        t1 += a * f * cn;
        t2 -= a * f * f * sn;
        t3 -= a * f * f * f * cn;
        const cplx ns = sn * c2 + cn * s2;
        const cplx nc = cn * c2 - sn * s2;
        sn = ns;
        cn = nc;
    }
    return {t1 / t0, t2 / t0, t3 / t0};
}

cplx Weierstrass::wp_working(cplx u) const {
    const double k = kPi / (2.0 * om_w_);
    const ThetaRatios t = theta_ratios(k * u);
    return -eta1_w_ / om_w_ - k * k * (t.l2 - t.l1 * t.l1);
}

cplx Weierstrass::wp_prime_working(cplx u) const {
    const double k = kPi / (2.0 * om_w_);
    const ThetaRatios t = theta_ratios(k * u);
    return -k * k * k * (t.l3 - 3.0 * t.l2 * t.l1 + 2.0 * t.l1 * t.l1 * t.l1);
}

cplx Weierstrass::wzeta_working(cplx u) const {
    const double k = kPi / (2.0 * om_w_);
    const ThetaRatios t = theta_ratios(k * u);
    return eta1_w_ * u / om_w_ + k * t.l1;
}

cplx Weierstrass::wp(cplx u) const {
    const cplx r = reduced_checked(u);
    cplx val;
    if (!swapped_) {
        val = wp_working(r);
    } else {
        const cplx lam(0.0, -kPi / lat_.omega1);
        val = lam * lam * wp_working(lam * r);
    }
    if (u.imag() == 0.0) {
        val = cplx(strip_imag(val, "wp"), 0.0);
    }
    return val;
}

cplx Weierstrass::wp_prime(cplx u) const {
    const cplx r = reduced_checked(u);
    cplx val;
    if (!swapped_) {
        val = wp_prime_working(r);
    } else {
        const cplx lam(0.0, -kPi / lat_.omega1);
        val = lam * lam * lam * wp_prime_working(lam * r);
    }
    if (u.imag() == 0.0) {
        val = cplx(strip_imag(val, "wp_prime"), 0.0);
    }
    return val;
}

cplx Weierstrass::wzeta(cplx u) const {
    const Reduced red = reduce(u);
    const cplx r = reduced_checked(u);
    cplx val;
    if (!swapped_) {
        val = wzeta_working(r) + red.zeta_shift;
    } else {
        const cplx lam(0.0, -kPi / lat_.omega1);
        val = lam * wzeta_working(lam * r) + red.zeta_shift;
    }
    if (u.imag() == 0.0) {
        val = cplx(strip_imag(val, "wzeta"), 0.0);
    }
    return val;
}

double Weierstrass::strip_imag(cplx value, const char* what) {
    const double scale = std::abs(value.real()) + 1.0;
    if (std::abs(value.imag()) > kImagTol * scale) {
        std::ostringstream os;
        os << what << ": real argument produced imaginary residue " << value.imag();
        throw NumericalError(os.str());
    }
    return value.real();
}

double Weierstrass::wp_real(double u) const { return wp(cplx(u, 0.0)).real(); }
double Weierstrass::wp_prime_real(double u) const { return wp_prime(cplx(u, 0.0)).real(); }
double Weierstrass::wzeta_real(double u) const { return wzeta(cplx(u, 0.0)).real(); }

EllipticValue Weierstrass::wp_ex(cplx u) const { return {wp(u), pole_distance(u)}; }
EllipticValue Weierstrass::wp_prime_ex(cplx u) const { return {wp_prime(u), pole_distance(u)}; }
EllipticValue Weierstrass::wzeta_ex(cplx u) const { return {wzeta(u), pole_distance(u)}; }

Reduced lattice_reduce(cplx u, const RectLattice& lat) { return Weierstrass(lat).reduce(u); }
cplx wp(cplx u, const RectLattice& lat) { return Weierstrass(lat).wp(u); }
cplx wp_prime(cplx u, const RectLattice& lat) { return Weierstrass(lat).wp_prime(u); }
cplx wzeta(cplx u, const RectLattice& lat) { return Weierstrass(lat).wzeta(u); }
QuasiPeriods quasi_periods(const RectLattice& lat) { return Weierstrass(lat).quasi_periods(); }

} // namespace bergkern::elliptic
