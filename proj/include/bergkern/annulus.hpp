#ifndef BERGKERN_ANNULUS_HPP
#define BERGKERN_ANNULUS_HPP

#include <complex>
#include <span>
#include <vector>

#include "bergkern/elliptic.hpp"
#include "bergkern/errors.hpp"

namespace bergkern::annulus {

using cplx = std::complex<double>;

/// A point (zeta, z) of the annulus family {|zeta| < |z| < 1}, with the
/// derived coordinates u = -2 log|z| and omega1 = -log|zeta|.
struct AnnulusPoint {
    cplx zeta;
    cplx z;
    double u;
    double omega1;

    AnnulusPoint(cplx zeta_, cplx z_);
};

enum class KernelMethod { closed, series };

/// Diagonal Bergman kernel value (per unit Lebesgue area).
struct KernelValue {
    double value;
    KernelMethod method;
};

/// Closed form of the diagonal kernel: (P(u) + c(omega1)) / (pi |z|^2).
KernelValue kernel_closed(const AnnulusPoint& p);

/// The closed-form expression evaluated at bare radii 0 < zeta_abs < 1,
/// 0 < z_abs < 1 with no ordering constraint. For z_abs <= zeta_abs this
/// continues the formula through the periodicity of P; it is the kernel of
/// the annulus only when zeta_abs < z_abs.
double closed_form_value(double zeta_abs, double z_abs);

/// Squared Bergman-space norm of z^n on the annulus {r < |z| < 1}:
/// pi (1 - r^{2n+2})/(n+1) for n != -1, and -2 pi log r for n = -1.
double laurent_monomial_norm(int n, double r);

/// Truncation window [-n, n] of the Laurent kernel series together with the
/// proven bound on everything it drops.
struct SeriesWindow {
    int n;
    double tail_bound;
};

/// Smallest symmetric window whose tail bound is below eps.
SeriesWindow series_window(double r, double s, double eps);

/// Partial sum of the Laurent series over the window [-n, n].
double series_value(double r, double s, int n);

/// Independent series evaluation of the diagonal kernel at radii
/// r = |zeta|, s = |z|, truncated so the proven tail bound is below eps.
KernelValue kernel_series(double r, double s, double eps);

/// The closed-form mixed-derivative expression
///   e^{2 omega1} (2P(u) - P(omega1) + c)(P(omega1) + c) / (4 omega1^2 (P(u) + c)^2).
double levi_zeta_component(const AnnulusPoint& p);

/// Default step for zeta finite differences: 1e-4 times the distance of
/// |zeta| to the constraint boundaries {0, |z|}.
double default_fd_step(const AnnulusPoint& p);

/// d^2 log K / dzeta dzetabar by central differences on the chosen kernel
/// evaluator. One Richardson refinement (h, h/2) is applied when the two
/// estimates differ by more than 1e-5 relative. Pass h <= 0 for the default
/// step.
double levi_zeta_fd(const AnnulusPoint& p, double h = 0.0,
                    KernelMethod method = KernelMethod::closed);

/// Finite-difference sides of the identity
/// d^2 K / dzeta dzetabar  ?=  (dK/dzeta)(dK/dzetabar); reported, not asserted.
struct RemarkResidual {
    double lhs;
    double rhs;
    double residual;
};

RemarkResidual remark_identity_residual(const AnnulusPoint& p, double h = 0.0);

enum class Approach { outer, inner };

struct DecayRow {
    double z_abs;
    double u;
    double levi_value;
    double ratio_to_previous; // NaN on the first row
};

struct DecayProfile {
    Approach approach;
    std::vector<DecayRow> rows;
};

/// Rows of levi_zeta_component along |z| = 1 - 10^{-k} (outer) or
/// |z| = |zeta| + 10^{-k} (1 - |zeta|) (inner) for the given exponents.
DecayProfile boundary_decay_profile(cplx zeta, Approach approach, std::span<const int> ks);

} // namespace bergkern::annulus

#endif
