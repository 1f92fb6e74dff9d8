#ifndef BERGKERN_ELLIPTIC_HPP
#define BERGKERN_ELLIPTIC_HPP

#include <array>
#include <complex>
#include <cstddef>

#include "bergkern/errors.hpp"

namespace bergkern::elliptic {

using cplx = std::complex<double>;

/// Rectangular period lattice generated by 2*omega1 (real) and 2*pi*i.
///
/// omega1 = -log|zeta| for an annulus parameter 0 < |zeta| < 1. The
/// evaluation accuracy contract holds for omega1 in [0.05, 10].
struct RectLattice {
    double omega1;

    explicit RectLattice(double omega1_);

    /// Lattice of the annulus {|zeta| < |z| < 1}; requires 0 < |zeta| < 1.
    static RectLattice from_zeta(cplx zeta);
};

/// eta = zeta_w(omega1) and c(omega1) = eta/omega1; both real on
/// rectangular lattices.
struct QuasiPeriods {
    double eta;
    double c;
};

/// A function value together with the distance of the reduced argument to
/// the nearest lattice point (the quantity that controls conditioning).
struct EllipticValue {
    cplx value;
    double condition;
};

/// Result of reduction to the fundamental cell: zeta_w(u) = zeta_w(u_red) + zeta_shift.
struct Reduced {
    cplx u_red;
    cplx zeta_shift;
};

namespace detail {
/// Evaluation path selector, exposed for cross-checking the two paths in
/// tests. `automatic` picks `swapped` exactly when omega1 > pi, which keeps
/// the working nome q = exp(-pi^2/omega_working) at or below exp(-pi).
enum class EvalMode { automatic, direct, swapped };
} // namespace detail

/// Weierstrass P, P', zeta on a rectangular lattice, via Jacobi theta
/// q-series.
///
/// With v = pi*u/(2*omega1) and nome q = exp(-pi^2/omega1),
///
///   zeta_w(u) = (eta1/omega1) u + pi/(2 omega1) * theta1'(v)/theta1(v)
///   P(u)      = -eta1/omega1 - (pi/(2 omega1))^2 (theta1''/theta1 - (theta1'/theta1)^2)
///   P'(u)     = -(pi/(2 omega1))^3 (theta1'''/theta1 - 3 (theta1''/theta1)(theta1'/theta1)
///                + 2 (theta1'/theta1)^3)
///   eta1      = -(pi^2/(12 omega1)) * theta1'''(0)/theta1'(0)
///
/// For omega1 > pi the nome degrades, so the periods are swapped first:
/// with lambda = -i*pi/omega1 the lattice maps onto the rectangular lattice
/// with half period omega1' = pi^2/omega1 <= pi, and homogeneity gives
/// P(u) = lambda^2 P(lambda u; omega1'), zeta_w(u) = lambda zeta_w(lambda u; omega1'),
/// P'(u) = lambda^3 P'(lambda u; omega1'). Either path needs at most ~15
/// series terms for full double accuracy.
///
/// All methods are const and the object holds only read-only tables, so a
/// Weierstrass instance is freely shareable across threads.
class Weierstrass {
public:
    explicit Weierstrass(RectLattice lat,
                         detail::EvalMode mode = detail::EvalMode::automatic);

    const RectLattice& lattice() const { return lat_; }

    /// Reduce u into the centered fundamental cell [-omega1, omega1) x [-pi, pi)
    /// and accumulate the zeta quasi-period shift. Total function.
    Reduced reduce(cplx u) const;

    /// Distance from (reduced) u to the nearest lattice point.
    double pole_distance(cplx u) const;

    cplx wp(cplx u) const;
    cplx wp_prime(cplx u) const;
    cplx wzeta(cplx u) const;

    /// Real-argument forms; verify the imaginary residue is below
    /// 1e-12 * scale and discard it.
    double wp_real(double u) const;
    double wp_prime_real(double u) const;
    double wzeta_real(double u) const;

    EllipticValue wp_ex(cplx u) const;
    EllipticValue wp_prime_ex(cplx u) const;
    EllipticValue wzeta_ex(cplx u) const;

    QuasiPeriods quasi_periods() const { return {eta_, eta_ / lat_.omega1}; }

    /// zeta_w(pi*i), the quasi-period increment of the imaginary period.
    /// Purely imaginary; from the Legendre relation eta*pi*i - eta3*omega1 = pi*i/2.
    cplx eta3() const { return eta3_; }

    bool swapped() const { return swapped_; }

private:
    struct ThetaRatios {
        cplx l1; // theta1'/theta1
        cplx l2; // theta1''/theta1
        cplx l3; // theta1'''/theta1
    };

    ThetaRatios theta_ratios(cplx v) const;
    cplx wp_working(cplx u) const;
    cplx wp_prime_working(cplx u) const;
    cplx wzeta_working(cplx u) const;
    cplx reduced_checked(cplx u) const;
    static double strip_imag(cplx value, const char* what);

    RectLattice lat_;
    bool swapped_;
    double om_w_;    // working half period, <= pi in swapped mode
    double q_;       // working nome exp(-pi^2/om_w_)
    double eta1_w_;  // zeta_w(om_w_) on the working lattice
    double eta_;     // zeta_w(omega1) on the original lattice
    cplx eta3_;
    std::size_t nterms_;
    std::array<double, 24> coef_; // (-1)^n q^{(n+1/2)^2}
};

inline constexpr double kPoleGuard = 1e-6;

// Free-function forms of the operations above.
Reduced lattice_reduce(cplx u, const RectLattice& lat);
cplx wp(cplx u, const RectLattice& lat);
cplx wp_prime(cplx u, const RectLattice& lat);
cplx wzeta(cplx u, const RectLattice& lat);
QuasiPeriods quasi_periods(const RectLattice& lat);

} // namespace bergkern::elliptic

#endif
