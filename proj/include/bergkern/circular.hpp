#ifndef BERGKERN_CIRCULAR_HPP
#define BERGKERN_CIRCULAR_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bergkern/errors.hpp"

namespace bergkern::circular {

using cplx = std::complex<double>;
using MultiIndex = std::vector<int>;

enum class DomainKind { ball, polydisc };

/// Orthogonal monomial basis of the Bergman space of a bounded complete
/// circular domain (unit ball or unit polydisc in C^n), with closed-form
/// squared norms under Lebesgue measure:
///
///   ball:      ||z^alpha||^2 = pi^n alpha! / (n + |alpha|)!
///   polydisc:  ||z^alpha||^2 = prod_i pi / (alpha_i + 1)
class CircularDomainBasis {
public:
    CircularDomainBasis(DomainKind kind, int n);

    DomainKind kind() const { return kind_; }
    int dim() const { return n_; }

    /// m_j = C(j + n - 1, n - 1), the number of monomials of degree j.
    std::size_t degree_count(int j) const;

    /// All multi-indices of total degree j, in lexicographic order.
    std::vector<MultiIndex> degree_indices(int j) const;

    double monomial_norm(const MultiIndex& alpha) const;
    double log_monomial_norm(const MultiIndex& alpha) const;

    /// Domain gauge: the L2 norm (ball) or max modulus (polydisc);
    /// z is in the domain iff gauge < 1.
    double gauge(std::span<const cplx> z) const;

    /// sum over |alpha| = j of |z^alpha|^2 / ||z^alpha||^2, by enumeration.
    double degree_power_sum(int j, std::span<const cplx> z) const;

private:
    DomainKind kind_;
    int n_;
};

enum class PshClass { psh, strictly_psh, not_psh };

/// A radius function rho: U -> (0, 1) from the built-in catalog, carrying
/// its declared plurisubharmonicity class for the scan suites to verify.
struct RadiusFunction {
    std::string id;
    int m;
    PshClass psh_class;
    std::function<double(std::span<const cplx>)> eval;
    std::function<bool(std::span<const cplx>)> domain_check;
};

/// Catalog entries:
///   "abs"           rho = |zeta|                 on 0 < |zeta| < 1   (psh)
///   "abs-power"     rho = |zeta|^a, a = param    on 0 < |zeta| < 1   (psh)
///   "sqnorm-affine" rho = 0.1 + 0.5 sum|zeta_i|^2 on the unit ball   (strictly psh)
///   "gauss-bump"    rho = 0.5 exp(-sum|zeta_i|^2) on C^m             (not psh)
RadiusFunction radius_catalog(std::string_view name, int m = 1, double param = 1.0);

struct TruncatedKernel {
    double value;
    int degree_cutoff;
    double tail_bound;
};

/// Series kernel of the generalized annulus Omega - rho(zeta) Omega:
/// sum_j sum_{|alpha|=j} |z^alpha|^2 / (||z^alpha||^2 (1 - rho^{2j+2n})),
/// truncated once the proven tail bound drops below eps.
TruncatedKernel kernel_general(const CircularDomainBasis& basis, const RadiusFunction& rho,
                               std::span<const cplx> zeta, std::span<const cplx> z, double eps);

/// log of the partial sum through degree k.
double truncated_log_kernel(const CircularDomainBasis& basis, const RadiusFunction& rho,
                            std::span<const cplx> zeta, std::span<const cplx> z, int k);

/// Degree cutoff that certifies tail < eps uniformly for gauge(z) <= gauge_max
/// and rho <= rho_max. Lets callers differentiate one fixed smooth partial sum.
int degree_cutoff_for(const CircularDomainBasis& basis, double rho_max, double gauge_max,
                      double eps);

/// u0(zeta) = -log(1 - rho(zeta)^{2n}).
double u0_eval(const RadiusFunction& rho, std::span<const cplx> zeta, int n);

} // namespace bergkern::circular

#endif
