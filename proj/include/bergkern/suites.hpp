#ifndef BERGKERN_SUITES_HPP
#define BERGKERN_SUITES_HPP

#include <cstdint>
#include <span>
#include <string>

#include "bergkern/circular.hpp"
#include "bergkern/levi.hpp"
#include "bergkern/report.hpp"

namespace bergkern::suites {

/// Configuration of a plurisubharmonicity scan of the log series kernel over
/// a product of gauge shells (zeta block first, then z).
struct ScanOptions {
    circular::DomainKind kind = circular::DomainKind::ball;
    int n = 2;
    std::string rho = "abs";
    int m = 1;
    double rho_param = 1.0;
    int count = 100;
    double h = 1e-4;
    double tol = 1e-6;
    double tol_strict = 0.0;
    std::uint64_t seed = 7;
    double zeta_lo = 0.15, zeta_hi = 0.85;
    double z_lo = 0.05, z_hi = 0.85;
    bool strict = false;
    double eps = 1e-12;
};

/// Shell defaults appropriate for the named radius function.
ScanOptions default_scan_options(const std::string& rho_name);

/// Run the scan: the field is one fixed partial sum of the series kernel,
/// truncated so its certified tail stays below eps on the sampled region.
levi::ScanReport kernel_scan(const ScanOptions& options);

// Named check suites. Report-only rows never affect the exit status.

/// Quasi-periodicity in both periods, P'(omega1) = 0, zeta' = -P by finite
/// differences, parity, the Legendre relation (all at rel tol 1e-10), plus a
/// report-only row tabulating omega1^2 P(omega1) against pi^2/6.
report::CheckReport identities(std::span<const double> omega1s);

/// The mixed-derivative finite differences of the closed-form and series
/// kernels (asserted to 1e-5), and the closed-form expression against the
/// measured derivative (report-only): at least six sample points.
report::CheckReport theorem12();

/// Rows of the second-derivative product identity residual (report-only).
report::CheckReport remark32();

/// Boundary decay of the mixed-derivative expression along both approaches.
report::CheckReport corollary13(double zeta_abs = 0.3);

/// Scan assertions: psh for rho = |zeta| and strict positivity for
/// rho = sqnorm-affine, on the ball in C^2.
report::CheckReport theorem11(std::uint64_t seed = 7, int count = 100, double h = 1e-4,
                              double tol = 1e-6);

/// Falsification scan: rho = gauss-bump must produce an eigenvalue <= -1e-4
/// near the z = 0 slice.
report::CheckReport remark21(std::uint64_t seed = 11, int count = 40, double h = 1e-4);

inline constexpr double kDefaultOmega1s[] = {0.1, 0.5, 1.0, 2.0, 5.0};

} // namespace bergkern::suites

#endif
