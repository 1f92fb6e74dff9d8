#ifndef BERGKERN_LEVI_HPP
#define BERGKERN_LEVI_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bergkern/errors.hpp"
#include "bergkern/sampling.hpp"

namespace bergkern::levi {

using cplx = std::complex<double>;
using Field = std::function<double(std::span<const cplx>)>;
using DomainCheck = std::function<bool(std::span<const cplx>)>;
using DistanceFn = std::function<double(std::span<const cplx>)>;

/// A d x d complex Hessian (Levi form); construction enforces Hermitian
/// symmetry to within 1e-10 times the largest entry.
class HermitianForm {
public:
    HermitianForm(int d, std::vector<cplx> entries);

    int dim() const { return d_; }
    cplx at(int a, int b) const { return entries_[std::size_t(a) * d_ + b]; }
    const std::vector<cplx>& entries() const { return entries_; }

private:
    int d_;
    std::vector<cplx> entries_;
};

/// Mixed Wirtinger Hessian d^2 f / dw_a dw_b-bar by central differences:
/// H_ab = 1/4 [ (f_{x_a x_b} + f_{y_a y_b}) + i (f_{x_a y_b} - f_{y_a x_b}) ].
/// Each mixed real partial is evaluated once per unordered coordinate pair,
/// which makes the result Hermitian by construction. When a domain predicate
/// is given, every stencil point is validated first.
HermitianForm complex_hessian_fd(const Field& f, std::span<const cplx> w, double h,
                                 const DomainCheck& domain = {});

/// Smallest eigenvalue of a Hermitian form.
double min_eigenvalue(const HermitianForm& h);

struct ScanSample {
    std::vector<cplx> point;
    double min_eig; // NaN when the stencil failed
    bool ok;
};

struct ScanConfig {
    int count = 100;
    double h = 0.0; // 0: per-sample 1e-4 x boundary distance (floor 1e-6)
    double tol = 1e-6;
    double tol_strict = 0.0;
    std::uint64_t seed = 0;
};

struct ScanReport {
    std::string mode; // "psh" or "strict"
    ScanConfig config;
    std::vector<ScanSample> samples;
    double global_min;
    std::vector<int> violations;
    int stencil_errors;
};

/// Evaluate min_eigenvalue(complex_hessian_fd(f, ., h)) at `count` points of
/// the sampler, skipping points whose stencil leaves the domain. Samples with
/// min eigenvalue below -tol are flagged; violations are data, never thrown.
ScanReport psh_scan(const Field& f, sampling::ShellProductSampler sampler, const ScanConfig& config,
                    const DomainCheck& domain = {}, const DistanceFn& boundary_distance = {});

/// As psh_scan, but flags samples whose min eigenvalue is not strictly above
/// tol_strict.
ScanReport strict_psh_scan(const Field& f, sampling::ShellProductSampler sampler,
                           const ScanConfig& config, const DomainCheck& domain = {},
                           const DistanceFn& boundary_distance = {});

} // namespace bergkern::levi

#endif
