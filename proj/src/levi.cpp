#include "bergkern/levi.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <thread>

namespace bergkern::levi {

namespace {

// Real-coordinate view of C^d: coordinate 2a is Re(w_a), 2a+1 is Im(w_a).
std::vector<cplx> shifted(std::span<const cplx> w, int coord, double delta) {
    std::vector<cplx> out(w.begin(), w.end());
    const int a = coord / 2;
    if (coord % 2 == 0) {
        out[a] += delta;
    } else {
        out[a] += cplx(0.0, delta);
    }
    return out;
}

int scan_threads() {
    if (const char* env = std::getenv("BERGKERN_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) {
            return n;
        }
    }
    return 1;
}

} // namespace

HermitianForm::HermitianForm(int d, std::vector<cplx> entries) : d_(d), entries_(std::move(entries)) {
    if (d < 1 || entries_.size() != std::size_t(d) * std::size_t(d)) {
        throw DimensionMismatch("HermitianForm: entry count does not match dimension");
    }
    double scale = 0.0, residual = 0.0;
    for (int a = 0; a < d_; ++a) {
        for (int b = 0; b < d_; ++b) {
            scale = std::max(scale, std::abs(at(a, b)));
            residual = std::max(residual, std::abs(at(a, b) - std::conj(at(b, a))));
        }
    }
    if (residual > 1e-10 * std::max(scale, 1e-300)) {
        throw NumericalError("HermitianForm: Hermitian symmetry residual too large");
    }
}

HermitianForm complex_hessian_fd(const Field& f, std::span<const cplx> w, double h,
                                 const DomainCheck& domain) {
    if (!(h > 0.0)) {
        throw DomainError("complex_hessian_fd: h must be positive");
    }
    const int d = int(w.size());
    const int n = 2 * d;

    auto eval = [&](const std::vector<cplx>& p) {
        if (domain && !domain(p)) {
            throw StencilOutOfDomain("complex_hessian_fd: stencil point left the domain");
        }
        return f(p);
    };

    const double f0 = eval(std::vector<cplx>(w.begin(), w.end()));

    // second partials d^2 f / dx_i dx_j over the 2d real coordinates
    std::vector<double> hess(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double fp = eval(shifted(w, i, h));
        const double fm = eval(shifted(w, i, -h));
        hess[std::size_t(i) * n + i] = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double fpp = eval(shifted(shifted(w, i, h), j, h));
            const double fpm = eval(shifted(shifted(w, i, h), j, -h));
            const double fmp = eval(shifted(shifted(w, i, -h), j, h));
            const double fmm = eval(shifted(shifted(w, i, -h), j, -h));
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            hess[std::size_t(i) * n + j] = v;
            hess[std::size_t(j) * n + i] = v;
        }
    }

    auto hxx = [&](int a, int b) { return hess[std::size_t(2 * a) * n + 2 * b]; };
    auto hyy = [&](int a, int b) { return hess[std::size_t(2 * a + 1) * n + 2 * b + 1]; };
    auto hxy = [&](int a, int b) { return hess[std::size_t(2 * a) * n + 2 * b + 1]; };

    std::vector<cplx> entries(std::size_t(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const double re = 0.25 * (hxx(a, b) + hyy(a, b));
            const double im = 0.25 * (hxy(a, b) - hxy(b, a));
            entries[std::size_t(a) * d + b] = cplx(re, im);
        }
    }
    return HermitianForm(d, std::move(entries));
}

double min_eigenvalue(const HermitianForm& h) {
    const int d = h.dim();
    Eigen::MatrixXcd m(d, d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            m(a, b) = h.at(a, b);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

namespace {

bool stencil_inside(const DomainCheck& domain, std::span<const cplx> w, double h) {
    if (!domain) {
        return true;
    }
    if (!domain(w)) {
        return false;
    }
    const int n = 2 * int(w.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto p = shifted(shifted(w, i, h), j, i == j ? 0.0 : h);
            const auto q = shifted(shifted(w, i, -h), j, i == j ? 0.0 : -h);
            const auto r = shifted(shifted(w, i, h), j, i == j ? 0.0 : -h);
            const auto s = shifted(shifted(w, i, -h), j, i == j ? 0.0 : h);
            if (!domain(p) || !domain(q) || !domain(r) || !domain(s)) {
                return false;
            }
        }
    }
    return true;
}

ScanReport run_scan(const char* mode, const Field& f, sampling::ShellProductSampler sampler,
                    const ScanConfig& config, const DomainCheck& domain,
                    const DistanceFn& boundary_distance, bool strict) {
    if (config.count < 1) {
        throw DomainError("scan: count must be >= 1");
    }

    auto step_for = [&](std::span<const cplx> point) {
        if (config.h > 0.0) {
            return config.h;
        }
        if (boundary_distance) {
            return std::max(1e-4 * boundary_distance(point), 1e-6);
        }
        return 1e-4;
    };

    // Draw deterministically first, rejecting points whose stencil leaves
    // the domain; evaluation below may then run in parallel without touching
    // the sampler state.
    std::vector<std::vector<cplx>> points;
    points.reserve(config.count);
    long attempts = 0;
    const long attempt_cap = 10000L * config.count;
    while (int(points.size()) < config.count) {
        if (++attempts > attempt_cap) {
            throw NonConvergence("scan: sampler rejection cap exceeded");
        }
        auto p = sampler.next();
        if (stencil_inside(domain, p, step_for(p))) {
            points.push_back(std::move(p));
        }
    }

    std::vector<ScanSample> samples(config.count);
    auto work = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            ScanSample s;
            s.point = points[i];
            try {
                const auto form = complex_hessian_fd(f, s.point, step_for(s.point), domain);
                s.min_eig = min_eigenvalue(form);
                s.ok = true;
            } catch (const Error&) {
                s.min_eig = std::numeric_limits<double>::quiet_NaN();
                s.ok = false;
            }
            samples[i] = std::move(s);
        }
    };

    const int threads = std::min(scan_threads(), config.count);
    if (threads <= 1) {
        work(0, config.count);
    } else {
        std::vector<std::future<void>> futures;
        const int chunk = (config.count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(config.count, lo + chunk);
            if (lo < hi) {
                futures.push_back(std::async(std::launch::async, work, lo, hi));
            }
        }
        for (auto& fut : futures) {
            fut.get();
        }
    }

    ScanReport report;
    report.mode = mode;
    report.config = config;
    report.samples = std::move(samples);
    report.global_min = std::numeric_limits<double>::quiet_NaN();
    report.stencil_errors = 0;
    for (int i = 0; i < config.count; ++i) {
        const auto& s = report.samples[i];
        if (!s.ok) {
            ++report.stencil_errors;
            continue;
        }
        if (std::isnan(report.global_min) || s.min_eig < report.global_min) {
            report.global_min = s.min_eig;
        }
        const bool violating = strict ? s.min_eig < config.tol_strict : s.min_eig < -config.tol;
        if (violating) {
            report.violations.push_back(i);
        }
    }
    return report;
}

} // namespace

ScanReport psh_scan(const Field& f, sampling::ShellProductSampler sampler, const ScanConfig& config,
                    const DomainCheck& domain, const DistanceFn& boundary_distance) {
    return run_scan("psh", f, std::move(sampler), config, domain, boundary_distance, false);
}

ScanReport strict_psh_scan(const Field& f, sampling::ShellProductSampler sampler,
                           const ScanConfig& config, const DomainCheck& domain,
                           const DistanceFn& boundary_distance) {
    return run_scan("strict", f, std::move(sampler), config, domain, boundary_distance, true);
}

} // namespace bergkern::levi
