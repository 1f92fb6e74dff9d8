#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "bergkern/circular.hpp"
#include "bergkern/levi.hpp"

using namespace bergkern;
using namespace bergkern::levi;

namespace {

std::vector<cplx> pt(std::initializer_list<cplx> cs) { return {cs}; }

} // namespace

TEST_CASE("hessian of |w|^2 is the identity") {
    const Field f = [](std::span<const cplx> w) {
        double s = 0.0;
        for (const auto& c : w) s += std::norm(c);
        return s;
    };
    const auto p = pt({cplx(0.3, -0.2), cplx(0.1, 0.4)});
    const auto h = complex_hessian_fd(f, p, 1e-4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            CHECK(std::abs(h.at(a, b) - (a == b ? 1.0 : 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("pluriharmonic fields have zero Levi form") {
    const Field f = [](std::span<const cplx> w) { return (w[0] * w[0]).real(); };
    const auto h = complex_hessian_fd(f, pt({cplx(0.4, 0.1)}), 1e-4);
    CHECK(std::abs(h.at(0, 0)) < 1e-8);

    const Field g = [](std::span<const cplx> w) { return (w[0] * w[0] + w[1] * w[1]).real(); };
    const auto h2 = complex_hessian_fd(g, pt({cplx(0.2, 0.3), cplx(-0.1, 0.5)}), 1e-4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            CHECK(std::abs(h2.at(a, b)) < 1e-8);
        }
    }
}

TEST_CASE("fubini-study potential at the origin") {
    const Field f = [](std::span<const cplx> w) { return std::log(1.0 + std::norm(w[0])); };
    const auto h = complex_hessian_fd(f, pt({cplx(0.0, 0.0)}), 1e-4);
    CHECK(std::abs(h.at(0, 0).real() - 1.0) < 1e-6);
}

TEST_CASE("second-order convergence in h") {
    // analytic value of dd-bar log(1+|w|^2) is 1/(1+|w|^2)^2
    const Field f = [](std::span<const cplx> w) { return std::log(1.0 + std::norm(w[0])); };
    const auto p = pt({cplx(0.3, 0.2)});
    const double exact = 1.0 / std::pow(1.0 + std::norm(p[0]), 2.0);
    const double e1 = std::abs(complex_hessian_fd(f, p, 2e-2).at(0, 0).real() - exact);
    const double e2 = std::abs(complex_hessian_fd(f, p, 1e-2).at(0, 0).real() - exact);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.0);
}

TEST_CASE("adding a pluriharmonic part leaves eigenvalues unchanged") {
    const Field base = [](std::span<const cplx> w) {
        return std::norm(w[0]) + 3.0 * std::norm(w[1]);
    };
    const Field shifted = [](std::span<const cplx> w) {
        const cplx hol = w[0] * w[0] * w[0] + 2.0 * w[1] * w[1] + w[0] * w[1];
        return std::norm(w[0]) + 3.0 * std::norm(w[1]) + hol.real();
    };
    const auto p = pt({cplx(0.25, -0.15), cplx(0.3, 0.05)});
    const double a = min_eigenvalue(complex_hessian_fd(base, p, 1e-4));
    const double b = min_eigenvalue(complex_hessian_fd(shifted, p, 1e-4));
    CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("hermitian symmetry holds by construction") {
    const Field f = [](std::span<const cplx> w) {
        return std::exp(std::norm(w[0])) * (1.0 + std::norm(w[1])) +
               (w[0] * std::conj(w[1])).real();
    };
    const auto h = complex_hessian_fd(f, pt({cplx(0.2, 0.4), cplx(-0.3, 0.1)}), 1e-4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            CHECK(h.at(a, b) == std::conj(h.at(b, a)));
        }
    }
}

TEST_CASE("min_eigenvalue") {
    SUBCASE("identity, d = 3") {
        const HermitianForm id(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
        CHECK(min_eigenvalue(id) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("diag(2, -1)") {
        const HermitianForm d(2, {2, 0, 0, -1});
        CHECK(min_eigenvalue(d) == doctest::Approx(-1.0).epsilon(1e-13));
    }
    SUBCASE("via finite differences of |w1|^2 + 3 |w2|^2") {
        const Field f = [](std::span<const cplx> w) {
            return std::norm(w[0]) + 3.0 * std::norm(w[1]);
        };
        const auto h = complex_hessian_fd(f, pt({cplx(0.1, 0.2), cplx(0.3, -0.1)}), 1e-4);
        CHECK(std::abs(min_eigenvalue(h) - 1.0) < 1e-6);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(HermitianForm(2, {1, 0, 0}), DimensionMismatch);
        CHECK_THROWS_AS(HermitianForm(2, {cplx(1, 0), cplx(0.5, 0), cplx(0.2, 0), cplx(1, 0)}),
                        NumericalError);
    }
}

TEST_CASE("stencil domain guard") {
    const Field f = [](std::span<const cplx> w) { return std::norm(w[0]); };
    const DomainCheck inside = [](std::span<const cplx> w) { return std::abs(w[0]) < 0.3; };
    CHECK_THROWS_AS(complex_hessian_fd(f, pt({cplx(0.2999, 0.0)}), 1e-3, inside),
                    StencilOutOfDomain);
    CHECK_NOTHROW(complex_hessian_fd(f, pt({cplx(0.1, 0.0)}), 1e-3, inside));
}

namespace {

// log kernel of the generalized annulus over (ball C^2, rho), as one fixed
// smooth partial sum certified on the sampled region.
struct KernelField {
    circular::CircularDomainBasis basis{circular::DomainKind::ball, 2};
    circular::RadiusFunction rho;
    int cutoff;
    double gauge_cap;

    explicit KernelField(const char* name, double rho_max, double gauge_max)
        : rho(circular::radius_catalog(name)),
          cutoff(circular::degree_cutoff_for(basis, rho_max, gauge_max, 1e-12)),
          gauge_cap(gauge_max) {}

    levi::Field field() const {
        return [this](std::span<const cplx> w) {
            return circular::truncated_log_kernel(basis, rho, w.subspan(0, 1), w.subspan(1, 2),
                                                  cutoff);
        };
    }
    levi::DomainCheck domain() const {
        return [this](std::span<const cplx> w) {
            return rho.domain_check(w.subspan(0, 1)) && basis.gauge(w.subspan(1, 2)) < gauge_cap;
        };
    }
};

} // namespace

TEST_CASE("psh scan of the log kernel with rho = |zeta|") {
    const KernelField kf("abs", 0.9, 0.9);
    sampling::ShellProductSampler sampler({{0.15, 0.85, 1, true}, {0.05, 0.85, 2, true}}, 7);
    ScanConfig config;
    config.count = 100;
    config.h = 1e-4;
    config.tol = 1e-6;
    config.seed = 7;
    const auto report = psh_scan(kf.field(), sampler, config, kf.domain());
    CHECK(report.stencil_errors == 0);
    CHECK(report.violations.empty());
    CHECK(report.global_min >= -1e-6);
}

TEST_CASE("gauss-bump violates plurisubharmonicity near the z = 0 slice") {
    const KernelField kf("gauss-bump", 0.5, 0.5);
    sampling::ShellProductSampler sampler({{0.02, 0.3, 1, true}, {0.0, 0.2, 2, true}}, 11);
    ScanConfig config;
    config.count = 40;
    config.h = 1e-4;
    config.tol = 1e-4;
    config.seed = 11;
    const auto report = psh_scan(kf.field(), sampler, config, kf.domain());
    CHECK(!report.violations.empty());
    CHECK(report.global_min <= -1e-4);
}

TEST_CASE("strict scan with rho = sqnorm-affine") {
    circular::CircularDomainBasis basis(circular::DomainKind::ball, 2);
    const auto rho = circular::radius_catalog("sqnorm-affine", 1);
    const int cutoff = circular::degree_cutoff_for(basis, 0.62, 0.9, 1e-12);
    const Field f = [&](std::span<const cplx> w) {
        return circular::truncated_log_kernel(basis, rho, w.subspan(0, 1), w.subspan(1, 2), cutoff);
    };
    const DomainCheck domain = [&](std::span<const cplx> w) {
        return rho.domain_check(w.subspan(0, 1)) && basis.gauge(w.subspan(1, 2)) < 0.9;
    };
    sampling::ShellProductSampler sampler({{0.05, 0.8, 1, true}, {0.05, 0.85, 2, true}}, 19);
    ScanConfig config;
    config.count = 60;
    config.h = 1e-4;
    config.seed = 19;
    const auto report = strict_psh_scan(f, sampler, config, domain);
    CHECK(report.stencil_errors == 0);
    CHECK(report.violations.empty());
    CHECK(report.global_min > 0.0);
}

TEST_CASE("degenerate critical point is flagged by the strict scan") {
    const Field f = [](std::span<const cplx> w) { return std::norm(w[0]) * std::norm(w[0]); };
    sampling::ShellProductSampler sampler({{0.0, 1e-4, 1, true}}, 3);
    ScanConfig config;
    config.count = 5;
    config.h = 1e-4;
    config.tol_strict = 1e-6;
    const auto report = strict_psh_scan(f, sampler, config);
    CHECK(int(report.violations.size()) == config.count);
    CHECK(std::abs(report.global_min) < 1e-4);
}

TEST_CASE("scan determinism under a fixed seed") {
    const Field f = [](std::span<const cplx> w) { return std::norm(w[0]) + std::norm(w[1]); };
    ScanConfig config;
    config.count = 25;
    config.h = 1e-4;
    config.seed = 42;
    const auto a = psh_scan(f, sampling::ShellProductSampler({{0.1, 0.8, 2, true}}, 42), config);
    const auto b = psh_scan(f, sampling::ShellProductSampler({{0.1, 0.8, 2, true}}, 42), config);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].point == b.samples[i].point);
        CHECK(a.samples[i].min_eig == b.samples[i].min_eig);
    }
    const auto c = psh_scan(f, sampling::ShellProductSampler({{0.1, 0.8, 2, true}}, 43), config);
    CHECK(a.samples[0].point != c.samples[0].point);
}
