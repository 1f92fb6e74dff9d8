#include <doctest.h>

#include "oracles.hpp"

// Internal consistency of the test oracles themselves. The lattice sums are
// the ground truth for the theta-series evaluators, so they get their own
// sanity checks: doubling the window must move the value by less than the
// claimed tail bound, and the degenerate trig forms must match the sums for
// small omega1.

using oracle::cplx;

TEST_CASE("lattice sum tail bounds hold under window doubling") {
    const double om = 1.0;
    const cplx u(0.3, 0.2);

    const auto p200 = oracle::wp_lattice_sum(u, om, 200);
    const auto p400 = oracle::wp_lattice_sum(u, om, 400);
    CHECK(std::abs(p400.value - p200.value) <= p200.tail);
    CHECK(p400.tail < p200.tail);

    const auto z200 = oracle::wzeta_lattice_sum(u, om, 200);
    const auto z400 = oracle::wzeta_lattice_sum(u, om, 400);
    CHECK(std::abs(z400.value - z200.value) <= z200.tail);

    const auto d200 = oracle::wp_prime_lattice_sum(u, om, 200);
    const auto d400 = oracle::wp_prime_lattice_sum(u, om, 400);
    CHECK(std::abs(d400.value - d200.value) <= d200.tail);
}

TEST_CASE("lattice sums near the pole follow the principal part") {
    // P(u) = u^-2 (1 + O(u^2)) and zeta(u) = u^-1 (1 + O(u^2)).
    const double om = 1.0;
    const double u = 1e-3;
    const auto p = oracle::wp_lattice_sum(u, om, 200);
    CHECK(std::abs(p.value - 1e6) < 1e-4 * 1e6);
    const auto z = oracle::wzeta_lattice_sum(u, om, 200);
    CHECK(std::abs(z.value - 1e3) < 1e-4 * 1e3);
}

TEST_CASE("trig degenerations agree with lattice sums for small omega1") {
    const double om = 0.1;
    const double u = 0.077;
    const auto p = oracle::wp_lattice_sum(u, om, 300);
    const double trig = oracle::wp_trig(u, om);
    CHECK(std::abs(p.value.real() - trig) <= p.tail + 1e-9 * std::abs(trig));

    const auto z = oracle::wzeta_lattice_sum(u, om, 300);
    const double ztrig = oracle::wzeta_trig(u, om);
    CHECK(std::abs(z.value.real() - ztrig) <= z.tail + 1e-9 * std::abs(ztrig));
}

TEST_CASE("lattice zeta differentiates to minus lattice P") {
    const double om = 1.0;
    const cplx u(0.4, 0.15);
    auto f = [&](cplx x) { return oracle::wzeta_lattice_sum(x, om, 150).value; };
    const cplx dz = oracle::central_diff_c(f, u, 1e-4);
    const cplx p = oracle::wp_lattice_sum(u, om, 150).value;
    CHECK(std::abs(dz + p) < 1e-6 * std::abs(p) + oracle::wp_lattice_sum(u, om, 150).tail);
}

TEST_CASE("gauss-legendre integrates polynomials and the disc area") {
    const auto q = oracle::gauss_legendre(32, 0.0, 1.0);
    double s3 = 0.0, s7 = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        s3 += q.w[i] * q.x[i] * q.x[i] * q.x[i];
        s7 += q.w[i] * std::pow(q.x[i], 7);
    }
    CHECK(s3 == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(s7 == doctest::Approx(0.125).epsilon(1e-13));

    // area of the unit disc via 2 pi int_0^1 r dr
    double area = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        area += q.w[i] * 2.0 * oracle::kPi * q.x[i];
    }
    CHECK(area == doctest::Approx(oracle::kPi).epsilon(1e-13));
}
