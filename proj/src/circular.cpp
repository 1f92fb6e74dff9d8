#include "bergkern/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bergkern::circular {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDegreeCap = 50'000;

void check_point_dim(std::span<const cplx> p, int want, const char* what) {
    if (int(p.size()) != want) {
        std::ostringstream os;
        os << what << ": expected " << want << " components, got " << p.size();
        throw DimensionMismatch(os.str());
    }
}

double checked_rho(const RadiusFunction& rho, std::span<const cplx> zeta) {
    check_point_dim(zeta, rho.m, "kernel_general: zeta");
    if (!rho.domain_check(zeta)) {
        throw DomainError("zeta is outside the domain of " + rho.id);
    }
    const double value = rho.eval(zeta);
    if (!(value > 0.0) || !(value < 1.0)) {
        throw DomainError(rho.id + ": rho(zeta) left (0, 1)");
    }
    return value;
}

// Upper bound on the degree-j power sum S_j at squared gauge t:
//   ball:      S_j = (n+j)!/(pi^n j!) t^j           (multinomial identity, exact)
//   polydisc:  S_j <= C(j+2n-1, 2n-1) t^j / pi^n    (each alpha_i + 1 <= ..., via
//              sum_{|alpha|=j} prod (alpha_i + 1) = C(j+2n-1, 2n-1))
double log_degree_sum_bound(DomainKind kind, int n, int j, double t) {
    if (t == 0.0) {
        return j == 0 ? -n * std::log(kPi) : -std::numeric_limits<double>::infinity();
    }
    if (kind == DomainKind::ball) {
        return std::lgamma(n + j + 1.0) - std::lgamma(j + 1.0) - n * std::log(kPi) +
               j * std::log(t);
    }
    return std::lgamma(j + 2.0 * n) - std::lgamma(j + 1.0) - std::lgamma(2.0 * n) -
           n * std::log(kPi) + j * std::log(t);
}

// Geometric bound on sum_{l > j} S_l / (1 - rho^{2l+2n}): the term ratio is
// at most ratio_cap(j) = t (n + j + 2)/(j + 2) (ball) or t (j + 1 + 2n)/(j + 2)
// (polydisc), decreasing in j, and 1/(1 - rho^{2l+2n}) <= 1/(1 - rho^{2n}).
double tail_bound_after(DomainKind kind, int n, int j, double t, double crho) {
    const double ratio_cap = kind == DomainKind::ball ? t * (n + j + 2.0) / (j + 2.0)
                                                      : t * (j + 1.0 + 2.0 * n) / (j + 2.0);
    if (!(ratio_cap < 1.0)) {
        return std::numeric_limits<double>::infinity();
    }
    const double log_next = log_degree_sum_bound(kind, n, j + 1, t);
    return crho * std::exp(log_next) / (1.0 - ratio_cap);
}

} // namespace

CircularDomainBasis::CircularDomainBasis(DomainKind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) {
        throw DomainError("CircularDomainBasis: dimension must be >= 1");
    }
}

std::size_t CircularDomainBasis::degree_count(int j) const {
    if (j < 0) {
        throw DomainError("degree_count: degree must be >= 0");
    }
    // C(j + n - 1, n - 1)
    double c = 1.0;
    for (int i = 1; i < n_; ++i) {
        c *= double(j + i) / double(i);
    }
    return std::size_t(std::llround(c));
}

std::vector<MultiIndex> CircularDomainBasis::degree_indices(int j) const {
    if (j < 0) {
        throw DomainError("degree_indices: degree must be >= 0");
    }
    std::vector<MultiIndex> out;
    out.reserve(degree_count(j));
    MultiIndex alpha(n_, 0);
    // lexicographic enumeration of compositions of j into n parts
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == n_ - 1) {
            alpha[pos] = left;
            out.push_back(alpha);
            return;
        }
        for (int a = left; a >= 0; --a) {
            alpha[pos] = a;
            fill(pos + 1, left - a);
        }
    };
    fill(0, j);
    return out;
}

double CircularDomainBasis::log_monomial_norm(const MultiIndex& alpha) const {
    if (int(alpha.size()) != n_) {
        throw DimensionMismatch("monomial_norm: multi-index has wrong length");
    }
    int degree = 0;
    double acc = n_ * std::log(kPi);
    for (const int a : alpha) {
        if (a < 0) {
            throw DomainError("monomial_norm: negative multi-index entry");
        }
        degree += a;
        if (kind_ == DomainKind::ball) {
            acc += std::lgamma(a + 1.0);
        } else {
            acc -= std::log(a + 1.0);
        }
    }
    if (kind_ == DomainKind::ball) {
        acc -= std::lgamma(n_ + degree + 1.0);
    }
    return acc;
}

double CircularDomainBasis::monomial_norm(const MultiIndex& alpha) const {
    return std::exp(log_monomial_norm(alpha));
}

double CircularDomainBasis::gauge(std::span<const cplx> z) const {
    check_point_dim(z, n_, "gauge");
    double g = 0.0;
    if (kind_ == DomainKind::ball) {
        for (const cplx& zi : z) {
            g += std::norm(zi);
        }
        return std::sqrt(g);
    }
    for (const cplx& zi : z) {
        g = std::max(g, std::abs(zi));
    }
    return g;
}

double CircularDomainBasis::degree_power_sum(int j, std::span<const cplx> z) const {
    check_point_dim(z, n_, "degree_power_sum");
    if (j < 0) {
        throw DomainError("degree_power_sum: degree must be >= 0");
    }
    // Per-coordinate tables L_i[a] = log(|z_i|^{2a} / a!)            (ball)
    //                       L_i[a] = log((a+1) |z_i|^{2a} / pi)      (polydisc)
    // so each monomial term is exp(base + sum_i L_i[alpha_i]).
    std::vector<std::vector<double>> table(n_, std::vector<double>(j + 1));
    for (int i = 0; i < n_; ++i) {
        const double l2 = 2.0 * std::log(std::abs(z[i])); // -inf at z_i = 0
        for (int a = 0; a <= j; ++a) {
            const double p = a == 0 ? 0.0 : a * l2;
            if (kind_ == DomainKind::ball) {
                table[i][a] = p - std::lgamma(a + 1.0);
            } else {
                table[i][a] = p + std::log(a + 1.0) - std::log(kPi);
            }
        }
    }
    const double base = kind_ == DomainKind::ball
                            ? std::lgamma(n_ + j + 1.0) - n_ * std::log(kPi)
                            : 0.0;

    double sum = 0.0;
    MultiIndex alpha(n_, 0);
    std::function<void(int, int, double)> walk = [&](int pos, int left, double acc) {
        if (pos == n_ - 1) {
            const double e = acc + table[pos][left];
            if (e > -700.0) {
                sum += std::exp(base + e);
            }
            return;
        }
        for (int a = left; a >= 0; --a) {
            const double e = acc + table[pos][a];
            if (e > -745.0) { // deeper levels only subtract
                walk(pos + 1, left - a, e);
            }
        }
    };
    walk(0, j, 0.0);
    return sum;
}

RadiusFunction radius_catalog(std::string_view name, int m, double param) {
    if (m < 1) {
        throw DomainError("radius_catalog: m must be >= 1");
    }
    auto sqnorm = [](std::span<const cplx> zeta) {
        double t = 0.0;
        for (const cplx& c : zeta) {
            t += std::norm(c);
        }
        return t;
    };
    if (name == "abs") {
        if (m != 1) {
            throw DomainError("radius_catalog: abs is defined for m = 1");
        }
        return {"abs", 1, PshClass::psh,
                [](std::span<const cplx> zeta) { return std::abs(zeta[0]); },
                [](std::span<const cplx> zeta) {
                    const double r = std::abs(zeta[0]);
                    return r > 0.0 && r < 1.0;
                }};
    }
    if (name == "abs-power") {
        if (m != 1) {
            throw DomainError("radius_catalog: abs-power is defined for m = 1");
        }
        if (!(param > 0.0)) {
            throw DomainError("radius_catalog: abs-power needs a positive exponent");
        }
        return {"abs-power", 1, PshClass::psh,
                [param](std::span<const cplx> zeta) { return std::pow(std::abs(zeta[0]), param); },
                [](std::span<const cplx> zeta) {
                    const double r = std::abs(zeta[0]);
                    return r > 0.0 && r < 1.0;
                }};
    }
    if (name == "sqnorm-affine") {
        return {"sqnorm-affine", m, PshClass::strictly_psh,
                [sqnorm](std::span<const cplx> zeta) { return 0.1 + 0.5 * sqnorm(zeta); },
                [sqnorm](std::span<const cplx> zeta) { return sqnorm(zeta) < 1.0; }};
    }
    if (name == "gauss-bump") {
        return {"gauss-bump", m, PshClass::not_psh,
                [sqnorm](std::span<const cplx> zeta) { return 0.5 * std::exp(-sqnorm(zeta)); },
                [](std::span<const cplx>) { return true; }};
    }
    throw DomainError("radius_catalog: unknown radius function '" + std::string(name) + "'");
}

TruncatedKernel kernel_general(const CircularDomainBasis& basis, const RadiusFunction& rho,
                               std::span<const cplx> zeta, std::span<const cplx> z, double eps) {
    if (!(eps > 0.0)) {
        throw DomainError("kernel_general: eps must be positive");
    }
    const double rho_value = checked_rho(rho, zeta);
    const double g = basis.gauge(z);
    if (!(g < 1.0)) {
        throw DomainError("kernel_general: z is outside the domain (gauge >= 1)");
    }
    const int n = basis.dim();
    const double t = g * g;
    const double crho = 1.0 / (1.0 - std::pow(rho_value, 2.0 * n));

    double value = 0.0;
    for (int j = 0;; ++j) {
        if (j > kDegreeCap) {
            throw NonConvergence("kernel_general: degree cap exceeded");
        }
        const double coeff = 1.0 - std::pow(rho_value, 2.0 * j + 2.0 * n);
        value += basis.degree_power_sum(j, z) / coeff;
        const double tail = tail_bound_after(basis.kind(), n, j, t, crho);
        if (tail < eps) {
            return {value, j, tail};
        }
    }
}

double truncated_log_kernel(const CircularDomainBasis& basis, const RadiusFunction& rho,
                            std::span<const cplx> zeta, std::span<const cplx> z, int k) {
    if (k < 0) {
        throw DomainError("truncated_log_kernel: k must be >= 0");
    }
    const double rho_value = checked_rho(rho, zeta);
    const double g = basis.gauge(z);
    if (!(g < 1.0)) {
        throw DomainError("truncated_log_kernel: z is outside the domain (gauge >= 1)");
    }
    const int n = basis.dim();
    double value = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double coeff = 1.0 - std::pow(rho_value, 2.0 * j + 2.0 * n);
        value += basis.degree_power_sum(j, z) / coeff;
    }
    return std::log(value);
}

int degree_cutoff_for(const CircularDomainBasis& basis, double rho_max, double gauge_max,
                      double eps) {
    if (!(rho_max > 0.0) || !(rho_max < 1.0) || !(gauge_max > 0.0) || !(gauge_max < 1.0) ||
        !(eps > 0.0)) {
        throw DomainError("degree_cutoff_for: need rho_max, gauge_max in (0,1) and eps > 0");
    }
    const int n = basis.dim();
    const double t = gauge_max * gauge_max;
    const double crho = 1.0 / (1.0 - std::pow(rho_max, 2.0 * n));
    for (int j = 0; j <= kDegreeCap; ++j) {
        if (tail_bound_after(basis.kind(), n, j, t, crho) < eps) {
            return j;
        }
    }
    throw NonConvergence("degree_cutoff_for: degree cap exceeded");
}

double u0_eval(const RadiusFunction& rho, std::span<const cplx> zeta, int n) {
    if (n < 1) {
        throw DomainError("u0_eval: n must be >= 1");
    }
    const double rho_value = checked_rho(rho, zeta);
    return -std::log1p(-std::pow(rho_value, 2.0 * n));
}

} // namespace bergkern::circular
