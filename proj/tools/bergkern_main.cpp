#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bergkern/annulus.hpp"
#include "bergkern/circular.hpp"
#include "bergkern/elliptic.hpp"
#include "bergkern/report.hpp"
#include "bergkern/suites.hpp"

namespace {

using bergkern::report::format_double;
using cplx = std::complex<double>;

cplx parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    char sep = 0;
    if (!(is >> re)) {
        throw bergkern::DomainError("cannot parse complex number from '" + text + "'");
    }
    if (is >> sep) {
        if (sep != ',' || !(is >> im)) {
            throw bergkern::DomainError("cannot parse complex number from '" + text + "'");
        }
    }
    return {re, im};
}

std::vector<cplx> parse_point(const std::string& text) {
    std::vector<cplx> out;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ';')) {
        if (!part.empty()) {
            out.push_back(parse_complex(part));
        }
    }
    if (out.empty()) {
        throw bergkern::DomainError("empty point '" + text + "'");
    }
    return out;
}

std::string point_to_string(std::span<const cplx> p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) {
            os << ';';
        }
        os << format_double(p[i].real()) << (p[i].imag() < 0 ? "" : "+")
           << format_double(p[i].imag()) << 'i';
    }
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw bergkern::Error("cannot open output file '" + out_path + "'");
    }
    f << text;
}

bool wants_json(const std::string& out_path, bool default_json) {
    if (out_path.size() > 5 && out_path.substr(out_path.size() - 5) == ".json") {
        return true;
    }
    if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv") {
        return false;
    }
    return default_json;
}

struct ComplexInput {
    std::string text;
    double abs_value = -1.0;

    cplx value() const {
        if (!text.empty()) {
            return parse_complex(text);
        }
        if (abs_value >= 0.0) {
            return {abs_value, 0.0};
        }
        throw bergkern::DomainError("missing complex input (use --<name> RE[,IM] or --<name>-abs R)");
    }
    void attach(CLI::App* cmd, const std::string& name) {
        cmd->add_option("--" + name, text, "complex value as RE[,IM]");
        cmd->add_option("--" + name + "-abs", abs_value, "modulus (phase 0)");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernels of generalized annuli: evaluation, identity checks, scans"};
    app.require_subcommand(1);
    // --h is a documented option of several subcommands, so help is --help only
    app.set_help_flag("--help", "print help");
    int exit_code = 0;

    // ------------------------------------------------------------------ pw
    auto* pw = app.add_subcommand("pw", "evaluate the Weierstrass functions on a lattice");
    pw->set_help_flag("--help", "print help");
    double pw_omega1 = 1.0;
    std::string pw_u = "0.5";
    std::string pw_fn = "all";
    std::string pw_out;
    pw->add_option("--omega1", pw_omega1, "half real period")->required();
    pw->add_option("--u", pw_u, "argument as RE[,IM]");
    pw->add_option("--fn", pw_fn, "wp | wp-prime | wzeta | quasi | all");
    pw->add_option("--out", pw_out, "output file (stdout when absent)");
    pw->callback([&] {
        const bergkern::elliptic::Weierstrass we{bergkern::elliptic::RectLattice(pw_omega1)};
        const cplx u = parse_complex(pw_u);
        std::ostringstream os;
        os << "fn,u_re,u_im,value_re,value_im,condition\n";
        auto row = [&](const char* fn, cplx arg, bergkern::elliptic::EllipticValue v) {
            os << fn << ',' << format_double(arg.real()) << ',' << format_double(arg.imag()) << ','
               << format_double(v.value.real()) << ',' << format_double(v.value.imag()) << ','
               << format_double(v.condition) << '\n';
        };
        if (pw_fn == "wp" || pw_fn == "all") {
            row("wp", u, we.wp_ex(u));
        }
        if (pw_fn == "wp-prime" || pw_fn == "all") {
            row("wp-prime", u, we.wp_prime_ex(u));
        }
        if (pw_fn == "wzeta" || pw_fn == "all") {
            row("wzeta", u, we.wzeta_ex(u));
        }
        if (pw_fn == "quasi" || pw_fn == "all") {
            const auto qp = we.quasi_periods();
            os << "eta,,," << format_double(qp.eta) << ",0,inf\n";
            os << "c,,," << format_double(qp.c) << ",0,inf\n";
        }
        write_output(os.str(), pw_out);
    });

    // -------------------------------------------------------------- annulus
    auto* annulus_cmd = app.add_subcommand("annulus", "diagonal Bergman kernel of {|zeta|<|z|<1}");
    annulus_cmd->set_help_flag("--help", "print help");
    annulus_cmd->require_subcommand(1);

    ComplexInput an_zeta, an_z;
    std::string an_method = "closed";
    double an_eps = 1e-12;
    double an_h = 0.0;
    bool an_fd = false;
    std::string an_out;

    auto* an_kernel = annulus_cmd->add_subcommand("kernel", "evaluate the kernel");
    an_kernel->set_help_flag("--help", "print help");
    an_zeta.attach(an_kernel, "zeta");
    an_z.attach(an_kernel, "z");
    an_kernel->add_option("--method", an_method, "closed | series");
    an_kernel->add_option("--eps", an_eps, "series truncation bound");
    an_kernel->add_option("--out", an_out, "output file");
    an_kernel->callback([&] {
        const cplx zeta = an_zeta.value(), z = an_z.value();
        double value = 0.0;
        if (an_method == "closed") {
            value = bergkern::annulus::kernel_closed({zeta, z}).value;
        } else if (an_method == "series") {
            value = bergkern::annulus::kernel_series(std::abs(zeta), std::abs(z), an_eps).value;
        } else {
            throw bergkern::DomainError("unknown method '" + an_method + "'");
        }
        std::ostringstream os;
        os << "zeta_abs,z_abs,method,value\n"
           << format_double(std::abs(zeta)) << ',' << format_double(std::abs(z)) << ',' << an_method
           << ',' << format_double(value) << '\n';
        write_output(os.str(), an_out);
    });

    auto* an_levi = annulus_cmd->add_subcommand("levi", "mixed zeta derivative of log K");
    an_levi->set_help_flag("--help", "print help");
    an_levi->add_option("--h", an_h, "fd step (default: 1e-4 x constraint distance)");
    an_levi->add_option("--method", an_method, "fd evaluator: closed | series");
    an_levi->add_flag("--fd", an_fd, "also compute the finite-difference value");
    an_levi->add_option("--out", an_out, "output file");
    an_zeta.attach(an_levi, "zeta");
    an_z.attach(an_levi, "z");
    an_levi->callback([&] {
        const bergkern::annulus::AnnulusPoint p(an_zeta.value(), an_z.value());
        const double component = bergkern::annulus::levi_zeta_component(p);
        std::ostringstream os;
        if (an_fd) {
            const auto method = an_method == "series" ? bergkern::annulus::KernelMethod::series
                                                      : bergkern::annulus::KernelMethod::closed;
            const double fd = bergkern::annulus::levi_zeta_fd(p, an_h, method);
            const auto row = bergkern::report::make_report_row("levi", component, fd);
            os << "zeta_abs,z_abs,levi_component,levi_fd,rel_diff\n"
               << format_double(std::abs(p.zeta)) << ',' << format_double(std::abs(p.z)) << ','
               << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
               << format_double(row.rel_diff) << '\n';
        } else {
            os << "zeta_abs,z_abs,levi_component\n"
               << format_double(std::abs(p.zeta)) << ',' << format_double(std::abs(p.z)) << ','
               << format_double(component) << '\n';
        }
        write_output(os.str(), an_out);
    });

    auto* an_remark = annulus_cmd->add_subcommand("remark", "second-derivative product identity rows");
    an_remark->set_help_flag("--help", "print help");
    an_remark->add_option("--h", an_h, "fd step");
    an_remark->add_option("--out", an_out, "output file");
    an_zeta.attach(an_remark, "zeta");
    an_z.attach(an_remark, "z");
    an_remark->callback([&] {
        const bergkern::annulus::AnnulusPoint p(an_zeta.value(), an_z.value());
        const auto res = bergkern::annulus::remark_identity_residual(p, an_h);
        std::ostringstream os;
        os << "zeta_abs,z_abs,lhs,rhs,residual\n"
           << format_double(std::abs(p.zeta)) << ',' << format_double(std::abs(p.z)) << ','
           << format_double(res.lhs) << ',' << format_double(res.rhs) << ','
           << format_double(res.residual) << '\n';
        write_output(os.str(), an_out);
    });

    // ------------------------------------------------------------- circular
    auto* circ = app.add_subcommand("circular", "series kernel over a complete circular domain");
    circ->set_help_flag("--help", "print help");
    circ->require_subcommand(1);

    std::string c_domain = "ball", c_rho = "abs", c_zeta, c_z, c_out;
    int c_dim = 2, c_m = 1, c_k = -1;
    double c_param = 1.0, c_eps = 1e-12;

    auto* c_kernel = circ->add_subcommand("kernel", "evaluate the series kernel");
    c_kernel->set_help_flag("--help", "print help");
    c_kernel->add_option("--domain", c_domain, "ball | polydisc");
    c_kernel->add_option("--dim", c_dim, "complex dimension n");
    c_kernel->add_option("--rho", c_rho, "radius function name");
    c_kernel->add_option("--rho-param", c_param, "parameter of the radius function");
    c_kernel->add_option("--m", c_m, "zeta dimension");
    c_kernel->add_option("--zeta", c_zeta, "zeta as re,im[;re,im...]")->required();
    c_kernel->add_option("--z", c_z, "z as re,im[;re,im...]")->required();
    c_kernel->add_option("--eps", c_eps, "truncation bound");
    c_kernel->add_option("--k", c_k, "fixed degree cutoff (partial sum) instead of eps control");
    c_kernel->add_option("--out", c_out, "output file");
    c_kernel->callback([&] {
        const auto kind = c_domain == "polydisc" ? bergkern::circular::DomainKind::polydisc
                                                 : bergkern::circular::DomainKind::ball;
        const bergkern::circular::CircularDomainBasis basis(kind, c_dim);
        const auto rho = bergkern::circular::radius_catalog(c_rho, c_m, c_param);
        const auto zeta = parse_point(c_zeta);
        const auto z = parse_point(c_z);
        std::ostringstream os;
        os << "domain,dim,rho,zeta,z,value,degree_cutoff,tail_bound\n";
        if (c_k >= 0) {
            const double logv =
                bergkern::circular::truncated_log_kernel(basis, rho, zeta, z, c_k);
            os << c_domain << ',' << c_dim << ',' << c_rho << ',' << point_to_string(zeta) << ','
               << point_to_string(z) << ',' << format_double(std::exp(logv)) << ',' << c_k
               << ",nan\n";
        } else {
            const auto k = bergkern::circular::kernel_general(basis, rho, zeta, z, c_eps);
            os << c_domain << ',' << c_dim << ',' << c_rho << ',' << point_to_string(zeta) << ','
               << point_to_string(z) << ',' << format_double(k.value) << ',' << k.degree_cutoff
               << ',' << format_double(k.tail_bound) << '\n';
        }
        write_output(os.str(), c_out);
    });

    auto* c_u0 = circ->add_subcommand("u0", "u0(zeta) = -log(1 - rho^{2n})");
    c_u0->set_help_flag("--help", "print help");
    c_u0->add_option("--rho", c_rho, "radius function name");
    c_u0->add_option("--rho-param", c_param, "parameter");
    c_u0->add_option("--m", c_m, "zeta dimension");
    c_u0->add_option("--dim", c_dim, "complex dimension n of the domain");
    c_u0->add_option("--zeta", c_zeta, "zeta as re,im[;re,im...]")->required();
    c_u0->add_option("--out", c_out, "output file");
    c_u0->callback([&] {
        const auto rho = bergkern::circular::radius_catalog(c_rho, c_m, c_param);
        const auto zeta = parse_point(c_zeta);
        const double v = bergkern::circular::u0_eval(rho, zeta, c_dim);
        std::ostringstream os;
        os << "rho,zeta,dim,value\n"
           << c_rho << ',' << point_to_string(zeta) << ',' << c_dim << ',' << format_double(v)
           << '\n';
        write_output(os.str(), c_out);
    });

    // ----------------------------------------------------------------- scan
    auto* scan = app.add_subcommand("scan", "plurisubharmonicity scan of the log series kernel");
    scan->set_help_flag("--help", "print help");
    std::string s_domain = "ball", s_rho = "abs", s_out, s_zeta_shell, s_z_shell;
    int s_dim = 2, s_m = 1, s_grid = 100;
    double s_param = 1.0, s_h = 1e-4, s_tol = 1e-6, s_tol_strict = 0.0, s_eps = 1e-12;
    std::uint64_t s_seed = 7;
    bool s_strict = false;
    scan->add_option("--domain", s_domain, "ball | polydisc");
    scan->add_option("--dim", s_dim, "complex dimension n");
    scan->add_option("--rho", s_rho, "radius function name");
    scan->add_option("--rho-param", s_param, "parameter");
    scan->add_option("--m", s_m, "zeta dimension");
    scan->add_option("--grid", s_grid, "number of samples");
    scan->add_option("--seed", s_seed, "sampler seed");
    scan->add_option("--h", s_h, "fd step");
    scan->add_option("--tol", s_tol, "violation tolerance");
    scan->add_flag("--strict", s_strict, "flag non-strict samples instead");
    scan->add_option("--tol-strict", s_tol_strict, "strictness threshold");
    scan->add_option("--zeta-shell", s_zeta_shell, "zeta gauge shell as lo,hi");
    scan->add_option("--z-shell", s_z_shell, "z gauge shell as lo,hi");
    scan->add_option("--eps", s_eps, "kernel truncation bound");
    scan->add_option("--out", s_out, "output file (.csv table or .json report)");
    scan->callback([&] {
        auto options = bergkern::suites::default_scan_options(s_rho);
        options.kind = s_domain == "polydisc" ? bergkern::circular::DomainKind::polydisc
                                              : bergkern::circular::DomainKind::ball;
        options.n = s_dim;
        options.m = s_m;
        options.rho_param = s_param;
        options.count = s_grid;
        options.seed = s_seed;
        options.h = s_h;
        options.tol = s_tol;
        options.tol_strict = s_tol_strict;
        options.strict = s_strict;
        options.eps = s_eps;
        auto parse_shell = [](const std::string& text, double& lo, double& hi) {
            if (text.empty()) {
                return;
            }
            const auto c = parse_complex(text); // reuses the RE,IM reader
            lo = c.real();
            hi = c.imag();
        };
        parse_shell(s_zeta_shell, options.zeta_lo, options.zeta_hi);
        parse_shell(s_z_shell, options.z_lo, options.z_hi);
        const auto report = bergkern::suites::kernel_scan(options);
        const std::string text = wants_json(s_out, false)
                                     ? bergkern::report::to_json(report).dump(2) + "\n"
                                     : bergkern::report::to_csv(report);
        write_output(text, s_out);
        exit_code = report.violations.empty() && report.stencil_errors == 0 ? 0 : 1;
    });

    // ---------------------------------------------------------------- check
    auto* check = app.add_subcommand("check", "named verification suites");
    check->set_help_flag("--help", "print help");
    std::string k_suite = "identities", k_out;
    std::vector<double> k_omega1;
    double k_zeta_abs = 0.3, k_h = 1e-4, k_tol = 1e-6;
    int k_grid = 100;
    std::uint64_t k_seed = 0;
    bool k_seed_set = false;
    check->add_option("--suite", k_suite,
                      "identities | theorem12 | remark32 | corollary13 | theorem11 | remark21")
        ->required();
    check->add_option("--omega1", k_omega1, "lattice list for the identities suite")
        ->delimiter(',');
    check->add_option("--zeta-abs", k_zeta_abs, "annulus parameter for corollary13");
    check->add_option("--grid", k_grid, "samples for the scan suites");
    check->add_option("--h", k_h, "fd step for the scan suites");
    check->add_option("--tol", k_tol, "tolerance for the scan suites");
    check->add_option("--seed", k_seed, "seed for the scan suites")->each([&](const std::string&) {
        k_seed_set = true;
    });
    check->add_option("--out", k_out, "output file (.json report or .csv table)");
    check->callback([&] {
        bergkern::report::CheckReport rep;
        if (k_suite == "identities") {
            std::vector<double> omega1s(k_omega1);
            if (omega1s.empty()) {
                omega1s.assign(std::begin(bergkern::suites::kDefaultOmega1s),
                               std::end(bergkern::suites::kDefaultOmega1s));
            }
            rep = bergkern::suites::identities(omega1s);
        } else if (k_suite == "theorem12") {
            rep = bergkern::suites::theorem12();
        } else if (k_suite == "remark32") {
            rep = bergkern::suites::remark32();
        } else if (k_suite == "corollary13") {
            rep = bergkern::suites::corollary13(k_zeta_abs);
        } else if (k_suite == "theorem11") {
            rep = bergkern::suites::theorem11(k_seed_set ? k_seed : 7, k_grid, k_h, k_tol);
        } else if (k_suite == "remark21") {
            rep = bergkern::suites::remark21(k_seed_set ? k_seed : 11, k_grid, k_h);
        } else {
            throw bergkern::DomainError("unknown suite '" + k_suite + "'");
        }
        const std::string text = wants_json(k_out, true)
                                     ? bergkern::report::to_json(rep).dump(2) + "\n"
                                     : bergkern::report::to_csv(rep);
        write_output(text, k_out);
        exit_code = rep.exit_status();
    });

    // ---------------------------------------------------------------- sweep
    auto* sweep = app.add_subcommand("sweep", "boundary sweeps of the annulus quantities");
    sweep->set_help_flag("--help", "print help");
    sweep->require_subcommand(1);

    ComplexInput sw_zeta;
    std::string sw_approach = "outer", sw_quantity = "levi", sw_out;
    std::vector<int> sw_ks{1, 2, 3, 4};
    int sw_count = 50;
    double sw_zlo = -1.0, sw_zhi = -1.0;

    auto* sw_decay = sweep->add_subcommand("decay", "decay profile toward a boundary");
    sw_decay->set_help_flag("--help", "print help");
    sw_zeta.attach(sw_decay, "zeta");
    sw_decay->add_option("--approach", sw_approach, "outer | inner");
    sw_decay->add_option("--ks", sw_ks, "exponents k of the offsets 10^-k")->delimiter(',');
    sw_decay->add_option("--out", sw_out, "output file");
    sw_decay->callback([&] {
        const auto approach = sw_approach == "inner" ? bergkern::annulus::Approach::inner
                                                     : bergkern::annulus::Approach::outer;
        const auto prof = bergkern::annulus::boundary_decay_profile(sw_zeta.value(), approach, sw_ks);
        std::ostringstream os;
        os << "z_abs,u,levi_value,ratio_to_previous\n";
        for (std::size_t i = 0; i < prof.rows.size(); ++i) {
            const auto& r = prof.rows[i];
            os << format_double(r.z_abs) << ',' << format_double(r.u) << ','
               << format_double(r.levi_value) << ',' << (i == 0 ? "" : format_double(r.ratio_to_previous))
               << '\n';
        }
        write_output(os.str(), sw_out);
    });

    auto* sw_radial = sweep->add_subcommand("radial", "kernel or levi values along |z|");
    sw_radial->set_help_flag("--help", "print help");
    sw_zeta.attach(sw_radial, "zeta");
    sw_radial->add_option("--quantity", sw_quantity, "kernel | levi");
    sw_radial->add_option("--count", sw_count, "number of radii");
    sw_radial->add_option("--z-lo", sw_zlo, "lowest |z| (default just above |zeta|)");
    sw_radial->add_option("--z-hi", sw_zhi, "highest |z| (default just below 1)");
    sw_radial->add_option("--out", sw_out, "output file");
    sw_radial->callback([&] {
        const cplx zeta = sw_zeta.value();
        const double r = std::abs(zeta);
        const double lo = sw_zlo > 0.0 ? sw_zlo : r + 0.02 * (1.0 - r);
        const double hi = sw_zhi > 0.0 ? sw_zhi : 1.0 - 0.02 * (1.0 - r);
        if (!(lo > r) || !(hi < 1.0) || !(lo < hi) || sw_count < 2) {
            throw bergkern::DomainError("sweep radial: need |zeta| < z-lo < z-hi < 1 and count >= 2");
        }
        std::ostringstream os;
        os << "z_abs,u,value\n";
        for (int i = 0; i < sw_count; ++i) {
            const double s = lo + (hi - lo) * i / (sw_count - 1);
            const bergkern::annulus::AnnulusPoint p(zeta, cplx(s, 0.0));
            const double v = sw_quantity == "kernel" ? bergkern::annulus::kernel_closed(p).value
                                                     : bergkern::annulus::levi_zeta_component(p);
            os << format_double(s) << ',' << format_double(p.u) << ',' << format_double(v) << '\n';
        }
        write_output(os.str(), sw_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bergkern::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
