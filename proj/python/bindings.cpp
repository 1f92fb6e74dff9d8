#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <span>
#include <vector>

#include "bergkern/annulus.hpp"
#include "bergkern/circular.hpp"
#include "bergkern/elliptic.hpp"
#include "bergkern/levi.hpp"
#include "bergkern/report.hpp"
#include "bergkern/suites.hpp"

namespace py = pybind11;
using cplx = std::complex<double>;

namespace {

bergkern::circular::DomainKind parse_kind(const std::string& kind) {
    if (kind == "ball") {
        return bergkern::circular::DomainKind::ball;
    }
    if (kind == "polydisc") {
        return bergkern::circular::DomainKind::polydisc;
    }
    throw bergkern::DomainError("unknown domain kind '" + kind + "'");
}

bergkern::annulus::KernelMethod parse_method(const std::string& method) {
    if (method == "closed") {
        return bergkern::annulus::KernelMethod::closed;
    }
    if (method == "series") {
        return bergkern::annulus::KernelMethod::series;
    }
    throw bergkern::DomainError("unknown kernel method '" + method + "'");
}

py::dict scan_to_dict(const bergkern::levi::ScanReport& r) {
    py::dict out;
    out["mode"] = r.mode;
    out["global_min"] = r.global_min;
    out["violations"] = r.violations;
    out["stencil_errors"] = r.stencil_errors;
    py::list samples;
    for (const auto& s : r.samples) {
        py::dict d;
        d["point"] = s.point;
        d["min_eig"] = s.min_eig;
        d["ok"] = s.ok;
        samples.append(d);
    }
    out["samples"] = samples;
    return out;
}

} // namespace

PYBIND11_MODULE(_bergkern, m) {
    m.doc() = "Bergman kernels of generalized annuli: elliptic evaluators, series kernels, "
              "Levi-form scans";

    py::register_exception<bergkern::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<bergkern::NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

    using bergkern::elliptic::RectLattice;
    using bergkern::elliptic::Weierstrass;

    py::class_<RectLattice>(m, "RectLattice")
        .def(py::init<double>(), py::arg("omega1"))
        .def_static("from_zeta", &RectLattice::from_zeta, py::arg("zeta"))
        .def_readonly("omega1", &RectLattice::omega1);

    py::class_<Weierstrass>(m, "Weierstrass")
        .def(py::init([](double omega1) { return Weierstrass{RectLattice(omega1)}; }),
             py::arg("omega1"))
        .def("wp", [](const Weierstrass& w, cplx u) { return w.wp(u); }, py::arg("u"))
        .def("wp_prime", [](const Weierstrass& w, cplx u) { return w.wp_prime(u); }, py::arg("u"))
        .def("wzeta", [](const Weierstrass& w, cplx u) { return w.wzeta(u); }, py::arg("u"))
        .def("quasi_periods",
             [](const Weierstrass& w) {
                 const auto qp = w.quasi_periods();
                 return py::make_tuple(qp.eta, qp.c);
             })
        .def("reduce",
             [](const Weierstrass& w, cplx u) {
                 const auto r = w.reduce(u);
                 return py::make_tuple(r.u_red, r.zeta_shift);
             },
             py::arg("u"))
        .def("pole_distance", &Weierstrass::pole_distance, py::arg("u"));

    m.def("kernel_closed",
          [](cplx zeta, cplx z) {
              return bergkern::annulus::kernel_closed({zeta, z}).value;
          },
          py::arg("zeta"), py::arg("z"),
          "Closed-form diagonal Bergman kernel of {|zeta| < |z| < 1}");
    m.def("kernel_series",
          [](double r, double s, double eps) {
              return bergkern::annulus::kernel_series(r, s, eps).value;
          },
          py::arg("r"), py::arg("s"), py::arg("eps") = 1e-12,
          "Laurent-series diagonal kernel at radii r = |zeta|, s = |z|");
    m.def("levi_zeta_component",
          [](cplx zeta, cplx z) {
              return bergkern::annulus::levi_zeta_component({zeta, z});
          },
          py::arg("zeta"), py::arg("z"));
    m.def("levi_zeta_fd",
          [](cplx zeta, cplx z, double h, const std::string& method) {
              return bergkern::annulus::levi_zeta_fd({zeta, z}, h, parse_method(method));
          },
          py::arg("zeta"), py::arg("z"), py::arg("h") = 0.0, py::arg("method") = "closed");
    m.def("remark_identity_residual",
          [](cplx zeta, cplx z, double h) {
              const auto r = bergkern::annulus::remark_identity_residual({zeta, z}, h);
              return py::make_tuple(r.lhs, r.rhs, r.residual);
          },
          py::arg("zeta"), py::arg("z"), py::arg("h") = 0.0);
    m.def("boundary_decay_profile",
          [](cplx zeta, const std::string& approach, const std::vector<int>& ks) {
              const auto prof = bergkern::annulus::boundary_decay_profile(
                  zeta,
                  approach == "inner" ? bergkern::annulus::Approach::inner
                                      : bergkern::annulus::Approach::outer,
                  ks);
              py::list rows;
              for (const auto& r : prof.rows) {
                  py::dict d;
                  d["z_abs"] = r.z_abs;
                  d["u"] = r.u;
                  d["levi_value"] = r.levi_value;
                  d["ratio_to_previous"] = r.ratio_to_previous;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("zeta"), py::arg("approach"), py::arg("ks"));

    m.def("monomial_norm",
          [](const std::string& kind, int n, const std::vector<int>& alpha) {
              return bergkern::circular::CircularDomainBasis(parse_kind(kind), n)
                  .monomial_norm(alpha);
          },
          py::arg("kind"), py::arg("n"), py::arg("alpha"));
    m.def("kernel_general",
          [](const std::string& kind, int n, const std::string& rho, int m_dim, double rho_param,
             const std::vector<cplx>& zeta, const std::vector<cplx>& z, double eps) {
              const bergkern::circular::CircularDomainBasis basis(parse_kind(kind), n);
              const auto rf = bergkern::circular::radius_catalog(rho, m_dim, rho_param);
              const auto k = bergkern::circular::kernel_general(basis, rf, zeta, z, eps);
              py::dict out;
              out["value"] = k.value;
              out["degree_cutoff"] = k.degree_cutoff;
              out["tail_bound"] = k.tail_bound;
              return out;
          },
          py::arg("kind"), py::arg("n"), py::arg("rho"), py::arg("m") = 1,
          py::arg("rho_param") = 1.0, py::arg("zeta") = std::vector<cplx>{},
          py::arg("z") = std::vector<cplx>{}, py::arg("eps") = 1e-12);
    m.def("truncated_log_kernel",
          [](const std::string& kind, int n, const std::string& rho, int m_dim, double rho_param,
             const std::vector<cplx>& zeta, const std::vector<cplx>& z, int k) {
              const bergkern::circular::CircularDomainBasis basis(parse_kind(kind), n);
              const auto rf = bergkern::circular::radius_catalog(rho, m_dim, rho_param);
              return bergkern::circular::truncated_log_kernel(basis, rf, zeta, z, k);
          },
          py::arg("kind"), py::arg("n"), py::arg("rho"), py::arg("m") = 1,
          py::arg("rho_param") = 1.0, py::arg("zeta") = std::vector<cplx>{},
          py::arg("z") = std::vector<cplx>{}, py::arg("k") = 0);
    m.def("u0_eval",
          [](const std::string& rho, int m_dim, double rho_param, const std::vector<cplx>& zeta,
             int n) {
              const auto rf = bergkern::circular::radius_catalog(rho, m_dim, rho_param);
              return bergkern::circular::u0_eval(rf, zeta, n);
          },
          py::arg("rho"), py::arg("m") = 1, py::arg("rho_param") = 1.0,
          py::arg("zeta") = std::vector<cplx>{}, py::arg("n") = 1);

    m.def("complex_hessian_fd",
          [](const std::function<double(std::vector<cplx>)>& f, const std::vector<cplx>& w,
             double h) {
              const bergkern::levi::Field field = [&](std::span<const cplx> p) {
                  return f(std::vector<cplx>(p.begin(), p.end()));
              };
              const auto form = bergkern::levi::complex_hessian_fd(field, w, h);
              std::vector<std::vector<cplx>> rows(form.dim());
              for (int a = 0; a < form.dim(); ++a) {
                  rows[a].resize(form.dim());
                  for (int b = 0; b < form.dim(); ++b) {
                      rows[a][b] = form.at(a, b);
                  }
              }
              return rows;
          },
          py::arg("f"), py::arg("w"), py::arg("h") = 1e-4,
          "Mixed Wirtinger Hessian of a real scalar field on C^d by central differences");
    m.def("min_eigenvalue",
          [](const std::vector<std::vector<cplx>>& rows) {
              const int d = int(rows.size());
              std::vector<cplx> entries;
              for (const auto& row : rows) {
                  if (int(row.size()) != d) {
                      throw bergkern::DimensionMismatch("min_eigenvalue: ragged matrix");
                  }
                  entries.insert(entries.end(), row.begin(), row.end());
              }
              return bergkern::levi::min_eigenvalue(bergkern::levi::HermitianForm(d, entries));
          },
          py::arg("matrix"));

    m.def("kernel_scan",
          [](const std::string& kind, int n, const std::string& rho, int m_dim, double rho_param,
             int count, std::uint64_t seed, double h, double tol, bool strict, double tol_strict) {
              auto o = bergkern::suites::default_scan_options(rho);
              o.kind = parse_kind(kind);
              o.n = n;
              o.m = m_dim;
              o.rho_param = rho_param;
              o.count = count;
              o.seed = seed;
              o.h = h;
              o.tol = tol;
              o.strict = strict;
              o.tol_strict = tol_strict;
              return scan_to_dict(bergkern::suites::kernel_scan(o));
          },
          py::arg("kind") = "ball", py::arg("n") = 2, py::arg("rho") = "abs", py::arg("m") = 1,
          py::arg("rho_param") = 1.0, py::arg("count") = 100, py::arg("seed") = 7,
          py::arg("h") = 1e-4, py::arg("tol") = 1e-6, py::arg("strict") = false,
          py::arg("tol_strict") = 0.0);

    m.def("suite_json",
          [](const std::string& name, std::uint64_t seed, int count, double h) {
              bergkern::report::CheckReport rep;
              if (name == "identities") {
                  rep = bergkern::suites::identities(bergkern::suites::kDefaultOmega1s);
              } else if (name == "theorem12") {
                  rep = bergkern::suites::theorem12();
              } else if (name == "remark32") {
                  rep = bergkern::suites::remark32();
              } else if (name == "corollary13") {
                  rep = bergkern::suites::corollary13();
              } else if (name == "theorem11") {
                  rep = bergkern::suites::theorem11(seed, count, h);
              } else if (name == "remark21") {
                  rep = bergkern::suites::remark21(seed, count, h);
              } else {
                  throw bergkern::DomainError("unknown suite '" + name + "'");
              }
              return bergkern::report::to_json(rep).dump();
          },
          py::arg("name"), py::arg("seed") = 7, py::arg("count") = 100, py::arg("h") = 1e-4,
          "Run a named check suite and return its report as a JSON string");
}
