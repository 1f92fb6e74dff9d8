#include "bergkern/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bergkern::report {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool check_passes(double abs_diff, double rel_diff, double tol) {
    if (std::isnan(tol)) {
        return true;
    }
    if (std::isnan(rel_diff)) {
        return abs_diff <= tol;
    }
    return rel_diff <= tol;
}

} // namespace

Check make_check(std::string name, double lhs, double rhs, double tol) {
    const double abs_diff = std::abs(lhs - rhs);
    const double rel_diff = rhs == 0.0 ? kNaN : abs_diff / std::abs(rhs);
    const bool pass = check_passes(abs_diff, rel_diff, tol);
    return {std::move(name), lhs, rhs, abs_diff, rel_diff, tol, pass, false};
}

Check make_report_row(std::string name, double lhs, double rhs) {
    const double abs_diff = std::abs(lhs - rhs);
    const double rel_diff = rhs == 0.0 ? kNaN : abs_diff / std::abs(rhs);
    return {std::move(name), lhs, rhs, abs_diff, rel_diff, kNaN, true, true};
}

bool CheckReport::passed() const {
    for (const auto& c : checks) {
        if (!c.report_only && !c.pass) {
            return false;
        }
    }
    return true;
}

std::size_t CheckReport::failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) {
        if (!c.report_only && !c.pass) {
            ++n;
        }
    }
    return n;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.config) {
        cfg[k] = v;
    }
    j["config"] = cfg;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["abs_diff"] = c.abs_diff;
        jc["rel_diff"] = c.rel_diff;
        jc["tol"] = c.tol;
        jc["pass"] = c.pass;
        jc["report_only"] = c.report_only;
        j["checks"].push_back(jc);
    }
    j["failed"] = r.failed_count();
    j["exit_status"] = r.exit_status();
    return j;
}

std::string to_csv(const CheckReport& r) {
    std::ostringstream os;
    os << "name,lhs,rhs,abs_diff,rel_diff,tol,pass,report_only\n";
    for (const auto& c : r.checks) {
        os << c.name << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
           << format_double(c.abs_diff) << ',' << format_double(c.rel_diff) << ','
           << format_double(c.tol) << ',' << (c.pass ? 1 : 0) << ',' << (c.report_only ? 1 : 0)
           << '\n';
    }
    return os.str();
}

nlohmann::ordered_json to_json(const levi::ScanReport& r) {
    nlohmann::ordered_json j;
    j["mode"] = r.mode;
    nlohmann::ordered_json cfg;
    cfg["count"] = r.config.count;
    cfg["h"] = r.config.h;
    cfg["tol"] = r.config.tol;
    cfg["tol_strict"] = r.config.tol_strict;
    cfg["seed"] = r.config.seed;
    j["config"] = cfg;
    j["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
        nlohmann::ordered_json js;
        js["point"] = nlohmann::ordered_json::array();
        for (const auto& c : s.point) {
            js["point"].push_back({c.real(), c.imag()});
        }
        js["min_eig"] = s.min_eig;
        js["ok"] = s.ok;
        j["samples"].push_back(js);
    }
    j["global_min"] = r.global_min;
    j["violations"] = r.violations;
    j["stencil_errors"] = r.stencil_errors;
    return j;
}

std::string to_csv(const levi::ScanReport& r) {
    std::ostringstream os;
    const std::size_t d = r.samples.empty() ? 0 : r.samples.front().point.size();
    os << "index";
    for (std::size_t k = 0; k < d; ++k) {
        os << ",w" << k << "_re,w" << k << "_im";
    }
    os << ",min_eig,ok\n";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const auto& s = r.samples[i];
        os << i;
        for (const auto& c : s.point) {
            os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
        }
        os << ',' << format_double(s.min_eig) << ',' << (s.ok ? 1 : 0) << '\n';
    }
    return os.str();
}

} // namespace bergkern::report
