#ifndef BERGKERN_REPORT_HPP
#define BERGKERN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bergkern/levi.hpp"

namespace bergkern::report {

/// One named numerical check. rel_diff is abs_diff / |rhs| and is undefined
/// (NaN) when rhs = 0; a check passes when rel_diff <= tol, falling back to
/// abs_diff <= tol where rel_diff is undefined. Report-only checks carry a
/// NaN tolerance and never affect the exit status.
struct Check {
    std::string name;
    double lhs;
    double rhs;
    double abs_diff;
    double rel_diff;
    double tol;
    bool pass;
    bool report_only;
};

Check make_check(std::string name, double lhs, double rhs, double tol);
Check make_report_row(std::string name, double lhs, double rhs);

struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Check> checks;

    bool passed() const;
    int exit_status() const { return passed() ? 0 : 1; }
    std::size_t failed_count() const;
};

/// Full-precision decimal form (%.17g), shared by every CSV emitter.
std::string format_double(double x);

nlohmann::ordered_json to_json(const CheckReport& r);
std::string to_csv(const CheckReport& r);

nlohmann::ordered_json to_json(const levi::ScanReport& r);
std::string to_csv(const levi::ScanReport& r);

} // namespace bergkern::report

#endif
