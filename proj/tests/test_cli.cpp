#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef BERGKERN_CLI_PATH
#error "BERGKERN_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() / ("bergkern_cli_" + std::to_string(counter++) + ".out");
    const std::string cmd = std::string(BERGKERN_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = slurp(out);
    fs::remove(out);
    return r;
}

} // namespace

TEST_CASE("annulus kernel emits the documented CSV row") {
    const auto r = run_cli("annulus kernel --zeta 0.3 --z 0.6 --method closed");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("zeta_abs,z_abs,method,value\n", 0) == 0);
    // exactly one data row with the closed-form value
    std::istringstream is(r.output);
    std::string header, row, extra;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(!std::getline(is, extra));
    CHECK(row.find(",closed,") != std::string::npos);
    const double value = std::strtod(row.substr(row.rfind(',') + 1).c_str(), nullptr);
    CHECK(value == doctest::Approx(1.5935402181433245).epsilon(1e-12));
}

TEST_CASE("closed and series methods agree through the CLI") {
    const auto a = run_cli("annulus kernel --zeta-abs 0.3 --z-abs 0.6 --method closed");
    const auto b = run_cli("annulus kernel --zeta-abs 0.3 --z-abs 0.6 --method series --eps 1e-12");
    const double va = std::strtod(a.output.substr(a.output.rfind(',') + 1).c_str(), nullptr);
    const double vb = std::strtod(b.output.substr(b.output.rfind(',') + 1).c_str(), nullptr);
    CHECK(va == doctest::Approx(vb).epsilon(1e-8));
}

TEST_CASE("scan output is byte-identical under a fixed seed") {
    const fs::path f1 = fs::temp_directory_path() / "bergkern_scan_a.csv";
    const fs::path f2 = fs::temp_directory_path() / "bergkern_scan_b.csv";
    const std::string flags = "scan --domain ball --dim 2 --rho abs --grid 12 --seed 7 --out ";
    CHECK(run_cli(flags + f1.string()).exit_code == 0);
    CHECK(run_cli(flags + f2.string()).exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(slurp(f1).rfind("index,w0_re,w0_im,w1_re,w1_im,w2_re,w2_im,min_eig,ok\n", 0) == 0);
    fs::remove(f1);
    fs::remove(f2);
}

TEST_CASE("different seeds change the sample set") {
    const fs::path f1 = fs::temp_directory_path() / "bergkern_scan_s7.csv";
    const fs::path f2 = fs::temp_directory_path() / "bergkern_scan_s8.csv";
    run_cli("scan --rho abs --grid 6 --seed 7 --out " + f1.string());
    run_cli("scan --rho abs --grid 6 --seed 8 --out " + f2.string());
    CHECK(slurp(f1) != slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
}

TEST_CASE("check suite emits a JSON report and exit status") {
    const fs::path out = fs::temp_directory_path() / "bergkern_identities.json";
    const auto r = run_cli("check --suite identities --omega1 1.0 --out " + out.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["suite"] == "identities");
    CHECK(j["exit_status"] == 0);
    CHECK(j["failed"] == 0);
    bool has_legendre = false, has_report_only = false;
    for (const auto& c : j["checks"]) {
        if (c["name"].get<std::string>().find("legendre") != std::string::npos) {
            has_legendre = true;
        }
        if (c["report_only"].get<bool>()) {
            has_report_only = true;
        }
    }
    CHECK(has_legendre);
    CHECK(has_report_only);
    fs::remove(out);
}

TEST_CASE("gauss-bump scan reports violations through the exit code") {
    const auto r = run_cli("scan --rho gauss-bump --grid 8 --seed 11 --tol 1e-4");
    CHECK(r.exit_code == 1);
}

TEST_CASE("sweep decay rows decrease") {
    const auto r = run_cli("sweep decay --zeta-abs 0.3 --approach outer --ks 1,2,3,4");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.output);
    std::string line;
    std::getline(is, line);
    CHECK(line == "z_abs,u,levi_value,ratio_to_previous");
    double prev = 1e300;
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        // third column
        std::size_t p = line.find(',');
        p = line.find(',', p + 1);
        const double v = std::strtod(line.substr(p + 1).c_str(), nullptr);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(rows == 4);
}

TEST_CASE("usage and domain errors exit with code 2") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("annulus kernel --zeta 0.7 --z 0.5").exit_code == 2);
    CHECK(run_cli("check --suite no-such-suite").exit_code == 2);
    CHECK(run_cli("circular kernel --domain ball --dim 2 --rho abs --zeta 0.5,0 --z \"2.0,0;0,0\"")
              .exit_code == 2);
}

TEST_CASE("pw quasi rows expose eta and c") {
    const auto r = run_cli("pw --omega1 0.1 --fn quasi");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("eta,") != std::string::npos);
    // eta * omega1 ~ pi^2/12 for small omega1
    std::istringstream is(r.output);
    std::string line;
    double eta = 0.0;
    while (std::getline(is, line)) {
        if (line.rfind("eta,", 0) == 0) {
            const auto p = line.find(",,,");
            eta = std::strtod(line.substr(p + 3).c_str(), nullptr);
        }
    }
    CHECK(eta * 0.1 == doctest::Approx(9.8696044 / 12.0).epsilon(0.02));
}

TEST_CASE("scan output is unchanged when BERGKERN_THREADS caps parallelism") {
    namespace fs = std::filesystem;
    const fs::path f1 = fs::temp_directory_path() / "bergkern_scan_t1.csv";
    const fs::path f2 = fs::temp_directory_path() / "bergkern_scan_t4.csv";
    const std::string flags = "scan --rho abs --grid 10 --seed 3 --out ";
    run_cli(flags + f1.string());
    const std::string cmd = std::string("BERGKERN_THREADS=4 ") + BERGKERN_CLI_PATH + " " + flags +
                            f2.string() + " > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(f1) == slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
}
