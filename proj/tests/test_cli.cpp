// Drives the installed CLI binary end to end. The binary path arrives as the
// last plain argument on the test command line.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with the given arguments; stderr is merged when asked for.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    RunResult result;
    const std::string cmd =
        g_cli_path + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("distribution: exact header and row count") {
    const auto r = run_cli(
        "distribution --gamma 1 --vsq-min -1 --vsq-max 1 --samples 2");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "vsq,N,scaledN");
    CHECK(num(fields_of(lines[1])[0]) == -1.0);
    CHECK(num(fields_of(lines[2])[0]) == 1.0);
}

TEST_CASE("distribution: unit intercept and value round-trip") {
    const auto r = run_cli(
        "distribution --gamma 1 --vsq-min -1 --vsq-max 1 --samples 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 4);
    const auto mid = fields_of(lines[2]);
    CHECK(num(mid[0]) == 0.0);
    CHECK(std::abs(num(mid[2]) - 1.0) <= 1e-12);

    const auto pos = run_cli(
        "distribution --gamma 1.3 --vsq-min 7.25 --vsq-max 8 --samples 2");
    REQUIRE(pos.exit_code == 0);
    const double n_pos = num(fields_of(lines_of(pos.output)[1])[1]);
    CHECK(std::abs(n_pos - 0.00054827380847667121998) <=
          1e-12 * 0.00054827380847667121998);

    const auto neg = run_cli(
        "distribution --gamma 1.3 --vsq-min -7.25 --vsq-max 8 --samples 2");
    REQUIRE(neg.exit_code == 0);
    const double n_neg = num(fields_of(lines_of(neg.output)[1])[1]);
    CHECK(std::abs(n_neg - 0.000056633865471233488031) <=
          1e-12 * 0.000056633865471233488031);
}

TEST_CASE("moments: four rows of route agreement") {
    const auto r = run_cli("moments --gamma 1 --l 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] ==
          "l,unrescaled_re,unrescaled_im,rescaled_re,rescaled_im,oracle,"
          "oracle_re,oracle_im,agrees,factorized_re,factorized_im");
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 11);
        CHECK(num(f[0]) == static_cast<double>(i - 1));
        CHECK(f[5] == "integral_rep");
        CHECK(f[8] == "true");
    }
    const auto l0 = fields_of(lines[1]);
    CHECK(std::abs(num(l0[1]) - kPi) <= 1e-12);
    CHECK(std::abs(num(l0[2]) - kPi) <= 1e-12);
    CHECK(std::abs(num(l0[3]) - kPi) <= 1e-12);
}

TEST_CASE("moments: linear variant uses the Bessel oracle") {
    const auto r = run_cli("moments --gamma 1 --variant linear --l 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        CHECK(f[5] == "radial_quadrature");
        CHECK(f[8] == "true");
    }
}

TEST_CASE("singularities: lattice rows") {
    const auto r = run_cli("singularities --gamma 1 --n-max 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "n,location_re,location_im,order");
    const auto first = fields_of(lines[1]);
    CHECK(num(first[0]) == 1.0);
    CHECK(std::abs(num(first[1])) <= 1e-14);
    CHECK(std::abs(num(first[2]) - (-2.0)) <= 1e-14);
    CHECK(num(first[3]) == 2.0);
    CHECK(num(fields_of(lines[2])[3]) == 1.0);

    const auto big = run_cli("singularities --gamma 1000 --n-max 1");
    const auto row = fields_of(lines_of(big.output)[1]);
    CHECK(std::abs(num(row[1]) - 4.0) <= 1e-4);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("", true).exit_code == 2);
    CHECK(run_cli("distribution --gamma 0", true).exit_code == 2);
    CHECK(run_cli("distribution --gamma -3", true).exit_code == 2);
    CHECK(run_cli("distribution --vsq-min 2 --vsq-max 1", true).exit_code == 2);
    CHECK(run_cli("distribution --samples 1", true).exit_code == 2);
    CHECK(run_cli("distribution --bogus", true).exit_code == 2);
    CHECK(run_cli("moments --format yaml", true).exit_code == 2);
    const auto unknown = run_cli("verify --only no-such-family", true);
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.output.find("table-integral") != std::string::npos);
    CHECK(run_cli("--help", true).exit_code == 0);
}

TEST_CASE("verify: single family runs and reports") {
    const auto r = run_cli("verify --only measure-norm", true);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1/1 checks passed") != std::string::npos);
    CHECK(r.output.find("name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
                        "tolerance,policy,passed,informational") !=
          std::string::npos);
}

TEST_CASE("verify: json output parses") {
    const auto r = run_cli("verify --only table-integral --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["total"].get<size_t>() == 5);
    CHECK(j["all_passed"].get<bool>());
}

TEST_CASE("config file provides defaults, flags win") {
    const std::string cfg = "/tmp/rgm_cli_test_" + std::to_string(getpid()) + ".ini";
    {
        std::ofstream out(cfg);
        out << "gamma=2\n";
    }
    const auto from_cfg =
        run_cli("singularities --config " + cfg + " --n-max 1");
    REQUIRE(from_cfg.exit_code == 0);
    const auto row = fields_of(lines_of(from_cfg.output)[1]);
    CHECK(std::abs(num(row[1]) - 1.92) <= 1e-12);
    CHECK(std::abs(num(row[2]) - (-2.56)) <= 1e-12);

    const auto flag_wins =
        run_cli("singularities --config " + cfg + " --gamma 1 --n-max 1");
    REQUIRE(flag_wins.exit_code == 0);
    const auto frow = fields_of(lines_of(flag_wins.output)[1]);
    CHECK(std::abs(num(frow[1])) <= 1e-14);
    CHECK(std::abs(num(frow[2]) - (-2.0)) <= 1e-14);
    std::remove(cfg.c_str());
}

TEST_CASE("json distribution marks the linear divergence as null") {
    const auto r = run_cli(
        "distribution --variant linear --gamma 1 --vsq-min -1 --vsq-max 1 "
        "--samples 3 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][1]["vsq"].get<double>() == 0.0);
    CHECK(j["rows"][1]["N"].is_null());
    CHECK(j["rows"][0]["N"].is_number());
}

TEST_CASE("--output writes the same content to a file") {
    const std::string path =
        "/tmp/rgm_cli_out_" + std::to_string(getpid()) + ".csv";
    const auto r = run_cli("distribution --gamma 1 --vsq-min 0 --vsq-max 1 "
                           "--samples 2 --output " +
                           path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "vsq,N,scaledN");
    std::remove(path.c_str());
}

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (argv[i][0] != '-') g_cli_path = argv[i];
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-cli>\n");
        return 1;
    }
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    return context.run();
}
