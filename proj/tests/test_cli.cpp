#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI and captures stdout (stderr optionally folded in).
CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string command = std::string(QGAME_CLI_PATH) + " " + args +
                                (merge_stderr ? " 2>&1" : " 2>/dev/null");
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(
        popen(command.c_str(), "r"), pclose);
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 512> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe.get()) != nullptr) {
        output += buffer.data();
    }
    FILE* raw = pipe.release();
    const int status = pclose(raw);
    CliResult result;
    result.output = std::move(output);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_path(const std::string& rel) {
    return std::string(QGAME_TEST_DATA_DIR) + "/" + rel;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: ", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void check_golden(const std::string& args, const std::string& golden,
                  int expected_exit = 0) {
    const CliResult first = run_cli(args);
    CHECK_MESSAGE(first.exit_code == expected_exit, "command: ", args);
    const std::string expected = read_file(data_path("expected/" + golden));
    CHECK_MESSAGE(first.output == expected, "golden mismatch for: ", args);

    // determinism: byte-identical on a second run
    const CliResult second = run_cli(args);
    CHECK(second.output == first.output);
    CHECK(second.exit_code == first.exit_code);
}

} // namespace

TEST_CASE("verify su2 passes and matches its golden transcript") {
    check_golden("verify --algebra su2 --kappa 3/2", "verify_su2.txt");
}

TEST_CASE("verify fock reports the unit-scaled commutator") {
    check_golden("verify --algebra fock --nmax 6 --kappa1 1 --kappa2 2",
                 "verify_fock.txt");
    const CliResult r =
        run_cli("verify --algebra fock --nmax 6 --kappa1 1 --kappa2 2");
    CHECK(r.output.find("[pi1,pi2] = i*2*I") != std::string::npos);
}

TEST_CASE("verify rejects a non-half-integer kappa with exit 2") {
    const CliResult r =
        run_cli("verify --algebra su2 --kappa 0.3", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("half-integer") != std::string::npos);
}

TEST_CASE("verify fails with exit 1 when the tolerance is unreachable") {
    const CliResult r =
        run_cli("verify --algebra fock --nmax 12 --tol 1e-30 --quiet");
    CHECK(r.exit_code == 1);
    CHECK(r.output.empty());
}

TEST_CASE("verify json and csv outputs are stable") {
    check_golden("verify --algebra su11 --kappa 0 --truncation 6 "
                 "--bound below --format json",
                 "verify_su11.json");
    check_golden("verify --algebra multimode --nmax 2 2 --format csv",
                 "verify_multimode.csv");
}

TEST_CASE("spectrum goldens") {
    check_golden("spectrum --algebra su2 --kappa 1 --operator pi3",
                 "spectrum_su2_pi3.txt");
    check_golden("spectrum --algebra su11 --kappa 0 --truncation 4 "
                 "--bound below --operator pi3",
                 "spectrum_su11_pi3.txt");
    check_golden("spectrum --algebra fock --nmax 3 --operator N",
                 "spectrum_fock_N.txt");
    check_golden("spectrum --algebra single-mode-su11 --nmax 5 "
                 "--operator k3 --format json",
                 "spectrum_sm_k3.json");
}

TEST_CASE("spectrum rejects unknown operators with exit 2") {
    const CliResult r =
        run_cli("spectrum --algebra su2 --kappa 1 --operator zz", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown operator") != std::string::npos);
}

TEST_CASE("run scenario goldens across formats") {
    check_golden("run " + data_path("scenarios/vacuum.json") +
                     " --format json",
                 "run_vacuum.json");
    check_golden("run " + data_path("scenarios/vacuum.json"),
                 "run_vacuum.txt");
    check_golden("run " + data_path("scenarios/doublet.json") +
                     " --format json",
                 "run_doublet.json");
    check_golden("run " + data_path("scenarios/multimode.json") +
                     " --format csv",
                 "run_multimode.csv");
    check_golden("run " + data_path("scenarios/decay_phase.json") +
                     " --format json",
                 "run_decay_phase.json");
}

TEST_CASE("run rejects malformed scenarios with exit 2") {
    const CliResult r =
        run_cli("run " + data_path("scenarios/bad_key.json"), true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("algbra") != std::string::npos);

    const CliResult missing = run_cli("run /no/such/file.json", true);
    CHECK(missing.exit_code == 2);
}

TEST_CASE("run flags truncation-boundary leakage with exit 1") {
    const CliResult r =
        run_cli("run " + data_path("scenarios/boundary_leak.json"), true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("TruncationError") != std::string::npos);
}

TEST_CASE("run exit code follows failing checks") {
    const CliResult r = run_cli(
        "run " + data_path("scenarios/vacuum_tight_tol.json") + " --quiet");
    CHECK(r.exit_code == 1);
}

TEST_CASE("classical-limit goldens") {
    check_golden("classical-limit --kappa-max 2", "classical_limit.txt");
    check_golden("classical-limit --kappa-max 9/2 --format csv",
                 "classical_limit.csv");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("nonsense-subcommand", true).exit_code == 2);
    CHECK(run_cli("verify", true).exit_code == 2);
    CHECK(run_cli("verify --algebra nosuch --nmax 3", true).exit_code == 2);
    CHECK(run_cli("spectrum --algebra su2 --kappa 1", true).exit_code == 2);
    CHECK(run_cli("classical-limit --kappa-max 0", true).exit_code == 2);
    CHECK(run_cli("run", true).exit_code == 2);
}

TEST_CASE("--version prints the version banner") {
    const CliResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("qgame") != std::string::npos);
}
