#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Integration tests drive the installed binary through a shell, the same
// way a user would.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string read_all(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("cruxgeom_cli_out_" + std::to_string(++counter));
    const fs::path err = dir / ("cruxgeom_cli_err_" + std::to_string(counter));
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + CLI_BIN_PATH + " " +
                            args + " > " + out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_all(out);
    r.err = read_all(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

std::string strip_wall_time(std::string json) {
    return std::regex_replace(json, std::regex("\"wall_time_ms\": \\d+"),
                              "\"wall_time_ms\": 0");
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify --no-such-flag").code == 2);
    CHECK(run_cli("verify --trials 0").code == 2);
    CHECK(run_cli("area --format yaml").code == 2);
    CHECK(run_cli("area --px 2.0 --py 0").code == 2); // P outside the circle

    const RunResult over = run_cli("area --n 2 --theta 3.0");
    CHECK(over.code == 2);
    CHECK(over.err.find("--multiplicity") != std::string::npos);

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("area --help").code == 0);
}

TEST_CASE("verify is deterministic for a fixed seed and honors output redirection") {
    const RunResult a = run_cli("verify --trials 5 --seed 7");
    const RunResult b = run_cli("verify --trials 5 --seed 7");
    REQUIRE(a.code == 0);
    CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));

    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j.at("seed").get<std::uint64_t>() == 7);
    CHECK(j.at("checks").size() == 40);

    const fs::path report = fs::temp_directory_path() / "cruxgeom_cli_report.json";
    const RunResult c = run_cli("verify --trials 5 --seed 7 -o " + report.string());
    REQUIRE(c.code == 0);
    CHECK(c.out.empty());
    CHECK(strip_wall_time(read_all(report)) == strip_wall_time(a.out));
    fs::remove(report);
}

TEST_CASE("CRUX_SEED supplies the default seed and must be numeric") {
    const RunResult env = run_cli("verify --trials 2", "CRUX_SEED=99");
    const RunResult flag = run_cli("verify --trials 2 --seed 99");
    REQUIRE(env.code == 0);
    CHECK(strip_wall_time(env.out) == strip_wall_time(flag.out));

    // an explicit flag wins over the environment
    const RunResult both = run_cli("verify --trials 2 --seed 5", "CRUX_SEED=11");
    CHECK(nlohmann::json::parse(both.out).at("seed").get<std::uint64_t>() == 5);

    CHECK(run_cli("verify --trials 2", "CRUX_SEED=xyz").code == 2);
}

TEST_CASE("area reports all four oracles against the exact value") {
    const RunResult r =
        run_cli("area --px 0.5 --py 0 --n 2 --theta 0.3 --samples 20000 --seed 3");
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("exact").get<double>() == Catch::Approx(0.6).margin(1e-15));
    REQUIRE(j.at("estimates").size() == 4);
    CHECK(j.at("estimates").at(0).at("method").get<std::string>() == "exact");
    CHECK(j.at("estimates").at(1).at("method").get<std::string>() == "quadrature");
    CHECK(j.at("estimates").at(1).at("residual").get<double>() <= 1e-10);
    CHECK(j.at("estimates").at(2).at("method").get<std::string>() == "monte_carlo");
    CHECK(j.at("estimates").at(2).at("samples").get<long long>() == 20000);
    CHECK(j.at("estimates").at(3).at("method").get<std::string>() == "polygon");
}

TEST_CASE("area with zero rotation is all zeros") {
    const RunResult r = run_cli("area --px 0.4 --py 0.1 --n 3 --theta 0 --samples 5000");
    REQUIRE(r.code == 0);
    for (const auto& e : nlohmann::json::parse(r.out).at("estimates")) {
        CHECK(e.at("value").get<double>() == 0.0);
        CHECK(e.at("residual").get<double>() == 0.0);
    }
}

TEST_CASE("multiplicity mode measures overlapping sweeps") {
    const RunResult r = run_cli("area --px 0.5 --py 0 --n 2 --theta 3.0 --multiplicity");
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("exact").get<double>() == Catch::Approx(6.0).margin(1e-12));
    CHECK(j.at("multiplicity").get<bool>());
    // set-semantics oracles are omitted; the measure has no point-set region
    REQUIRE(j.at("estimates").size() == 2);
    CHECK(j.at("estimates").at(1).at("method").get<std::string>() == "quadrature");
    CHECK(j.at("estimates").at(1).at("residual").get<double>() <= 1e-9);
}

TEST_CASE("area emits CSV with a fixed header and row order") {
    const RunResult r =
        run_cli("area --px 0.3 --py 0.1 --n 3 --theta 20 --degrees --samples 5000 "
                "--seed 1 --format csv");
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "method,value,std_error,samples,residual");
    CHECK(lines[1].rfind("exact,", 0) == 0);
    CHECK(lines[2].rfind("quadrature,", 0) == 0);
    CHECK(lines[3].rfind("monte_carlo,", 0) == 0);
    CHECK(lines[4].rfind("polygon,", 0) == 0);

    // --degrees: 20 degrees of rotation, area = n theta = 3 * pi/9
    const double exact = std::stod(lines[1].substr(6));
    CHECK(exact == Catch::Approx(3.0 * 20.0 * std::numbers::pi / 180.0).margin(1e-12));
}

TEST_CASE("sweep grid demonstrates P-independence") {
    const RunResult r = run_cli("sweep --n 2 --theta 0.3");
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 129); // header + 8 radii x 16 angles
    CHECK(lines[0] == "p_x,p_y,n,theta,area_quadrature,abs_residual_vs_ntheta");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const double residual = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(residual <= 1e-8);
    }
}

TEST_CASE("one-point sweep grid at the center is exact to near machine precision") {
    const RunResult r = run_cli("sweep --n 4 --theta 0.2 --grid-radii 1 --grid-angles 1 "
                                "--grid-rmax 0");
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("0,0,4,", 0) == 0);
    CHECK(std::stod(lines[1].substr(lines[1].rfind(',') + 1)) <= 1e-12);
}

TEST_CASE("sweep at the tiling angle reports the disk area everywhere") {
    const RunResult r = run_cli("sweep --n 5 --theta 0.6283185307179586 --grid-radii 3 "
                                "--grid-angles 4");
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 13);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        std::string field;
        for (int f = 0; f < 5; ++f) std::getline(row, field, ',');
        CHECK(std::stod(field) == Catch::Approx(std::numbers::pi).margin(1e-8));
    }
}

TEST_CASE("render is byte-deterministic and respects --degrees") {
    const RunResult a = run_cli("render --px 0.35 --py 0.2 --n 2 --theta 0.4");
    const RunResult b = run_cli("render --px 0.35 --py 0.2 --n 2 --theta 0.4");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("<svg", 0) == 0);

    const RunResult deg = run_cli("render --px 0.1 --py 0 --n 2 --theta 90 --degrees");
    const RunResult rad = run_cli("render --px 0.1 --py 0 --n 2 --theta 1.5707963267948966");
    CHECK(deg.out == rad.out);
}

TEST_CASE("render reports filesystem failures with exit 1") {
    CHECK(run_cli("render --n 2 --theta 0.2 -o /nonexistent_dir_zz9/fig.svg").code == 1);
    CHECK(run_cli("render --n 2 --theta 9.9").code == 2); // theta out of range is usage
}
