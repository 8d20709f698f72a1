#include "tcheeger/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = tcheeger::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::vector<double> csv_fields(const std::string& line) {
    std::vector<double> vals;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ','))
        vals.push_back(field.empty() ? std::nan("") : std::stod(field));
    return vals;
}

std::string read_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval: single point row with the reference profile value") {
    const RunResult r =
        run_cli({"eval", "--n", "3", "--q", "1.4", "--x", "1.0"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,q,x,f,dfdx,A,c");
    const auto v = csv_fields(lines[1]);
    REQUIRE(v.size() == 7);
    CHECK(v[0] == 3.0);
    CHECK(v[1] == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(v[3] == doctest::Approx(1.0197233945001714).epsilon(1e-15));
}

TEST_CASE("eval: out-of-window q exits 2 and names the bound") {
    const RunResult r = run_cli({"eval", "--n", "2", "--q", "2.0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n/(n-1)") != std::string::npos);
    CHECK(run_cli({"eval", "--n", "2", "--q", "0.5"}).code == 2);
    CHECK(run_cli({"eval", "--n", "1", "--q", "1.2"}).code == 2);
}

TEST_CASE("eval: --x with --steps is rejected, sweeps work") {
    CHECK(run_cli({"eval", "--n", "2", "--q", "1.5", "--x", "1", "--steps",
                   "10"})
              .code == 2);
    const RunResult sweep =
        run_cli({"eval", "--n", "2", "--q", "1.5", "--steps", "50"});
    REQUIRE(sweep.code == 0);
    CHECK(lines_of(sweep.out).size() == 51);

    const RunResult qsweep = run_cli({"eval", "--n", "2", "--q-min", "1.1",
                                      "--q-max", "1.9", "--steps", "5", "--x",
                                      "0.5"});
    REQUIRE(qsweep.code == 0);
    const auto lines = lines_of(qsweep.out);
    REQUIRE(lines.size() == 6);
    CHECK(csv_fields(lines[1])[1] == doctest::Approx(1.1));
    CHECK(csv_fields(lines[5])[1] == doctest::Approx(1.9));
    // A sweep touching the critical exponent clamps instead of failing.
    CHECK(run_cli({"eval", "--n", "2", "--q-min", "1.5", "--q-max", "2.5",
                   "--steps", "4", "--x", "1"})
              .code == 0);
}

TEST_CASE("eval: json format round-trips through a parser") {
    const RunResult r = run_cli(
        {"eval", "--n", "3", "--q", "1.4", "--x", "1.0", "--format", "json"});
    REQUIRE(r.code == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["n"] == 3);
    CHECK(double(arr[0]["f"]) == doctest::Approx(1.0197233945001714));
}

TEST_CASE("minimize: symmetric phase returns the equal-radii pair") {
    const RunResult r = run_cli({"minimize", "--n", "2", "--q", "1.5"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "n,q,x_star,f_star,r1,r2,J,tie");
    const auto v = csv_fields(lines[1]);
    CHECK(v[2] == 0.0);
    CHECK(v[3] == 1.0);
    CHECK(v[4] == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
    CHECK(v[5] == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
}

TEST_CASE("minimize: broken phase in json with the stationary structure") {
    const RunResult r = run_cli(
        {"minimize", "--n", "2", "--q", "1.9", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(double(j["x_star"]) == doctest::Approx(2.772522141203279));
    CHECK(double(j["f_star"]) == doctest::Approx(0.8663311100898213));
    CHECK(j["tie"].is_null());
    REQUIRE(j["stationary"].size() == 2);
    CHECK(j["stationary"][0]["kind"] == "maximum");
    CHECK(j["stationary"][1]["kind"] == "minimum");
    const double r1 = j["r1"], r2 = j["r2"];
    CHECK(r1 * r1 + r2 * r2 == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("threshold: closed-form n = 2 and bisection n = 3") {
    const RunResult r2 = run_cli({"threshold", "--n", "2", "--format", "json"});
    REQUIRE(r2.code == 0);
    const json j2 = json::parse(r2.out);
    CHECK(double(j2["q_tilde"]) == 1.75);
    CHECK(j2["iterations"] == 0);

    const RunResult r3 = run_cli({"threshold", "--n", "3"});
    REQUIRE(r3.code == 0);
    const auto v = csv_fields(lines_of(r3.out)[1]);
    CHECK(v[1] == doctest::Approx(1.442688952071).epsilon(1e-9));
    CHECK(v[5] == doctest::Approx(1.6025760511).epsilon(1e-6));
}

TEST_CASE("threshold: an impossible tie tolerance surfaces as exit 3") {
    const RunResult r =
        run_cli({"threshold", "--n", "3", "--tie-tol", "0.5"});
    CHECK(r.code == 3);
    CHECK(r.err.find("bracket") != std::string::npos);
}

TEST_CASE("config file supplies defaults, flags override, env var works") {
    const fs::path cfg = fs::temp_directory_path() / "tcheeger_test_cfg.txt";
    {
        std::ofstream os(cfg);
        os << "n=3\nq=1.443\n";
    }
    const RunResult r =
        run_cli({"minimize", "--config", cfg.string()});
    REQUIRE(r.code == 0);
    auto v = csv_fields(lines_of(r.out)[1]);
    CHECK(v[0] == 3.0);
    CHECK(v[1] == doctest::Approx(1.443).epsilon(1e-15));
    CHECK(v[2] > 1.5);  // 1.443 sits above the n = 3 threshold

    const RunResult over =
        run_cli({"minimize", "--config", cfg.string(), "--q", "1.3"});
    REQUIRE(over.code == 0);
    v = csv_fields(lines_of(over.out)[1]);
    CHECK(v[0] == 3.0);
    CHECK(v[1] == doctest::Approx(1.3));
    CHECK(v[2] == 0.0);

    ::setenv("TC_CONFIG", cfg.string().c_str(), 1);
    const RunResult env = run_cli({"minimize"});
    ::unsetenv("TC_CONFIG");
    REQUIRE(env.code == 0);
    CHECK(csv_fields(lines_of(env.out)[1])[0] == 3.0);
    fs::remove(cfg);
}

TEST_CASE("output files: written on success, exit 4 on unwritable paths") {
    const fs::path outp = fs::temp_directory_path() / "tcheeger_eval_out.csv";
    const RunResult ok = run_cli(
        {"eval", "--n", "2", "--q", "1.5", "--out", outp.string()});
    CHECK(ok.code == 0);
    CHECK(read_file(outp).rfind("n,q,x,f", 0) == 0);
    fs::remove(outp);

    const RunResult bad = run_cli({"eval", "--n", "2", "--q", "1.5", "--out",
                                   "/no_such_dir/sub/x.csv"});
    CHECK(bad.code == 4);
    CHECK(bad.err.find("cannot open") != std::string::npos);
}

TEST_CASE("verify: single claims, determinism, formats, unknown ids") {
    const RunResult r =
        run_cli({"verify", "--claim", "lemma33", "--seed", "7"});
    REQUIRE(r.code == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["claim_id"] == "lemma33");
    CHECK(arr[0]["passed"] == true);
    CHECK(arr[0]["counterexamples"].empty());

    const RunResult again =
        run_cli({"verify", "--claim", "lemma33", "--seed", "7"});
    CHECK(again.out == r.out);  // byte-identical reruns

    const RunResult csv = run_cli(
        {"verify", "--claim", "reduction", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(lines_of(csv.out)[0] == "claim_id,passed,params,details");

    const RunResult unknown = run_cli({"verify", "--claim", "bogus"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown claim") != std::string::npos);
}

TEST_CASE("figures: schemas, determinism, and curve shapes") {
    const fs::path dir = fs::temp_directory_path() / "tcheeger_test_figs";
    fs::create_directories(dir);
    const RunResult r =
        run_cli({"figures", "--out", dir.string(), "--steps", "160"});
    REQUIRE(r.code == 0);
    for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv"})
        CHECK(fs::exists(dir / name));

    const std::string fig1 = read_file(dir / "fig1.csv");
    CHECK(fig1.find('\r') == std::string::npos);  // LF endings only
    auto lines = lines_of(fig1);
    CHECK(lines[0] == "n,q,x,f");
    CHECK(lines.size() == 1 + 4 * 160);  // four exponents, 160 samples each
    // Sorted by (q, x); q = 1.5 block first, starting at x = 0, f = 1.
    auto v1 = csv_fields(lines[1]);
    CHECK(v1[0] == 2.0);
    CHECK(v1[1] == 1.5);
    CHECK(v1[2] == 0.0);
    CHECK(v1[3] == 1.0);
    // Flat bottom at or below 7/4: every f >= 1; double well beyond: some
    // f < 1 in the q = 1.9 block.
    bool dip_below = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto v = csv_fields(lines[i]);
        if (v[1] <= 1.75) CHECK(v[3] >= 1.0 - 1e-13);
        if (v[1] == 1.9 && v[3] < 1.0) dip_below = true;
    }
    CHECK(dip_below);

    // fig4: n = 3 minimiser curve jumps across the threshold on a fine grid.
    // Restrict the jump scan to a band around q~ = 1.4427: towards the
    // critical exponent the minimiser itself diverges, so coarse-grid
    // increments there are large but smooth.
    const auto flines = lines_of(read_file(dir / "fig4.csv"));
    CHECK(flines[0] == "n,q,xbar,fbar");
    double max_jump = 0.0, dq_at_jump = 1.0;
    for (std::size_t i = 2; i < flines.size(); ++i) {
        const auto a = csv_fields(flines[i - 1]);
        const auto b = csv_fields(flines[i]);
        CHECK(b[1] > a[1]);  // strictly sorted in q
        if (a[1] > 1.43 && b[1] < 1.456 && b[2] - a[2] > max_jump) {
            max_jump = b[2] - a[2];
            dq_at_jump = b[1] - a[1];
        }
    }
    CHECK(max_jump > 0.8);        // the n = 3 jump is ~1.6
    CHECK(dq_at_jump <= 3e-4);    // resolved by the refinement band

    // Byte-identical rerun.
    const std::string before = read_file(dir / "fig3.csv");
    REQUIRE(run_cli({"figures", "--out", dir.string(), "--steps", "160"})
                .code == 0);
    CHECK(read_file(dir / "fig3.csv") == before);

    // 17-significant-digit fields round-trip exactly.
    const auto sample = csv_fields(flines[5]);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", sample[3]);
    CHECK(std::stod(buf) == sample[3]);

    CHECK(run_cli({"figures", "--out", "/no_such_dir/x", "--steps", "8"})
              .code == 4);
    CHECK(run_cli({"figures", "--n", "2"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("help and missing subcommands map onto exit codes 0 and 2") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

}  // TEST_SUITE
