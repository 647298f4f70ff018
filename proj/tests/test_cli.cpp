// End-to-end checks of the command-line driver: exit codes, file layout,
// header stamps, and byte-identical reruns.  The binary under test arrives
// as the first positional argument so the suite exercises exactly what the
// build produced.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cliPath;
fs::path workRoot;
int caseCounter = 0;

struct RunResult {
    int exitCode;
    std::string out;
    std::string err;
    fs::path dir;  // per-invocation output directory, already absolute
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the driver with --out pointing into a fresh directory.  Global
// flags go before the subcommand, as the usage line documents.
RunResult run_cli(const std::string& args, bool addOut = true) {
    RunResult r;
    r.dir = workRoot / ("case" + std::to_string(++caseCounter));
    fs::create_directories(r.dir);
    const fs::path outLog = r.dir / "stdout.log";
    const fs::path errLog = r.dir / "stderr.log";
    std::string cmd = cliPath;
    if (addOut) cmd += " --out " + (r.dir / "out").string();
    cmd += " " + args;
    cmd += " >" + outLog.string() + " 2>" + errLog.string();
    const int raw = std::system(cmd.c_str());
    r.exitCode = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(outLog);
    r.err = slurp(errLog);
    r.dir /= "out";
    return r;
}

// Splits a stamped CSV into data rows, checking the two-line stamp first.
std::vector<std::string> csv_rows(const std::string& text, const std::string& columns) {
    REQUIRE(text.rfind("# gamow 0.1.0\n# config ", 0) == 0);
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    bool sawColumns = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == columns && !sawColumns) {
            sawColumns = true;
            continue;
        }
        rows.push_back(line);
    }
    REQUIRE(sawColumns);
    return rows;
}

std::string config_stamp(const std::string& text) {
    const auto start = text.find("# config ");
    REQUIRE(start != std::string::npos);
    return text.substr(start + 9, 16);
}

nlohmann::json envelope_of(const fs::path& p) {
    const auto j = nlohmann::json::parse(slurp(p));
    REQUIRE(j["schemaVersion"].get<int>() == 1);
    REQUIRE(j["toolVersion"] == "0.1.0");
    REQUIRE(j["configHash"].is_string());
    REQUIRE(j["configHash"].get<std::string>().size() == 16);
    return j;
}

}  // namespace

TEST_CASE("usage errors exit 1 and help exits 0") {
    CHECK(run_cli("", false).exitCode == 1);
    CHECK(run_cli("--help", false).exitCode == 0);
    CHECK(run_cli("frobnicate", false).exitCode == 1);
    CHECK(run_cli("transform --sign 2").exitCode == 1);
    CHECK(run_cli("smatrix --emin 5 --emax 2").exitCode == 1);
    CHECK(run_cli("bounds --mode bogus").exitCode == 1);
    CHECK(run_cli("--threads 0 smatrix").exitCode == 1);
}

TEST_CASE("smatrix sweep writes a stamped unimodular table") {
    RunResult r = run_cli("smatrix");
    REQUIRE(r.exitCode == 0);
    CHECK(r.out.find("smatrix.csv") != std::string::npos);

    const std::string text = slurp(r.dir / "smatrix.csv");
    const auto rows = csv_rows(text, "E,re_s,im_s,abs_s,phase");
    REQUIRE(rows.size() == 1000);

    double firstE = 0.0, lastE = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double e, re, im, mag, phase;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf,%lf,%lf", &e, &re, &im, &mag,
                            &phase) == 5);
        if (i == 0) firstE = e;
        lastE = e;
        worst = std::max(worst, std::abs(mag - 1.0));
    }
    CHECK(firstE == 0.01);
    CHECK(lastE == 100.0);
    CHECK(worst < 1e-10);
}

TEST_CASE("identical invocations produce byte-identical files") {
    RunResult a = run_cli("smatrix --count 200 --poles");
    RunResult b = run_cli("smatrix --count 200 --poles");
    REQUIRE(a.exitCode == 0);
    REQUIRE(b.exitCode == 0);
    CHECK(slurp(a.dir / "smatrix.csv") == slurp(b.dir / "smatrix.csv"));
    CHECK(slurp(a.dir / "poles.json") == slurp(b.dir / "poles.json"));

    // the seed feeds the config hash, so it must change the stamp
    RunResult c = run_cli("--seed 7 smatrix --count 200");
    REQUIRE(c.exitCode == 0);
    CHECK(config_stamp(slurp(a.dir / "smatrix.csv")) !=
          config_stamp(slurp(c.dir / "smatrix.csv")));
}

TEST_CASE("poles subcommand reports the certified rectangle") {
    RunResult r = run_cli("poles --kmax 4 --kimag -1");
    REQUIRE(r.exitCode == 0);
    const auto j = envelope_of(r.dir / "poles.json");
    CHECK(j["data"]["winding"].get<int>() == 2);
    REQUIRE(j["data"]["poles"].size() == 2);
    CHECK(j["data"]["poles"][0]["gamma"].get<double>() == 2.5677304372756296);
    CHECK(j["data"]["poles"][1]["eR"].get<double>() > j["data"]["poles"][0]["eR"].get<double>());
}

TEST_CASE("wavefunction table carries the matched solution") {
    RunResult r = run_cli("wavefunction --kre 2 --kim 0");
    REQUIRE(r.exitCode == 0);
    const std::string text = slurp(r.dir / "wavefunction.csv");
    const auto rows = csv_rows(text, "r,re_chi,im_chi,re_dchi,im_dchi");
    CHECK(rows.size() == 1281);
    // node 64 of [0, 40] is r = 2 = b exactly; the frozen boundary value
    CHECK(rows[64].rfind("2,-0.62028460248449235,", 0) == 0);
}

TEST_CASE("transform subcommand reports unitarity defects") {
    RunResult r = run_cli("transform --profile gauss --sign -1");
    REQUIRE(r.exitCode == 0);
    CHECK(fs::exists(r.dir / "transform.csv"));
    CHECK(fs::exists(r.dir / "roundtrip.csv"));
    const auto j = envelope_of(r.dir / "transform.json");
    CHECK(j["data"]["sign"].get<int>() == -1);
    CHECK(j["data"]["profile"] == "gauss");
    CHECK(std::abs(j["data"]["normConstant"].get<double>() - 0.28209479177387814) < 1e-8);
    CHECK(j["data"]["parsevalDefect"].get<double>() < 1e-3);
    CHECK(j["data"]["roundtripError"].get<double>() < 1e-3);
}

TEST_CASE("hardy subcommand tags the analytic side of a bump") {
    RunResult r = run_cli("hardy");  // default bump lives in t < 0
    REQUIRE(r.exitCode == 0);
    CHECK(fs::exists(r.dir / "fhat.csv"));
    const auto j = envelope_of(r.dir / "hardy.json");
    CHECK(j["data"]["verdicts"]["upper"] == "PASS");
    CHECK(j["data"]["verdicts"]["lower"] == "FAIL");
    CHECK(j["data"]["upper"]["verdict"] == "PASS");
    CHECK(j["data"]["lower"]["verdict"] == "FAIL");
    CHECK(j["data"]["upper"]["lines"].size() == 5);
}

TEST_CASE("semigroup subcommand keeps forward times and rejects backward ones") {
    RunResult r = run_cli("semigroup --tlist -1,0,1");
    REQUIRE(r.exitCode == 0);
    const auto j = envelope_of(r.dir / "semigroup.json");
    CHECK(j["data"]["sign"].get<int>() == -1);
    REQUIRE(j["data"]["verdicts"].size() == 3);
    CHECK(j["data"]["verdicts"][0] == "FAIL");
    CHECK(j["data"]["verdicts"][1] == "PASS");
    CHECK(j["data"]["verdicts"][2] == "PASS");
}

TEST_CASE("bounds ray mode reproduces the frozen certified constant") {
    RunResult r = run_cli("bounds --mode ray");
    REQUIRE(r.exitCode == 0);
    const std::string csv = slurp(r.dir / "bounds.csv");
    CHECK(csv.find("re_z,im_z,param,actual,bound,ratio") != std::string::npos);
    const auto j = envelope_of(r.dir / "bounds.json");
    CHECK(j["data"]["verdict"] == true);
    CHECK(j["data"]["cEmpirical"].get<double>() == 0.012699567231928907);
    CHECK(j["data"]["samples"].size() == 7);
}

TEST_CASE("bounds kernel mode walks the full audit lattice") {
    RunResult r = run_cli("bounds --mode kernel");
    REQUIRE(r.exitCode == 0);
    const auto j = envelope_of(r.dir / "bounds.json");
    CHECK(j["data"]["verdict"] == true);
    CHECK(j["data"]["skipped"].get<int>() == 0);
    CHECK(j["data"]["cEmpirical"].get<double>() == 10.479347432732405);
    CHECK(j["data"]["samples"].size() == 470);
}

TEST_CASE("config files select the potential and reject typos") {
    const fs::path cfgDir = workRoot / "configs";
    fs::create_directories(cfgDir);

    const fs::path freeCfg = cfgDir / "free.cfg";
    std::ofstream(freeCfg) << "# no barrier at all\n[potential]\na = 1.0\nb = 2.0\nv0 = 0\n"
                           << "[tolerances]\nhardy = 1e-6  ; default anyway\n";
    RunResult r = run_cli("--config " + freeCfg.string() + " smatrix --count 100");
    REQUIRE(r.exitCode == 0);
    const auto rows = csv_rows(slurp(r.dir / "smatrix.csv"), "E,re_s,im_s,abs_s,phase");
    for (const std::string& row : rows) {
        double e, re, im;
        REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &e, &re, &im) == 3);
        CHECK(std::abs(re - 1.0) < 1e-12);  // free limit: S is exactly 1
        CHECK(std::abs(im) < 1e-12);
    }

    const fs::path typoCfg = cfgDir / "typo.cfg";
    std::ofstream(typoCfg) << "[potential]\nv_zero = 1\n";
    RunResult bad = run_cli("--config " + typoCfg.string() + " smatrix");
    CHECK(bad.exitCode == 1);
    CHECK(bad.err.find("unknown key") != std::string::npos);

    const fs::path negCfg = cfgDir / "neg.cfg";
    std::ofstream(negCfg) << "[potential]\nv0 = -2\n";
    CHECK(run_cli("--config " + negCfg.string() + " smatrix").exitCode == 1);

    CHECK(run_cli("--config " + (cfgDir / "missing.cfg").string() + " smatrix").exitCode == 1);
}

TEST_CASE("computation failures exit 2 with the library message") {
    RunResult r = run_cli("wavefunction --kre 0 --kim 0");
    CHECK(r.exitCode == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("rank deficient") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <gamow_cli binary> [doctest options]\n", argv[0]);
        return 1;
    }
    cliPath = argv[1];
    workRoot = fs::temp_directory_path() /
               ("gamow_cli_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::remove_all(workRoot);
    fs::create_directories(workRoot);

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    const int rc = ctx.run();
    fs::remove_all(workRoot);
    return rc;
}
