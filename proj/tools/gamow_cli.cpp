// Command-line driver for the scattering library.  Every subcommand reads
// an optional "key = value" config file, computes through the C API only,
// and writes CSV/JSON files into the output directory.  Outputs are
// deterministic: the same config and seed produce byte-identical files,
// and each file carries the tool version plus a hash of the effective
// config so runs can be told apart after the fact.
//
// Exit codes: 0 success, 1 usage or config error, 2 computation error.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamow/gamow.h"

namespace {

namespace fs = std::filesystem;

struct CliError {
    int code;
    std::string message;
};

void check(gamow_status st) {
    if (st != GAMOW_OK) throw CliError{2, gamow_last_error()};
}

// Owning wrappers so error paths cannot leak C handles.
struct SampledDeleter {
    void operator()(gamow_sampled* p) const { gamow_sampled_destroy(p); }
};
struct PlanDeleter {
    void operator()(gamow_plan* p) const { gamow_plan_destroy(p); }
};
struct StringDeleter {
    void operator()(char* p) const { gamow_string_free(p); }
};
using SampledPtr = std::unique_ptr<gamow_sampled, SampledDeleter>;
using PlanPtr = std::unique_ptr<gamow_plan, PlanDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---- config ---------------------------------------------------------------

struct RunConfig {
    double a = 1.0, b = 2.0, v0 = 1.0;           // [potential]
    double rMax = 40.0, eMax = 400.0;            // [grids]
    std::size_t rPoints = 1281, ePoints = 1280;  // [grids]
    double hardy = 1e-6;                         // [tolerances]
    std::string dir = "out";                     // [output]
    unsigned long seed = 0;                      // [output]
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

double positive_double(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !(v > 0.0))
        throw CliError{1, "config line " + std::to_string(line) + ": " + key +
                              " must be a positive number, got '" + value + "'"};
    return v;
}

std::size_t positive_count(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || v == 0)
        throw CliError{1, "config line " + std::to_string(line) + ": " + key +
                              " must be a positive integer, got '" + value + "'"};
    return static_cast<std::size_t>(v);
}

// Flat "key = value" sections; unknown sections or keys are rejected so a
// typo cannot silently fall back to a default.
void parse_config(const std::string& text, RunConfig& cfg) {
    std::istringstream in(text);
    std::string line, section;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw CliError{1, "config line " + std::to_string(lineNo) + ": unclosed section"};
            section = trim(line.substr(1, line.size() - 2));
            if (section != "potential" && section != "grids" && section != "tolerances" &&
                section != "output")
                throw CliError{1, "config line " + std::to_string(lineNo) +
                                      ": unknown section [" + section + "]"};
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{1, "config line " + std::to_string(lineNo) + ": expected key = value"};
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section == "potential" && key == "a")
            cfg.a = positive_double(value, key, lineNo);
        else if (section == "potential" && key == "b")
            cfg.b = positive_double(value, key, lineNo);
        else if (section == "potential" && key == "v0") {
            // v0 = 0 is the free limit and legal; negative wells are not.
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0' || v < 0.0)
                throw CliError{1, "config line " + std::to_string(lineNo) +
                                      ": v0 must be a nonnegative number"};
            cfg.v0 = v;
        } else if (section == "grids" && key == "rMax")
            cfg.rMax = positive_double(value, key, lineNo);
        else if (section == "grids" && key == "eMax")
            cfg.eMax = positive_double(value, key, lineNo);
        else if (section == "grids" && key == "rPoints")
            cfg.rPoints = positive_count(value, key, lineNo);
        else if (section == "grids" && key == "ePoints")
            cfg.ePoints = positive_count(value, key, lineNo);
        else if (section == "tolerances" && key == "hardy")
            cfg.hardy = positive_double(value, key, lineNo);
        else if (section == "output" && key == "dir")
            cfg.dir = value;
        else if (section == "output" && key == "seed")
            cfg.seed = std::stoul(value);
        else
            throw CliError{1, "config line " + std::to_string(lineNo) + ": unknown key '" + key +
                                  "' in section [" + (section.empty() ? "<none>" : section) + "]"};
    }
}

// Canonical dump of everything that can influence file contents; the
// output directory is deliberately excluded.
std::string canonical_config(const RunConfig& cfg) {
    std::string s;
    s += "a=" + format17(cfg.a);
    s += ";b=" + format17(cfg.b);
    s += ";v0=" + format17(cfg.v0);
    s += ";rMax=" + format17(cfg.rMax);
    s += ";rPoints=" + std::to_string(cfg.rPoints);
    s += ";eMax=" + format17(cfg.eMax);
    s += ";ePoints=" + std::to_string(cfg.ePoints);
    s += ";hardy=" + format17(cfg.hardy);
    s += ";seed=" + std::to_string(cfg.seed);
    return s;
}

std::string config_hash(const RunConfig& cfg) {
    // FNV-1a, 64 bit
    const std::string dump = canonical_config(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- output helpers --------------------------------------------------------

std::string csv_header(const RunConfig& cfg) {
    return std::string("# gamow ") + GAMOW_VERSION_STRING + "\n# config " + config_hash(cfg) +
           "\n";
}

std::string envelope(const RunConfig& cfg, const std::string& dataJson) {
    return std::string("{\"schemaVersion\":1,\"toolVersion\":\"") + GAMOW_VERSION_STRING +
           "\",\"configHash\":\"" + config_hash(cfg) + "\",\"data\":" + dataJson + "}\n";
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{2, "cannot open " + path.string() + " for writing"};
    out << text;
    out.close();
    if (!out) throw CliError{2, "short write to " + path.string()};
    std::printf("wrote %s\n", path.string().c_str());
}

fs::path out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CliError{2, "cannot create output directory " + dir.string()};
    return dir;
}

gamow_potential potential(const RunConfig& cfg) { return {cfg.a, cfg.b, cfg.v0}; }

std::vector<double> uniform(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = hi;
    return g;
}

SampledPtr make_sampled(const std::vector<double>& grid, const std::vector<double>& re,
                        const std::vector<double>& im, gamow_domain domain) {
    gamow_sampled* raw = nullptr;
    check(gamow_sampled_create(grid.data(), re.data(), im.data(), grid.size(), domain, &raw));
    return SampledPtr(raw);
}

SampledPtr make_bump(double t0, double t1, int side, int degree, double freq) {
    const double lo = std::min(t0, -1.0) - 2.0;
    const double hi = std::max(t1, 1.0) + 2.0;
    const std::size_t n = static_cast<std::size_t>(std::lround((hi - lo) * 256.0)) + 1;
    const std::vector<double> grid = uniform(lo, hi, n);
    gamow_sampled* raw = nullptr;
    check(gamow_bump(t0, t1, side, degree, freq, grid.data(), grid.size(), &raw));
    return SampledPtr(raw);
}

std::string sampled_csv(const RunConfig& cfg, const gamow_sampled* f) {
    char* raw = nullptr;
    check(gamow_sampled_to_csv(f, &raw));
    StringPtr text(raw);
    return csv_header(cfg) + text.get();
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw CliError{1, "bad number in list: '" + item + "'"};
        out.push_back(v);
    }
    if (out.empty()) throw CliError{1, "empty value list"};
    return out;
}

// ---- subcommands ------------------------------------------------------------

struct SmatrixArgs {
    double eMin = 1e-2, eMax = 1e2;
    std::size_t count = 1000;
    bool linear = false;
    bool poles = false;
    double kMax = 4.0, kImMin = -1.0;
};

std::string poles_json(const RunConfig& cfg, double kMax, double kImMin) {
    const gamow_potential pot = potential(cfg);
    gamow_pole* poles = nullptr;
    size_t count = 0;
    long winding = 0;
    check(gamow_find_poles(&pot, kMax, kImMin, &poles, &count, &winding));
    std::unique_ptr<gamow_pole[]> owner(poles);
    char* listJson = nullptr;
    check(gamow_poles_to_json(poles, count, &listJson));
    StringPtr list(listJson);
    const std::string data =
        "{\"winding\":" + std::to_string(winding) + ",\"poles\":" + list.get() + "}";
    return envelope(cfg, data);
}

void cmd_smatrix(const RunConfig& cfg, const SmatrixArgs& args) {
    if (!(args.eMin > 0.0) || !(args.eMax > args.eMin))
        throw CliError{1, "need 0 < emin < emax"};
    if (args.count < 2) throw CliError{1, "need at least 2 energies"};
    const gamow_potential pot = potential(cfg);
    std::string csv = csv_header(cfg);
    csv += "E,re_s,im_s,abs_s,phase\n";
    for (std::size_t i = 0; i < args.count; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(args.count - 1);
        const double e = args.linear
                             ? args.eMin + (args.eMax - args.eMin) * frac
                             : args.eMin * std::pow(args.eMax / args.eMin, frac);
        double re = 0.0, im = 0.0;
        check(gamow_smatrix(&pot, e, &re, &im));
        csv += format17(e);
        csv += ',';
        csv += format17(re);
        csv += ',';
        csv += format17(im);
        csv += ',';
        csv += format17(std::hypot(re, im));
        csv += ',';
        csv += format17(std::atan2(im, re));
        csv += '\n';
    }
    const fs::path dir = out_dir(cfg);
    write_file(dir / "smatrix.csv", csv);
    if (args.poles) write_file(dir / "poles.json", poles_json(cfg, args.kMax, args.kImMin));
}

void cmd_poles(const RunConfig& cfg, double kMax, double kImMin) {
    write_file(out_dir(cfg) / "poles.json", poles_json(cfg, kMax, kImMin));
}

void cmd_wavefunction(const RunConfig& cfg, double kRe, double kIm) {
    const gamow_potential pot = potential(cfg);
    const std::size_t n = cfg.rPoints;
    const std::vector<double> r = uniform(0.0, cfg.rMax, n);
    std::vector<double> chiRe(n), chiIm(n), dchiRe(n), dchiIm(n);
    check(gamow_wavefunction(&pot, kRe, kIm, r.data(), n, chiRe.data(), chiIm.data(),
                             dchiRe.data(), dchiIm.data()));
    std::string csv = csv_header(cfg);
    csv += "r,re_chi,im_chi,re_dchi,im_dchi\n";
    for (std::size_t i = 0; i < n; ++i) {
        csv += format17(r[i]);
        csv += ',';
        csv += format17(chiRe[i]);
        csv += ',';
        csv += format17(chiIm[i]);
        csv += ',';
        csv += format17(dchiRe[i]);
        csv += ',';
        csv += format17(dchiIm[i]);
        csv += '\n';
    }
    write_file(out_dir(cfg) / "wavefunction.csv", csv);
}

void cmd_transform(const RunConfig& cfg, int sign, const std::string& profile) {
    const gamow_potential pot = potential(cfg);
    gamow_plan* rawPlan = nullptr;
    check(gamow_plan_create(&pot, sign, cfg.rMax, cfg.eMax, cfg.rPoints, cfg.ePoints,
                            &rawPlan));
    PlanPtr plan(rawPlan);

    const std::size_t nr = gamow_plan_r_points(plan.get());
    std::vector<double> r(nr), zeros(nr, 0.0), vals(nr);
    check(gamow_plan_grids(plan.get(), r.data(), nullptr));
    for (std::size_t i = 0; i < nr; ++i) {
        const double x = r[i];
        if (profile == "gauss")
            vals[i] = x * std::exp(-x * x);
        else if (profile == "ring")
            vals[i] = x * x * std::exp(-(x - 2.0) * (x - 2.0));
        else if (profile == "packet")
            vals[i] = x * std::cos(2.0 * x) * std::exp(-x * x / 4.0);
        else
            throw CliError{1, "unknown profile '" + profile + "' (gauss, ring, packet)"};
    }
    const SampledPtr f = make_sampled(r, vals, zeros, GAMOW_DOMAIN_POSITION);

    gamow_sampled* rawHat = nullptr;
    check(gamow_to_energy(plan.get(), f.get(), &rawHat));
    SampledPtr fhat(rawHat);
    gamow_sampled* rawBack = nullptr;
    check(gamow_to_position(plan.get(), fhat.get(), &rawBack));
    SampledPtr back(rawBack);

    double normF = 0.0, normHat = 0.0;
    check(gamow_norm_sq(plan.get(), f.get(), &normF));
    check(gamow_norm_sq(plan.get(), fhat.get(), &normHat));
    std::vector<double> backRe(nr), backIm(nr), diffRe(nr), diffIm(nr);
    check(gamow_sampled_copy(back.get(), nullptr, backRe.data(), backIm.data()));
    for (std::size_t i = 0; i < nr; ++i) {
        diffRe[i] = backRe[i] - vals[i];
        diffIm[i] = backIm[i];
    }
    const SampledPtr diff = make_sampled(r, diffRe, diffIm, GAMOW_DOMAIN_POSITION);
    double diffSq = 0.0;
    check(gamow_l2_norm_sq(diff.get(), &diffSq));

    const fs::path dir = out_dir(cfg);
    write_file(dir / "transform.csv", sampled_csv(cfg, fhat.get()));
    write_file(dir / "roundtrip.csv", sampled_csv(cfg, back.get()));
    const std::string data = "{\"sign\":" + std::to_string(sign) + ",\"profile\":\"" + profile +
                             "\",\"normConstant\":" +
                             format17(gamow_plan_norm_constant(plan.get())) +
                             ",\"parsevalDefect\":" +
                             format17(std::abs(normHat - normF) / normF) +
                             ",\"roundtripError\":" + format17(std::sqrt(diffSq / normF)) + "}";
    write_file(dir / "transform.json", envelope(cfg, data));
}

struct BumpArgs {
    int side = -1;
    double t0 = -2.6, t1 = -0.4;
    int degree = 0;
    double freq = 0.0;
};

void cmd_hardy(const RunConfig& cfg, const BumpArgs& bump) {
    const SampledPtr f = make_bump(bump.t0, bump.t1, bump.side, bump.degree, bump.freq);
    gamow_sampled* rawHat = nullptr;
    check(gamow_fourier(f.get(), &rawHat));
    SampledPtr fhat(rawHat);

    int passUpper = 0, passLower = 0;
    char* upperJson = nullptr;
    char* lowerJson = nullptr;
    check(gamow_is_hardy(fhat.get(), +1, cfg.hardy, &passUpper, &upperJson));
    StringPtr upper(upperJson);
    check(gamow_is_hardy(fhat.get(), -1, cfg.hardy, &passLower, &lowerJson));
    StringPtr lower(lowerJson);

    const fs::path dir = out_dir(cfg);
    write_file(dir / "fhat.csv", sampled_csv(cfg, fhat.get()));
    const std::string data = std::string("{\"verdicts\":{\"upper\":\"") +
                             (passUpper ? "PASS" : "FAIL") + "\",\"lower\":\"" +
                             (passLower ? "PASS" : "FAIL") + "\"},\"upper\":" + upper.get() +
                             ",\"lower\":" + lower.get() + "}";
    write_file(dir / "hardy.json", envelope(cfg, data));
}

void cmd_semigroup(const RunConfig& cfg, int sign, const std::string& tCsv,
                   const BumpArgs& bump) {
    const std::vector<double> tList = parse_list(tCsv);
    const SampledPtr f = make_bump(bump.t0, bump.t1, bump.side, bump.degree, bump.freq);
    gamow_sampled* rawHat = nullptr;
    check(gamow_fourier(f.get(), &rawHat));
    SampledPtr fhat(rawHat);

    char* reportJson = nullptr;
    check(gamow_semigroup(fhat.get(), sign, tList.data(), tList.size(), cfg.hardy,
                          &reportJson));
    StringPtr report(reportJson);

    write_file(out_dir(cfg) / "semigroup.json", envelope(cfg, report.get()));
}

struct BoundsArgs {
    std::string mode = "ray";
    double radius = 3.0, sharpness = 3.0;
    std::vector<double> origin{0.0, 0.0}, direction{-1.0, 0.0};
    std::string sValues = "1,2,5,10,20,50,100";
    int sheet = 2;
};

struct RayProfile {
    double radius;
    double sharpness;
};

extern "C" void bounds_profile(double r, void* ctx, double* re, double* im) {
    const RayProfile* p = static_cast<const RayProfile*>(ctx);
    *im = 0.0;
    *re = (r > 0.0 && r < p->radius)
              ? std::exp(-p->sharpness / (r * (p->radius - r)))
              : 0.0;
}

void cmd_bounds(const RunConfig& cfg, const BoundsArgs& args) {
    const gamow_potential pot = potential(cfg);
    const gamow_sheet sheet = args.sheet == 1 ? GAMOW_SHEET_FIRST : GAMOW_SHEET_SECOND;
    char* json = nullptr;
    char* csv = nullptr;
    if (args.mode == "ray") {
        const std::vector<double> sValues = parse_list(args.sValues);
        RayProfile profile{args.radius, args.sharpness};
        check(gamow_growth_profile(&pot, bounds_profile, &profile, args.radius,
                                   args.origin[0], args.origin[1], args.direction[0],
                                   args.direction[1], sheet, sValues.data(), sValues.size(),
                                   &json, &csv));
    } else if (args.mode == "kernel") {
        std::vector<double> zRe, zIm;
        for (double x : {-96.0, -64.0, -32.0, -16.0, -8.0, -4.0, -2.0, 2.0, 4.0, 8.0, 16.0,
                         32.0, 64.0, 96.0})
            for (double y : {-1.0, -2.0, -4.0, -8.0, -16.0, -32.0, -64.0}) {
                if (std::hypot(x, y) > 100.0) continue;
                zRe.push_back(x);
                zIm.push_back(y);
            }
        const std::vector<double> rList{0.0, 0.5, 1.5, 3.0, 10.0};
        check(gamow_kernel_bound_audit(&pot, zRe.data(), zIm.data(), zRe.size(), rList.data(),
                                       rList.size(), sheet, &json, &csv));
    } else {
        throw CliError{1, "unknown bounds mode '" + args.mode + "' (ray, kernel)"};
    }
    StringPtr jsonOwner(json), csvOwner(csv);
    const fs::path dir = out_dir(cfg);
    write_file(dir / "bounds.csv", csv_header(cfg) + csvOwner.get());
    write_file(dir / "bounds.json", envelope(cfg, jsonOwner.get()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shell-potential scattering workbench"};
    app.require_subcommand(1);

    std::string configPath, outOverride;
    unsigned long seedOverride = 0;
    bool seedSet = false, outSet = false;
    int threads = 1;
    app.add_option("--config", configPath, "key = value config file");
    app.add_option("--out", outOverride, "output directory (overrides config)")
        ->each([&](const std::string&) { outSet = true; });
    app.add_option("--seed", seedOverride, "seed recorded in the config hash")
        ->each([&](const std::string&) { seedSet = true; });
    app.add_option("--threads", threads, "worker threads (reserved; outputs do not depend on it)")
        ->check(CLI::PositiveNumber);

    SmatrixArgs smatrixArgs;
    CLI::App* smatrix = app.add_subcommand("smatrix", "S-matrix sweep over an energy range");
    smatrix->add_option("--emin", smatrixArgs.eMin, "lowest energy");
    smatrix->add_option("--emax", smatrixArgs.eMax, "highest energy");
    smatrix->add_option("--count", smatrixArgs.count, "number of energies");
    smatrix->add_flag("--linear", smatrixArgs.linear, "linear instead of log spacing");
    smatrix->add_flag("--poles", smatrixArgs.poles, "also write poles.json");
    smatrix->add_option("--kmax", smatrixArgs.kMax, "pole search: max Re k");
    smatrix->add_option("--kimag", smatrixArgs.kImMin, "pole search: min Im k (negative)");

    double polesKMax = 4.0, polesKImMin = -1.0;
    CLI::App* poles = app.add_subcommand("poles", "certified resonance pole search");
    poles->add_option("--kmax", polesKMax, "max Re k of the search rectangle");
    poles->add_option("--kimag", polesKImMin, "min Im k of the search rectangle (negative)");

    double waveKRe = 2.0, waveKIm = 0.0;
    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "matched solution at one complex momentum");
    wavefunction->add_option("--kre", waveKRe, "Re k");
    wavefunction->add_option("--kim", waveKIm, "Im k");

    int transformSign = +1;
    std::string transformProfile = "gauss";
    CLI::App* transform =
        app.add_subcommand("transform", "forward/inverse spectral transform of a profile");
    transform->add_option("--sign", transformSign, "ket family, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    transform->add_option("--profile", transformProfile, "gauss, ring, or packet");

    BumpArgs hardyBump;
    CLI::App* hardy = app.add_subcommand("hardy", "Paley-Wiener diagnostic of a bump transform");
    hardy->add_option("--side", hardyBump.side, "support side, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    hardy->add_option("--t0", hardyBump.t0, "support start");
    hardy->add_option("--t1", hardyBump.t1, "support end");
    hardy->add_option("--degree", hardyBump.degree, "polynomial modulation degree")
        ->check(CLI::NonNegativeNumber);
    hardy->add_option("--freq", hardyBump.freq, "phase frequency");

    int semigroupSign = -1;
    std::string semigroupT = "-1,0,1";
    BumpArgs semigroupBump;
    semigroupBump.side = +1;
    semigroupBump.t0 = 0.1;
    semigroupBump.t1 = 2.1;
    CLI::App* semigroup =
        app.add_subcommand("semigroup", "evolve and rerun the half-plane diagnostic");
    semigroup->add_option("--sign", semigroupSign, "evolution sign, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    semigroup->add_option("--tlist", semigroupT, "comma-separated times");
    semigroup->add_option("--t0", semigroupBump.t0, "bump support start");
    semigroup->add_option("--t1", semigroupBump.t1, "bump support end");
    semigroup->add_option("--degree", semigroupBump.degree, "polynomial modulation degree")
        ->check(CLI::NonNegativeNumber);
    semigroup->add_option("--freq", semigroupBump.freq, "phase frequency");

    BoundsArgs boundsArgs;
    CLI::App* bounds = app.add_subcommand("bounds", "bound audits for continued wavefunctions");
    bounds->add_option("--mode", boundsArgs.mode, "ray or kernel");
    bounds->add_option("--radius", boundsArgs.radius, "profile support radius");
    bounds->add_option("--sharpness", boundsArgs.sharpness, "profile edge sharpness");
    bounds->add_option("--origin", boundsArgs.origin, "ray origin (re im)")->expected(2);
    bounds->add_option("--direction", boundsArgs.direction, "ray direction (re im)")
        ->expected(2);
    bounds->add_option("--svalues", boundsArgs.sValues, "comma-separated ray parameters");
    bounds->add_option("--sheet", boundsArgs.sheet, "energy sheet, 1 or 2")
        ->check(CLI::IsMember({1, 2}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg;
        if (!configPath.empty()) {
            std::ifstream in(configPath, std::ios::binary);
            if (!in) throw CliError{1, "cannot read config file " + configPath};
            std::stringstream buf;
            buf << in.rdbuf();
            parse_config(buf.str(), cfg);
        }
        if (outSet) cfg.dir = outOverride;
        if (seedSet) cfg.seed = seedOverride;

        // The semigroup default bump must sit on the side its sign evolves.
        if (semigroup->parsed() && semigroupSign == +1 &&
            semigroup->count("--t0") == 0 && semigroup->count("--t1") == 0) {
            semigroupBump.side = -1;
            semigroupBump.t0 = -2.1;
            semigroupBump.t1 = -0.1;
        }
        if (semigroup->parsed())
            semigroupBump.side = semigroupBump.t0 < 0.0 ? -1 : +1;
        if (hardy->parsed() && hardy->count("--side") != 0 &&
            hardy->count("--t0") == 0 && hardy->count("--t1") == 0 && hardyBump.side == +1) {
            hardyBump.t0 = 0.4;
            hardyBump.t1 = 2.6;
        }

        if (smatrix->parsed())
            cmd_smatrix(cfg, smatrixArgs);
        else if (poles->parsed())
            cmd_poles(cfg, polesKMax, polesKImMin);
        else if (wavefunction->parsed())
            cmd_wavefunction(cfg, waveKRe, waveKIm);
        else if (transform->parsed())
            cmd_transform(cfg, transformSign, transformProfile);
        else if (hardy->parsed())
            cmd_hardy(cfg, hardyBump);
        else if (semigroup->parsed())
            cmd_semigroup(cfg, semigroupSign, semigroupT, semigroupBump);
        else if (bounds->parsed())
            cmd_bounds(cfg, boundsArgs);
        return 0;
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
