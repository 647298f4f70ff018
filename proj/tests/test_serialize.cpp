// Interchange tests: write-then-read must return the original bits, report
// writers must emit the documented shapes, and malformed input must raise
// parse errors instead of producing garbage samples.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include <json.hpp>

#include "core/serialize.hpp"

using namespace gamow;

namespace {

bool bits_equal(double a, double b) {
    std::uint64_t ua, ub;
    std::memcpy(&ua, &a, 8);
    std::memcpy(&ub, &b, 8);
    return ua == ub;
}

// an awkward-valued function: irrational nodes, negative zero, subnormal
SampledFunction awkward(DomainTag tag) {
    SampledFunction f;
    f.tag = tag;
    f.tail = {TailModel::Gaussian, 2.0};
    for (int i = 0; i < 20; ++i) {
        f.grid.push_back(-3.0 + 0.37 * i + 1e-3 * std::sin(i));
        f.values.emplace_back(std::cos(1.7 * i) / 3.0, std::sin(2.3 * i) / 7.0);
    }
    f.values[0] = Complex(-0.0, 1e-308);
    f.values[1] = Complex(6.62607015e-34, -4.0 / 3.0);
    return f;
}

bool same_bits(const SampledFunction& a, const SampledFunction& b) {
    if (a.tag != b.tag || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!bits_equal(a.grid[i], b.grid[i])) return false;
        if (!bits_equal(a.values[i].real(), b.values[i].real())) return false;
        if (!bits_equal(a.values[i].imag(), b.values[i].imag())) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("format_double renders doubles reversibly") {
    const double cases[] = {0.0,   -0.0,       1.0,       1.0 / 3.0, kPi,   std::exp(1.0),
                            0.1,   1e-308,     5e-324,    -1e308,    1e17,  123456789.123456789,
                            2.0 / 3.0, -7.25e-5, 4.9406564584124654e-310};
    for (double v : cases) {
        const double back = std::strtod(format_double(v).c_str(), nullptr);
        CHECK(bits_equal(back, v));
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv round trip preserves bits and domain tag") {
    for (DomainTag tag : {DomainTag::TimeLine, DomainTag::EnergyLine, DomainTag::PositionLine}) {
        const SampledFunction f = awkward(tag);
        const std::string text = to_csv(f);
        CHECK(text.rfind("# domain: ", 0) == 0);
        CHECK(text.find("abscissa,re,im\n") != std::string::npos);
        const SampledFunction g = sampled_from_csv(text);
        CHECK(same_bits(f, g));
        // tail model is advisory metadata and intentionally not round-tripped
        CHECK(g.tail.model == TailModel::Compact);
    }
}

TEST_CASE("csv reader tolerates CRLF, blanks, and stray comments") {
    std::string text = "# produced elsewhere\r\n# domain: energy_line\r\n\r\nabscissa,re,im\r\n";
    for (int i = 0; i < 16; ++i) {
        text += format_double(0.5 * i) + "," + format_double(1.0 / (i + 1)) + ",0\r\n";
    }
    const SampledFunction f = sampled_from_csv(text);
    CHECK(f.tag == DomainTag::EnergyLine);
    CHECK(f.size() == 16);
    CHECK(bits_equal(f.values[3].real(), 0.25));
}

TEST_CASE("json round trip preserves bits and domain tag") {
    const SampledFunction f = awkward(DomainTag::PositiveEnergyHalfline);
    const std::string text = to_json(f);
    const SampledFunction g = sampled_from_json(text);
    CHECK(same_bits(f, g));

    // the emitted text is itself valid JSON with the documented keys
    const auto j = nlohmann::json::parse(text);
    CHECK(j["domainTag"] == "positive_energy_halfline");
    CHECK(j["grid"].size() == f.size());
    CHECK(j["re"].size() == f.size());
    CHECK(j["im"].size() == f.size());
}

TEST_CASE("csv and json agree through a crossed round trip") {
    const SampledFunction f = awkward(DomainTag::TimeLine);
    const std::string csv1 = to_csv(f);
    const SampledFunction viaJson = sampled_from_json(to_json(sampled_from_csv(csv1)));
    CHECK(same_bits(f, viaJson));
    CHECK(to_csv(viaJson) == csv1);
}

TEST_CASE("malformed input raises parse errors") {
    CHECK_THROWS_AS(sampled_from_json("{\"grid\":[1,2]}"), Error);
    CHECK_THROWS_AS(sampled_from_json("{not json"), Error);
    CHECK_THROWS_AS(sampled_from_json("{\"domainTag\":\"time_line\",\"grid\":[1],\"re\":[1],"
                                      "\"im\":[\"zap\"]}"),
                    Error);
    CHECK_THROWS_AS(sampled_from_csv("# domain: time_line\n1,zap,0\n"), Error);
    CHECK_THROWS_AS(sampled_from_csv("# domain: moon_phase\n1,0,0\n"), Error);

    try {
        sampled_from_csv("# domain: time_line\n1,zap,0\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code == Errc::ParseFailure);
    }

    // structurally valid text that fails sample validation: unsorted grid
    std::string unsorted = "# domain: time_line\n";
    for (int i = 0; i < 16; ++i) unsorted += format_double(16.0 - i) + ",0,0\n";
    CHECK_THROWS_AS(sampled_from_csv(unsorted), Error);
}

TEST_CASE("hardy report json carries the documented shape") {
    HardyReport rep;
    rep.plane = HalfPlane::Upper;
    rep.boundaryNormSq = 1.25;
    rep.lines = {{0.25, 1.2, 1e-12, false}, {0.5, 0.0, 0.0, true}};
    rep.worstRatio = std::numeric_limits<double>::infinity();
    rep.monotone = false;
    rep.pass = false;

    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["plane"] == "upper");
    CHECK(j["boundaryNormSq"].get<double>() == 1.25);
    CHECK(j["lines"].size() == 2);
    CHECK(j["lines"][0]["y"].get<double>() == 0.25);
    CHECK(j["lines"][0]["divergent"] == false);
    // divergent lines and infinite ratios have no JSON number; they emit null
    CHECK(j["lines"][1]["value"].is_null());
    CHECK(j["lines"][1]["divergent"] == true);
    CHECK(j["worstRatio"].is_null());
    CHECK(j["verdict"] == "FAIL");
}

TEST_CASE("evolution report json emits null for diverged norms") {
    EvolutionReport rep;
    rep.sign = -1;
    rep.tValues = {0.0, -1.0};
    rep.ySamples = {0.25, 0.5};
    rep.lineNorms = {{1.0, 0.5}, {std::numeric_limits<double>::infinity(), 42.0}};
    rep.verdicts = {true, false};

    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["sign"].get<int>() == -1);
    CHECK(j["tValues"][1].get<double>() == -1.0);
    CHECK(j["lineNorms"][0][0].get<double>() == 1.0);
    CHECK(j["lineNorms"][1][0].is_null());
    CHECK(j["lineNorms"][1][1].get<double>() == 42.0);
    CHECK(j["verdicts"][0] == "PASS");
    CHECK(j["verdicts"][1] == "FAIL");
}

TEST_CASE("bound report writers expose every row in both formats") {
    BoundReport rep = kernel_bound_audit(PotentialSpec{}, {Complex(2.0, 0.0), Complex(4.0, -1.0)},
                                         {0.0, 1.5});
    REQUIRE(rep.samples.size() == 4);

    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("# cEmpirical: " + format_double(rep.cEmpirical), 0) == 0);
    CHECK(csv.find("re_z,im_z,param,actual,bound,ratio\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3 + 4);

    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(bits_equal(j["cEmpirical"].get<double>(), rep.cEmpirical));
    CHECK(j["verdict"] == true);
    CHECK(j["skipped"].get<int>() == 0);
    REQUIRE(j["samples"].size() == 4);
    CHECK(j["samples"][0]["status"] == "degenerate");  // r = 0 row
    CHECK(j["samples"][1]["status"] == "ok");
    CHECK(bits_equal(j["samples"][1]["actual"].get<double>(), rep.samples[1].actual));
    CHECK(bits_equal(j["samples"][3]["jostAbs"].get<double>(), rep.samples[3].jostAbs));
    CHECK(j["samples"][3]["z"][1].get<double>() == -1.0);
}

TEST_CASE("pole list json reproduces the certified values bit-for-bit") {
    PoleSearchReport pr = find_poles_certified(PotentialSpec{}, 0.0, 4.0, -1.0, 0.0);
    REQUIRE(pr.poles.size() == 2);
    const auto j = nlohmann::json::parse(to_json(pr.poles));
    REQUIRE(j.size() == 2);
    for (std::size_t i = 0; i < pr.poles.size(); ++i) {
        CHECK(bits_equal(j[i]["k"][0].get<double>(), pr.poles[i].kPole.real()));
        CHECK(bits_equal(j[i]["k"][1].get<double>(), pr.poles[i].kPole.imag()));
        CHECK(bits_equal(j[i]["z"][0].get<double>(), pr.poles[i].zR.real()));
        CHECK(bits_equal(j[i]["z"][1].get<double>(), pr.poles[i].zR.imag()));
        CHECK(bits_equal(j[i]["eR"].get<double>(), pr.poles[i].eR));
        CHECK(bits_equal(j[i]["gamma"].get<double>(), pr.poles[i].gamma));
    }
}
