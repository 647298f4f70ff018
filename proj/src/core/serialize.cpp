#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace gamow {

namespace {

using nlohmann::json;

const char* tag_name(DomainTag tag) {
    switch (tag) {
        case DomainTag::TimeLine: return "time_line";
        case DomainTag::EnergyLine: return "energy_line";
        case DomainTag::PositiveEnergyHalfline: return "positive_energy_halfline";
        case DomainTag::PositionLine: return "position_line";
    }
    fail(Errc::InvalidArgument, "unknown domain tag");
}

DomainTag tag_from_name(const std::string& name) {
    if (name == "time_line") return DomainTag::TimeLine;
    if (name == "energy_line") return DomainTag::EnergyLine;
    if (name == "positive_energy_halfline") return DomainTag::PositiveEnergyHalfline;
    if (name == "position_line") return DomainTag::PositionLine;
    fail(Errc::ParseFailure, "unknown domain tag: " + name);
}

const char* status_name(SampleStatus s) {
    switch (s) {
        case SampleStatus::Ok: return "ok";
        case SampleStatus::Degenerate: return "degenerate";
        case SampleStatus::SkippedPole: return "skipped_pole";
        case SampleStatus::Divergent: return "divergent";
    }
    fail(Errc::InvalidArgument, "unknown sample status");
}

// JSON null for non-finite doubles; the grammar has no inf/nan tokens.
// Integral values get a ".0" suffix so readers take the floating-point
// path; an integer-typed parse of "-0" would drop the sign bit.
void put_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    std::string tok = format_double(v);
    if (tok.find_first_of(".e") == std::string::npos) tok += ".0";
    out += tok;
}

void put_array(std::string& out, const std::vector<double>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        put_number(out, xs[i]);
    }
    out += ']';
}

void put_complex(std::string& out, Complex z) {
    out += '[';
    put_number(out, z.real());
    out += ',';
    put_number(out, z.imag());
    out += ']';
}

double parse_field(const std::string& line, const char*& cursor, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(cursor, &end);
    if (end == cursor)
        fail(Errc::ParseFailure, std::string("bad ") + what + " field in row: " + line);
    cursor = end;
    while (*cursor == ' ' || *cursor == '\t') ++cursor;
    if (*cursor == ',') ++cursor;
    return v;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::ParseFailure, std::string(what) + ": malformed JSON");
    return j;
}

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        fail(Errc::ParseFailure, std::string("missing array: ") + key);
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) fail(Errc::ParseFailure, std::string("non-numeric entry in ") + key);
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const SampledFunction& f) {
    f.validate();
    std::string out;
    out.reserve(48 * f.size() + 64);
    out += "# domain: ";
    out += tag_name(f.tag);
    out += "\nabscissa,re,im\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out += format_double(f.grid[i]);
        out += ',';
        out += format_double(f.values[i].real());
        out += ',';
        out += format_double(f.values[i].imag());
        out += '\n';
    }
    return out;
}

SampledFunction sampled_from_csv(const std::string& text) {
    SampledFunction f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string key = "# domain: ";
            if (line.rfind(key, 0) == 0) f.tag = tag_from_name(line.substr(key.size()));
            continue;
        }
        if (line.rfind("abscissa", 0) == 0) continue;  // column header row
        const char* cursor = line.c_str();
        const double x = parse_field(line, cursor, "abscissa");
        const double re = parse_field(line, cursor, "re");
        const double im = parse_field(line, cursor, "im");
        f.grid.push_back(x);
        f.values.emplace_back(re, im);
    }
    f.validate();
    return f;
}

std::string to_json(const SampledFunction& f) {
    f.validate();
    std::string out;
    out.reserve(48 * f.size() + 64);
    out += "{\"grid\":";
    put_array(out, f.grid);
    out += ",\"re\":[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        put_number(out, f.values[i].real());
    }
    out += "],\"im\":[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        put_number(out, f.values[i].imag());
    }
    out += "],\"domainTag\":\"";
    out += tag_name(f.tag);
    out += "\"}";
    return out;
}

SampledFunction sampled_from_json(const std::string& text) {
    const json j = parse_json(text, "sampled function");
    if (!j.contains("domainTag") || !j["domainTag"].is_string())
        fail(Errc::ParseFailure, "missing domainTag");
    SampledFunction f;
    f.tag = tag_from_name(j["domainTag"].get<std::string>());
    f.grid = number_array(j, "grid");
    const std::vector<double> re = number_array(j, "re");
    const std::vector<double> im = number_array(j, "im");
    if (re.size() != f.grid.size() || im.size() != f.grid.size())
        fail(Errc::ParseFailure, "grid, re, im lengths differ");
    f.values.reserve(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) f.values.emplace_back(re[i], im[i]);
    f.validate();
    return f;
}

std::string to_json(const HardyReport& report) {
    std::string out = "{\"plane\":\"";
    out += (report.plane == HalfPlane::Upper) ? "upper" : "lower";
    out += "\",\"boundaryNormSq\":";
    put_number(out, report.boundaryNormSq);
    out += ",\"lines\":[";
    for (std::size_t i = 0; i < report.lines.size(); ++i) {
        const LineNorm& ln = report.lines[i];
        if (i) out += ',';
        out += "{\"y\":";
        put_number(out, ln.y);
        out += ",\"value\":";
        put_number(out, ln.divergent ? std::numeric_limits<double>::infinity() : ln.value);
        out += ",\"tailEstimate\":";
        put_number(out, ln.tailEstimate);
        out += ",\"divergent\":";
        out += ln.divergent ? "true" : "false";
        out += '}';
    }
    out += "],\"worstRatio\":";
    put_number(out, report.worstRatio);
    out += ",\"monotone\":";
    out += report.monotone ? "true" : "false";
    out += ",\"verdict\":\"";
    out += report.pass ? "PASS" : "FAIL";
    out += "\"}";
    return out;
}

std::string to_json(const EvolutionReport& report) {
    std::string out = "{\"sign\":";
    out += std::to_string(report.sign);
    out += ",\"tValues\":";
    put_array(out, report.tValues);
    out += ",\"ySamples\":";
    put_array(out, report.ySamples);
    out += ",\"lineNorms\":[";
    for (std::size_t i = 0; i < report.lineNorms.size(); ++i) {
        if (i) out += ',';
        put_array(out, report.lineNorms[i]);
    }
    out += "],\"verdicts\":[";
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        if (i) out += ',';
        out += report.verdicts[i] ? "\"PASS\"" : "\"FAIL\"";
    }
    out += "]}";
    return out;
}

std::string to_csv(const BoundReport& report) {
    std::string out;
    out.reserve(96 * report.samples.size() + 128);
    out += "# cEmpirical: ";
    out += format_double(report.cEmpirical);
    out += "\n# param holds r for kernel audits, s for ray profiles\n";
    out += "re_z,im_z,param,actual,bound,ratio\n";
    for (const BoundSample& s : report.samples) {
        out += format_double(s.z.real());
        out += ',';
        out += format_double(s.z.imag());
        out += ',';
        out += format_double(s.param);
        out += ',';
        out += format_double(s.actual);
        out += ',';
        out += format_double(s.bound);
        out += ',';
        out += format_double(s.ratio);
        out += '\n';
    }
    return out;
}

std::string to_json(const BoundReport& report) {
    std::string out = "{\"cEmpirical\":";
    put_number(out, report.cEmpirical);
    out += ",\"verdict\":";
    out += report.verdict ? "true" : "false";
    out += ",\"skipped\":";
    out += std::to_string(report.skipped);
    out += ",\"samples\":[";
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const BoundSample& s = report.samples[i];
        if (i) out += ',';
        out += "{\"z\":";
        put_complex(out, s.z);
        out += ",\"param\":";
        put_number(out, s.param);
        out += ",\"actual\":";
        put_number(out, s.actual);
        out += ",\"bound\":";
        put_number(out, s.bound);
        out += ",\"ratio\":";
        put_number(out, s.ratio);
        out += ",\"jostAbs\":";
        put_number(out, s.jostAbs);
        out += ",\"status\":\"";
        out += status_name(s.status);
        out += "\"}";
    }
    out += "]}";
    return out;
}

std::string to_json(const std::vector<GamowPole>& poles) {
    std::string out = "[";
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const GamowPole& p = poles[i];
        if (i) out += ',';
        out += "{\"k\":";
        put_complex(out, p.kPole);
        out += ",\"z\":";
        put_complex(out, p.zR);
        out += ",\"eR\":";
        put_number(out, p.eR);
        out += ",\"gamma\":";
        put_number(out, p.gamma);
        out += '}';
    }
    out += ']';
    return out;
}

}  // namespace gamow
