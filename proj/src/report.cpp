#include "congru/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace congru {

namespace {

using nlohmann::ordered_json;

ordered_json opt_res(const std::optional<Residue>& v) {
    return v ? ordered_json(std::to_string(*v)) : ordered_json(nullptr);
}

ordered_json to_json(const SweepRecord& r, bool with_trace) {
    ordered_json j;
    j["id"] = r.id;
    j["p"] = std::to_string(r.p);
    j["params"] = r.params;
    j["status"] = status_name(r.verdict.status);
    j["branch"] = r.verdict.branch;
    j["lhs"] = opt_res(r.verdict.lhs);
    j["rhs"] = opt_res(r.verdict.rhs);
    j["modulus"] = std::to_string(r.verdict.modulus.m);
    j["diagnostics"] = r.verdict.diagnostics;
    if (with_trace) j["trace"] = r.verdict.trace;
    return j;
}

ordered_json summary_json(const SweepSummary& s, bool timing) {
    ordered_json j;
    j["holds"] = std::to_string(s.holds);
    j["fails"] = std::to_string(s.fails);
    j["notapplicable"] = std::to_string(s.notapplicable);
    j["anomalies"] = std::to_string(s.anomalies);
    if (timing) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << s.wall_time;
        j["wall_time"] = os.str();
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string tsv_field(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "tsv") return Format::Tsv;
    throw std::invalid_argument("unknown format: " + s);
}

std::string record_json(const SweepRecord& r, bool with_trace) { return to_json(r, with_trace).dump(2); }

std::string summary_line(const SweepSummary& s, bool timing) {
    std::ostringstream os;
    os << "summary: holds=" << s.holds << " fails=" << s.fails << " notapplicable=" << s.notapplicable
       << " anomalies=" << s.anomalies;
    if (timing) os << " wall_time=" << std::fixed << std::setprecision(3) << s.wall_time;
    return os.str();
}

void write_report(std::ostream& out, std::ostream& err, const SweepResult& res, Format f, bool timing) {
    if (f == Format::Json) {
        out << "[\n";
        for (const auto& r : res.records) out << "  " << to_json(r, false).dump() << ",\n";
        ordered_json s;
        s["summary"] = summary_json(res.summary, timing);
        out << "  " << s.dump() << "\n]\n";
        return;
    }
    const char sep = f == Format::Csv ? ',' : '\t';
    auto field = [&](const std::string& s) { return f == Format::Csv ? csv_field(s) : tsv_field(s); };
    auto opt = [](const std::optional<Residue>& v) { return v ? std::to_string(*v) : std::string(); };
    out << "id" << sep << "p" << sep << "params" << sep << "status" << sep << "branch" << sep << "lhs" << sep << "rhs"
        << sep << "modulus" << sep << "diagnostics\n";
    for (const auto& r : res.records) {
        out << field(r.id) << sep << r.p << sep << field(r.params) << sep << status_name(r.verdict.status) << sep
            << field(r.verdict.branch) << sep << opt(r.verdict.lhs) << sep << opt(r.verdict.rhs) << sep
            << r.verdict.modulus.m << sep << field(r.verdict.diagnostics) << "\n";
    }
    err << summary_line(res.summary, timing) << "\n";
}

}  // namespace congru
