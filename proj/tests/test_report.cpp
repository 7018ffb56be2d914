#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "congru/report.hpp"

using namespace congru;

namespace {

SweepResult small_sweep() {
    SweepConfig cfg;
    cfg.ids = {"2.1", "4.14", "3.1i"};
    cfg.pmax = 200;
    cfg.b_max = 5;
    return sweep(cfg);
}

}  // namespace

TEST(Report, JsonIsArrayOfRecordsThenSummary) {
    const auto res = small_sweep();
    std::ostringstream out, err;
    write_report(out, err, res, Format::Json, false);
    const auto j = nlohmann::ordered_json::parse(out.str());
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), res.records.size() + 1);
    const auto& last = j.back();
    ASSERT_TRUE(last.contains("summary"));
    EXPECT_FALSE(last["summary"].contains("wall_time"));
    EXPECT_EQ(last["summary"]["holds"], std::to_string(res.summary.holds));
    const std::vector<std::string> keys = {"id", "p", "params", "status", "branch", "lhs", "rhs", "modulus", "diagnostics"};
    for (size_t i = 0; i + 1 < j.size(); ++i) {
        std::vector<std::string> got;
        for (auto it = j[i].begin(); it != j[i].end(); ++it) got.push_back(it.key());
        EXPECT_EQ(got, keys);
        EXPECT_TRUE(j[i]["p"].is_string());
        EXPECT_TRUE(j[i]["modulus"].is_string());
    }
}

TEST(Report, TimingIsOptIn) {
    const auto res = small_sweep();
    std::ostringstream out, err;
    write_report(out, err, res, Format::Json, true);
    const auto j = nlohmann::ordered_json::parse(out.str());
    EXPECT_TRUE(j.back()["summary"].contains("wall_time"));
}

TEST(Report, CsvHeaderAndQuoting) {
    const auto res = small_sweep();
    std::ostringstream out, err;
    write_report(out, err, res, Format::Csv, false);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "id,p,params,status,branch,lhs,rhs,modulus,diagnostics");
    EXPECT_NE(err.str().find("summary: holds="), std::string::npos);

    SweepResult r;
    Verdict v;
    v.status = Status::Fails;
    v.diagnostics = "a, \"b\"";
    r.records.push_back({"x", 7, "b=1", v});
    std::ostringstream o2, e2;
    write_report(o2, e2, r, Format::Csv, false);
    EXPECT_NE(o2.str().find("\"a, \"\"b\"\"\""), std::string::npos);
}

TEST(Report, TsvHasNoEmbeddedTabs) {
    SweepResult r;
    Verdict v;
    v.diagnostics = "x\ty\nz";
    r.records.push_back({"x", 7, "", v});
    std::ostringstream out, err;
    write_report(out, err, r, Format::Tsv, false);
    std::istringstream in(out.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 8);
    }
    EXPECT_EQ(lines, 2);
}

TEST(Report, ParseFormat) {
    EXPECT_EQ(parse_format("tsv"), Format::Tsv);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}
