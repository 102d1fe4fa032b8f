#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdisc/cli/commands.hpp"
#include "qdisc/cli/figures.hpp"

using namespace qdisc::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"qdisc"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, BoundsJson) {
  const Result r = invoke({"bounds", "--nbar", "1", "--tau", "0.25", "--copies", "1", "--r", "1.0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["p_coh"].get<double>(), 0.264841, 1e-6);
  EXPECT_NEAR(j["p_quant_qcb"].get<double>(), 0.222222, 1e-6);
  EXPECT_NEAR(j["delta"].get<double>(), 0.042619, 1e-6);
  EXPECT_NEAR(j["h_quant"].get<double>(), 0.810930, 1e-6);
  EXPECT_NEAR(j["h_coh"].get<double>(), 0.25, 1e-12);
  EXPECT_EQ(j["h_quant_class"], "finite");
}

TEST(Cli, BoundsTransparentSample) {
  const Result r = invoke({"bounds", "--tau", "1", "--nbar", "1", "--copies", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["delta"].get<double>(), 0.0);
}

TEST(Cli, InfiniteSerializedAsString) {
  const Result r = invoke({"bounds", "--nbar", "1", "--tau", "0.25", "--r", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h_coh"], "inf");
  EXPECT_EQ(j["r_qhb"], "indeterminate");
}

TEST(Cli, TotalEnergySplitsOverCopies) {
  const Result r = invoke({"bounds", "--total-nbar", "2", "--copies", "4", "--tau", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["nbar"].get<double>(), 0.5);
  EXPECT_EQ(invoke({"bounds", "--total-nbar", "2", "--nbar", "1", "--copies", "4", "--tau", "0.5"}).code,
            kExitFailure);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--tau", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--tau", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--tau", "0.5", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"figure", "--figure-id", "gain-m1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(invoke({"figure", "--figure-id", "nope"}).code, kExitFailure);
  EXPECT_EQ(invoke({"figure", "--figure-id", "rate-ratio", "--out", "/nonexistent/dir/x.csv"}).code,
            kExitFailure);
}

TEST(Cli, FigureCsvShape) {
  const Result r = invoke({"figure", "--figure-id", "growth-time"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# qdisc 0.1.0", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# parameters:", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, "t,concentration,p_coh,p_epr_m1,p_epr_broadband");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 201);
}

TEST(Cli, FigureDeterministicToFile) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "qdisc_cli_a.csv").string();
  const auto b = (dir / "qdisc_cli_b.csv").string();
  ASSERT_EQ(invoke({"figure", "--figure-id", "qhb-ratio", "--out", a}).code, kExitOk);
  ASSERT_EQ(invoke({"figure", "--figure-id", "qhb-ratio", "--out", b}).code, kExitOk);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string ca = slurp(a);
  EXPECT_FALSE(ca.empty());
  EXPECT_EQ(ca, slurp(b));
  // evaluated at r = r_coh, so the coherent exponent is always finite
  EXPECT_EQ(ca.find("indeterminate"), std::string::npos);
  EXPECT_NE(ca.find("r_coh<r_quant"), std::string::npos);
  EXPECT_NE(ca.find("ignored"), std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, FigureJson) {
  const Result r = invoke({"figure", "--figure-id", "memory", "--panel", "b", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["columns"][0], "total_nbar");
  EXPECT_EQ(j["rows"].size(), 251u);
}

TEST(Cli, GrowthAndMemory) {
  const Result g = invoke({"growth", "--t-points", "11"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NE(g.out.find("t,concentration,tau,p_coh"), std::string::npos);
  const Result m = invoke({"memory", "--total-nbar", "5000", "--format", "json"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_GE(j["rows"][0][4].get<double>(), 0.99);
  EXPECT_LE(j["rows"][0][2].get<double>(), 0.02);
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(invoke({"validate", "--tau", "1"}).code, kExitOk);
  const Result small = invoke({"validate", "--cutoff", "5", "--nbar", "2"});
  EXPECT_EQ(small.code, kExitFailure);
  EXPECT_NE(small.out.find("FAILED cases"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "--nbar", "0.5", "1", "--cutoff", "40"}).code, kExitOk);
}

TEST(Figures, EveryIdRoundTrips) {
  for (FigureId id : all_figures()) {
    const auto parsed = parse_figure_id(figure_name(id));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, id);
    EXPECT_NO_THROW(default_figure_spec(id).validate());
  }
  EXPECT_FALSE(parse_figure_id("gain-m3").has_value());
}

TEST(Figures, QcbNonIncreasingInCopies) {
  FigureSpec spec = default_figure_spec(FigureId::qcb_vs_copies);
  const Table t = run_figure(spec);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (std::get<double>(t.rows[i][0]) != std::get<double>(t.rows[i - 1][0])) continue;
    EXPECT_LE(std::get<double>(t.rows[i][3]), std::get<double>(t.rows[i - 1][3]) + 1e-15);
  }
}
