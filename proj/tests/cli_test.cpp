// Runs the built qswitch binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(QSWITCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Minimal RFC-4180 reader: CRLF records, quoted fields with "" escapes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(field);
      field.clear();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      record.push_back(field);
      records.push_back(record);
      record.clear();
      field.clear();
      ++i;
    } else {
      field += c;
    }
  }
  EXPECT_TRUE(field.empty() && record.empty()) << "last record not CRLF-terminated";
  return records;
}

// Header plus rows as column -> text maps; checks every row has full width.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};

Csv read_csv(const std::string& text) {
  const auto records = parse_csv(text);
  Csv csv;
  if (records.empty()) return csv;
  csv.header = records.front();
  for (std::size_t r = 1; r < records.size(); ++r) {
    EXPECT_EQ(records[r].size(), csv.header.size()) << "row " << r;
    std::map<std::string, std::string> row;
    for (std::size_t c = 0; c < records[r].size() && c < csv.header.size(); ++c) row[csv.header[c]] = records[r][c];
    csv.rows.push_back(row);
  }
  return csv;
}

double value(const std::map<std::string, std::string>& row, const std::string& column) {
  return std::stod(row.at(column));
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qswitch_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
  EXPECT_EQ(run("fidelity-curves --q 1.5").code, 1);
  EXPECT_EQ(run("fidelity-curves --p-max 0.5").code, 1);
  EXPECT_EQ(run("fidelity-curves --p-step 0").code, 1);
  EXPECT_EQ(run("fidelity-curves --format xml").code, 1);
  EXPECT_EQ(run("fidelity-curves --outcome sideways").code, 1);
  EXPECT_EQ(run("fidelity-curves --outcome custom").code, 1);
  EXPECT_EQ(run("three-path --alpha 1,2").code, 1);
  EXPECT_EQ(run("coherence-scan --paths 3").code, 1);
  EXPECT_EQ(run("fidelity-curves --out /nonexistent-dir/x.csv").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, FidelityCurvesRows) {
  const auto r = run("fidelity-curves");
  ASSERT_EQ(r.code, 0);
  const auto csv = read_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 335u);
  const auto& first = csv.rows.front();
  EXPECT_EQ(value(first, "F1"), 1.0);
  EXPECT_EQ(value(first, "F2"), 1.0);
  EXPECT_EQ(value(first, "F_switch"), 1.0);
  const auto& last = csv.rows.back();
  EXPECT_NEAR(value(last, "p"), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(value(last, "F_switch"), 1.0, 1e-10);
  EXPECT_NEAR(value(last, "success_probability"), 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(value(last, "classical_threshold"), 2.0 / 3.0, 1e-12);
}

TEST(Cli, FidelityCurvesAtTwoChannelThreshold) {
  const auto r = run("fidelity-curves --p-min 0.105662 --p-max 0.105662");
  ASSERT_EQ(r.code, 0);
  const auto csv = read_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_NEAR(value(csv.rows[0], "F2"), 2.0 / 3.0, 1e-6);
}

TEST(Cli, FidelityCurvesOtherOutcomes) {
  const auto minus = read_csv(run("fidelity-curves --outcome minus --p-step 1/30").out);
  // |-> at q = 1/2 sits at 1/3 once p > 0. At p = 0 it has probability 0
  // on a product state, so the system marginal (the input) is reported.
  EXPECT_EQ(value(minus.rows.front(), "F_switch"), 1.0);
  EXPECT_EQ(value(minus.rows.front(), "success_probability"), 0.0);
  EXPECT_NEAR(value(minus.rows[5], "F_switch"), 1.0 / 3.0, 1e-10);
  const auto custom = read_csv(run("fidelity-curves --outcome custom --lambda 1 --phi 0 --p-step 1/30").out);
  const auto plus = read_csv(run("fidelity-curves --p-step 1/30").out);
  ASSERT_EQ(custom.rows.size(), plus.rows.size());
  for (std::size_t i = 0; i < plus.rows.size(); ++i) {
    EXPECT_NEAR(value(custom.rows[i], "F_switch"), value(plus.rows[i], "F_switch"), 1e-11);
  }
}

TEST(Cli, RegionMapRows) {
  const auto surface = scratch("surface.csv");
  const auto r = run("region-map --surface-out " + surface.string() + " --p-step 1/30 --q-step 0.1");
  ASSERT_EQ(r.code, 0);
  const auto csv = read_csv(r.out);
  bool saw_threshold = false;
  bool saw_04 = false;
  for (const auto& row : csv.rows) {
    const double mu = value(row, "mu");
    if (std::abs(mu - 1.0 / 6.0) < 1e-11) {
      saw_threshold = true;
      EXPECT_EQ(row.at("region2_exists"), "false");
    }
    if (std::abs(mu - 0.4) < 1e-11) {
      saw_04 = true;
      EXPECT_EQ(row.at("region2_exists"), "true");
    }
    if (mu == 0.0) EXPECT_NEAR(value(row, "p_lo"), 0.105662, 1e-6);
  }
  EXPECT_TRUE(saw_threshold);
  EXPECT_TRUE(saw_04);
  const auto s = read_csv(slurp(surface));
  EXPECT_EQ(s.header, (std::vector<std::string>{"p", "q", "F"}));
  EXPECT_EQ(s.rows.size(), 11u * 11u);
}

TEST(Cli, FomScanArgmaxIsPlus) {
  const auto r = run("fom-scan");
  ASSERT_EQ(r.code, 0);
  const auto csv = read_csv(r.out);
  EXPECT_EQ(csv.rows.size(), 41u * 180u);
  int argmax_rows = 0;
  for (const auto& row : csv.rows) {
    if (row.at("argmax") == "true") {
      ++argmax_rows;
      EXPECT_EQ(value(row, "lambda"), 1.0);
      EXPECT_EQ(value(row, "phi"), 0.0);
    }
  }
  EXPECT_EQ(argmax_rows, 1);
}

TEST(Cli, TradeoffDefiniteOrderRowsCoincide) {
  const auto csv = read_csv(run("tradeoff --q-step 0.5").out);
  ASSERT_EQ(csv.rows.size(), 12u);
  for (const auto& row : csv.rows) {
    if (value(row, "q") != 1.0) continue;
    EXPECT_NEAR(value(row, "K"), 0.0160375074775, 1e-9);
    EXPECT_EQ(row.at("K_total"), csv.rows.back().at("K_total"));
  }
}

TEST(Cli, CoherenceScanZeroCoherence) {
  const auto csv = read_csv(run("coherence-scan --q-step 0.5 --lambda-step 0.5 --phi-step pi/4").out);
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(value(csv.rows.back(), "coherence"), 0.0);
  EXPECT_NEAR(value(csv.rows.back(), "K_optimal"), 0.016038, 1e-6);
  EXPECT_NEAR(value(csv.rows[1], "coherence"), 1.0, 1e-12);
}

TEST(Cli, ThreePathProfileAndScan) {
  const auto scan = scratch("scan.csv");
  const auto r = run("three-path --p-step 1/30 --lambda 1 --phi-step pi/90 --scan-out " + scan.string());
  ASSERT_EQ(r.code, 0);
  const auto csv = read_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 4u * 11u);
  for (const auto& row : csv.rows) {
    const double p = value(row, "p");
    EXPECT_NEAR(value(row, "F3_no_switch"), 0.5 + 0.5 * std::pow(1.0 - 4.0 * p, 3), 1e-11);
    if (row.at("alpha1") == "-1" && row.at("alpha3") == "-1") {
      if (std::abs(p - 1.0 / 3.0) < 1e-12) EXPECT_NEAR(value(row, "F"), 1.0, 1e-9);
      if (p == 0.0) EXPECT_EQ(row.at("annotation"), "from_marginal");
    }
  }
  const auto k = read_csv(slurp(scan));
  ASSERT_EQ(k.rows.size(), 180u);
  std::size_t best = 0;
  for (std::size_t i = 0; i < k.rows.size(); ++i) {
    if (value(k.rows[i], "K") > value(k.rows[best], "K")) best = i;
  }
  EXPECT_NEAR(value(k.rows[best], "phi"), M_PI / 12.0, M_PI / 36.0);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run("region-map --format json --mu-step 0.25");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["table"], "region-map");
  EXPECT_EQ(doc["rows"].size(), 4u);  // 0, 1/6, 0.25, 0.5
  EXPECT_EQ(doc["rows"][1]["region2_exists"], false);
  EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
}

TEST(Cli, ConfigFileAndPrecedence) {
  const auto config = scratch("run.toml");
  std::ofstream(config) << "q = 0.3\np-step = \"1/6\"\n";
  const auto from_file = read_csv(run("fidelity-curves --config " + config.string()).out);
  ASSERT_EQ(from_file.rows.size(), 3u);
  EXPECT_NEAR(value(from_file.rows[0], "success_probability"), 0.5 + std::sqrt(0.21), 1e-11);
  const auto overridden = read_csv(run("fidelity-curves --config " + config.string() + " --q 1/2").out);
  EXPECT_NEAR(value(overridden.rows[2], "F_switch"), 1.0, 1e-10);
}

TEST(Cli, DeterministicOutput) {
  EXPECT_EQ(run("tradeoff --q-step 0.25").out, run("tradeoff --q-step 0.25").out);
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  run("verify --seed 7 --out " + a.string());
  run("verify --seed 7 --out " + b.string());
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, VerifyReport) {
  const auto r = run("verify");
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GE(doc["checks"].size(), 12u);
  EXPECT_EQ(doc["seed"], 42);
  // Exit status follows the report.
  EXPECT_EQ(r.code, doc["all_passed"].get<bool>() ? 0 : 2);
  for (const auto& check : doc["checks"]) {
    EXPECT_TRUE(check.contains("id") && check.contains("passed") && check.contains("detail"));
  }
}

}  // namespace
