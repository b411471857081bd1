#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "config.hpp"
#include "table.hpp"

namespace qswitch::app {
namespace {

TEST(ParseNumber, DecimalsFractionsAndPi) {
  EXPECT_EQ(parse_number("0.25"), 0.25);
  EXPECT_EQ(parse_number("-1"), -1.0);
  EXPECT_DOUBLE_EQ(parse_number("1/3"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(parse_number("pi/90"), std::numbers::pi / 90.0);
  EXPECT_DOUBLE_EQ(parse_number("2pi/3"), 2.0 * std::numbers::pi / 3.0);
  EXPECT_DOUBLE_EQ(parse_number("2*pi"), 2.0 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_number(" 1e-3 "), 1e-3);
}

TEST(ParseNumber, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1/", "0.5x", "nan", "pie"}) {
    EXPECT_THROW(parse_number(bad), UsageError) << bad;
  }
}

TEST(ParseAlpha, ThreeValues) {
  const auto a = parse_alpha("-1,-1,0");
  EXPECT_EQ(a[0], -1.0);
  EXPECT_EQ(a[2], 0.0);
  EXPECT_THROW(parse_alpha("1,2"), UsageError);
  EXPECT_THROW(parse_alpha("1,2,3,4"), UsageError);
}

TEST(SteppedGrid, AppendsUpperEnd) {
  const auto g = stepped_grid(0.0, 1.0 / 3.0, 0.001);
  ASSERT_EQ(g.size(), 335u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_NEAR(g[333], 0.333, 1e-15);
  EXPECT_EQ(g.back(), 1.0 / 3.0);
  EXPECT_EQ(stepped_grid(0.0, 1.0, 0.25).size(), 5u);
  EXPECT_EQ(stepped_grid(0.2, 0.2, 0.1).size(), 1u);
  EXPECT_THROW(stepped_grid(0.0, 1.0, 0.0), UsageError);
}

TEST(Validate, RangeChecks) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.q = 1.5;
  EXPECT_THROW(validate(c), UsageError);
  c = {};
  c.p_max = 0.4;
  EXPECT_THROW(validate(c), UsageError);
  c = {};
  c.paths = 4;
  EXPECT_THROW(validate(c), UsageError);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(NAN), "");
}

TEST(Csv, QuotesAndCrlf) {
  Table t{"t", {"a", "b"}, {}};
  t.add_row({1.5, std::string("x,y")});
  t.add_row({Cell{}, std::string("say \"hi\"")});
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_EQ(out.str(), "a,b\r\n1.5,\"x,y\"\r\n,\"say \"\"hi\"\"\"\r\n");
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
}

TEST(Json, RoundTripsAndRoundsTo12Digits) {
  Table t{"t", {"x", "flag", "label", "missing"}, {}};
  t.add_row({1.0 / 3.0, true, std::string("plus"), Cell{}});
  std::ostringstream out;
  write_json(out, t);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["table"], "t");
  EXPECT_EQ(doc["rows"][0]["x"].get<double>(), 0.333333333333);
  EXPECT_EQ(doc["rows"][0]["flag"], true);
  EXPECT_TRUE(doc["rows"][0]["missing"].is_null());
  EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
}

}  // namespace
}  // namespace qswitch::app
