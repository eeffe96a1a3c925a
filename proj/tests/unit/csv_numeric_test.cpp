#include <gtest/gtest.h>

#include "comptest/csv.hpp"
#include "comptest/error.hpp"
#include "comptest/numeric.hpp"
#include "generators.hpp"

namespace comptest {
namespace {

TEST(Numeric, FormatsShortestFixed) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(5000), "5000");
  EXPECT_EQ(format_number(1e6), "1000000");
  EXPECT_EQ(format_number(0.7), "0.7");
  EXPECT_EQ(format_number(0.7, ','), "0,7");
  EXPECT_EQ(format_number(-2.5), "-2.5");
}

TEST(Numeric, ParsesBothDialects) {
  EXPECT_EQ(parse_number("0,7", ','), 0.7);
  EXPECT_EQ(parse_number("1,00E+06", ','), 1e6);
  EXPECT_EQ(parse_number("2,00E+05", ','), 2e5);
  EXPECT_EQ(parse_number("0.7", '.'), 0.7);
  EXPECT_EQ(parse_number("+3", '.'), 3.0);
  EXPECT_EQ(parse_number("-60", ','), -60.0);
}

TEST(Numeric, RejectsForeignSeparatorAndJunk) {
  EXPECT_FALSE(parse_number("0.7", ','));
  EXPECT_FALSE(parse_number("0,7", '.'));
  EXPECT_FALSE(parse_number("x7", ','));
  EXPECT_FALSE(parse_number("7x", ','));
  EXPECT_FALSE(parse_number("inf", '.'));
  EXPECT_FALSE(parse_number("nan", '.'));
  EXPECT_FALSE(parse_number("", '.'));
  EXPECT_FALSE(parse_number("1,000,0", ','));
}

TEST(Numeric, SecondsAreExact) {
  EXPECT_EQ(format_seconds(Duration{500'000}), "0.5");
  EXPECT_EQ(format_seconds(std::chrono::seconds{280}), "280");
  EXPECT_EQ(format_seconds(Duration{1}), "0.000001");
  EXPECT_EQ(format_seconds(Duration{308'500'000}, ','), "308,5");
  EXPECT_EQ(seconds_to_duration(0.1), Duration{100'000});
  EXPECT_EQ(seconds_to_duration(280), Duration{280'000'000});
  EXPECT_FALSE(seconds_to_duration(std::numeric_limits<double>::infinity()));
}

TEST(Numeric, FormatParseRoundTrip) {
  gen::Rng rng(7);
  std::uniform_real_distribution<double> any(-1e7, 1e7);
  for (int i = 0; i < 2000; ++i) {
    const double v = i % 2 ? any(rng) : gen::decimal(rng, -1e6, 1e6);
    EXPECT_EQ(parse_number(format_number(v, ','), ','), v);
    EXPECT_EQ(parse_number(format_number(v, '.'), '.'), v);
  }
}

TEST(Csv, SplitsAndUnquotes) {
  auto recs = read_csv("a;\"b;c\";\"say \"\"hi\"\"\"\r\n;\n", ';');
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0], (CsvRecord{"a", "b;c", "say \"hi\""}));
  EXPECT_EQ(recs[1], (CsvRecord{"", ""}));
}

TEST(Csv, KeepsBlankLinesAsRecords) {
  auto recs = read_csv("\xEF\xBB\xBFh\n\nx\n", ';');
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0], CsvRecord{"h"});
  EXPECT_EQ(recs[1], CsvRecord{""});
  EXPECT_EQ(recs[2], CsvRecord{"x"});
}

TEST(Csv, QuotedNewline) {
  auto recs = read_csv("\"a\nb\";c\n", ';');
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0], (CsvRecord{"a\nb", "c"}));
}

TEST(Csv, UnterminatedQuoteIsAnError) {
  EXPECT_THROW(read_csv("a;\"b\n", ';'), SheetError);
}

TEST(Csv, WriteReadRoundTrip) {
  std::vector<CsvRecord> recs{{"a", "b;c", " lead", "q\"q"},
                              {"", "line\nbreak", "x,y", ""}};
  for (char sep : {';', ','}) {
    EXPECT_EQ(read_csv(write_csv(recs, sep), sep), recs);
  }
}

TEST(Csv, DialectValidation) {
  EXPECT_NO_THROW(CsvDialect{}.validate());
  EXPECT_NO_THROW(CsvDialect::dot_decimal().validate());
  EXPECT_THROW((CsvDialect{',', ','}.validate()), Error);
  EXPECT_THROW((CsvDialect{'"', '.'}.validate()), Error);
}

}  // namespace
}  // namespace comptest
