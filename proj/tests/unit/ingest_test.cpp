#include <gtest/gtest.h>

#include "comptest/error.hpp"
#include "comptest/ingest.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

namespace comptest {
namespace {

const std::string kStatusHeader =
    "status;method;attribut;var (x);nom;min;max;D 1;D 2;D 3\n";

template <typename F>
SheetError sheet_error(F&& f) {
  try {
    f();
  } catch (const SheetError& e) {
    return e;
  }
  ADD_FAILURE() << "no SheetError";
  return SheetError("", 0, "", "");
}

TEST(StatusSheet, HoRow) {
  const auto t = parse_status_sheet(kStatusHeader + "Ho;get u;u;UBATT;1;0,7;1,1;;;\n");
  ASSERT_EQ(t.rows.size(), 1u);
  const StatusDef& s = t.rows[0];
  EXPECT_EQ(s.status, "Ho");
  EXPECT_EQ(s.method, "get_u");
  EXPECT_EQ(s.attribut, "u");
  EXPECT_EQ(s.var_x, "UBATT");
  EXPECT_EQ(s.nom, CellValue{1.0});
  EXPECT_EQ(s.min, 0.7);
  EXPECT_EQ(s.max, 1.1);
  EXPECT_FALSE(s.d1 || s.d2 || s.d3);
  EXPECT_EQ(s.row, 2);
}

TEST(StatusSheet, ClosedRow) {
  const auto t =
      parse_status_sheet(kStatusHeader + "Closed;put r;r;;INF;;;INF;5000;5000\n");
  const StatusDef& s = t.rows.at(0);
  EXPECT_EQ(s.method, "put_r");
  EXPECT_EQ(s.nom, CellValue{OpenCircuit{}});
  EXPECT_EQ(s.d1, CellValue{OpenCircuit{}});
  EXPECT_EQ(s.d2, CellValue{5000.0});
  EXPECT_EQ(s.d3, CellValue{5000.0});
  EXPECT_FALSE(s.var_x);
}

TEST(StatusSheet, InfIsCaseInsensitiveAndBitsAreVerbatim) {
  const auto t = parse_status_sheet(kStatusHeader +
                                    "C;put r;r;;inf;;;;;\nOff;put can;data;;0001B;;;;;\n");
  EXPECT_EQ(t.rows[0].nom, CellValue{OpenCircuit{}});
  EXPECT_EQ(t.rows[1].nom, CellValue{BitLiteral{"0001B"}});
}

TEST(StatusSheet, NonNumericMinHasCoordinates) {
  const SheetError e = sheet_error(
      [] { parse_status_sheet(kStatusHeader + "Ok;get u;u;;1;0;1;;;\nBad;get u;u;;1;x7;;;;\n"); });
  EXPECT_EQ(e.sheet(), "statuses");
  EXPECT_EQ(e.row(), 3);
  EXPECT_EQ(e.column(), "min");
}

TEST(StatusSheet, DotInCommaDialectIsRejected) {
  const SheetError e =
      sheet_error([] { parse_status_sheet(kStatusHeader + "Lo;get u;u;;0;0;0.3;;;\n"); });
  EXPECT_EQ(e.column(), "max");
}

TEST(StatusSheet, StructuralErrors) {
  EXPECT_EQ(sheet_error([] { parse_status_sheet("status;method\nx;put r\n"); }).row(), 1);
  EXPECT_EQ(sheet_error([] { parse_status_sheet(""); }).row(), 1);
  EXPECT_EQ(sheet_error([] {
              parse_status_sheet(kStatusHeader + "A;put r;r;;1;;;;;\nA;put r;r;;2;;;;;\n");
            }).row(),
            3);
  EXPECT_EQ(sheet_error([] {
              parse_status_sheet(kStatusHeader + "A;put r;r;;1;;;;;;extra\n");
            }).column(),
            "#11");
}

TEST(TestSheet, ExampleRows) {
  const auto ex = fixtures::example();
  ASSERT_EQ(ex.test.steps.size(), 10u);
  const TestStep& s7 = ex.test.steps[7];
  EXPECT_EQ(s7.index, 7u);
  EXPECT_EQ(s7.dt, std::chrono::seconds{280});
  EXPECT_EQ(s7.assignments, (std::vector<Assignment>{{"INT_ILL", "Ho"}}));
  const TestStep& s0 = ex.test.steps[0];
  EXPECT_EQ(s0.dt, Duration{500'000});
  EXPECT_EQ(s0.assignments.size(), 5u);
  EXPECT_EQ(s0.remark, "day: no interior");
  EXPECT_EQ(ex.test.signal_columns,
            (std::vector<std::string>{"IGN_ST", "DS_FL", "DS_FR", "NIGHT", "INT_ILL"}));
}

TEST(TestSheet, NonConsecutiveIndex) {
  const SheetError e = sheet_error([] {
    parse_test_sheet("test step;dt;A\n0;1;x\n1;1;\n3;1;\n");
  });
  EXPECT_EQ(e.row(), 4);
  EXPECT_NE(std::string(e.what()).find("non-consecutive step index 3"),
            std::string::npos);
}

TEST(TestSheet, DtErrors) {
  EXPECT_EQ(sheet_error([] { parse_test_sheet("step;dt;A\n0;0;x\n"); }).column(), "dt");
  EXPECT_EQ(sheet_error([] { parse_test_sheet("step;dt;A\n0;;x\n"); }).column(), "dt");
  EXPECT_EQ(sheet_error([] { parse_test_sheet("step;dt;A\n0;-1;x\n"); }).column(), "dt");
}

TEST(SignalSheet, Rows) {
  const auto t = parse_signal_sheet(
      "name;direction;pins;initial_status\n"
      "INT_ILL;output;INT_ILL_F|INT_ILL_R;Lo\n"
      "DS_FL;input;DS_FL;Closed\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].pins, (std::vector<std::string>{"INT_ILL_F", "INT_ILL_R"}));
  EXPECT_EQ(t.rows[0].direction, Direction::output);
  EXPECT_EQ(t.rows[1].pins, std::vector<std::string>{"DS_FL"});
  EXPECT_EQ(t.rows[1].initial_status, "Closed");
}

TEST(SignalSheet, DuplicateNameIsAnError) {
  const SheetError e = sheet_error([] {
    parse_signal_sheet("name;direction;pins;initial_status\nA;in;P1;x\nA;in;P2;x\n");
  });
  EXPECT_EQ(e.row(), 3);
  EXPECT_EQ(e.column(), "name");
}

TEST(ResourceSheet, DecadeRow) {
  const auto t = parse_resource_sheet(
      "Res.;Method;Attribut;Min;Max;Unit\nRess2;put r;r;0;1,00E+06;Ω\n");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (ResourceDef{"Ress2", "put_r", "r", 0, 1e6, "Ω", 2}));
}

TEST(ResourceSheet, ExampleStand) {
  const auto ex = fixtures::example();
  ASSERT_EQ(ex.stand.resources.rows.size(), 3u);
  EXPECT_EQ(ex.stand.resources.rows[0].method, "get_u");
  EXPECT_EQ(ex.stand.resources.rows[0].min, -60);
  EXPECT_EQ(ex.stand.resources.rows[0].max, 60);
  EXPECT_EQ(ex.stand.resources.rows[2].max, 2e5);
}

TEST(ConnectionSheet, Cells) {
  const auto m = fixtures::example().stand.connections;
  auto c = m.find("Ress3", "DS_FL");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, ConnectorKind::mx);
  EXPECT_EQ(c->group, 1);
  EXPECT_EQ(c->position, 1);
  EXPECT_EQ(m.find("Ress1", "INT_ILL_F"), (Connector{ConnectorKind::sw, 1, 1}));
  EXPECT_FALSE(m.find("Ress1", "DS_FL"));
  EXPECT_FALSE(m.find("Ress9", "DS_FL"));
}

TEST(ConnectionSheet, BadConnector) {
  const SheetError e =
      sheet_error([] { parse_connection_sheet(";P1;P2\nR1;;Qx1.1\n"); });
  EXPECT_EQ(e.row(), 2);
  EXPECT_EQ(e.column(), "P2");
}

TEST(EnvFile, Parses) {
  const Env env = parse_env_file("# comment\nUBATT = 13.5\n\nvref=5 # trailing\n");
  EXPECT_EQ(env.lookup("ubatt"), 13.5);
  EXPECT_EQ(env.lookup("vref"), 5.0);
  EXPECT_THROW(parse_env_file("ubatt\n"), SheetError);
  EXPECT_THROW(parse_env_file("ubatt=12,0\n"), SheetError);
}

TEST(Dialect, Spec) {
  EXPECT_EQ(parse_dialect_spec(""), CsvDialect{});
  EXPECT_EQ(parse_dialect_spec("decimal=dot"), (CsvDialect{';', '.'}));
  EXPECT_EQ(parse_dialect_spec("field=,,decimal=."), CsvDialect::dot_decimal());
  EXPECT_EQ(parse_dialect_spec("field=comma,decimal=point"), CsvDialect::dot_decimal());
  EXPECT_EQ(parse_dialect_spec("field=tab"), (CsvDialect{'\t', ','}));
  EXPECT_THROW(parse_dialect_spec("decimal=;"), Error);
  EXPECT_THROW(parse_dialect_spec("sep=,"), Error);
  EXPECT_THROW(parse_dialect_spec("field"), Error);
}

TEST(Dialect, ExampleParsesIdentically) {
  const auto comma = fixtures::example();
  const auto dot = fixtures::example_dot_decimal();
  EXPECT_EQ(comma.signals, dot.signals);
  EXPECT_EQ(comma.statuses, dot.statuses);
  EXPECT_EQ(comma.test, dot.test);
  EXPECT_EQ(comma.stand.resources, dot.stand.resources);
  EXPECT_EQ(comma.stand.connections, dot.stand.connections);
}

TEST(Normalize, Methods) {
  EXPECT_EQ(normalize_method("put r"), "put_r");
  EXPECT_EQ(normalize_method(" Get  U "), "get_u");
  EXPECT_EQ(normalize_method("put_can"), "put_can");
}

const CsvDialect kDialects[] = {CsvDialect{}, CsvDialect::dot_decimal(),
                                CsvDialect{'\t', '.'}, CsvDialect{'|', ','}};

TEST(RoundTrip, GeneratedSheets) {
  gen::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    const gen::SheetSet s = gen::sheets(rng);
    for (const CsvDialect& d : kDialects) {
      const std::string st = serialize_status_sheet(s.statuses, d);
      const std::string si = serialize_signal_sheet(s.signals, d);
      const std::string te = serialize_test_sheet(s.test, d);
      ASSERT_EQ(parse_status_sheet(st, d), s.statuses) << st;
      ASSERT_EQ(parse_signal_sheet(si, d), s.signals) << si;
      ASSERT_EQ(parse_test_sheet(te, d, s.test.name), s.test) << te;
      // and text -> value -> text
      EXPECT_EQ(serialize_status_sheet(parse_status_sheet(st, d), d), st);
      EXPECT_EQ(serialize_test_sheet(parse_test_sheet(te, d), d), te);
    }
  }
}

TEST(RoundTrip, GeneratedStandSheets) {
  gen::Rng rng(32);
  for (int n = 0; n < 300; ++n) {
    const ResourceTable r = gen::resources(rng);
    const ConnectionMatrix m = gen::connections(rng, r);
    for (const CsvDialect& d : kDialects) {
      EXPECT_EQ(parse_resource_sheet(serialize_resource_sheet(r, d), d), r);
      EXPECT_EQ(parse_connection_sheet(serialize_connection_sheet(m, d), d), m);
    }
  }
}

TEST(RoundTrip, ExampleSheets) {
  const auto ex = fixtures::example();
  EXPECT_EQ(parse_status_sheet(serialize_status_sheet(ex.statuses)), ex.statuses);
  EXPECT_EQ(parse_signal_sheet(serialize_signal_sheet(ex.signals)), ex.signals);
  EXPECT_EQ(parse_test_sheet(serialize_test_sheet(ex.test), {}, ex.test.name), ex.test);
  EXPECT_EQ(serialize_connection_sheet(ex.stand.connections),
            fixtures::read_text(fixtures::data_path("interior_illumination/connections.csv")));
}

}  // namespace
}  // namespace comptest
