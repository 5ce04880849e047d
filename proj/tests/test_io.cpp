#include <limits>
#include <sstream>

#include "hh/io.hpp"
#include "support.hpp"

using namespace hh;

TEST(SymbolJson, FiniteBand) {
  const auto phi = parse_symbol_json(R"({"type":"finite_band","coeffs":[{"k":1,"re":1,"im":0},{"k":-2,"re":0.5,"im":-0.25}]})");
  EXPECT_EQ(phi.coeff(1), cplx(1.0));
  EXPECT_EQ(phi.coeff(-2), cplx(0.5, -0.25));
  EXPECT_EQ(phi.band(), 2);
  EXPECT_TRUE(phi.exact());
}

TEST(SymbolJson, TailBound) {
  auto phi = parse_symbol_json(R"({"type":"finite_band","coeffs":[{"k":1,"re":1}],"tail_bound":0.01})");
  EXPECT_EQ(phi.tail_bound(), 0.01);
  EXPECT_FALSE(phi.exact());
}

TEST(SymbolJson, Samples) {
  const auto phi = parse_symbol_json(R"({"type":"samples","values":[[3,0],[3,0],[3,0],[3,0]]})");
  EXPECT_NEAR(std::abs(phi.coeff(0) - 3.0), 0.0, 1e-15);
  EXPECT_EQ(phi.band(), 0);
  EXPECT_HH_ERROR(parse_symbol_json(R"({"type":"samples","values":[[1,0],[1,0],[1,0]]})"), ErrorKind::SampleCount);
}

TEST(SymbolJson, SchemaErrors) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"coeffs":[]})",
           R"({"type":"wavelet"})",
           R"({"type":"finite_band"})",
           R"({"type":"finite_band","coeffs":[],"extra":1})",
           R"({"type":"finite_band","coeffs":[{"k":1.5,"re":1}]})",
           R"({"type":"finite_band","coeffs":[{"k":1,"re":"x"}]})",
           R"({"type":"finite_band","coeffs":[{"k":1,"re":1,"phase":0}]})",
           R"({"type":"finite_band","coeffs":[{"k":1,"re":1},{"k":1,"re":2}]})",
           R"({"type":"finite_band","coeffs":[],"tail_bound":-1})",
           R"({"type":"samples","values":[[1,0,0],[1,0],[1,0],[1,0]]})",
           R"({"type":"samples","values":[[1,0],[1,0],[1,0],[1,0]],"rate":2})",
       })
    EXPECT_HH_ERROR(parse_symbol_json(bad), ErrorKind::Schema);
  EXPECT_HH_ERROR(load_symbol("/nonexistent/symbol.json"), ErrorKind::Io);
}

TEST(SymbolJson, RoundTrip) {
  const FourierSymbol phi({{1, cplx(0.1, 0.2)}, {-3, cplx(1.0 / 3.0, 0)}}, 0.5);
  const auto back = parse_symbol_json(dump_json(symbol_to_json(phi)));
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(back.coeff(k), phi.coeff(k));
  EXPECT_EQ(back.tail_bound(), 0.5);
}

TEST(Format, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(dump_json(Json{{"b", 0.1}, {"a", std::numeric_limits<double>::infinity()}, {"n", 3}}, 0),
            R"({"b":0.10000000000000001,"a":"inf","n":3})");
}

TEST(MatrixCsv, HeaderAndRows) {
  std::ostringstream os;
  write_matrix_csv(os, toeplitz_matrix(FourierSymbol({{1, cplx(1, -0.5)}}), 2));
  EXPECT_EQ(os.str(), "# dim=2 provenance=toeplitz exact_block=2\n0,0,0,0\n1,-0.5,0,0\n");
}

TEST(GridCsv, MaskedCellsHaveNoValue) {
  std::ostringstream os;
  const auto g = multiplicity_grid(hh::symbols::monomial(1), 1.0, GridSpec::square(1.0, 2));
  write_grid_csv(os, g);
  std::istringstream in(os.str());
  std::string header, columns, row;
  std::getline(in, header);
  std::getline(in, columns);
  EXPECT_EQ(header.rfind("# box=-1,1,-1,1 nx=2 ny=2", 0), 0u);
  EXPECT_EQ(columns, "x,y,value,valid");
  int rows = 0;
  while (std::getline(in, row)) {
    ++rows;
    const bool valid = row.back() == '1';
    EXPECT_EQ(row.rfind(valid ? ",1,1" : ",,0"), row.size() - (valid ? 4 : 3)) << row;
  }
  EXPECT_EQ(rows, 4);
  const auto d = hh_density(hh::symbols::monomial(1), 1.0, GridSpec::square(2.0, 4));
  std::ostringstream ds;
  write_density_csv(ds, d);
  EXPECT_NE(ds.str().find("x,y,m,density_re,density_im,valid\n"), std::string::npos);
  EXPECT_NE(ds.str().find("-0.5,-0.5,1,0,-0.15915494309189535,"), std::string::npos);
}

TEST(ReportJson, TraceReportKeys) {
  TraceFormulaReport r;
  r.lhs = {0, -0.5};
  r.truncation = 4;
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected{"lhs", "rhs", "abs_err", "quad_err", "N", "grid",
                                          "masked_area_fraction", "uncertified_area_fraction",
                                          "rhs_valid_only", "r", "tail_bound"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["lhs"]["im"].get<double>(), -0.5);
}
