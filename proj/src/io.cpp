#include "hh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "hh/errors.hpp"

namespace hh {

namespace {

[[noreturn]] void schema(const std::string& why) { throw Error(ErrorKind::Schema, why); }

void only_fields(const Json& obj, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) schema("unknown field '" + key + "' in " + std::string(where));
}

double number(const Json& v, std::string_view what) {
  if (!v.is_number()) schema(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) schema(std::string(what) + " must be finite");
  return d;
}

}  // namespace

FourierSymbol parse_symbol_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("symbol spec must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string()) schema("missing string field 'type'");
  const auto type = doc["type"].get<std::string>();

  if (type == "finite_band") {
    only_fields(doc, {"type", "coeffs", "tail_bound"}, "finite_band spec");
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) schema("'coeffs' must be an array");
    std::map<int, cplx> coeffs;
    for (const auto& c : doc["coeffs"]) {
      if (!c.is_object()) schema("each coefficient must be an object");
      only_fields(c, {"k", "re", "im"}, "coefficient");
      if (!c.contains("k") || !c["k"].is_number_integer()) schema("coefficient needs integer 'k'");
      const int k = c["k"].get<int>();
      const double re = c.contains("re") ? number(c["re"], "re") : 0.0;
      const double im = c.contains("im") ? number(c["im"], "im") : 0.0;
      if (coeffs.count(k)) schema("duplicate coefficient k=" + std::to_string(k));
      coeffs[k] = {re, im};
    }
    double tail = 0.0;
    if (doc.contains("tail_bound")) {
      if (!doc["tail_bound"].is_number()) schema("'tail_bound' must be a number");
      tail = doc["tail_bound"].get<double>();
      if (!(tail >= 0.0)) schema("'tail_bound' must be nonnegative");
    }
    return FourierSymbol(coeffs, tail);
  }
  if (type == "samples") {
    only_fields(doc, {"type", "values"}, "samples spec");
    if (!doc.contains("values") || !doc["values"].is_array()) schema("'values' must be an array");
    std::vector<cplx> values;
    for (const auto& v : doc["values"]) {
      if (!v.is_array() || v.size() != 2) schema("each sample must be a [re, im] pair");
      values.emplace_back(number(v[0], "sample re"), number(v[1], "sample im"));
    }
    return from_samples(values);
  }
  schema("unknown symbol type '" + type + "'");
}

FourierSymbol load_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open symbol file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_symbol_json(ss.str());
}

Json symbol_to_json(const FourierSymbol& phi) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : phi.coefficients()) coeffs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  Json j{{"type", "finite_band"}, {"coeffs", coeffs}};
  if (phi.tail_bound() != 0.0) j["tail_bound"] = phi.tail_bound();
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump(std::ostream& os, const Json& j, int indent, int level) {
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{' << nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(key).dump() << (indent > 0 ? ": " : ":");
        dump(os, value, indent, level + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << '[' << nl;
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        dump(os, value, indent, level + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) os << format_double(v);
      else os << '"' << format_double(v) << '"';
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  dump(os, j, indent, 0);
  return os.str();
}

void write_matrix_csv(std::ostream& os, const TruncatedMatrix& m) {
  os << "# dim=" << m.dim() << " provenance=" << m.provenance;
  if (m.exact_block) os << " exact_block=" << *m.exact_block;
  os << '\n';
  for (Index i = 0; i < m.dim(); ++i) {
    for (Index j = 0; j < m.dim(); ++j) {
      if (j > 0) os << ',';
      os << format_double(m.entries(i, j).real()) << ',' << format_double(m.entries(i, j).imag());
    }
    os << '\n';
  }
}

namespace {

void grid_header(std::ostream& os, const MultiplicityGrid& g) {
  const auto& b = g.grid;
  os << "# box=" << format_double(b.x0) << ',' << format_double(b.x1) << ',' << format_double(b.y0) << ','
     << format_double(b.y1) << " nx=" << b.nx << " ny=" << b.ny << " r=" << format_double(g.r)
     << " eps=" << format_double(g.eps) << " tail_bound=" << format_double(g.tail_bound)
     << " masked_area_fraction=" << format_double(g.masked_fraction()) << '\n';
}

}  // namespace

void write_grid_csv(std::ostream& os, const MultiplicityGrid& g) {
  grid_header(os, g);
  os << "x,y,value,valid\n";
  for (int j = 0; j < g.grid.ny; ++j)
    for (int i = 0; i < g.grid.nx; ++i) {
      const auto k = g.index(i, j);
      os << format_double(g.grid.x(i)) << ',' << format_double(g.grid.y(j)) << ',';
      if (g.valid[k]) os << g.values[k];
      os << ',' << int(g.valid[k]) << '\n';
    }
}

void write_density_csv(std::ostream& os, const MeasureDensity& d) {
  const auto& g = d.multiplicity;
  grid_header(os, g);
  os << "x,y,m,density_re,density_im,valid\n";
  for (int j = 0; j < g.grid.ny; ++j)
    for (int i = 0; i < g.grid.nx; ++i) {
      const auto k = g.index(i, j);
      const cplx v = d.raw_value(i, j);
      os << format_double(g.grid.x(i)) << ',' << format_double(g.grid.y(j)) << ',' << g.values[k] << ','
         << format_double(v.real() + 0.0) << ',' << format_double(v.imag() + 0.0) << ',' << int(g.valid[k])
         << '\n';
    }
}

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const GridSpec& g) {
  return Json{{"x0", g.x0}, {"x1", g.x1}, {"y0", g.y0}, {"y1", g.y1}, {"nx", g.nx}, {"ny", g.ny}};
}

Json to_json(const TraceFormulaReport& r) {
  return Json{{"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"abs_err", r.abs_err},
              {"quad_err", r.quad_err_estimate},
              {"N", r.truncation},
              {"grid", to_json(r.grid)},
              {"masked_area_fraction", r.masked_area_fraction},
              {"uncertified_area_fraction", r.uncertified_area_fraction},
              {"rhs_valid_only", to_json(r.rhs_valid_only)},
              {"r", r.r},
              {"tail_bound", r.tail_bound}};
}

Json to_json(const BesovReport& r) {
  return Json{{"p", r.p},
              {"seminorm_partial", r.seminorm_partial},
              {"basis", r.basis},
              {"abscissae", r.abscissae},
              {"trend", r.trend},
              {"verdict", std::string(to_string(r.verdict))},
              {"rule", r.rule}};
}

Json to_json(const ProbeTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json j{{"r", row.r},
           {"moment", to_json(row.moment)},
           {"lhs_smoothed", to_json(row.lhs_smoothed)},
           {"masked_area_fraction", row.masked_fraction}};
    j["difference"] = row.difference ? Json(*row.difference) : Json(nullptr);
    rows.push_back(std::move(j));
  }
  return Json{{"lhs", to_json(t.lhs)}, {"tail_bound", t.tail_bound}, {"rows", rows}};
}

}  // namespace hh
