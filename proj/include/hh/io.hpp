#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hh/besov.hpp"
#include "hh/degree.hpp"
#include "hh/measure.hpp"
#include "hh/operator.hpp"
#include "hh/symbol.hpp"

namespace hh {

using Json = nlohmann::ordered_json;

/// Symbol-spec document:
///   {"type":"finite_band","coeffs":[{"k":int,"re":float,"im":float},...], "tail_bound":float?}
///   {"type":"samples","values":[[re,im],...]}   (power-of-two length)
/// Unknown fields are rejected with a schema error.
FourierSymbol parse_symbol_json(std::string_view text);
FourierSymbol load_symbol(const std::string& path);
Json symbol_to_json(const FourierSymbol& phi);

/// %.17g, with non-finite values spelled "inf", "-inf", "nan" and both zeros as "0".
std::string format_double(double v);

/// Serializes with every floating value printed by format_double; keys keep insertion order.
std::string dump_json(const Json& j, int indent = 2);

/// Header "# dim=N provenance=TAG exact_block=B", then one row per matrix row
/// of comma-separated re,im pairs.
void write_matrix_csv(std::ostream& os, const TruncatedMatrix& m);

/// Header "# box=x0,x1,y0,y1 nx=.. ny=..", column line, then x,y,value,valid
/// per cell; masked cells leave value empty.
void write_grid_csv(std::ostream& os, const MultiplicityGrid& g);

/// Like write_grid_csv with the density (1/2pi i) m as extra columns.
void write_density_csv(std::ostream& os, const MeasureDensity& d);

Json to_json(cplx z);
Json to_json(const GridSpec& g);
Json to_json(const TraceFormulaReport& r);
Json to_json(const BesovReport& r);
Json to_json(const ProbeTable& t);

}  // namespace hh
