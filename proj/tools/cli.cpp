#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hh/besov.hpp"
#include "hh/degree.hpp"
#include "hh/errors.hpp"
#include "hh/gallery.hpp"
#include "hh/io.hpp"
#include "hh/measure.hpp"
#include "hh/operator.hpp"
#include "hh/polynomial.hpp"
#include "hh/symbol.hpp"

namespace hh::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  std::string symbol_path;
  std::string grid_text;
  std::vector<double> r_list;
  long truncation = 0;
  std::optional<double> tol;
  std::string out_path;
  std::string format;
  std::string p_text = "poly:x";
  std::string q_text = "poly:y";
  std::vector<std::string> lambdas;
  double exponent = 2.0;
  std::optional<double> conjugate;
};

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::Range, why); }

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) invalid(std::string("cannot parse ") + what + " '" + text + "'");
    v.push_back(d);
  }
  if (v.size() != expected) invalid(std::string(what) + " needs " + std::to_string(expected) + " values");
  return v;
}

GridSpec parse_grid(const std::string& text) {
  const auto v = split_numbers(text, 6, "--grid");
  for (int i : {4, 5})
    if (v[i] != std::floor(v[i]) || v[i] < 1 || v[i] > 1e7) invalid("grid sizes must be positive integers");
  GridSpec g{v[0], v[1], v[2], v[3], static_cast<int>(v[4]), static_cast<int>(v[5])};
  g.validate();
  return g;
}

cplx parse_point(const std::string& text) {
  const auto v = split_numbers(text, 2, "--lambda");
  return {v[0], v[1]};
}

class Session {
 public:
  explicit Session(RunConfig cfg) : cfg_(std::move(cfg)) {}

  Json measure(std::ostream& csv) {
    const auto phi = symbol();
    const double r = single_r(phi);
    const auto d = hh_density(phi, r, grid(phi));
    if (csv_format("csv")) {
      write_density_csv(csv, d);
      return nullptr;
    }
    const auto tv = total_variation(d);
    return Json{{"r", r},
                {"grid", to_json(d.multiplicity.grid)},
                {"total_variation", tv.value},
                {"total_variation_valid_only", tv.valid_only},
                {"masked_area_fraction", tv.masked_area_fraction},
                {"uncertified_area_fraction", d.multiplicity.uncertified_fraction()},
                {"tail_bound", phi.tail_bound()}};
  }

  Json trace_check(std::ostream& csv, bool& failed) {
    const auto phi = symbol();
    const double r = single_r(phi);
    const auto p = BivariatePolynomial::parse(cfg_.p_text);
    const auto q = BivariatePolynomial::parse(cfg_.q_text);
    const auto report = trace_formula_check(phi, p, q, grid(phi), r);
    Json j = to_json(report);
    j["p"] = p.to_string();
    j["q"] = q.to_string();
    if (cfg_.truncation > 0) {
      // The report N is the operator-module bound; an override only enlarges it.
      const auto forced = commutator_trace(curve_symbol(phi, r), p, q, cfg_.truncation);
      j["N"] = forced.truncation;
      j["lhs"] = to_json(forced.value);
      j["abs_err"] = std::abs(forced.value - report.rhs);
    }
    if (cfg_.tol) {
      const bool pass = j["abs_err"].get<double>() <= *cfg_.tol;
      j["tol"] = *cfg_.tol;
      j["pass"] = pass;
      failed = !pass;
    }
    if (csv_format("json")) {
      csv << "# tail_bound=" << format_double(report.tail_bound)
          << " masked_area_fraction=" << format_double(report.masked_area_fraction) << '\n';
      csv << "lhs_re,lhs_im,rhs_re,rhs_im,abs_err,quad_err,N\n";
      csv << format_double(j["lhs"]["re"].get<double>()) << ',' << format_double(j["lhs"]["im"].get<double>())
          << ',' << format_double(report.rhs.real()) << ',' << format_double(report.rhs.imag()) << ','
          << format_double(j["abs_err"].get<double>()) << ',' << format_double(report.quad_err_estimate) << ','
          << j["N"].get<long>() << '\n';
      return nullptr;
    }
    return j;
  }

  Json winding_cmd(std::ostream& csv) {
    const auto phi = symbol();
    const double r = single_r(phi);
    if (cfg_.lambdas.empty()) {
      const auto m = multiplicity_grid(phi, r, grid(phi));
      if (csv_format("csv")) {
        write_grid_csv(csv, m);
        return nullptr;
      }
      Json values = Json::array();
      for (std::size_t k = 0; k < m.values.size(); ++k)
        values.push_back(m.valid[k] ? Json(m.values[k]) : Json(nullptr));
      return Json{{"r", r},
                  {"grid", to_json(m.grid)},
                  {"eps", m.eps},
                  {"tail_bound", m.tail_bound},
                  {"masked_area_fraction", m.masked_fraction()},
                  {"values", values}};
    }
    const auto curve = SampledCurve::of_symbol(phi, r);
    const double eps = cfg_.tol.value_or(1e-3);
    Json rows = Json::array();
    for (const auto& text : cfg_.lambdas) {
      const cplx lambda = parse_point(text);
      rows.push_back(Json{{"lambda", to_json(lambda)}, {"winding", winding(curve, lambda, eps)}});
    }
    if (csv_format("json")) {
      csv << "# tail_bound=" << format_double(phi.tail_bound()) << " masked_area_fraction=0\n";
      csv << "lambda_re,lambda_im,winding\n";
      for (const auto& row : rows)
        csv << format_double(row["lambda"]["re"].get<double>()) << ','
            << format_double(row["lambda"]["im"].get<double>()) << ',' << row["winding"].get<int>() << '\n';
      return nullptr;
    }
    return Json{{"r", r}, {"eps", eps}, {"tail_bound", phi.tail_bound()}, {"masked_area_fraction", 0.0},
                {"points", rows}};
  }

  Json index_cmd(std::ostream& csv, bool& failed) {
    const auto phi = symbol();
    const double r = single_r(phi);
    if (cfg_.lambdas.empty()) invalid("index-check needs at least one --lambda");
    const double eps = cfg_.tol.value_or(1e-3);
    Json rows = Json::array();
    for (const auto& text : cfg_.lambdas) {
      const cplx lambda = parse_point(text);
      const auto c = index_check(phi, lambda, r, eps);
      failed = failed || !c.ok;
      rows.push_back(Json{{"lambda", to_json(lambda)},
                          {"winding", c.wind},
                          {"index", -c.wind},
                          {"density", to_json(c.density_value)},
                          {"ok", c.ok}});
    }
    if (csv_format("json")) {
      csv << "# tail_bound=" << format_double(phi.tail_bound()) << " masked_area_fraction=0\n";
      csv << "lambda_re,lambda_im,winding,index,density_re,density_im,ok\n";
      for (const auto& row : rows)
        csv << format_double(row["lambda"]["re"].get<double>()) << ','
            << format_double(row["lambda"]["im"].get<double>()) << ',' << row["winding"].get<int>() << ','
            << row["index"].get<int>() << ',' << format_double(row["density"]["re"].get<double>()) << ','
            << format_double(row["density"]["im"].get<double>()) << ',' << int(row["ok"].get<bool>()) << '\n';
      return nullptr;
    }
    return Json{{"r", r}, {"eps", eps}, {"tail_bound", phi.tail_bound()}, {"masked_area_fraction", 0.0},
                {"points", rows}};
  }

  Json smooth_limit(std::ostream& csv) {
    const auto phi = symbol();
    std::vector<double> rs = cfg_.r_list.empty() ? std::vector<double>{0.9, 0.99, 0.999} : cfg_.r_list;
    for (double r : rs)
      if (!(r > 0.0 && r < 1.0)) invalid("smooth-limit radii must lie in (0,1)");
    const auto p = BivariatePolynomial::parse(cfg_.p_text);
    const auto q = BivariatePolynomial::parse(cfg_.q_text);
    const auto table = main_theorem_probe(phi, p, q, rs, grid(phi));
    if (csv_format("json")) {
      csv << "# tail_bound=" << format_double(table.tail_bound) << " lhs=" << format_double(table.lhs.real())
          << ',' << format_double(table.lhs.imag()) << '\n';
      csv << "r,moment_re,moment_im,lhs_smoothed_re,lhs_smoothed_im,difference,masked_area_fraction\n";
      for (const auto& row : table.rows)
        csv << format_double(row.r) << ',' << format_double(row.moment.real()) << ','
            << format_double(row.moment.imag()) << ',' << format_double(row.lhs_smoothed.real()) << ','
            << format_double(row.lhs_smoothed.imag()) << ',' << (row.difference ? format_double(*row.difference) : "")
            << ',' << format_double(row.masked_fraction) << '\n';
      return nullptr;
    }
    Json j = to_json(table);
    j["p"] = p.to_string();
    j["q"] = q.to_string();
    return j;
  }

  Json besov(std::ostream& csv) {
    const auto phi = symbol();
    Json j;
    if (cfg_.conjugate) {
      const auto s = almost_normal_sufficient(phi, cfg_.exponent, *cfg_.conjugate);
      j = Json{{"p", cfg_.exponent},
               {"q", *cfg_.conjugate},
               {"verdict", std::string(to_string(s.verdict))},
               {"real_part", membership_json(s.real_part)},
               {"imag_part", s.imag_bounded_only ? Json(nullptr) : membership_json(s.imag_part)},
               {"tail_bound", phi.tail_bound()}};
    } else {
      j = membership_json(besov_membership(phi, cfg_.exponent));
      j["tail_bound"] = phi.tail_bound();
    }
    if (csv_format("json")) {
      csv << "# tail_bound=" << format_double(phi.tail_bound()) << '\n';
      csv << "part,half,p,seminorm_partial,verdict,rule\n";
      auto emit = [&](const std::string& part, const Json& m) {
        for (const char* half : {"f", "g"}) {
          const auto& r = m[half];
          csv << part << ',' << half << ',' << format_double(r["p"].get<double>()) << ','
              << format_double(r["seminorm_partial"].get<double>()) << ',' << r["verdict"].get<std::string>()
              << ',' << r["rule"].get<std::string>() << '\n';
        }
      };
      if (cfg_.conjugate) {
        emit("real", j["real_part"]);
        if (!j["imag_part"].is_null()) emit("imag", j["imag_part"]);
      } else {
        emit("symbol", j);
      }
      return nullptr;
    }
    return j;
  }

  Json gallery(std::ostream& csv) {
    Json rows = Json::array();
    auto row = [&](const std::string& name, const std::string& parameter, double computed,
                   std::optional<double> closed, const std::string& note) {
      rows.push_back(Json{{"case", name},
                          {"parameter", parameter},
                          {"computed", computed},
                          {"closed_form", closed ? Json(*closed) : Json(nullptr)},
                          {"note", note}});
    };

    // Finite-rank Hilbert-Schmidt operator: the tail commutator vanishes once n reaches the rank.
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int k = i; k < 6; ++k) t(i, k) = 1.0 / (i + 2.0 * k + 1.0);
    const auto tails = hilbert_schmidt_tail_norms(t);
    for (std::size_t n = 0; n < tails.size(); n += 3)
      row("hilbert_schmidt_tail", "n=" + std::to_string(n), tails[n],
          n + 1 == tails.size() ? std::optional<double>(0.0) : std::nullopt, "6x6 upper-triangular matrix");

    for (int n : {64, 128, 256}) {
      const auto c = cesaro_commutator(n);
      row("cesaro_trace_partial", "N=" + std::to_string(n), c.trace_partial, std::nullopt,
          c.psd_check ? "psd" : "not psd");
    }

    const auto jump = WeightedShiftSpec::single_jump(0.5, 1.0);
    row("weighted_shift_total_variation", "alpha=0.5;1", schatten_norm(shift_self_commutator(jump, -3, 3), 1.0) / 2,
        shift_hh_total_variation(jump), "trace norm of [W*,W] over 2");
    const WeightedShiftSpec bumpy(2, {0.7, 0.2, 0.9, 0.4, 1.3}, 0.5, 1.0);
    for (int k : {2, 4, 8}) {
      const auto pn = perturbation_family_norm(bumpy, k);
      row("weighted_shift_perturbation", "k=" + std::to_string(k), pn.matrix_value, pn.closed_form,
          "windowed matrix vs closed form");
    }
    row("weighted_shift_perturbation_limit", "k->inf", perturbation_family_norm(bumpy, 64).matrix_value,
        2 * shift_hh_total_variation(bumpy), "equals 2 ||P_W||");

    if (csv_format("json")) {
      csv << "case,parameter,computed,closed_form,note\n";
      for (const auto& r : rows)
        csv << r["case"].get<std::string>() << ',' << r["parameter"].get<std::string>() << ','
            << format_double(r["computed"].get<double>()) << ','
            << (r["closed_form"].is_null() ? "" : format_double(r["closed_form"].get<double>())) << ','
            << r["note"].get<std::string>() << '\n';
      return nullptr;
    }
    return Json{{"rows", rows}};
  }

 private:
  static Json membership_json(const BesovMembership& m) {
    return Json{{"f", to_json(m.f_report)}, {"g", to_json(m.g_report)}};
  }

  bool csv_format(const char* fallback) const { return (cfg_.format.empty() ? fallback : cfg_.format) == "csv"; }

  FourierSymbol symbol() const {
    if (cfg_.symbol_path.empty()) invalid(cfg_.subcommand + " needs --symbol");
    return load_symbol(cfg_.symbol_path);
  }

  double single_r(const FourierSymbol& phi) const {
    if (cfg_.r_list.size() > 1) invalid(cfg_.subcommand + " takes a single --r");
    const double r = cfg_.r_list.empty() ? (phi.exact() ? 1.0 : 0.999) : cfg_.r_list.front();
    if (!(r > 0.0 && r <= 1.0)) invalid("r must lie in (0,1]");
    return r;
  }

  GridSpec grid(const FourierSymbol& phi) const {
    return cfg_.grid_text.empty() ? default_box(phi) : parse_grid(cfg_.grid_text);
  }

  RunConfig cfg_;
};

void diagnostic(std::ostream& err, const std::string& error, const std::string& kind, const std::string& message) {
  err << dump_json(Json{{"error", error}, {"kind", kind}, {"message", message}}, 0) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Helton-Howe measures of Toeplitz operators", "hhm"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool symbol) {
    if (symbol) sub->add_option("--symbol", cfg.symbol_path, "symbol spec JSON")->required();
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto grid_opts = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid_text, "x0,x1,y0,y1,nx,ny");
    sub->add_option("--r", cfg.r_list, "smoothing radius in (0,1]");
  };
  auto poly_opts = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p_text, "test polynomial, e.g. poly:x^2*y+3*x");
    sub->add_option("--q", cfg.q_text, "test polynomial");
  };

  auto* measure = app.add_subcommand("measure", "Helton-Howe density on a grid");
  common(measure, true);
  grid_opts(measure);

  auto* trace = app.add_subcommand("trace-check", "compare tr[p,q] with the measure integral");
  common(trace, true);
  grid_opts(trace);
  poly_opts(trace);
  trace->add_option("--N", cfg.truncation, "minimum truncation size")->check(CLI::NonNegativeNumber);
  trace->add_option("--tol", cfg.tol, "fail (exit 3) when abs_err exceeds this");

  auto* wind = app.add_subcommand("winding", "multiplicity grid or winding numbers at points");
  common(wind, true);
  grid_opts(wind);
  wind->add_option("--lambda", cfg.lambdas, "point re,im (repeatable)");
  wind->add_option("--tol", cfg.tol, "curve-proximity tolerance");

  auto* index = app.add_subcommand("index-check", "index formula at points");
  common(index, true);
  index->add_option("--r", cfg.r_list, "smoothing radius in (0,1]");
  index->add_option("--lambda", cfg.lambdas, "point re,im (repeatable)");
  index->add_option("--tol", cfg.tol, "curve-proximity tolerance");

  auto* smooth = app.add_subcommand("smooth-limit", "moments of the smoothed measures as r grows");
  common(smooth, true);
  grid_opts(smooth);
  poly_opts(smooth);

  auto* besov = app.add_subcommand("besov", "Besov-space diagnostics");
  common(besov, true);
  besov->add_option("--exponent", cfg.exponent, "Besov exponent p >= 1");
  besov->add_option("--conjugate", cfg.conjugate, "Hoelder conjugate q (inf for the bounded variant)");

  auto* gallery = app.add_subcommand("gallery", "operator gallery table");
  common(gallery, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", e.get_name(), e.what());
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    Session session(cfg);
    std::ostringstream body;
    bool failed = false;
    Json result;
    if (cfg.subcommand == "measure") result = session.measure(body);
    else if (cfg.subcommand == "trace-check") result = session.trace_check(body, failed);
    else if (cfg.subcommand == "winding") result = session.winding_cmd(body);
    else if (cfg.subcommand == "index-check") result = session.index_cmd(body, failed);
    else if (cfg.subcommand == "smooth-limit") result = session.smooth_limit(body);
    else if (cfg.subcommand == "besov") result = session.besov(body);
    else result = session.gallery(body);
    if (!result.is_null()) body << dump_json(result) << '\n';

    if (cfg.out_path.empty()) {
      out << body.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::Io, "cannot write '" + cfg.out_path + "'");
      file << body.str();
    }
    if (failed) {
      diagnostic(err, "check_failed", cfg.subcommand, "a reported check did not pass");
      return 3;
    }
    return 0;
  } catch (const Error& e) {
    diagnostic(err, std::string(to_string(e.kind())), cfg.subcommand, e.what());
    return is_validation_error(e.kind()) ? 2 : 3;
  }
}

}  // namespace hh::cli
