#pragma once

// Command-line front end: det, table, asympt and verify subcommands.
//
// Exit codes: 0 success, 1 argument or validation error, 2 verification
// failure, 3 quadrature failure.

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "conedet/conedet.hpp"

namespace conedet::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failed = 2, numerical_failure = 3 };

enum class Format { plain, csv, json };

class usage_failure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent rendering with 17 significant digits.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct OutputRecord {
  std::string formula_tag;
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
  double abs_err = 0.0;

  std::string to_json() const {
    std::string s = "{\"formula_tag\":" + json_string(formula_tag) + ",\"params\":{";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += json_string(params[i].first) + ":" + json_real(params[i].second);
    }
    return s + "},\"value\":" + json_real(value) + ",\"abs_err\":" + json_real(abs_err) + "}";
  }
};

struct GridSpec {
  std::string param_name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool log_scale = false;

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(count));
    if (count == 1) {
      v[0] = start;
      return v;
    }
    const double lo = log_scale ? std::log10(start) : start;
    const double hi = log_scale ? std::log10(stop) : stop;
    for (int i = 0; i < count; ++i) {
      const double t = static_cast<double>(i) / (count - 1);
      const double x = lo + (hi - lo) * t;
      v[static_cast<std::size_t>(i)] = log_scale ? std::pow(10.0, x) : x;
    }
    v.front() = start;
    v.back() = stop;
    return v;
  }
};

inline double parse_real(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw usage_failure("invalid number '" + text + "' in " + what);
  return v;
}

/// "name=start,stop,count[,log|linear]"; the name may be omitted when `default_name` is set.
inline GridSpec parse_grid(const std::string& text, const std::string& default_name = "") {
  GridSpec g;
  std::string body = text;
  if (const auto eq = text.find('='); eq != std::string::npos) {
    g.param_name = text.substr(0, eq);
    body = text.substr(eq + 1);
  } else {
    g.param_name = default_name;
  }
  if (g.param_name.empty()) throw usage_failure("grid '" + text + "' needs a parameter name (name=start,stop,count)");

  std::vector<std::string> fields;
  std::stringstream ss(body);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
  if (fields.size() < 3 || fields.size() > 4)
    throw usage_failure("grid '" + text + "' must be start,stop,count[,log]");
  g.start = parse_real(fields[0], "--grid");
  g.stop = parse_real(fields[1], "--grid");
  const double count = parse_real(fields[2], "--grid");
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e6)
    throw usage_failure("grid count must be a positive integer");
  g.count = static_cast<int>(count);
  if (fields.size() == 4) {
    if (fields[3] == "log") g.log_scale = true;
    else if (fields[3] != "linear") throw usage_failure("grid scale must be 'log' or 'linear'");
  }
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw usage_failure("grid bounds must be finite");
  if (g.count > 1 && !(g.start < g.stop)) throw usage_failure("grid start must be < stop");
  if (g.log_scale && !(g.start > 0.0)) throw usage_failure("log grid requires start > 0");
  return g;
}

namespace detail {

struct KindSpec {
  std::vector<std::string> params;
};

inline const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> table = {
      {"hyperbolic", {{"a", "eta"}}},   {"orbifold", {{"w", "eta"}}},
      {"spindle", {{"a", "K"}}},        {"sphericalcone", {{"a", "K"}}},
      {"diskcone", {{"a", "K"}}},       {"flatdisk", {{"r"}}},
      {"poincarecap", {{"eta"}}},
  };
  return table;
}

inline int as_order(double w) {
  if (w != std::floor(w) || !std::isfinite(w)) throw usage_failure("w must be an integer");
  if (w < 1.0 || w > max_orbifold_order)
    throw usage_failure("w must be an integer in [1, " + std::to_string(max_orbifold_order) + "]");
  return static_cast<int>(w);
}

// log det of the chosen surface; zeta'(0) results are negated.
inline OutputRecord evaluate(const std::string& kind, const std::map<std::string, double>& p,
                             const QuadratureConfig& quad) {
  const auto& spec = kinds().at(kind);
  OutputRecord rec;
  for (const auto& name : spec.params) rec.params.emplace_back(name, p.at(name));

  auto from = [&](const EvalResult& r, bool negate) {
    rec.formula_tag = r.formula_tag;
    rec.value = negate ? -r.value : r.value;
    rec.abs_err = r.abs_err;
  };
  try {
    if (kind == "hyperbolic") {
      from(logdet_hyperbolic_cone({p.at("a"), p.at("eta")}, quad), false);
    } else if (kind == "orbifold") {
      from(logdet_orbifold_cone(as_order(p.at("w")), p.at("eta")), false);
    } else if (kind == "spindle") {
      from(zeta_prime0_spindle(p.at("a"), p.at("K"), quad), true);
    } else if (kind == "sphericalcone") {
      from(zeta_prime0_spherical_cone(p.at("a"), p.at("K"), quad), true);
    } else if (kind == "diskcone") {
      from(zeta_prime0_unit_disk_cone({p.at("a"), p.at("K")}, quad), true);
    } else if (kind == "flatdisk") {
      const double v = logdet_flat_disk(p.at("r"));
      from({v, 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(v)), "flat-disk"}, false);
    } else if (kind == "poincarecap") {
      const double v = logdet_poincare_cap(p.at("eta"));
      from({v, 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(v)), "poincare-cap"},
           false);
    }
  } catch (const conedet::domain_error& e) {
    throw usage_failure(e.what());
  }
  return rec;
}

inline void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                          const std::vector<std::string>& columns, Format format) {
  if (format == Format::json) {
    if (records.size() == 1 && columns.empty()) {
      out << records.front().to_json() << '\n';
      return;
    }
    out << '[';
    for (std::size_t i = 0; i < records.size(); ++i) out << (i ? "," : "") << records[i].to_json();
    out << "]\n";
    return;
  }
  if (format == Format::csv) {
    std::vector<std::string> header = columns;
    if (header.empty())
      for (const auto& kv : records.front().params) header.push_back(kv.first);
    for (const auto& h : header) out << h << ',';
    out << "value,abs_err\n";
    for (const auto& rec : records) {
      for (const auto& h : header)
        for (const auto& kv : rec.params)
          if (kv.first == h) out << format_real(kv.second) << ',';
      out << format_real(rec.value) << ',' << format_real(rec.abs_err) << '\n';
    }
    return;
  }
  for (const auto& rec : records) {
    out << rec.formula_tag;
    for (const auto& kv : rec.params) out << ' ' << kv.first << '=' << format_real(kv.second);
    out << " log_det=" << format_real(rec.value) << " abs_err=" << format_real(rec.abs_err) << '\n';
  }
}

struct CommonOptions {
  std::optional<double> a, eta, K, r;
  std::optional<double> w;
  std::string format = "plain";
  double quad_tol = QuadratureConfig{}.abs_tol;
  int max_subdiv = QuadratureConfig{}.max_subdivisions;

  QuadratureConfig quad() const {
    QuadratureConfig q;
    q.abs_tol = quad_tol;
    q.max_subdivisions = max_subdiv;
    try {
      q.validate();
    } catch (const conedet::domain_error& e) {
      throw usage_failure(e.what());
    }
    return q;
  }

  std::map<std::string, double> given() const {
    std::map<std::string, double> m;
    if (a) m["a"] = *a;
    if (eta) m["eta"] = *eta;
    if (K) m["K"] = *K;
    if (r) m["r"] = *r;
    if (w) m["w"] = *w;
    return m;
  }
};

inline Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw usage_failure("unknown format '" + s + "'");
}

inline void add_param_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--a", o.a, "cone angle parameter (angle = 2 pi a)");
  cmd->add_option("--eta", o.eta, "geodesic radius of the boundary");
  cmd->add_option("--w", o.w, "orbifold order (a = 1/w)");
  cmd->add_option("--K", o.K, "Gaussian curvature");
  cmd->add_option("--r", o.r, "flat disk radius");
}

inline void add_quad_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--quad-tol", o.quad_tol, "absolute tolerance of the Barnes integral");
  cmd->add_option("--max-subdiv", o.max_subdiv, "subdivision budget of the adaptive quadrature");
}

inline void check_params(const std::string& kind, const std::map<std::string, double>& p) {
  const auto& spec = kinds().at(kind).params;
  for (const auto& name : spec)
    if (!p.count(name)) throw usage_failure("missing parameter --" + name + " for '" + kind + "'");
  for (const auto& kv : p)
    if (std::find(spec.begin(), spec.end(), kv.first) == spec.end())
      throw usage_failure("parameter --" + kv.first + " does not apply to '" + kind + "'");
}

inline std::vector<std::string> kind_names() {
  std::vector<std::string> names;
  for (const auto& kv : kinds()) names.push_back(kv.first);
  return names;
}

}  // namespace detail

inline int cmd_det(const std::string& kind, const detail::CommonOptions& o, std::ostream& out) {
  const auto format = detail::parse_format(o.format);
  const auto params = o.given();
  detail::check_params(kind, params);
  const auto rec = detail::evaluate(kind, params, o.quad());
  detail::write_records(out, {rec}, {}, format);
  return ok;
}

inline int cmd_table(const std::string& kind, const std::vector<std::string>& grid_texts,
                     const detail::CommonOptions& o, std::ostream& out) {
  const auto format = detail::parse_format(o.format);
  if (format == Format::plain) throw usage_failure("table supports --format csv or json");
  if (grid_texts.empty() || grid_texts.size() > 2) throw usage_failure("table needs one or two --grid options");
  std::vector<GridSpec> grids;
  for (const auto& t : grid_texts) grids.push_back(parse_grid(t));
  if (grids.size() == 2 && grids[0].param_name == grids[1].param_name)
    throw usage_failure("the two grids must vary different parameters");

  auto base = o.given();
  std::vector<std::string> columns;
  for (const auto& g : grids) {
    columns.push_back(g.param_name);
    base[g.param_name] = g.start;
  }
  detail::check_params(kind, base);
  const auto quad = o.quad();

  std::vector<std::vector<double>> axes;
  for (const auto& g : grids) axes.push_back(g.values());
  if (axes.size() == 1) axes.push_back({std::nan("")});

  std::vector<OutputRecord> records;
  for (double v0 : axes[0])
    for (double v1 : axes[1]) {
      auto p = base;
      p[grids[0].param_name] = v0;
      if (grids.size() == 2) p[grids[1].param_name] = v1;
      records.push_back(detail::evaluate(kind, p, quad));
    }
  detail::write_records(out, records, columns, format);
  return ok;
}

inline int cmd_asympt(const std::optional<double>& w_opt, const std::string& grid_text, bool compare_fp,
                      const std::string& format_text, std::ostream& out) {
  const auto format = detail::parse_format(format_text);
  if (!w_opt) throw usage_failure("missing parameter --w");
  const int w = detail::as_order(*w_opt);
  const auto grid = parse_grid(grid_text, "eta");
  if (grid.param_name != "eta") throw usage_failure("asympt grid must vary eta");
  const auto etas = grid.values();
  for (double e : etas)
    if (!(e > 0.0 && e <= 1.0)) throw usage_failure("asympt grid must lie within (0, 1]");

  std::vector<std::string> cols = {"eta", "exact", "asympt", "residual"};
  if (compare_fp) {
    cols.push_back("fp");
    cols.push_back("fp_residual");
  }
  std::vector<std::vector<double>> rows;
  for (double eta : etas) {
    const double exact = logdet_orbifold_cone(w, eta).value;
    const double asym = small_eta_asymptotics(w, eta);
    std::vector<double> row = {eta, exact, asym, exact - asym};
    if (compare_fp) {
      const double fp = fp_asymptotics_reference(w, eta);
      row.push_back(fp);
      row.push_back(exact - fp);
    }
    rows.push_back(std::move(row));
  }

  if (format == Format::json) {
    out << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? "," : "") << '{';
      for (std::size_t c = 0; c < cols.size(); ++c)
        out << (c ? "," : "") << json_string(cols[c]) << ':' << json_real(rows[i][c]);
      out << '}';
    }
    out << "]\n";
    return ok;
  }
  const char sep = format == Format::csv ? ',' : ' ';
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? std::string(1, sep) : "") << cols[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? std::string(1, sep) : "") << format_real(row[c]);
    out << '\n';
  }
  return ok;
}

inline int cmd_verify(double tol, const std::string& format_text, const QuadratureConfig& quad,
                      std::ostream& out) {
  const auto format = detail::parse_format(format_text);
  if (!(tol > 0.0)) throw usage_failure("--tol must be positive");
  const auto reports = verify_identities(tol, IdentityGrids{}, quad);

  if (format == Format::json) {
    out << '[';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << (i ? "," : "") << "{\"identity_name\":" << json_string(r.identity_name)
          << ",\"lhs\":" << json_real(r.lhs) << ",\"rhs\":" << json_real(r.rhs)
          << ",\"abs_diff\":" << json_real(r.abs_diff) << ",\"tolerance\":" << json_real(r.tolerance)
          << ",\"passed\":" << (r.passed ? "true" : "false") << '}';
    }
    out << "]\n";
  } else if (format == Format::csv) {
    out << "identity_name,lhs,rhs,abs_diff,tolerance,passed\n";
    for (const auto& r : reports)
      out << r.identity_name << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
          << format_real(r.abs_diff) << ',' << format_real(r.tolerance) << ','
          << (r.passed ? "true" : "false") << '\n';
  } else {
    for (const auto& r : reports)
      out << (r.passed ? "PASS " : "FAIL ") << r.identity_name << " abs_diff=" << format_real(r.abs_diff)
          << " tolerance=" << format_real(r.tolerance) << '\n';
  }
  return all_passed(reports) ? ok : verification_failed;
}

/// Entry point shared by the executable and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta-regularized determinants of Laplacians on constant-curvature cones", "conedet"};
  app.require_subcommand(1);

  detail::CommonOptions det_opts;
  std::string det_kind;
  auto* det = app.add_subcommand("det", "evaluate one log det");
  det->add_option("kind", det_kind, "surface")->required()->check(CLI::IsMember(detail::kind_names()));
  detail::add_param_options(det, det_opts);
  detail::add_quad_options(det, det_opts);
  det->add_option("--format", det_opts.format, "plain | csv | json");

  detail::CommonOptions table_opts;
  table_opts.format = "csv";
  std::string table_kind;
  std::vector<std::string> grid_texts;
  auto* table = app.add_subcommand("table", "evaluate log det over a one- or two-parameter grid");
  table->add_option("kind", table_kind, "surface")->required()->check(CLI::IsMember(detail::kind_names()));
  detail::add_param_options(table, table_opts);
  detail::add_quad_options(table, table_opts);
  table->add_option("--grid", grid_texts, "name=start,stop,count[,log]")->required();
  table->add_option("--format", table_opts.format, "csv | json");

  std::optional<double> asympt_w;
  std::string asympt_grid = "1e-4,1e-1,4,log";
  std::string asympt_format = "csv";
  bool compare_fp = false;
  auto* asympt = app.add_subcommand("asympt", "compare the orbifold determinant with its small-radius expansion");
  asympt->add_option("--w", asympt_w, "orbifold order")->required();
  asympt->add_option("--grid", asympt_grid, "[eta=]start,stop,count[,log] within (0, 1]");
  asympt->add_flag("--compare-fp", compare_fp, "add the published Freixas-von Pippich expansion");
  asympt->add_option("--format", asympt_format, "plain | csv | json");

  double verify_tol = 1e-8;
  detail::CommonOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "check every identity between the formulas");
  verify->add_option("--tol", verify_tol, "global tolerance for algebraic identities");
  verify->add_option("--format", verify_opts.format, "plain | csv | json");
  detail::add_quad_options(verify, verify_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (det->parsed()) return cmd_det(det_kind, det_opts, out);
    if (table->parsed()) return cmd_table(table_kind, grid_texts, table_opts, out);
    if (asympt->parsed()) return cmd_asympt(asympt_w, asympt_grid, compare_fp, asympt_format, out);
    if (verify->parsed()) return cmd_verify(verify_tol, verify_opts.format, verify_opts.quad(), out);
  } catch (const usage_failure& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const conedet::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const conedet::quadrature_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return numerical_failure;
  }
  return usage_error;
}

}  // namespace conedet::cli
