// sweep.hpp: run configuration, figure presets, CSV tables and command runners
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core_model.hpp"
#include "errors.hpp"
#include "fdt_oracle.hpp"
#include "gaussian_state.hpp"
#include "units.hpp"

namespace dqo::sweep {

enum class Command { modes, evolve, steady, fdt };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::modes: return "modes";
    case Command::evolve: return "evolve";
    case Command::steady: return "steady";
    case Command::fdt: return "fdt";
  }
  return "?";
}

inline const std::vector<std::string>& axis_params() {
  static const std::vector<std::string> v = {"lambda_tilde", "gamma_tilde", "T1", "T2",
                                             "sigma01_factor", "sigma02_factor", "tau", "t"};
  return v;
}

struct Axis {
  std::string param = "lambda_tilde";
  double lo = 0, hi = 0;
  int points = 0;              // 0: no sweep, a single row at the configured value
  bool log = false;
  double margin = 1e-3;        // lambda_tilde values must stay below 1 - margin
  std::vector<double> values;  // explicit list, overrides the range

  bool is_time() const { return param == "tau" || param == "t"; }

  std::vector<double> grid() const {
    if (!values.empty()) return values;
    if (points < 0) throw InvalidParams("sweep points must be non-negative");
    if (points == 1) return {lo};
    if (log && !(lo > 0 && hi > 0)) throw InvalidParams("log sweep needs positive bounds");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
      const double u = static_cast<double>(i) / (points - 1);
      g[i] = log ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    }
    return g;
  }
};

struct RunConfig {
  std::string name;  // case label in multi-case presets
  double M1 = 1e-23, M2 = 1e-23;  // g
  double w01 = 1e13, w02 = 1e13;  // rad/s
  double gamma_tilde = 0.01;      // gamma / w01
  double lambda_tilde = 0.1;
  BathSpec baths{300.0, 300.0, 0.0};
  // Initial dispersions: absolute values in cm^2 when positive, otherwise
  // factor * hbar / 2 M w0 (the isolated ground-state dispersion).
  double sigma01_sq = 0, sigma02_sq = 0;
  double sigma01_factor = 1, sigma02_factor = 1;
  Axis axis;
  Options opt;

  SystemParams params() const {
    return SystemParams::with_lambda_tilde(M1, M2, w01, w02, gamma_tilde * w01, lambda_tilde);
  }

  InitialState initial() const {
    const double g1 = cgs::hbar / (2.0 * M1 * w01), g2 = cgs::hbar / (2.0 * M2 * w02);
    return {sigma01_sq > 0 ? sigma01_sq : sigma01_factor * g1,
            sigma02_sq > 0 ? sigma02_sq : sigma02_factor * g2};
  }

  // Copy with the sweep parameter set; time axes leave the configuration unchanged.
  RunConfig at(double v) const {
    RunConfig c = *this;
    const auto& p = axis.param;
    if (p == "lambda_tilde") c.lambda_tilde = v;
    else if (p == "gamma_tilde") c.gamma_tilde = v;
    else if (p == "T1") c.baths.T1 = v;
    else if (p == "T2") c.baths.T2 = v;
    else if (p == "sigma01_factor") { c.sigma01_factor = v; c.sigma01_sq = 0; }
    else if (p == "sigma02_factor") { c.sigma02_factor = v; c.sigma02_sq = 0; }
    return c;
  }

  double current(const std::string& p) const {
    if (p == "lambda_tilde") return lambda_tilde;
    if (p == "gamma_tilde") return gamma_tilde;
    if (p == "T1") return baths.T1;
    if (p == "T2") return baths.T2;
    if (p == "sigma01_factor") return sigma01_factor;
    if (p == "sigma02_factor") return sigma02_factor;
    return 0.0;
  }

  std::vector<double> grid() const {
    if (axis.values.empty() && axis.points == 0) return {current(axis.param)};
    return axis.grid();
  }

  // Axis value converted to seconds for time axes.
  double time_of(double v) const { return axis.param == "tau" ? v / w01 : v; }

  void check() const {
    if (std::find(axis_params().begin(), axis_params().end(), axis.param) == axis_params().end())
      throw InvalidParams("unknown sweep parameter '" + axis.param + "'");
    if (!(axis.margin > 0 && axis.margin < 1)) throw InvalidParams("sweep margin must lie in (0, 1)");
    if (axis.param == "lambda_tilde")
      for (double v : grid())
        if (!(std::abs(v) <= 1.0 - axis.margin))
          throw InvalidParams("lambda_tilde sweep value " + std::to_string(v) + " exceeds 1 - margin");
    validate(params());
    validate(baths);
    validate(initial());
  }
};

// ---------------------------------------------------------------- config files

namespace detail {

inline double to_double(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidParams("'" + key + "' expects a number, got '" + s + "'");
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '[' || ch == ']') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace detail

// Applies one `section.key = value` setting.
inline void apply_setting(RunConfig& c, const std::string& section, const std::string& key,
                          const std::string& value) {
  using detail::to_double;
  const std::string full = section.empty() ? key : section + "." + key;
  auto num = [&] { return to_double(full, value); };
  if (section == "system") {
    if (key == "M1") c.M1 = num();
    else if (key == "M2") c.M2 = num();
    else if (key == "w01") c.w01 = num();
    else if (key == "w02") c.w02 = num();
    else if (key == "gamma_tilde") c.gamma_tilde = num();
    else if (key == "lambda_tilde") c.lambda_tilde = num();
    else throw InvalidParams("unknown key '" + full + "'");
  } else if (section == "baths") {
    if (key == "T1") c.baths.T1 = num();
    else if (key == "T2") c.baths.T2 = num();
    else if (key == "omega_cutoff") c.baths.omega_cutoff = num();
    else throw InvalidParams("unknown key '" + full + "'");
  } else if (section == "initial") {
    if (key == "sigma01_sq") c.sigma01_sq = num();
    else if (key == "sigma02_sq") c.sigma02_sq = num();
    else if (key == "sigma01_factor") c.sigma01_factor = num();
    else if (key == "sigma02_factor") c.sigma02_factor = num();
    else throw InvalidParams("unknown key '" + full + "'");
  } else if (section == "sweep") {
    if (key == "param") c.axis.param = value;
    else if (key == "lo") c.axis.lo = num();
    else if (key == "hi") c.axis.hi = num();
    else if (key == "points") c.axis.points = static_cast<int>(num());
    else if (key == "margin") c.axis.margin = num();
    else if (key == "scale") {
      if (value != "lin" && value != "log") throw InvalidParams("sweep.scale must be lin or log");
      c.axis.log = value == "log";
    } else if (key == "values") {
      c.axis.values.clear();
      for (const auto& s : detail::split_list(value)) c.axis.values.push_back(to_double(full, s));
    } else throw InvalidParams("unknown key '" + full + "'");
  } else if (section == "tolerances") {
    if (key == "rel_tol") c.opt.rel_tol = num();
    else if (key == "steady_tol") c.opt.steady_tol = num();
    else if (key == "tol_caustic") c.opt.tol_caustic = num();
    else if (key == "cutoff_mult") c.opt.cutoff_mult = num();
    else if (key == "errata") c.opt.errata = Errata::parse(value);
    else throw InvalidParams("unknown key '" + full + "'");
  } else {
    throw InvalidParams("unknown section '" + section + "'");
  }
}

struct Setting {
  std::string section, key, value;
};

inline std::vector<Setting> read_config(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw InvalidParams("cannot open config '" + path + "'");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error& e) {
    throw InvalidParams(std::string("config parse error: ") + e.what());
  }
  std::vector<Setting> out;
  for (const auto& it : items) {
    if (it.name == "++" || it.name == "--") continue;
    out.push_back({detail::join(it.parents, "."), it.name, detail::join(it.inputs, ",")});
  }
  return out;
}

inline void apply_settings(RunConfig& c, const std::vector<Setting>& s) {
  for (const auto& x : s) apply_setting(c, x.section, x.key, x.value);
}

// ---------------------------------------------------------------- presets

struct Preset {
  std::string name;
  Command cmd;
  std::vector<RunConfig> cases;
};

namespace detail {

inline RunConfig oscillators(std::string name, double M1, double m_ratio, double w01, double w_ratio) {
  RunConfig c;
  c.name = std::move(name);
  c.M1 = M1;
  c.M2 = m_ratio * M1;
  c.w01 = w01;
  c.w02 = w_ratio * w01;
  return c;
}

}  // namespace detail

// Oscillator pairs used by the presets.
inline RunConfig identical() { return detail::oscillators("identical", 1e-23, 1.0, 1e13, 1.0); }
inline RunConfig mismatch(int percent) {
  const double f = 1.0 + percent / 100.0;
  return detail::oscillators("mismatch" + std::to_string(percent), 1e-23, f, 1e13, f);
}
inline RunConfig large_mismatch() { return detail::oscillators("large", 3e-23, 1.0 / 3.0, 0.8e13, 10.0); }

namespace detail {

inline Preset make(std::string name, Command cmd, std::vector<RunConfig> cases,
                   void (*setup)(RunConfig&)) {
  for (auto& c : cases) setup(c);
  return {std::move(name), cmd, std::move(cases)};
}

inline void evolve_axis(RunConfig& c, double tau_end) {
  c.axis = {};
  c.axis.param = "tau";
  c.axis.lo = 0;
  c.axis.hi = tau_end;
  c.axis.points = 201;
}

}  // namespace detail

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> v = {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig3a", "fig3b"};
  return v;
}

inline Preset preset(const std::string& name) {
  using namespace detail;
  const std::vector<RunConfig> fig1 = {identical(), mismatch(1), mismatch(10), large_mismatch()};
  if (name == "fig1a")
    return make(name, Command::modes, fig1, [](RunConfig& c) {
      c.gamma_tilde = 0.01;
      c.baths = {300, 700, 0};
      c.axis.param = "lambda_tilde";
      c.axis.lo = 0.01;
      c.axis.hi = 0.99;
      c.axis.points = 99;
    });
  if (name == "fig1b")
    return make(name, Command::steady, fig1, [](RunConfig& c) {
      c.gamma_tilde = 0.01;
      c.baths = {300, 700, 0};
      c.axis.param = "lambda_tilde";
      c.axis.margin = 1e-4;
      for (int i = 0; i <= 19; ++i) c.axis.values.push_back(0.05 * i);
      for (double v : {0.99, 0.995, 0.999}) c.axis.values.push_back(v);
    });
  if (name == "fig1c")
    return make(name, Command::steady, {identical(), mismatch(10)}, [](RunConfig& c) {
      c.lambda_tilde = 0.1;
      c.baths = {300, 700, 0};
      c.axis.param = "gamma_tilde";
      c.axis.lo = 0.02;
      c.axis.hi = 0.2;
      c.axis.points = 10;
    });
  if (name == "fig2a" || name == "fig2b") {
    auto p = make(name, Command::evolve, {identical(), mismatch(10), mismatch(20)}, [](RunConfig& c) {
      c.lambda_tilde = 0.1;
      c.baths = {300, 900, 0};
    });
    for (auto& c : p.cases) {
      if (name == "fig2a") {
        c.gamma_tilde = 0.01;
        evolve_axis(c, 1000);
      } else {
        c.gamma_tilde = 0.1;
        c.sigma01_factor = 10;
        evolve_axis(c, 100);
      }
    }
    return p;
  }
  if (name == "fig3a" || name == "fig3b") {
    auto p = make(name, Command::evolve, {identical(), mismatch(20), mismatch(50)}, [](RunConfig& c) {
      c.lambda_tilde = 0.2;
      c.gamma_tilde = 0.05;
      c.sigma02_factor = 2;
      evolve_axis(c, 200);
    });
    for (auto& c : p.cases) c.baths = {0, name == "fig3a" ? 0.0 : 100.0, 0};
    return p;
  }
  throw InvalidParams("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------- tables

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    throw InvalidParams("no column '" + name + "'");
  }
  double num(std::size_t row, const std::string& name) const {
    const auto& s = rows[row][col(name)];
    return s.empty() ? std::nan("") : std::strtod(s.c_str(), nullptr);
  }
  std::vector<double> column(const std::string& name, const std::string& case_name = "") const {
    std::vector<double> v;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (case_name.empty() || rows[r][col("case")] == case_name) v.push_back(num(r, name));
    return v;
  }
  std::size_t error_rows() const {
    const int e = col("error");
    return std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return !r[e].empty(); });
  }
};

inline std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const Table& t, const std::vector<std::string>& meta = {}) {
  os << "# schema=1\n";
  for (const auto& m : meta) os << "# " << m << "\n";
  os << detail::join(t.columns, ",") << "\n";
  for (const auto& r : t.rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += ',';
      std::string cell = r[i];
      std::replace(cell.begin(), cell.end(), ',', ';');
      std::replace(cell.begin(), cell.end(), '\n', ' ');
      line += cell;
    }
    os << line << "\n";
  }
}

inline Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(cur);
    if (header) {
      t.columns = cells;
      header = false;
    } else {
      cells.resize(t.columns.size());
      t.rows.push_back(cells);
    }
  }
  if (t.columns.empty()) throw InvalidParams("empty CSV");
  return t;
}

// ---------------------------------------------------------------- runners

struct RunOptions {
  int threads = 1;
  bool oracle = false;  // steady: add spectral-oracle columns
};

namespace detail {

inline std::string describe(const std::exception& e) {
  if (auto* d = dynamic_cast<const Error*>(&e)) return std::string(d->kind()) + ": " + d->what();
  return e.what();
}

// Fills rows[i] = make(i), or a NaN row carrying the error text.
template <class Make>
void fill_rows(Table& t, const std::vector<double>& xs, int width, int threads, Make make) {
  const std::size_t base = t.rows.size();
  t.rows.resize(base + xs.size());
  parallel_for(static_cast<int>(xs.size()), threads, [&](int i) {
    std::vector<std::string> row;
    try {
      for (double v : make(i)) row.push_back(fmt(v));
      row.push_back("");
    } catch (const std::exception& e) {
      row.assign(width, "nan");
      row.push_back(describe(e));
    }
    t.rows[base + i] = std::move(row);
  });
}

}  // namespace detail

inline std::vector<std::string> columns_for(Command cmd, const RunConfig& c, const RunOptions& ro) {
  switch (cmd) {
    case Command::modes: return {c.axis.param, "Omega1", "Omega2", "r1", "r2"};
    case Command::evolve:
      return {"t", "sigma1_sq", "sigma2_sq", "cov", "sigma1_norm", "sigma2_norm", "cov_norm"};
    case Command::steady: {
      std::vector<std::string> v = {c.axis.param, "sigma1_norm", "sigma2_norm", "cov_norm", "residual"};
      if (ro.oracle)
        for (const char* s : {"oracle_sigma1_norm", "oracle_sigma2_norm", "oracle_cov_norm"}) v.push_back(s);
      return v;
    }
    case Command::fdt: return {c.axis.param, "sigma1_fdt_sq", "sigma2_fdt_sq"};
  }
  return {};
}

// Appends the rows of one configuration to t (columns already set, without the case column).
inline void run_into(Table& t, Command cmd, const RunConfig& c, const RunOptions& ro) {
  c.check();
  const auto xs = c.grid();
  const int width = static_cast<int>(columns_for(cmd, c, ro).size());
  if ((cmd == Command::evolve) != c.axis.is_time())
    throw InvalidParams(std::string(command_name(cmd)) + " cannot sweep '" + c.axis.param + "'");
  switch (cmd) {
    case Command::modes:
      detail::fill_rows(t, xs, width, ro.threads, [&](int i) {
        const auto md = normal_modes(c.at(xs[i]).params());
        return std::vector<double>{xs[i], md.Omega1, md.Omega2, md.r1, md.r2};
      });
      break;
    case Command::fdt:
      detail::fill_rows(t, xs, width, ro.threads, [&](int i) {
        const auto ci = c.at(xs[i]);
        const auto p = ci.params();
        return std::vector<double>{xs[i], fdt_variance(p.M1, p.w01, p.gamma, ci.baths.T1).sigma_sq,
                                   fdt_variance(p.M2, p.w02, p.gamma, ci.baths.T2).sigma_sq};
      });
      break;
    case Command::steady:
      detail::fill_rows(t, xs, width, ro.threads, [&](int i) {
        const auto ci = c.at(xs[i]);
        const auto p = ci.params();
        const auto st = steady_state(p, ci.baths, ci.initial(), ci.opt);
        const auto n = normalize_moments(st.m, p, ci.baths);
        std::vector<double> row{xs[i], n.sigma1_norm, n.sigma2_norm, n.cov_norm, st.residual};
        if (ro.oracle) {
          const auto sp = coupled_spectral_steady(p, ci.baths);
          const auto o = normalize_moments({sp.sigma1_sq(), sp.sigma2_sq(), sp.cov(), 0}, p, ci.baths);
          row.insert(row.end(), {o.sigma1_norm, o.sigma2_norm, o.cov_norm});
        }
        return row;
      });
      break;
    case Command::evolve: {
      const auto p = c.params();
      const auto pr = make_problem(p, c.baths, c.initial(), c.opt);
      const double f1 = fdt_variance(p.M1, p.w01, p.gamma, c.baths.T1).sigma_sq;
      const double f2 = fdt_variance(p.M2, p.w02, p.gamma, c.baths.T2).sigma_sq;
      for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw InvalidParams("time grid must be strictly increasing");
      detail::fill_rows(t, xs, width, ro.threads, [&](int i) {
        const double ts = c.time_of(xs[i]);
        double ti = ts / pr.scales.time;
        nudge_caustic(ti, pr.modes, c.opt.tol_caustic);
        const auto m = to_cgs(state_at(pr, ti, c.opt).m, pr.scales);
        return std::vector<double>{m.t, m.sigma1_sq, m.sigma2_sq, m.cov,
                                   m.sigma1_sq / f1, m.sigma2_sq / f2, m.cov / std::sqrt(f1 * f2)};
      });
      break;
    }
  }
}

// Runs every case; multi-case runs get a leading `case` column. A trailing `error` column is always present.
inline Table run(Command cmd, const std::vector<RunConfig>& cases, const RunOptions& ro = {}) {
  if (cases.empty()) throw InvalidParams("nothing to run");
  const bool multi = cases.size() > 1;
  Table out;
  for (const auto& c : cases) {
    Table t;
    t.columns = columns_for(cmd, c, ro);
    t.columns.push_back("error");
    run_into(t, cmd, c, ro);
    if (out.columns.empty()) {
      out.columns = t.columns;
      if (multi) out.columns.insert(out.columns.begin(), "case");
    }
    for (auto& r : t.rows) {
      if (multi) r.insert(r.begin(), c.name);
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------- verification

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<std::string> case_names(const Table& t) {
  std::vector<std::string> v;
  const int c = t.col("case");
  for (const auto& r : t.rows)
    if (std::find(v.begin(), v.end(), r[c]) == v.end()) v.push_back(r[c]);
  return v;
}

inline Check check(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

// cov^2 <= sigma1^2 sigma2^2 on every finite row.
inline Check cauchy_schwarz(const Table& t, const std::string& s1, const std::string& s2, const std::string& cv) {
  double worst = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double a = t.num(r, s1), b = t.num(r, s2), c = t.num(r, cv);
    if (std::isnan(a) || std::isnan(b) || std::isnan(c)) continue;
    worst = std::max(worst, c * c / (a * b));
  }
  return check("cauchy_schwarz", worst <= 1.0, "max cov^2/(s1 s2) = " + fmt(worst));
}

inline Check no_errors(const Table& t) {
  const auto n = t.error_rows();
  return check("no_row_errors", n == 0, std::to_string(n) + " failed rows");
}

inline double value_at(const Table& t, const std::string& cs, const std::string& axis, double x,
                       const std::string& name) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.rows[r][t.col("case")] == cs && std::abs(t.num(r, axis) - x) < 1e-9) return t.num(r, name);
  throw InvalidParams("no row for " + cs + " at " + axis + "=" + fmt(x));
}

// Relative spread of the last 10% of a trajectory.
inline double plateau_spread(const std::vector<double>& v) {
  const std::size_t k = v.size() * 9 / 10;
  double lo = v[k], hi = v[k];
  for (std::size_t i = k; i < v.size(); ++i) {
    lo = std::min(lo, v[i]);
    hi = std::max(hi, v[i]);
  }
  return (hi - lo) / std::abs(v.back());
}

}  // namespace detail

inline std::vector<Check> verify(const std::string& preset_name, const Table& t) {
  using namespace detail;
  std::vector<Check> out;
  out.push_back(no_errors(t));
  const auto names = case_names(t);

  if (preset_name == "fig1a") {
    double dev = 0;
    for (double r1 : t.column("r1", "identical")) dev = std::max(dev, std::abs(r1 - 1.0));
    for (double r2 : t.column("r2", "identical")) dev = std::max(dev, std::abs(r2 + 1.0));
    out.push_back(check("identical_ratios_constant", dev <= 1e-12, "max |r -+ 1| = " + fmt(dev)));
    const auto r1 = t.column("r1", "mismatch1"), r2 = t.column("r2", "mismatch1");
    bool mono = true;
    for (std::size_t i = 1; i < r1.size(); ++i)
      mono = mono && std::abs(r1[i]) >= std::abs(r1[i - 1]) && std::abs(r2[i]) >= std::abs(r2[i - 1]);
    out.push_back(check("mismatch1_ratios_grow", mono));
    out.push_back(check("mismatch1_approaches_identical", std::abs(r1.back()) > 0.95 && std::abs(r2.back()) > 0.95,
                        "r1=" + fmt(r1.back()) + " r2=" + fmt(r2.back())));
    return out;
  }
  if (preset_name == "fig1b" || preset_name == "fig1c") {
    out.push_back(cauchy_schwarz(t, "sigma1_norm", "sigma2_norm", "cov_norm"));
  }
  if (preset_name == "fig1b") {
    const double s1 = std::abs(value_at(t, "mismatch1", "lambda_tilde", 0.3, "sigma1_norm") -
                               value_at(t, "mismatch1", "lambda_tilde", 0.3, "sigma2_norm"));
    const double sL = std::abs(value_at(t, "large", "lambda_tilde", 0.3, "sigma1_norm") -
                               value_at(t, "large", "lambda_tilde", 0.3, "sigma2_norm"));
    out.push_back(check("splitting_mismatch1_gt_large", s1 > sL, fmt(s1) + " vs " + fmt(sL)));
    double worst = 0;
    const auto lam = t.column("lambda_tilde", "large");
    const auto a = t.column("sigma1_norm", "large"), b = t.column("sigma2_norm", "large");
    for (std::size_t i = 0; i < lam.size(); ++i)
      if (lam[i] <= 0.1 + 1e-12) worst = std::max({worst, std::abs(a[i] - 1.0), std::abs(b[i] - 1.0)});
    out.push_back(check("large_near_fdt_weak_coupling", worst <= 0.01, "max |s-1| = " + fmt(worst)));
    const auto li = t.column("lambda_tilde", "identical");
    bool diverge = true;
    for (const char* col : {"sigma1_norm", "sigma2_norm", "cov_norm"}) {
      const auto v = t.column(col, "identical");
      double top = 0;
      for (std::size_t i = 0; i < li.size(); ++i)
        if (li[i] >= 0.99) top = std::max(top, std::abs(v[i]));
      diverge = diverge && top > 10;
    }
    out.push_back(check("identical_divergence", diverge));
    bool mono = true;
    for (const char* col : {"sigma1_norm", "sigma2_norm", "cov_norm"}) {
      const auto v = t.column(col, "identical");
      for (std::size_t i = 1; i < v.size(); ++i)
        if (li[i] >= 0.5) mono = mono && v[i] > v[i - 1];
    }
    out.push_back(check("identical_monotone_blowup", mono));
  }
  if (preset_name == "fig1c") {
    for (const auto& cs : names) {
      const double lo = std::abs(value_at(t, cs, "gamma_tilde", 0.02, "sigma1_norm") -
                                 value_at(t, cs, "gamma_tilde", 0.02, "sigma2_norm"));
      const double hi = std::abs(value_at(t, cs, "gamma_tilde", 0.2, "sigma1_norm") -
                                 value_at(t, cs, "gamma_tilde", 0.2, "sigma2_norm"));
      out.push_back(check("splitting_shrinks_with_gamma:" + cs, hi < lo, fmt(hi) + " < " + fmt(lo)));
    }
  }
  if (preset_name.rfind("fig2", 0) == 0 || preset_name.rfind("fig3", 0) == 0) {
    out.push_back(cauchy_schwarz(t, "sigma1_sq", "sigma2_sq", "cov"));
    for (const auto& cs : names) {
      const auto a = t.column("sigma1_norm", cs), b = t.column("sigma2_norm", cs);
      const double spread = std::max(plateau_spread(a), plateau_spread(b));
      out.push_back(check("relaxes_to_plateau:" + cs, spread < 0.01, "spread " + fmt(spread)));
      if (preset_name.rfind("fig2", 0) == 0) {
        out.push_back(check("hot_bath_ordering:" + cs, a.back() > 1.0 && b.back() < 1.0,
                            fmt(a.back()) + ", " + fmt(b.back())));
      } else if (preset_name == "fig3a") {
        const double d = std::max(std::abs(a.back() - 1.0), std::abs(b.back() - 1.0));
        out.push_back(check("equilibrium_fdt:" + cs, d <= 0.02, "max |s-1| = " + fmt(d)));
      } else {
        out.push_back(check("cold_oscillator_heated:" + cs, a.back() > 1.0, fmt(a.back())));
      }
    }
  }
  return out;
}

}  // namespace dqo::sweep
