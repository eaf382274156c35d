// dqo: command-line front end for coupled dissipative oscillators
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dqo/sweep.hpp"

using namespace dqo;
using namespace dqo::sweep;

namespace {

struct Flags {
  std::string config, preset, out, errata, input;
  std::optional<double> rel_tol, steady_tol, cutoff_mult;
  int threads = 1;
  bool oracle = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key-value config file (INI sections system, baths, initial, sweep, tolerances)");
  sub->add_option("--preset", f.preset, "figure preset")->check(CLI::IsMember(preset_names()));
  sub->add_option("--out", f.out, "output CSV path (default stdout)");
  sub->add_option("--rel-tol", f.rel_tol, "noise quadrature relative tolerance");
  sub->add_option("--steady-tol", f.steady_tol, "steady-state relative tolerance");
  sub->add_option("--cutoff-mult", f.cutoff_mult, "bath cutoff in units of the largest frequency");
  sub->add_option("--errata", f.errata, "errata switches: printed, corrected, name, -name (comma separated)");
  sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
}

std::vector<RunConfig> build_cases(const Flags& f, std::optional<Command>& preset_cmd) {
  std::vector<RunConfig> cases;
  if (!f.preset.empty()) {
    auto p = preset(f.preset);
    preset_cmd = p.cmd;
    cases = std::move(p.cases);
  } else {
    cases.emplace_back();
  }
  if (!f.config.empty()) {
    const auto s = read_config(f.config);
    for (auto& c : cases) apply_settings(c, s);
  }
  for (auto& c : cases) {
    if (f.rel_tol) c.opt.rel_tol = *f.rel_tol;
    if (f.steady_tol) c.opt.steady_tol = *f.steady_tol;
    if (f.cutoff_mult) c.opt.cutoff_mult = *f.cutoff_mult;
    if (!f.errata.empty()) c.opt.errata = Errata::parse(f.errata);
  }
  return cases;
}

void emit(const Table& t, const Flags& f, const std::string& cmd, const Errata& er) {
  std::vector<std::string> meta = {"command=" + cmd, "errata=" + er.str()};
  if (!f.preset.empty()) meta.insert(meta.begin() + 1, "preset=" + f.preset);
  if (f.out.empty()) {
    write_csv(std::cout, t, meta);
    return;
  }
  std::ofstream os(f.out);
  if (!os) throw InvalidParams("cannot write '" + f.out + "'");
  write_csv(os, t, meta);
}

int run_command(Command cmd, const Flags& f) {
  std::optional<Command> pc;
  const auto cases = build_cases(f, pc);
  if (pc && *pc != cmd && cmd != Command::fdt)
    throw InvalidParams("preset " + f.preset + " is a " + command_name(*pc) + " preset");
  if (pc && cmd == Command::fdt && pc == Command::evolve)
    throw InvalidParams("fdt needs a parameter axis, preset " + f.preset + " sweeps time");
  const auto t = run(cmd, cases, {f.threads, f.oracle});
  emit(t, f, command_name(cmd), cases.front().opt.errata);
  return t.error_rows() ? 2 : 0;
}

int run_verify(const Flags& f) {
  if (f.preset.empty()) throw InvalidParams("verify needs --preset");
  std::optional<Command> pc;
  const auto cases = build_cases(f, pc);
  Table t;
  if (!f.input.empty()) {
    std::ifstream is(f.input);
    if (!is) throw InvalidParams("cannot open '" + f.input + "'");
    t = read_csv(is);
  } else {
    t = run(*pc, cases, {f.threads, false});
    if (!f.out.empty()) emit(t, f, command_name(*pc), cases.front().opt.errata);
  }
  bool ok = true;
  for (const auto& c : verify(f.preset, t)) {
    std::printf("%s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.empty() ? "" : "  ",
                c.detail.c_str());
    ok = ok && c.pass;
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled dissipative quantum oscillators: modes, evolution, steady states"};
  app.require_subcommand(1);
  Flags f;
  auto* modes = app.add_subcommand("modes", "normal-mode frequencies and ratios over the sweep axis");
  auto* evolve = app.add_subcommand("evolve", "second moments on a time grid");
  auto* steady = app.add_subcommand("steady", "normalized steady-state moments over the sweep axis");
  auto* fdt = app.add_subcommand("fdt", "single-oscillator FDT variances over the sweep axis");
  auto* verify_cmd = app.add_subcommand("verify", "regenerate a preset and check its qualitative features");
  for (auto* s : {modes, evolve, steady, fdt, verify_cmd}) add_common(s, f);
  steady->add_flag("--oracle", f.oracle, "add spectral-oracle columns");
  verify_cmd->add_option("--in", f.input, "check an existing CSV instead of regenerating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (*modes) return run_command(Command::modes, f);
    if (*evolve) return run_command(Command::evolve, f);
    if (*steady) return run_command(Command::steady, f);
    if (*fdt) return run_command(Command::fdt, f);
    return run_verify(f);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dqo: %s\n", e.what());
    return 1;
  }
}
