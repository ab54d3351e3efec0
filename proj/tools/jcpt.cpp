// Command-line driver: evolve, sweep, validate, spectrum.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "jcpt/errors.hpp"
#include "jcpt/experiments.hpp"
#include "jcpt/io.hpp"

namespace fs = std::filesystem;
using namespace jcpt;

namespace {

enum Exit { kOk = 0, kValidation = 1, kConfig = 2, kNumerical = 3 };

struct Common {
  std::string config;
  std::string out = ".";
  std::string format = "csv";
  bool plot = false;
  long long seed = 0;  // reserved
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON run configuration");
  app->add_option("--out", c.out, "output directory")->capture_default_str();
  app->add_option("--format", c.format, "table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_flag("--plot", c.plot, "also write SVG plots");
  app->add_option("--seed", c.seed, "accepted and ignored; all runs are deterministic");
}

RunConfig load(const Common& c) { return c.config.empty() ? RunConfig{} : load_config(c.config); }

std::string out_path(const Common& c, const std::string& name) {
  return (fs::path(c.out) / name).string();
}

void prepare_out(const Common& c) {
  std::error_code ec;
  fs::create_directories(c.out, ec);
  if (ec) throw std::runtime_error("cannot create '" + c.out + "': " + ec.message());
}

std::string g_tag(double g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", g);
  return buf;
}

void emit_table(const Common& c, const std::string& stem, const io::Table& t) {
  if (c.format == "json")
    io::write_json(out_path(c, stem + ".json"), io::table_json(t));
  else
    io::write_csv(out_path(c, stem + ".csv"), t);
}

int cmd_evolve(const Common& c) {
  const auto config = load(c);
  prepare_out(c);
  const auto runs = run_evolution(config);
  bool failed = false;
  for (const auto& run : runs) {
    const std::string stem = "evolution_g" + g_tag(run.g_over_delta_eps);
    emit_table(c, stem, io::evolution_table(run));
    if (const auto* ex = run.find(Method::exact))
      emit_table(c, stem + "_states", io::state_probability_table(*ex));
    if (c.plot) io::write_text(out_path(c, stem + ".svg"), io::evolution_svg(run));

    std::cout << "g/de=" << g_tag(run.g_over_delta_eps) << "  " << run.regime << "\n";
    for (const auto& [k, e] : run.pairwise)
      std::cout << "  sup|dp10| " << k << " = " << e.p10 << ", sup|dp01| = " << e.p01 << "\n";
    for (const auto& f : run.failures) {
      std::cerr << "  " << to_string(f.method) << " failed: " << f.message << "\n";
      failed = true;
    }
  }
  io::write_json(out_path(c, "summary.json"), summary_json(runs, config));
  return failed ? kNumerical : kOk;
}

int cmd_sweep(const Common& c) {
  const auto config = load(c);
  prepare_out(c);
  const auto points = fidelity_sweep(config, {Method::exact});
  bool failed = false;
  for (const auto& p : points) {
    if (p.error) {
      std::cerr << "g/de=" << g_tag(p.g_over_delta_eps) << " failed: " << *p.error << "\n";
      failed = true;
    }
  }
  emit_table(c, "sweep", io::sweep_table(points));
  if (c.plot) io::write_text(out_path(c, "sweep.svg"), io::sweep_svg(points));
  std::cout << points.size() << " sweep points written to " << c.out << "\n";
  return failed ? kNumerical : kOk;
}

int cmd_spectrum(const Common& c) {
  const auto config = load(c);
  prepare_out(c);
  const auto rows = spectrum(config);
  emit_table(c, "spectrum", io::spectrum_table(rows));
  for (const auto& r : rows)
    std::printf("g/de=%-6s %-3s W=% .9f  E_pert=% .9f  E_exact=% .9f\n",
                g_tag(r.g_over_delta_eps).c_str(), r.level.c_str(), r.w_dressed, r.e_perturbative,
                r.e_exact);
  return kOk;
}

int cmd_validate(const Common& c) {
  const auto config = load(c);
  prepare_out(c);
  const auto report = validate(config);
  for (const auto& ch : report.checks)
    std::printf("%-8s %-40s measured=%.3e threshold=%.3e %s\n", to_string(ch.status).c_str(),
                ch.name.c_str(), ch.measured, ch.threshold, ch.detail.c_str());
  io::write_json(out_path(c, "validation.json"), to_json(report));
  std::cout << (report.passed() ? "validation passed" : "validation FAILED") << "\n";
  return report.passed() ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit-resonator dynamics: exact, RWA and dressed-state perturbation theory"};
  app.require_subcommand(1);

  Common common;
  auto* evolve = app.add_subcommand("evolve", "time evolution of |1,0> for each method");
  auto* sweep = app.add_subcommand("sweep", "state-transfer fidelity against g");
  auto* val = app.add_subcommand("validate", "run the invariant checks");
  auto* spec = app.add_subcommand("spectrum", "dressed, perturbative and exact energies");
  for (auto* s : {evolve, sweep, val, spec}) add_common(s, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*evolve) return cmd_evolve(common);
    if (*sweep) return cmd_sweep(common);
    if (*val) return cmd_validate(common);
    if (*spec) return cmd_spectrum(common);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
