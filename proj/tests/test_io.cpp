#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jcpt/io.hpp"

using namespace jcpt;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "jcpt_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig small_config() {
  RunConfig c;
  c.grid_points = 301;
  return c;
}

}  // namespace

TEST_CASE("format_number round-trips doubles") {
  for (double v : {0.0, 1.0, -1.0 / 3.0, 6.02214076e23, 1e-300, 0.1 + 0.2}) {
    CHECK(std::stod(io::format_number(v)) == v);
  }
  CHECK(io::format_number(std::nan("")) == "nan");
}

TEST_CASE("evolution CSV round-trips bit-exactly") {
  const auto run = run_evolution(small_config(), 0.3);
  const auto table = io::evolution_table(run);
  const auto path = scratch("evolution.csv");
  io::write_csv(path.string(), table);
  const auto back = io::read_csv(path.string());
  REQUIRE(back.header == table.header);
  REQUIRE(back.rows.size() == std::size_t(run.series.front().size()));

  CHECK(back.header.front() == "t");
  for (const char* col : {"re_c10_exact", "im_c10_exact", "p10_exact", "re_c01_rwa", "im_c01_rwa",
                          "p01_rwa", "p01_perturbative", "p_leak_exact",
                          "p_leak_perturbative_inferred"})
    CHECK_NOTHROW(back.column(col));

  const auto* ex = run.find(Method::exact);
  const auto* pert = run.find(Method::perturbative);
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    const auto k = Eigen::Index(i);
    CHECK(back.number(i, "t") == ex->times[i]);
    CHECK(back.number(i, "re_c10_exact") == ex->c10(k).real());
    CHECK(back.number(i, "im_c01_exact") == ex->c01(k).imag());
    CHECK(back.number(i, "p10_perturbative") == pert->p10(k));
    CHECK(back.number(i, "p_leak_exact") == ex->leakage(k));
  }
}

TEST_CASE("state probability companion table") {
  RunConfig c = small_config();
  c.methods = {Method::exact};
  const auto run = run_evolution(c, 0.2);
  const auto t = io::state_probability_table(*run.find(Method::exact));
  CHECK(t.header.size() == 1 + 2 * std::size_t(c.n_max + 1));
  double total = 0.0;
  for (std::size_t k = 1; k < t.header.size(); ++k) total += std::stod(t.rows[100][k]);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sweep and spectrum tables") {
  RunConfig c = small_config();
  c.g_over_delta_eps = {0.02, 0.01};
  const auto t = io::sweep_table(fidelity_sweep(c));
  CHECK(t.header == std::vector<std::string>{"g_over_de", "t_min", "f_jj", "f_res", "method"});
  CHECK(t.rows.size() == 2);
  CHECK(t.number(0, "g_over_de") == 0.01);
  CHECK(t.rows[0][4] == "exact");

  const auto j = io::table_json(t);
  CHECK(j["f_jj"].size() == 2);
  CHECK(j["method"][0] == "exact");
  CHECK(j["g_over_de"][1].get<double>() == 0.02);

  const auto s = io::spectrum_table(spectrum(c));
  CHECK(s.header == std::vector<std::string>{"g_over_de", "level", "w_dressed", "e_perturbative", "e_exact"});
}

TEST_CASE("identical configs give byte-identical files") {
  const auto c = small_config();
  const auto write_all = [&](const std::string& tag) {
    const auto runs = run_evolution(c);
    io::write_csv(scratch("det_" + tag + ".csv").string(), io::evolution_table(runs.front()));
    io::write_json(scratch("det_" + tag + ".json").string(), summary_json(runs, c));
    io::write_text(scratch("det_" + tag + ".svg").string(), io::evolution_svg(runs.back()));
  };
  write_all("a");
  write_all("b");
  for (const char* ext : {".csv", ".json", ".svg"})
    CHECK(slurp(scratch(std::string("det_a") + ext)) == slurp(scratch(std::string("det_b") + ext)));
}

TEST_CASE("SVG output") {
  RunConfig c = small_config();
  c.g_over_delta_eps = {0.1, 0.2};
  const auto svg = io::sweep_svg(fidelity_sweep(c));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("F_res exact") != std::string::npos);

  io::PlotSpec spec;
  spec.title = "a < b & c";
  const auto s = io::render_svg(spec, {{"line", {0.0, 1.0}, {0.0, 2.0}, "#000", false}});
  CHECK(s.find("a &lt; b &amp; c") != std::string::npos);
}

TEST_CASE("I/O errors name the path") {
  try {
    io::write_csv("/nonexistent_dir/x.csv", io::Table{});
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent_dir/x.csv") != std::string::npos);
  }
}
