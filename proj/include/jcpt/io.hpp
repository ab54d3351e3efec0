#pragma once
// Flat-file output: CSV tables, JSON documents and static SVG line plots.

#include <string>
#include <vector>

#include "json.hpp"

#include "jcpt/experiments.hpp"

namespace jcpt::io {

/// A CSV table whose cells are either numbers or strings. Numbers are
/// printed with 17 significant digits so they parse back bit-exactly.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

std::string format_number(double v);

void write_csv(const std::string& path, const Table& t);
Table read_csv(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

/// Columns: t, then re/im/p for c10 and c01 per method, then p_leak_exact and
/// the inferred perturbative leakage when those methods are present.
Table evolution_table(const EvolutionRun& run);
/// Exact per-state probabilities p_mn for every basis state.
Table state_probability_table(const AmplitudeSeries& exact);
Table sweep_table(const std::vector<FidelityPoint>& points);
Table spectrum_table(const std::vector<SpectrumRow>& rows);

/// Table as a JSON object of column arrays.
nlohmann::json table_json(const Table& t);

struct Line {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
};

std::string render_svg(const PlotSpec& spec, const std::vector<Line>& lines);
void write_text(const std::string& path, const std::string& content);

/// |c10|^2 and |c01|^2 of every method in the run on fixed [0,1] axes.
std::string evolution_svg(const EvolutionRun& run);
std::string sweep_svg(const std::vector<FidelityPoint>& points);

}  // namespace jcpt::io
