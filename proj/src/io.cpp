#include "jcpt/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jcpt/errors.hpp"

namespace jcpt::io {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* method_color(Method m) {
  switch (m) {
    case Method::exact: return "#000000";
    case Method::rwa: return "#1f77b4";
    case Method::perturbative: return "#d62728";
  }
  return "#7f7f7f";
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw DomainError("table has no column '" + name + "'");
  return std::size_t(it - header.begin());
}

double Table::number(std::size_t row, const std::string& name) const {
  return std::stod(rows.at(row).at(column(name)));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const Table& t) {
  auto out = open_out(path);
  for (std::size_t k = 0; k < t.header.size(); ++k) out << (k ? "," : "") << t.header[k];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k];
    out << '\n';
  }
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  Table t;
  std::string line;
  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line))
    if (!line.empty()) t.rows.push_back(split(line));
  return t;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

void write_text(const std::string& path, const std::string& content) {
  auto out = open_out(path);
  out << content;
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

Table evolution_table(const EvolutionRun& run) {
  Table t;
  t.header.push_back("t");
  for (const auto& s : run.series) {
    const auto m = to_string(s.method);
    for (const char* st : {"c10", "c01"}) {
      const std::string tag = std::string(st).substr(1);
      t.header.push_back("re_" + std::string(st) + "_" + m);
      t.header.push_back("im_" + std::string(st) + "_" + m);
      t.header.push_back("p" + tag + "_" + m);
    }
  }
  const auto* exact = run.find(Method::exact);
  const auto* pert = run.find(Method::perturbative);
  if (exact) t.header.push_back("p_leak_exact");
  if (pert) t.header.push_back("p_leak_perturbative_inferred");

  if (run.series.empty()) return t;
  const auto n = run.series.front().size();
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<std::string> row{format_number(run.series.front().times[std::size_t(i)])};
    for (const auto& s : run.series) {
      for (const Complex c : {s.c10(i), s.c01(i)}) {
        row.push_back(format_number(c.real()));
        row.push_back(format_number(c.imag()));
        row.push_back(format_number(std::norm(c)));
      }
    }
    if (exact) row.push_back(format_number(exact->leakage(i)));
    if (pert) row.push_back(format_number(pert->leakage(i)));
    t.add_row(std::move(row));
  }
  return t;
}

Table state_probability_table(const AmplitudeSeries& exact) {
  Table t;
  t.header.push_back("t");
  for (const auto& st : exact.states)
    t.header.push_back("p" + std::to_string(st.m) + "_" + std::to_string(st.n));
  for (Eigen::Index i = 0; i < exact.size(); ++i) {
    std::vector<std::string> row{format_number(exact.times[std::size_t(i)])};
    for (Eigen::Index k = 0; k < exact.amplitudes.cols(); ++k)
      row.push_back(format_number(std::norm(exact.amplitudes(i, k))));
    t.add_row(std::move(row));
  }
  return t;
}

Table sweep_table(const std::vector<FidelityPoint>& points) {
  Table t;
  t.header = {"g_over_de", "t_min", "f_jj", "f_res", "method"};
  for (const auto& p : points)
    t.add_row({format_number(p.g_over_delta_eps), format_number(p.t_min), format_number(p.f_jj),
               format_number(p.f_res), to_string(p.method)});
  return t;
}

Table spectrum_table(const std::vector<SpectrumRow>& rows) {
  Table t;
  t.header = {"g_over_de", "level", "w_dressed", "e_perturbative", "e_exact"};
  for (const auto& r : rows)
    t.add_row({format_number(r.g_over_delta_eps), r.level, format_number(r.w_dressed),
               format_number(r.e_perturbative), format_number(r.e_exact)});
  return t;
}

nlohmann::json table_json(const Table& t) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t k = 0; k < t.header.size(); ++k) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& r : t.rows) {
      const auto& cell = r.at(k);
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end && *end == '\0' && !cell.empty() && std::isfinite(v))
        col.push_back(v);
      else
        col.push_back(cell);
    }
    j[t.header[k]] = col;
  }
  return j;
}

std::string render_svg(const PlotSpec& spec, const std::vector<Line>& lines) {
  constexpr double W = 720, H = 440, L = 70, R = 170, T = 40, B = 55;
  const double pw = W - L - R, ph = H - T - B;
  const auto sx = [&](double x) { return L + (x - spec.x_min) / (spec.x_max - spec.x_min) * pw; };
  const auto sy = [&](double y) { return T + (spec.y_max - y) / (spec.y_max - spec.y_min) * ph; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << L + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << xml_escape(spec.title) << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double fx = spec.x_min + (spec.x_max - spec.x_min) * k / 5.0;
    const double fy = spec.y_min + (spec.y_max - spec.y_min) * k / 5.0;
    os << "<line x1=\"" << sx(fx) << "\" y1=\"" << T + ph << "\" x2=\"" << sx(fx) << "\" y2=\""
       << T + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << sx(fx) << "\" y=\"" << T + ph + 18 << "\" text-anchor=\"middle\">"
       << format_number(std::round(fx * 1000.0) / 1000.0) << "</text>\n";
    os << "<line x1=\"" << L - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << L << "\" y2=\""
       << sy(fy) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << L - 8 << "\" y=\"" << sy(fy) + 4 << "\" text-anchor=\"end\">"
       << format_number(std::round(fy * 1000.0) / 1000.0) << "</text>\n";
  }
  os << "<text x=\"" << L + pw / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
     << xml_escape(spec.x_label) << "</text>\n";
  os << "<text transform=\"translate(18," << T + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << xml_escape(spec.y_label) << "</text>\n";

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& ln = lines[k];
    os << "<polyline fill=\"none\" stroke=\"" << ln.color << "\" stroke-width=\"1.3\""
       << (ln.dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
    for (std::size_t i = 0; i < ln.x.size(); ++i) {
      const double y = std::clamp(ln.y[i], spec.y_min, spec.y_max);
      os << sx(ln.x[i]) << "," << sy(y) << (i + 1 < ln.x.size() ? " " : "");
    }
    os << "\"/>\n";
    const double ly = T + 14 + 18 * double(k);
    os << "<line x1=\"" << L + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << L + pw + 36
       << "\" y2=\"" << ly << "\" stroke=\"" << ln.color << "\" stroke-width=\"1.5\""
       << (ln.dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    os << "<text x=\"" << L + pw + 42 << "\" y=\"" << ly + 4 << "\">" << xml_escape(ln.label)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string evolution_svg(const EvolutionRun& run) {
  std::vector<Line> lines;
  double t_max = 1.0;
  for (const auto& s : run.series) {
    t_max = s.times.back();
    Line p10{"|c10|^2 " + to_string(s.method), s.times, {}, method_color(s.method), false};
    Line p01{"|c01|^2 " + to_string(s.method), s.times, {}, method_color(s.method), true};
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      p10.y.push_back(s.p10(i));
      p01.y.push_back(s.p01(i));
    }
    lines.push_back(std::move(p10));
    lines.push_back(std::move(p01));
  }
  PlotSpec spec;
  spec.title = "g/de = " + format_number(run.g_over_delta_eps);
  spec.x_label = "t (1/omega0)";
  spec.y_label = "probability";
  spec.x_max = t_max > 0.0 ? t_max : 1.0;
  return render_svg(spec, lines);
}

std::string sweep_svg(const std::vector<FidelityPoint>& points) {
  std::vector<Line> lines;
  for (Method m : {Method::exact, Method::rwa, Method::perturbative}) {
    Line jj{"F_JJ " + to_string(m), {}, {}, method_color(m), false};
    Line res{"F_res " + to_string(m), {}, {}, method_color(m), true};
    for (const auto& p : points) {
      if (p.method != m || p.error) continue;
      jj.x.push_back(p.g_over_delta_eps);
      jj.y.push_back(p.f_jj);
      res.x.push_back(p.g_over_delta_eps);
      res.y.push_back(p.f_res);
    }
    if (jj.x.empty()) continue;
    lines.push_back(std::move(jj));
    lines.push_back(std::move(res));
  }
  PlotSpec spec;
  spec.title = "state-transfer fidelity";
  spec.x_label = "g / delta_eps";
  spec.y_label = "fidelity";
  double gmax = 0.0;
  for (const auto& p : points) gmax = std::max(gmax, p.g_over_delta_eps);
  spec.x_max = gmax > 0.0 ? gmax : 1.0;
  return render_svg(spec, lines);
}

}  // namespace jcpt::io
