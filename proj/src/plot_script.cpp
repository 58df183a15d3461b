#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "rigclique/bench.hpp"
#include "rigclique/errors.hpp"

namespace rigclique {

namespace {

// Same rendering as the CSV writer, so string comparisons in gnuplot match.
std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Panel {
  std::string alpha;
  std::size_t n;
  std::size_t k;
  friend bool operator==(const Panel&, const Panel&) = default;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

std::string plot_script(const CurveTable& table, const std::filesystem::path& csv_path) {
  if (table.empty()) throw InputError("plot script: curve table is empty");

  std::vector<Panel> panels;
  std::vector<Algorithm> algos;
  for (const auto& pt : table) {
    Panel panel{csv_number(pt.alpha), pt.n, pt.k};
    if (std::find(panels.begin(), panels.end(), panel) == panels.end()) panels.push_back(panel);
    if (std::find(algos.begin(), algos.end(), pt.algorithm) == algos.end()) algos.push_back(pt.algorithm);
  }

  const std::string data = quote(csv_path.string());
  std::filesystem::path png = csv_path;
  png.replace_extension(".png");

  std::ostringstream s;
  s << "# failure probability and clique fraction against p\n";
  s << "set datafile separator ','\n";
  s << "set terminal pngcairo size 1200," << 400 * panels.size() << "\n";
  s << "set output " << quote(png.string()) << "\n";
  s << "set multiplot layout " << panels.size() << ",2\n";
  s << "set xlabel 'p'\n";
  s << "set key top left\n";
  s << "set grid\n";

  auto series = [&](const Panel& panel, Algorithm a, int column) {
    std::ostringstream f;
    f << data << " using 4:(strcol(1) eq '" << panel.alpha << "' && strcol(2) eq '" << panel.n
      << "' && strcol(5) eq '" << panel.k << "' && strcol(6) eq '" << to_string(a) << "' ? $"
      << column << " : 1/0) with linespoints title '" << to_string(a) << "'";
    return f.str();
  };

  for (const auto& panel : panels) {
    const std::string tag =
        "alpha=" + panel.alpha + ", n=" + std::to_string(panel.n) + ", k=" + std::to_string(panel.k);
    s << "\nset title 'failure probability (" << tag << ")'\n";
    s << "set ylabel 'failure rate'\n";
    s << "set yrange [0:1.05]\n";
    s << "plot ";
    for (std::size_t i = 0; i < algos.size(); ++i)
      s << (i ? ", \\\n     " : "") << series(panel, algos[i], 9);
    s << "\n";
    s << "set title 'approximation guarantee (" << tag << ")'\n";
    s << "set ylabel 'mean fraction'\n";
    s << "set yrange [0:*]\n";
    s << "plot ";
    for (std::size_t i = 0; i < algos.size(); ++i)
      s << (i ? ", \\\n     " : "") << series(panel, algos[i], 10);
    s << "\n";
  }
  s << "\nunset multiplot\n";
  return s.str();
}

void emit_plot_script(const CurveTable& table, const std::filesystem::path& csv_path,
                      const std::filesystem::path& script_path) {
  const std::string script = plot_script(table, csv_path);
  std::ofstream out(script_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + script_path.string() + " for writing");
  out << script;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + script_path.string());
}

}  // namespace rigclique
