#include "spectrum_color/report.hpp"

#include <sstream>

#include "spectrum_color/interference.hpp"

namespace spectrum_color {

SolveReport make_report(const Graph& graph, const Spectrum<Rational>& spectrum,
                        Coloring coloring, std::string strategy, RngSeed seed, bool feasible,
                        int palette, std::int64_t iterations) {
  SolveReport report;
  if (coloring.complete() && graph.order() > 0) {
    const Vector<Rational> per_vertex = vertex_interferences(graph, spectrum, coloring);
    report.max_interference = per_vertex.maxCoeff();
    report.sum_interference = per_vertex.sum();
  }
  report.distinct_colors = coloring.distinct_colors();
  report.coloring = std::move(coloring);
  report.strategy = std::move(strategy);
  report.seed = seed;
  report.feasible = feasible;
  report.palette = palette;
  report.iterations = iterations;
  return report;
}

std::string report_csv_header() {
  return "strategy,seed,feasible,max_interference,max_interference_decimal,sum_interference,"
         "distinct_colors,palette,iterations,coloring";
}

std::string to_csv_record(const SolveReport& report) {
  std::ostringstream out;
  out << report.strategy << ',' << report.seed.value << ',' << (report.feasible ? 1 : 0) << ','
      << to_string(report.max_interference) << ',' << to_double(report.max_interference) << ','
      << to_string(report.sum_interference) << ',' << report.distinct_colors << ','
      << report.palette << ',' << report.iterations << ',';
  const auto colors = report.coloring.colors();
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (v != 0) out << ' ';
    out << colors[v];
  }
  return out.str();
}

std::string to_pretty_text(const SolveReport& report) {
  std::ostringstream out;
  out << "strategy          " << report.strategy << '\n'
      << "seed              " << report.seed.value << '\n'
      << "feasible          " << (report.feasible ? "yes" : "no") << '\n'
      << "max interference  " << to_string(report.max_interference) << " ("
      << to_double(report.max_interference) << ")\n"
      << "sum interference  " << to_string(report.sum_interference) << " ("
      << to_double(report.sum_interference) << ")\n"
      << "distinct colors   " << report.distinct_colors << '\n'
      << "palette           " << report.palette << '\n'
      << "iterations        " << report.iterations << '\n'
      << "coloring          ";
  const auto colors = report.coloring.colors();
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (v != 0) out << ' ';
    out << (v + 1) << ':' << colors[v];
  }
  out << '\n';
  return out.str();
}

}  // namespace spectrum_color
