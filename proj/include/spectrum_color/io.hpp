#pragma once

#include <iosfwd>
#include <string>

#include "spectrum_color/graph.hpp"
#include "spectrum_color/rational.hpp"
#include "spectrum_color/spectrum.hpp"

namespace spectrum_color {

/// DIMACS-like edge list: `p edge <n> <m>` followed by m `e <u> <v>` lines,
/// 1-based. Lines starting with `c` are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& graph);

/// CSV, one matrix row per line. Entries are integers, decimals or a/b.
Spectrum<Rational> read_matrix(std::istream& in);
Spectrum<Rational> read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Spectrum<Rational>& spectrum);

}  // namespace spectrum_color
