#include "spectrum_color/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectrum_color/errors.hpp"

namespace spectrum_color {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("graph line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("duplicate problem line");
      if (!(fields >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) {
        fail("expected 'p edge <n> <m>'");
      }
    } else if (tag == "e") {
      long long u = 0;
      long long v = 0;
      if (n < 0) fail("edge before problem line");
      if (!(fields >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex outside 1.." + std::to_string(n));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing field '" + extra + "'");
  }
  if (n < 0) throw ParseError("graph: missing 'p edge' line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("graph: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
  out << "p edge " << graph.order() << ' ' << graph.size() << '\n';
  for (const auto& [u, v] : graph.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

Spectrum<Rational> read_matrix(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line.front() == '#') continue;
    std::vector<Rational> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      try {
        row.push_back(parse_rational(cell));
      } catch (const ParseError& e) {
        throw ParseError("matrix line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("matrix line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " entries, found " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  const auto s = static_cast<Eigen::Index>(rows.size());
  if (s == 0 || static_cast<Eigen::Index>(rows.front().size()) != s) {
    throw ParseError("matrix must be square and non-empty");
  }
  Matrix<Rational> w(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) w(i, j) = rows[i][j];
  }
  try {
    return Spectrum<Rational>(std::move(w));
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

Spectrum<Rational> read_matrix_file(const std::string& path) {
  auto in = open_input(path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Spectrum<Rational>& spectrum) {
  const auto& w = spectrum.matrix();
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      if (j != 0) out << ',';
      out << to_string(w(i, j));
    }
    out << '\n';
  }
}

}  // namespace spectrum_color
