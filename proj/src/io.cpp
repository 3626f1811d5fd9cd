#include "filtdom/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace filtdom {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

namespace {

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<double> split_numbers(const std::string& line, std::size_t line_no) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i])))) {
      ++i;
    }
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ',' && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    double value = 0;
    const std::string token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": '" + token + "' is not a number");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

BifilteredGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list is empty");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> m) || n < 0 || m < 0 || (header >> rest)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    const auto fields = split_numbers(line, line_no);
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v s t'");
    }
    for (int c = 0; c < 2; ++c) {
      if (fields[c] < 0 || fields[c] != std::floor(fields[c]) || fields[c] >= static_cast<double>(n)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id");
      }
    }
    edges.push_back({static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]),
                     {fields[2], fields[3]}});
  }
  if (next_line()) {
    throw ParseError("line " + std::to_string(line_no) + ": more edges than the header declares");
  }
  try {
    return graph_from_edges(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

void write_edge_list(std::ostream& out, const BifilteredGraph& graph) {
  out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_double(e.grade.s) << ' '
        << format_double(e.grade.t) << '\n';
  }
}

PointCloud read_points(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto row = split_numbers(line, line_no);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " coordinates");
    }
    for (double x : row) {
      if (!std::isfinite(x)) throw ParseError("line " + std::to_string(line_no) + ": non-finite coordinate");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw ParseError("point cloud is empty");
  PointCloud points(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    }
  }
  return points;
}

void write_points(std::ostream& out, const PointCloud& points) {
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index c = 0; c < points.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_double(points(i, c));
    }
    out << '\n';
  }
}

CondensedDistances read_lower_distance_matrix(std::istream& in) {
  std::vector<double> lower;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    for (double d : split_numbers(line, line_no)) {
      if (!(d >= 0) || !std::isfinite(d)) {
        throw ParseError("line " + std::to_string(line_no) + ": distances must be finite and >= 0");
      }
      lower.push_back(d);
    }
  }
  std::size_t n = 1;
  while (n * (n - 1) / 2 < lower.size()) ++n;
  if (n * (n - 1) / 2 != lower.size() || n < 2) {
    throw ParseError(std::to_string(lower.size()) +
                     " entries do not form a strictly lower-triangular matrix");
  }
  // Row i holds d(i, 0..i-1); reorder into (i<j) condensed order.
  CondensedDistances out{n, std::vector<double>(lower.size())};
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.values[CondensedDistances::index(n, j, i)] = lower[k++];
    }
  }
  return out;
}

std::vector<double> read_values(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto row = split_numbers(line, line_no);
    if (row.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": expected one value");
    out.push_back(row.front());
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace filtdom
