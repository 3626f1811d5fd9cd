#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtdom/build.hpp"
#include "filtdom/graph.hpp"

namespace filtdom {

/// Malformed input text. The message names the line when one is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// Edge-list text: a header line `n m`, then m lines `u v s t`.
BifilteredGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const BifilteredGraph& graph);

/// One point per line; comma and/or whitespace separated coordinates. Blank
/// lines and lines starting with '#' are skipped.
PointCloud read_points(std::istream& in);
void write_points(std::ostream& out, const PointCloud& points);

/// Strictly lower-triangular distance matrix, one row per point, comma or
/// whitespace separated. The point count is inferred from the number of
/// entries, so the empty first row may be present or omitted.
CondensedDistances read_lower_distance_matrix(std::istream& in);

/// One value per line (blank and '#' lines skipped).
std::vector<double> read_values(std::istream& in);

/// Opens `path` for reading; throws std::runtime_error if that fails.
std::ifstream open_input(const std::filesystem::path& path);

/// Writes through `writer` into a temporary sibling file and renames it onto
/// `path` once the writer returns.
template <typename Writer>
void write_file_atomically(const std::filesystem::path& path, Writer&& writer);

}  // namespace filtdom

#include <fstream>

namespace filtdom {

template <typename Writer>
void write_file_atomically(const std::filesystem::path& path, Writer&& writer) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace filtdom
