#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mstratio/geometry.hpp"

namespace mstratio {

// Text point format: one point per line, coordinates separated by commas or
// whitespace, '#' starts a comment line. Dimension is inferred from the first
// data line and enforced thereafter.
inline PointSet read_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line) {
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    }
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos || line[start] == '#') continue;

    Point p;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        p.push_back(v);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": bad coordinate '" +
                         tok + "'");
      }
    }
    if (dim == 0) {
      if (p.size() < 2) {
        throw InputError("line " + std::to_string(lineno) +
                         ": points need at least 2 coordinates");
      }
      dim = p.size();
    } else if (p.size() != dim) {
      throw InputError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(dim) + " coordinates, got " +
                       std::to_string(p.size()));
    }
    pts.push_back(std::move(p));
  }
  return PointSet::validate(pts);
}

inline PointSet read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return read_points(in);
}

inline void write_points(std::ostream& os, const PointSet& ps,
                         const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto p = ps[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) os << ' ';
      os << format_double(p[k]);
    }
    os << '\n';
  }
}

inline void write_points(const std::filesystem::path& path, const PointSet& ps,
                         const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write_points(out, ps, comments);
}

}  // namespace mstratio
