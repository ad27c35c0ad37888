#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>

#include "mstratio/disks.hpp"
#include "mstratio/emst.hpp"
#include "mstratio/partition.hpp"

namespace mstratio {

// What to draw, all over the same planar point set. Any of the optional layers
// may be null/empty: a bare scene is a plain point plot, a scene with only
// `tree` matches the usual EMST figure, adding disks and part trees gives the
// bipartition figure.
struct SvgScene {
  const PointSet* points = nullptr;
  const SpanningTree* tree = nullptr;       // drawn in grey under everything
  const SpanningTree* red_tree = nullptr;   // MST of the red part
  const SpanningTree* blue_tree = nullptr;  // MST of the blue part
  const Bipartition* parts = nullptr;       // colors the points
  std::vector<std::pair<std::uint32_t, double>> disks;  // (center index, radius)
};

namespace detail {

inline void svg_line(std::ostream& os, double x1, double y1, double x2, double y2,
                     const char* color, double width) {
  os << "  <line x1=\"" << format_double(x1) << "\" y1=\"" << format_double(y1)
     << "\" x2=\"" << format_double(x2) << "\" y2=\"" << format_double(y2)
     << "\" stroke=\"" << color << "\" stroke-width=\"" << format_double(width)
     << "\"/>\n";
}

}  // namespace detail

inline void emit_svg(const SvgScene& scene, std::ostream& os) {
  if (!scene.points) throw InputError("emit_svg: no point set");
  const PointSet& ps = *scene.points;
  if (ps.dimension() != 2) throw InputError("emit_svg: planar point sets only");
  if (ps.empty()) throw InputError("emit_svg: empty point set");

  double min_x = ps[0][0], max_x = ps[0][0];
  double min_y = ps[0][1], max_y = ps[0][1];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    min_x = std::min(min_x, ps[i][0]);
    max_x = std::max(max_x, ps[i][0]);
    min_y = std::min(min_y, ps[i][1]);
    max_y = std::max(max_y, ps[i][1]);
  }
  for (auto [ix, r] : scene.disks) {
    min_x = std::min(min_x, ps[ix][0] - r);
    max_x = std::max(max_x, ps[ix][0] + r);
    min_y = std::min(min_y, ps[ix][1] - r);
    max_y = std::max(max_y, ps[ix][1] + r);
  }
  double ext = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double margin = 0.05 * ext;
  // Flip y so the figure reads with y upward.
  auto fy = [&](double y) { return max_y - y + margin; };
  auto fx = [&](double x) { return x - min_x + margin; };
  double width = (max_x - min_x) + 2 * margin;
  double height = (max_y - min_y) + 2 * margin;
  double stroke = ext / 400.0;
  double dot = ext / 120.0;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
     << format_double(width) << ' ' << format_double(height) << "\" width=\"720\">\n";

  if (scene.tree) {
    for (const Edge& e : scene.tree->edges) {
      detail::svg_line(os, fx(ps[e.u][0]), fy(ps[e.u][1]), fx(ps[e.v][0]),
                       fy(ps[e.v][1]), "#b0b0b0", stroke);
    }
  }
  for (auto [ix, r] : scene.disks) {
    os << "  <circle cx=\"" << format_double(fx(ps[ix][0])) << "\" cy=\""
       << format_double(fy(ps[ix][1])) << "\" r=\"" << format_double(r)
       << "\" fill=\"#2ca02c\" fill-opacity=\"0.08\" stroke=\"#2ca02c\""
       << " stroke-width=\"" << format_double(stroke) << "\"/>\n";
  }
  if (scene.red_tree) {
    for (const Edge& e : scene.red_tree->edges) {
      detail::svg_line(os, fx(ps[e.u][0]), fy(ps[e.u][1]), fx(ps[e.v][0]),
                       fy(ps[e.v][1]), "#d62728", 1.6 * stroke);
    }
  }
  if (scene.blue_tree) {
    for (const Edge& e : scene.blue_tree->edges) {
      detail::svg_line(os, fx(ps[e.u][0]), fy(ps[e.u][1]), fx(ps[e.v][0]),
                       fy(ps[e.v][1]), "#1f77b4", 1.6 * stroke);
    }
  }

  std::vector<char> is_blue(ps.size(), 0);
  if (scene.parts) {
    for (std::uint32_t ix : scene.parts->blue) is_blue[ix] = 1;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const char* color = scene.parts ? (is_blue[i] ? "#1f77b4" : "#d62728") : "#333333";
    os << "  <circle cx=\"" << format_double(fx(ps[i][0])) << "\" cy=\""
       << format_double(fy(ps[i][1])) << "\" r=\"" << format_double(dot)
       << "\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
}

inline void emit_svg(const SvgScene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  emit_svg(scene, out);
  out.flush();
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace mstratio
