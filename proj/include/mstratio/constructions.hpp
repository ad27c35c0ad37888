#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

#include "mstratio/geometry.hpp"
#include "mstratio/rng.hpp"

namespace mstratio {

enum class GeneratorKind {
  Equilateral,    // unit equilateral triangle, n = 3
  Rhombus60,      // unit rhombus with a 60 degree angle, n = 4
  Square,         // unit square corners, n = 4
  Hexagon5,       // 0, 1, w, w^2, w^3 for the 6th root of unity w, n = 5
  CollinearEps,   // (0,0), cluster inside (0, eps/n) on the x-axis, (1,0)
  UniformRandom,  // n points uniform in [0,1]^d, seeded
  GridDense,      // ceil(sqrt n) x ceil(sqrt n) unit grid truncated to n points
  TwoClusters,    // two congruent regular polygons of unit side, gap apart
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformRandom;
  std::size_t n = 0;  // 0 = kind default where the kind fixes n
  double epsilon = 0.1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t dimension = 2;
  double gap = 10.0;  // two_clusters: distance between cluster centers
};

inline std::string_view generator_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Equilateral: return "equilateral";
    case GeneratorKind::Rhombus60: return "rhombus60";
    case GeneratorKind::Square: return "square";
    case GeneratorKind::Hexagon5: return "hexagon5";
    case GeneratorKind::CollinearEps: return "collinear_eps";
    case GeneratorKind::UniformRandom: return "uniform_random";
    case GeneratorKind::GridDense: return "grid_dense";
    case GeneratorKind::TwoClusters: return "two_clusters";
  }
  return "?";
}

inline GeneratorKind parse_generator(std::string_view name) {
  for (GeneratorKind k :
       {GeneratorKind::Equilateral, GeneratorKind::Rhombus60, GeneratorKind::Square,
        GeneratorKind::Hexagon5, GeneratorKind::CollinearEps,
        GeneratorKind::UniformRandom, GeneratorKind::GridDense,
        GeneratorKind::TwoClusters}) {
    if (generator_name(k) == name) return k;
  }
  throw InputError("unknown generator kind '" + std::string(name) + "'");
}

namespace detail {

inline std::size_t fixed_n(const GeneratorSpec& spec, std::size_t required) {
  if (spec.n != 0 && spec.n != required) {
    throw InputError(std::string(generator_name(spec.kind)) + " forces n = " +
                     std::to_string(required));
  }
  return required;
}

}  // namespace detail

// Deterministic for a fixed spec; the random kinds draw from the seeded stream.
inline PointSet generate(const GeneratorSpec& spec) {
  const double root3_2 = std::sqrt(3.0) / 2.0;
  std::vector<Point> pts;
  switch (spec.kind) {
    case GeneratorKind::Equilateral: {
      detail::fixed_n(spec, 3);
      pts = {{0, 0}, {1, 0}, {0.5, root3_2}};
      break;
    }
    case GeneratorKind::Rhombus60: {
      detail::fixed_n(spec, 4);
      pts = {{0, 0}, {1, 0}, {1.5, root3_2}, {0.5, root3_2}};
      break;
    }
    case GeneratorKind::Square: {
      detail::fixed_n(spec, 4);
      pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      break;
    }
    case GeneratorKind::Hexagon5: {
      detail::fixed_n(spec, 5);
      pts = {{0, 0}, {1, 0}, {0.5, root3_2}, {-0.5, root3_2}, {-1, 0}};
      break;
    }
    case GeneratorKind::CollinearEps: {
      // Endpoints (0,0) and (1,0); the n-2 interior points sit equally spaced
      // inside (eps/(2n), eps/n) on the x-axis, clear of both duplicate
      // tolerance and the interval ends.
      std::size_t n = spec.n;
      if (n < 3) throw InputError("collinear_eps: need n >= 3");
      if (!(spec.epsilon > 0.0) || spec.epsilon >= 1.0) {
        throw InputError("collinear_eps: epsilon must be in (0, 1)");
      }
      double lo = spec.epsilon / (2.0 * double(n));
      double hi = spec.epsilon / double(n);
      std::size_t m = n - 2;
      pts.push_back({0, 0});
      for (std::size_t j = 1; j <= m; ++j) {
        pts.push_back({lo + double(j) * (hi - lo) / double(m + 1), 0});
      }
      pts.push_back({1, 0});
      break;
    }
    case GeneratorKind::UniformRandom: {
      if (spec.n < 1) throw InputError("uniform_random: need n >= 1");
      if (spec.dimension < 2) throw InputError("uniform_random: dimension >= 2");
      RandomStream rs(spec.seed);
      for (std::size_t i = 0; i < spec.n; ++i) {
        Point p(spec.dimension);
        for (double& c : p) c = rs.uniform01();
        pts.push_back(std::move(p));
      }
      break;
    }
    case GeneratorKind::GridDense: {
      if (spec.n < 1) throw InputError("grid_dense: need n >= 1");
      auto side = static_cast<std::size_t>(std::ceil(std::sqrt(double(spec.n))));
      for (std::size_t i = 0; i < spec.n; ++i) {
        pts.push_back({double(i % side), double(i / side)});
      }
      break;
    }
    case GeneratorKind::TwoClusters: {
      // Two congruent regular (n/2)-gons with unit side, centers `gap` apart.
      // For cluster sizes up to 6 no intra-cluster disk pair is disjoint, so
      // with a generous gap exactly the cross pairs are.
      std::size_t n = spec.n;
      if (n < 4 || n % 2 != 0) throw InputError("two_clusters: need even n >= 4");
      if (!(spec.gap > 0.0)) throw InputError("two_clusters: gap must be positive");
      std::size_t m = n / 2;
      double circum = 0.5 / std::sin(std::numbers::pi / double(m));
      for (std::size_t cluster = 0; cluster < 2; ++cluster) {
        double cxo = cluster ? spec.gap : 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          double a = 2.0 * std::numbers::pi * double(j) / double(m);
          pts.push_back({cxo + circum * std::cos(a), circum * std::sin(a)});
        }
      }
      break;
    }
  }
  return PointSet::validate(pts);
}

}  // namespace mstratio
