#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "mstratio/common.hpp"

namespace mstratio {

// A single point given as its coordinate list. Used at API boundaries;
// PointSet stores coordinates contiguously.
using Point = std::vector<double>;

inline double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InputError("distance: dimension mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double distance(const Point& a, const Point& b) {
  return distance(std::span<const double>(a), std::span<const double>(b));
}

// Immutable, validated point set. Indices are stable and refer to input order;
// several algorithms (prefix disjoint-pair search, the half/half split) depend
// on that order.
class PointSet {
 public:
  // Validates and adopts a flat row-major coordinate array of n*dim doubles.
  // Rejects non-finite coordinates and any pair closer than kDupTol.
  static PointSet validate(std::vector<double> coords, std::size_t dim) {
    if (dim < 2) throw InputError("PointSet: dimension must be at least 2");
    if (coords.size() % dim != 0) {
      throw InputError("PointSet: coordinate count not a multiple of dimension");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!std::isfinite(coords[i])) {
        throw InputError("PointSet: non-finite coordinate at point " +
                         std::to_string(i / dim));
      }
    }
    PointSet ps(std::move(coords), dim);
    ps.reject_duplicates();
    return ps;
  }

  static PointSet validate(const std::vector<Point>& pts) {
    if (pts.empty()) return PointSet({}, 2);
    std::size_t dim = pts.front().size();
    std::vector<double> flat;
    flat.reserve(pts.size() * dim);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].size() != dim) {
        throw InputError("PointSet: point " + std::to_string(i) + " has dimension " +
                         std::to_string(pts[i].size()) + ", expected " +
                         std::to_string(dim));
      }
      flat.insert(flat.end(), pts[i].begin(), pts[i].end());
    }
    return validate(std::move(flat), dim);
  }

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dimension() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  const std::vector<double>& coords() const { return coords_; }
  const double* data() const { return coords_.data(); }

  // Induced sub-point-set, preserving the relative order of `indices`.
  PointSet subset(std::span<const std::uint32_t> indices) const {
    std::vector<double> flat;
    flat.reserve(indices.size() * dim_);
    for (std::uint32_t ix : indices) {
      if (ix >= size()) {
        throw InputError("subset: index " + std::to_string(ix) + " out of range");
      }
      auto p = (*this)[ix];
      flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointSet(std::move(flat), dim_);
  }

 private:
  PointSet(std::vector<double> coords, std::size_t dim)
      : dim_(dim), coords_(std::move(coords)) {}

  // Sweep over x-sorted points; only pairs with |dx| <= kDupTol can collide.
  void reject_duplicates() const {
    std::size_t n = size();
    if (n < 2) return;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const double* c = coords_.data();
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return c[a * dim_] < c[b * dim_];
    });
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::uint32_t a = order[i], b = order[j];
        if (c[b * dim_] - c[a * dim_] > kDupTol) break;
        if (distance((*this)[a], (*this)[b]) < kDupTol) {
          throw InputError("PointSet: duplicate points at indices (" +
                           std::to_string(std::min(a, b)) + ", " +
                           std::to_string(std::max(a, b)) + ")");
        }
      }
    }
  }

  std::size_t dim_;
  std::vector<double> coords_;
};

struct SpreadInfo {
  double diameter;
  double min_pair_dist;
  double spread;  // diameter / min_pair_dist
};

// Brute force over all pairs.
inline SpreadInfo diameter_and_spread(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 2) throw InputError("diameter_and_spread: need at least 2 points");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = distance(ps[i], ps[j]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return {hi, lo, hi / lo};
}

}  // namespace mstratio
