#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mstratio/geometry.hpp"

namespace mstratio {

struct Edge {
  std::uint32_t u;  // u < v, original point indices
  std::uint32_t v;
  double length;
};

// One minimum spanning tree. Only total_length is unique; the edge set is the
// deterministic minimizer under the lexicographic tie-break below.
struct SpanningTree {
  std::size_t n = 0;
  std::vector<Edge> edges;
  double total_length = 0.0;
};

namespace detail {

struct PrimScratch {
  std::vector<double> key;             // squared distance to the growing tree
  std::vector<std::uint32_t> parent;   // local index of the tree endpoint
  std::vector<std::uint32_t> rem;      // local indices not yet in the tree
};

template <int Dim>
inline double dist2(const double* a, const double* b, std::size_t dim) {
  if constexpr (Dim == 2) {
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
  } else if constexpr (Dim == 3) {
    double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
  } else {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double d = a[i] - b[i];
      s += d * d;
    }
    return s;
  }
}

// Lexicographic order on index pairs after normalizing to (min, max).
inline bool pair_less(std::uint32_t a1, std::uint32_t b1, std::uint32_t a2,
                      std::uint32_t b2) {
  std::uint32_t lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
  std::uint32_t lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
  return lo1 != lo2 ? lo1 < lo2 : hi1 < hi2;
}

// Dense Prim over the sub-point-set idx[0..m), O(m^2) time, O(m) space.
// idx must be strictly increasing so that local index order matches the
// original order; ties between equal-length candidate edges go to the
// lexicographically smallest (u, v) pair, making the tree deterministic.
template <int Dim>
double prim_core(const double* coords, std::size_t dim, const std::uint32_t* idx,
                 std::size_t m, PrimScratch& s, std::vector<Edge>* edges) {
  if (m <= 1) return 0.0;
  s.key.resize(m);
  s.parent.resize(m);
  s.rem.resize(m - 1);
  auto pt = [&](std::uint32_t local) { return coords + std::size_t(idx[local]) * dim; };

  const double* base = pt(0);
  for (std::uint32_t v = 1; v < m; ++v) {
    s.key[v] = dist2<Dim>(base, pt(v), dim);
    s.parent[v] = 0;
    s.rem[v - 1] = v;
  }

  double total = 0.0;
  std::size_t live = m - 1;
  while (live > 0) {
    // Single fused scan: pick the current minimum-key vertex.
    std::size_t best_t = 0;
    for (std::size_t t = 1; t < live; ++t) {
      std::uint32_t v = s.rem[t], b = s.rem[best_t];
      if (s.key[v] < s.key[b] ||
          (s.key[v] == s.key[b] &&
           pair_less(s.parent[v], v, s.parent[b], b))) {
        best_t = t;
      }
    }
    std::uint32_t a = s.rem[best_t];
    total += std::sqrt(s.key[a]);
    if (edges) {
      std::uint32_t lo = std::min(s.parent[a], a), hi = std::max(s.parent[a], a);
      edges->push_back({idx[lo], idx[hi], std::sqrt(s.key[a])});
    }
    s.rem[best_t] = s.rem[--live];

    const double* pa = pt(a);
    for (std::size_t t = 0; t < live; ++t) {
      std::uint32_t v = s.rem[t];
      double dd = dist2<Dim>(pa, pt(v), dim);
      if (dd < s.key[v] ||
          (dd == s.key[v] && pair_less(a, v, s.parent[v], v))) {
        s.key[v] = dd;
        s.parent[v] = a;
      }
    }
  }
  return total;
}

inline double prim_indices(const double* coords, std::size_t dim,
                           const std::uint32_t* idx, std::size_t m,
                           PrimScratch& s, std::vector<Edge>* edges = nullptr) {
  switch (dim) {
    case 2:
      return prim_core<2>(coords, dim, idx, m, s, edges);
    case 3:
      return prim_core<3>(coords, dim, idx, m, s, edges);
    default:
      return prim_core<-1>(coords, dim, idx, m, s, edges);
  }
}

inline std::vector<std::uint32_t> checked_sorted_indices(
    const PointSet& ps, std::span<const std::uint32_t> indices) {
  std::vector<std::uint32_t> v(indices.begin(), indices.end());
  for (std::uint32_t ix : v) {
    if (ix >= ps.size()) {
      throw InputError("subset index " + std::to_string(ix) + " out of range [0, " +
                       std::to_string(ps.size()) + ")");
    }
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

inline SpanningTree emst(const PointSet& ps) {
  SpanningTree tree;
  tree.n = ps.size();
  if (tree.n <= 1) return tree;  // w of the empty or singleton set is 0
  std::vector<std::uint32_t> idx(tree.n);
  std::iota(idx.begin(), idx.end(), 0);
  detail::PrimScratch scratch;
  tree.edges.reserve(tree.n - 1);
  tree.total_length = detail::prim_indices(ps.data(), ps.dimension(), idx.data(),
                                           tree.n, scratch, &tree.edges);
  std::sort(tree.edges.begin(), tree.edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return tree;
}

inline double emst_weight(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n <= 1) return 0.0;
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  detail::PrimScratch scratch;
  return detail::prim_indices(ps.data(), ps.dimension(), idx.data(), n, scratch);
}

// EMST length of the induced sub-point-set; 0 for at most one index.
inline double emst_weight_subset(const PointSet& ps,
                                 std::span<const std::uint32_t> indices) {
  auto idx = detail::checked_sorted_indices(ps, indices);
  if (idx.size() <= 1) return 0.0;
  detail::PrimScratch scratch;
  return detail::prim_indices(ps.data(), ps.dimension(), idx.data(), idx.size(),
                              scratch);
}

}  // namespace mstratio
