#pragma once

#include <optional>
#include <sstream>

#include "mstratio/emst.hpp"
#include "mstratio/geometry.hpp"

namespace mstratio {

// Nearest-neighbor radii: r(p) is the radius of the largest closed ball centered
// at p whose interior contains no other point of P.
struct DiskSystem {
  std::vector<double> radii;  // parallel to point indices
};

struct DisjointPair {
  std::uint32_t p;
  std::uint32_t q;
  double slack;  // |pq| - r(p) - r(q), strictly positive
};

// Thrown when no disjoint pair exists among the first 12 points of a planar set,
// which would contradict the Kezdy-Kubicki guarantee. Carries the offending
// prefix so searches can dump it. CLI exit code 3.
class CounterexampleError : public Error {
 public:
  CounterexampleError(std::string message, PointSet prefix)
      : Error(augment(std::move(message), prefix)), prefix_(std::move(prefix)) {}

  const PointSet& prefix() const { return prefix_; }

 private:
  static std::string augment(std::string msg, const PointSet& prefix) {
    std::ostringstream os;
    os << msg << "\noffending points:\n";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      auto p = prefix[i];
      os << "  ";
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) os << " ";
        os << format_double(p[k]);
      }
      os << "\n";
    }
    return os.str();
  }

  PointSet prefix_;
};

inline DiskSystem disk_system(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 2) throw InputError("disk_system: need at least 2 points");
  DiskSystem ds;
  ds.radii.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = distance(ps[i], ps[j]);
      ds.radii[i] = std::min(ds.radii[i], d);
      ds.radii[j] = std::min(ds.radii[j], d);
    }
  }
  return ds;
}

namespace detail {

// Max-slack pair over all index pairs, ties to the lexicographically smallest.
inline std::optional<DisjointPair> max_slack_pair(const PointSet& ps,
                                                  const DiskSystem& ds) {
  std::optional<DisjointPair> best;
  std::size_t n = ps.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      double slack = distance(ps[i], ps[j]) - ds.radii[i] - ds.radii[j];
      if (slack > kSlackTol && (!best || slack > best->slack)) {
        best = DisjointPair{i, j, slack};
      }
    }
  }
  return best;
}

}  // namespace detail

// The disjoint pair maximizing slack, if the set has one. Maximizing slack
// maximizes the guaranteed ratio margin of the disjoint-disk bipartition.
inline std::optional<DisjointPair> find_disjoint_pair(const PointSet& ps,
                                                      const DiskSystem& ds) {
  if (ps.size() < 2) throw InputError("find_disjoint_pair: need at least 2 points");
  return detail::max_slack_pair(ps, ds);
}

inline std::optional<DisjointPair> find_disjoint_pair(const PointSet& ps) {
  return find_disjoint_pair(ps, disk_system(ps));
}

// Finds a disjoint pair inspecting only the first m points, with radii measured
// inside that prefix. Adding the remaining points only shrinks radii, so the
// pair stays disjoint in the full set; the returned slack is recomputed against
// full-set radii. Guaranteed to succeed for d = 2 and m >= 12; no guarantee
// exists in higher dimensions, where m is a caller-supplied guess.
inline DisjointPair find_disjoint_pair_prefix(const PointSet& ps,
                                              std::size_t m = kDisjointPrefix) {
  if (m < kDisjointPrefix) {
    throw InputError("find_disjoint_pair_prefix: prefix must be at least 12");
  }
  if (ps.size() < m) {
    throw InputError("find_disjoint_pair_prefix: set has fewer than " +
                     std::to_string(m) + " points");
  }
  std::vector<std::uint32_t> head(m);
  std::iota(head.begin(), head.end(), 0);
  PointSet prefix = ps.subset(head);
  auto found = detail::max_slack_pair(prefix, disk_system(prefix));
  if (!found) {
    throw CounterexampleError(
        "no disjoint pair among the first " + std::to_string(m) + " points",
        std::move(prefix));
  }
  // Full-set radii of the two centers only: O(n) refresh.
  double rp = std::numeric_limits<double>::infinity();
  double rq = std::numeric_limits<double>::infinity();
  for (std::uint32_t i = 0; i < ps.size(); ++i) {
    if (i != found->p) rp = std::min(rp, distance(ps[found->p], ps[i]));
    if (i != found->q) rq = std::min(rq, distance(ps[found->q], ps[i]));
  }
  return {found->p, found->q, distance(ps[found->p], ps[found->q]) - rp - rq};
}

inline std::size_t count_disjoint_pairs(const PointSet& ps) {
  if (ps.size() < 2) throw InputError("count_disjoint_pairs: need at least 2 points");
  DiskSystem ds = disk_system(ps);
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < ps.size(); ++i) {
    for (std::uint32_t j = i + 1; j < ps.size(); ++j) {
      if (distance(ps[i], ps[j]) - ds.radii[i] - ds.radii[j] > kSlackTol) ++count;
    }
  }
  return count;
}

}  // namespace mstratio
