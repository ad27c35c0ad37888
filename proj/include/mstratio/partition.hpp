#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mstratio/disks.hpp"
#include "mstratio/emst.hpp"
#include "mstratio/parallel.hpp"

namespace mstratio {

// Non-trivial bipartition: both parts non-empty, disjoint, covering all indices.
struct Bipartition {
  std::vector<std::uint32_t> red;
  std::vector<std::uint32_t> blue;

  // Builds red as the sorted complement of blue in [0, n).
  static Bipartition complement_of(std::size_t n,
                                   std::vector<std::uint32_t> blue_indices) {
    std::sort(blue_indices.begin(), blue_indices.end());
    Bipartition bp;
    bp.blue = std::move(blue_indices);
    bp.red.reserve(n - bp.blue.size());
    std::size_t b = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (b < bp.blue.size() && bp.blue[b] == i) {
        ++b;
      } else {
        bp.red.push_back(i);
      }
    }
    return bp;
  }

  void check_valid(std::size_t n) const {
    if (red.empty() || blue.empty()) {
      throw InputError("bipartition: both parts must be non-empty");
    }
    std::vector<char> seen(n, 0);
    for (auto part : {&red, &blue}) {
      for (std::uint32_t ix : *part) {
        if (ix >= n) throw InputError("bipartition: index out of range");
        if (seen[ix]) throw InputError("bipartition: index appears twice");
        seen[ix] = 1;
      }
    }
    if (red.size() + blue.size() != n) {
      throw InputError("bipartition: parts must cover all points");
    }
  }
};

struct EdgeDeletionCertificate {
  Edge removed;
  double guarantee;  // (n-2)/(n-1)
};

struct DisjointDiskCertificate {
  std::uint32_t p, q;
  double r_p, r_q;   // full-set nearest-neighbor radii
  double dist_pq;
  double slack;      // dist_pq - r_p - r_q
  double lower_bound;  // (w - r_p - r_q + |pq|)/w, > 1 whenever slack > 0
  bool via_prefix;
  std::size_t prefix;
};

struct RandomHalvesCertificate {
  std::size_t split;  // first blue index
};

struct DenseCertificate {
  double alpha;
  double min_pair_dist;
  std::size_t occupied_cells;
  std::size_t rich_cells;
  int class_x, class_y;  // cell position mod 5 of the chosen subset
  std::size_t k;         // rich cells in the chosen subset
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (kept, removed)
  double w_normalized;   // w / min_pair_dist
  double lower_bound;    // (w + 2(4-sqrt2) a k - 8a)/w in normalized units
  double theorem_bound;  // 1 + 1/(11 (2a+1)^2), asymptotic
  bool meets_theorem_bound;
};

struct ExactCertificate {
  std::uint64_t blue_mask;  // bit j <=> point j+1 is blue; point 0 pinned red
  std::uint64_t candidates;
};

using Certificate =
    std::variant<std::monostate, EdgeDeletionCertificate, DisjointDiskCertificate,
                 RandomHalvesCertificate, DenseCertificate, ExactCertificate>;

struct RatioReport {
  std::string strategy;
  double w_total = 0.0;
  double w_red = 0.0;
  double w_blue = 0.0;
  double ratio = 0.0;  // (w_red + w_blue) / w_total
  Bipartition parts;
  Certificate certificate;
};

// (w(R)+w(B))/w(P) for an explicit bipartition; singleton parts contribute 0.
inline RatioReport ratio(const PointSet& ps, const Bipartition& bp) {
  if (ps.size() < 2) throw InputError("ratio: need at least 2 points");
  bp.check_valid(ps.size());
  RatioReport r;
  r.strategy = "user";
  r.w_total = emst_weight(ps);
  r.w_red = emst_weight_subset(ps, bp.red);
  r.w_blue = emst_weight_subset(ps, bp.blue);
  r.ratio = (r.w_red + r.w_blue) / r.w_total;
  r.parts = bp;
  return r;
}

struct ExactGammaOptions {
  std::size_t limit = kExhaustiveLimit;
  std::size_t threads = 0;  // 0 = all available
};

// Exhaustive max MST-ratio over all 2^(n-1)-1 non-trivial bipartitions.
// Point 0 is pinned red to kill the color-swap mirror; blue sets are scanned
// as bitmasks over points 1..n-1 in increasing numeric order and the first
// maximizer wins, so the certificate is reproducible.
inline RatioReport exact_gamma(const PointSet& ps, ExactGammaOptions opts = {}) {
  std::size_t n = ps.size();
  if (n < 2) throw InputError("exact_gamma: need at least 2 points");
  if (n > opts.limit) {
    throw InputError("exact_gamma: exhaustive search limited to n <= " +
                     std::to_string(opts.limit) + " (got " + std::to_string(n) +
                     ")");
  }
  const double w_total = emst_weight(ps);
  const std::uint64_t candidates = (std::uint64_t{1} << (n - 1)) - 1;

  struct Best {
    double ratio = -1.0;
    std::uint64_t mask = 0;
    double w_red = 0.0, w_blue = 0.0;
  };
  std::size_t workers = worker_count(opts.threads);
  std::vector<Best> best(std::max<std::size_t>(workers, 1));

  const double* coords = ps.data();
  const std::size_t dim = ps.dimension();
  parallel_chunks(candidates, workers, [&](std::size_t w, std::size_t b, std::size_t e) {
    detail::PrimScratch scratch;
    std::vector<std::uint32_t> red(n), blue(n);
    Best local;
    for (std::uint64_t mask = b + 1; mask <= e; ++mask) {
      std::size_t nb = 0, nr = 0;
      red[nr++] = 0;
      for (std::uint32_t j = 0; j + 1 < n; ++j) {
        if (mask >> j & 1) {
          blue[nb++] = j + 1;
        } else {
          red[nr++] = j + 1;
        }
      }
      double w_red = detail::prim_indices(coords, dim, red.data(), nr, scratch);
      double w_blue = detail::prim_indices(coords, dim, blue.data(), nb, scratch);
      double r = (w_red + w_blue) / w_total;
      if (r > local.ratio) local = {r, mask, w_red, w_blue};
    }
    best[w] = local;
  });

  Best top;
  for (const Best& b : best) {
    if (b.ratio > top.ratio) top = b;  // chunks are mask-ordered: ties keep earliest
  }

  std::vector<std::uint32_t> blue_ix;
  for (std::uint32_t j = 0; j + 1 < n; ++j) {
    if (top.mask >> j & 1) blue_ix.push_back(j + 1);
  }
  RatioReport r;
  r.strategy = "exact";
  r.w_total = w_total;
  r.w_red = top.w_red;
  r.w_blue = top.w_blue;
  r.ratio = top.ratio;
  r.parts = Bipartition::complement_of(n, std::move(blue_ix));
  r.certificate = ExactCertificate{top.mask, candidates};
  return r;
}

// Deletes the shortest EMST edge; the two subtrees are MSTs of the parts, so
// the ratio equals (w - |e|)/w exactly and is at least (n-2)/(n-1).
inline RatioReport edge_deletion_partition(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 3) throw InputError("edge_deletion_partition: need at least 3 points");
  SpanningTree tree = emst(ps);

  std::size_t shortest = 0;
  for (std::size_t i = 1; i < tree.edges.size(); ++i) {
    const Edge& a = tree.edges[i];
    const Edge& b = tree.edges[shortest];
    if (a.length < b.length ||
        (a.length == b.length && detail::pair_less(a.u, a.v, b.u, b.v))) {
      shortest = i;
    }
  }
  const Edge removed = tree.edges[shortest];

  // Component of point 0 in the tree minus the removed edge becomes red.
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    if (i == shortest) continue;
    adj[tree.edges[i].u].push_back(tree.edges[i].v);
    adj[tree.edges[i].v].push_back(tree.edges[i].u);
  }
  std::vector<char> in_red(n, 0);
  std::vector<std::uint32_t> stack{0};
  in_red[0] = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : adj[v]) {
      if (!in_red[u]) {
        in_red[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<std::uint32_t> blue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!in_red[i]) blue.push_back(i);
  }

  RatioReport r;
  r.strategy = "edge-deletion";
  r.parts = Bipartition::complement_of(n, std::move(blue));
  r.w_total = tree.total_length;
  r.w_red = emst_weight_subset(ps, r.parts.red);
  r.w_blue = emst_weight_subset(ps, r.parts.blue);
  r.ratio = (r.w_red + r.w_blue) / r.w_total;
  r.certificate = EdgeDeletionCertificate{
      removed, double(n - 2) / double(n - 1)};
  return r;
}

struct DisjointDiskOptions {
  std::size_t prefix = kDisjointPrefix;
};

// B = {p, q} for a pair of disjoint disks, R = everything else. For n >= 12 the
// pair comes from the prefix search and the ratio is guaranteed > 1; below 12
// the full set is searched on a best-effort basis.
inline RatioReport disjoint_disk_partition(const PointSet& ps,
                                           DisjointDiskOptions opts = {}) {
  std::size_t n = ps.size();
  if (n < 3) throw InputError("disjoint_disk_partition: need at least 3 points");

  DisjointPair pair{0, 0, 0.0};
  bool via_prefix = n >= opts.prefix;
  if (via_prefix && ps.dimension() == 2) {
    pair = find_disjoint_pair_prefix(ps, opts.prefix);
  } else {
    // Below 12 points, or above the plane where no prefix-size guarantee
    // exists (the 12 icosahedron vertices have no disjoint ball pair), try
    // the prefix first and quietly widen to the full set.
    std::optional<DisjointPair> found;
    if (via_prefix) {
      try {
        found = find_disjoint_pair_prefix(ps, opts.prefix);
      } catch (const CounterexampleError&) {
        via_prefix = false;
      }
    }
    if (!found) found = find_disjoint_pair(ps);
    if (!found) {
      throw NoDisjointPairError(
          "no pair of disjoint balls exists (not guaranteed for n = " +
          std::to_string(n) + " in dimension " +
          std::to_string(ps.dimension()) + ")");
    }
    pair = *found;
  }

  double rp = std::numeric_limits<double>::infinity();
  double rq = std::numeric_limits<double>::infinity();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i != pair.p) rp = std::min(rp, distance(ps[pair.p], ps[i]));
    if (i != pair.q) rq = std::min(rq, distance(ps[pair.q], ps[i]));
  }
  double d_pq = distance(ps[pair.p], ps[pair.q]);

  RatioReport r;
  r.strategy = "disjoint-disks";
  r.parts = Bipartition::complement_of(n, {pair.p, pair.q});
  r.w_total = emst_weight(ps);
  r.w_red = emst_weight_subset(ps, r.parts.red);
  r.w_blue = d_pq;
  r.ratio = (r.w_red + r.w_blue) / r.w_total;
  r.certificate = DisjointDiskCertificate{
      pair.p,  pair.q, rp, rq, d_pq, pair.slack,
      (r.w_total - rp - rq + d_pq) / r.w_total, via_prefix, opts.prefix};
  return r;
}

// R = first floor(n/2) points by index, B = the rest (blue gets the odd one).
inline RatioReport random_halves_partition(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 4) throw InputError("random_halves_partition: need at least 4 points");
  std::size_t split = n / 2;
  std::vector<std::uint32_t> blue(n - split);
  std::iota(blue.begin(), blue.end(), static_cast<std::uint32_t>(split));

  RatioReport r;
  r.strategy = "random-halves";
  r.parts = Bipartition::complement_of(n, std::move(blue));
  r.w_total = emst_weight(ps);
  r.w_red = emst_weight_subset(ps, r.parts.red);
  r.w_blue = emst_weight_subset(ps, r.parts.blue);
  r.ratio = (r.w_red + r.w_blue) / r.w_total;
  r.certificate = RandomHalvesCertificate{split};
  return r;
}

// Smallest alpha for which ps qualifies as alpha-dense.
inline double minimal_dense_alpha(const PointSet& ps) {
  SpreadInfo si = diameter_and_spread(ps);
  return std::max(si.spread / std::sqrt(double(ps.size())), kAlphaDenseMin);
}

// Partition for alpha-dense planar sets, following the proof pipeline:
// grid of cells of side 2*alpha over the bounding square, rich cells (>= 2
// points), the 25-class decomposition by cell position mod 5, the largest
// class, and one removed point per chosen cell. Points are assigned to
// half-open cells [low, high); coordinates are rescaled internally so the
// minimum pairwise distance is the unit the proof assumes.
inline RatioReport dense_partition(const PointSet& ps, double alpha) {
  std::size_t n = ps.size();
  if (ps.dimension() != 2) throw InputError("dense_partition: planar sets only");
  if (n < 2) throw InputError("dense_partition: need at least 2 points");
  if (alpha < kAlphaDenseMin * (1.0 - kEqTol)) {
    throw InputError("dense_partition: alpha below the admissible minimum " +
                     format_double(kAlphaDenseMin));
  }
  SpreadInfo si = diameter_and_spread(ps);
  double sqrt_n = std::sqrt(double(n));
  if (si.spread > alpha * sqrt_n * (1.0 + kEqTol)) {
    throw InputError("dense_partition: spread " + format_double(si.spread) +
                     " exceeds alpha*sqrt(n) = " + format_double(alpha * sqrt_n));
  }

  const double s = si.min_pair_dist;
  const double cell = 2.0 * alpha * s;
  double ax = std::numeric_limits<double>::infinity();
  double ay = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    ax = std::min(ax, ps[i][0]);
    ay = std::min(ay, ps[i][1]);
  }

  std::map<std::pair<long, long>, std::vector<std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < n; ++i) {
    long gx = static_cast<long>(std::floor((ps[i][0] - ax) / cell));
    long gy = static_cast<long>(std::floor((ps[i][1] - ay) / cell));
    cells[{gx, gy}].push_back(i);
  }

  std::size_t rich_total = 0;
  std::size_t class_count[5][5] = {};
  for (const auto& [key, members] : cells) {
    if (members.size() >= 2) {
      ++rich_total;
      ++class_count[key.first % 5][key.second % 5];
    }
  }
  if (rich_total == 0) {
    throw DegenerateError("dense_partition: no cell contains two points");
  }

  int cx = 0, cy = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (class_count[a][b] > class_count[cx][cy]) {
        cx = a;
        cy = b;
      }
    }
  }

  // One pair per rich cell of the chosen class: the two closest points in the
  // cell (tightens the w(R) bound relative to an arbitrary choice). The
  // larger-index one is moved to blue.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen;
  std::vector<std::uint32_t> blue;
  for (const auto& [key, members] : cells) {
    if (members.size() < 2 || key.first % 5 != cx || key.second % 5 != cy) continue;
    std::uint32_t bi = 0, bj = 1;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        double d = distance(ps[members[i]], ps[members[j]]);
        if (d < bd) {
          bd = d;
          bi = members[i];
          bj = members[j];
        }
      }
    }
    chosen.emplace_back(bi, bj);
    blue.push_back(bj);
  }
  std::size_t k = chosen.size();

  RatioReport r;
  r.strategy = "dense";
  r.parts = Bipartition::complement_of(n, std::move(blue));
  r.w_total = emst_weight(ps);
  r.w_red = emst_weight_subset(ps, r.parts.red);
  r.w_blue = emst_weight_subset(ps, r.parts.blue);
  r.ratio = (r.w_red + r.w_blue) / r.w_total;

  // Bounds live in normalized units (min pairwise distance 1): each removed
  // point sits within 2*sqrt(2)*alpha of its kept partner, and blue points in
  // distinct cells of one class are at least 8*alpha apart.
  double w_norm = r.w_total / s;
  double lower =
      (w_norm + 2.0 * (4.0 - std::sqrt(2.0)) * alpha * double(k) - 8.0 * alpha) /
      w_norm;
  double theorem = 1.0 + 1.0 / (11.0 * (2.0 * alpha + 1.0) * (2.0 * alpha + 1.0));
  r.certificate = DenseCertificate{alpha,
                                   s,
                                   cells.size(),
                                   rich_total,
                                   cx,
                                   cy,
                                   k,
                                   std::move(chosen),
                                   w_norm,
                                   lower,
                                   theorem,
                                   r.ratio >= theorem - kEqTol};
  return r;
}

enum class Strategy {
  Exact,
  EdgeDeletion,
  DisjointDisks,
  RandomHalves,
  Dense,
  Auto,
};

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Exact: return "exact";
    case Strategy::EdgeDeletion: return "edge-deletion";
    case Strategy::DisjointDisks: return "disjoint-disks";
    case Strategy::RandomHalves: return "random-halves";
    case Strategy::Dense: return "dense";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

inline Strategy parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Exact, Strategy::EdgeDeletion, Strategy::DisjointDisks,
                     Strategy::RandomHalves, Strategy::Dense, Strategy::Auto}) {
    if (strategy_name(s) == name) return s;
  }
  throw InputError("unknown strategy '" + std::string(name) + "'");
}

inline RatioReport best_of_all_strategies(const PointSet& ps);

// Dispatch by strategy label. Dense derives the smallest admissible alpha
// unless one is supplied.
inline RatioReport apply_strategy(const PointSet& ps, Strategy strategy,
                                  std::optional<double> alpha = {},
                                  std::size_t threads = 0) {
  switch (strategy) {
    case Strategy::Exact:
      return exact_gamma(ps, {kExhaustiveLimit, threads});
    case Strategy::EdgeDeletion:
      return edge_deletion_partition(ps);
    case Strategy::DisjointDisks:
      return disjoint_disk_partition(ps);
    case Strategy::RandomHalves:
      return random_halves_partition(ps);
    case Strategy::Dense:
      return dense_partition(ps, alpha ? *alpha : minimal_dense_alpha(ps));
    case Strategy::Auto:
      return best_of_all_strategies(ps);
  }
  throw InputError("unknown strategy");
}

// Runs every applicable strategy (plus the exact oracle when n is small) and
// returns the best report. Ties keep the earlier strategy in the order
// exact, edge-deletion, disjoint-disks, random-halves, dense.
inline RatioReport best_of_all_strategies(const PointSet& ps) {
  std::size_t n = ps.size();
  if (n < 3) throw InputError("best_of_all_strategies: need at least 3 points");

  std::optional<RatioReport> best;
  auto consider = [&](RatioReport&& candidate) {
    if (!best || candidate.ratio > best->ratio) best = std::move(candidate);
  };

  if (n <= kExhaustiveLimit) consider(exact_gamma(ps));
  consider(edge_deletion_partition(ps));
  try {
    consider(disjoint_disk_partition(ps));
  } catch (const NoDisjointPairError&) {
  }
  if (n >= 4) consider(random_halves_partition(ps));
  if (ps.dimension() == 2) {
    try {
      consider(dense_partition(ps, minimal_dense_alpha(ps)));
    } catch (const DegenerateError&) {
    }
  }
  return std::move(*best);
}

}  // namespace mstratio
