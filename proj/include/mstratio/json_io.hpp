#pragma once

#include <nlohmann/json.hpp>

#include "mstratio/disks.hpp"
#include "mstratio/experiments.hpp"
#include "mstratio/partition.hpp"

namespace mstratio {

using json = nlohmann::json;

inline json tree_to_json(const SpanningTree& tree) {
  json edges = json::array();
  for (const Edge& e : tree.edges) {
    edges.push_back({e.u, e.v, e.length});
  }
  return json{{"n", tree.n},
              {"total_length", tree.total_length},
              {"edges", std::move(edges)}};
}

inline json certificate_to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return json{{"type", "none"}};
        } else if constexpr (std::is_same_v<T, EdgeDeletionCertificate>) {
          return json{{"type", "edge-deletion"},
                      {"removed_edge", {c.removed.u, c.removed.v, c.removed.length}},
                      {"guarantee", c.guarantee}};
        } else if constexpr (std::is_same_v<T, DisjointDiskCertificate>) {
          return json{{"type", "disjoint-disks"},
                      {"p", c.p},
                      {"q", c.q},
                      {"r_p", c.r_p},
                      {"r_q", c.r_q},
                      {"dist_pq", c.dist_pq},
                      {"slack", c.slack},
                      {"lower_bound", c.lower_bound},
                      {"via_prefix", c.via_prefix},
                      {"prefix", c.prefix}};
        } else if constexpr (std::is_same_v<T, RandomHalvesCertificate>) {
          return json{{"type", "random-halves"}, {"split", c.split}};
        } else if constexpr (std::is_same_v<T, DenseCertificate>) {
          json pairs = json::array();
          for (auto [kept, removed] : c.pairs) pairs.push_back({kept, removed});
          return json{{"type", "dense"},
                      {"alpha", c.alpha},
                      {"min_pair_dist", c.min_pair_dist},
                      {"occupied_cells", c.occupied_cells},
                      {"rich_cells", c.rich_cells},
                      {"class", {c.class_x, c.class_y}},
                      {"k", c.k},
                      {"pairs", std::move(pairs)},
                      {"w_normalized", c.w_normalized},
                      {"lower_bound", c.lower_bound},
                      {"theorem_bound", c.theorem_bound},
                      {"meets_theorem_bound", c.meets_theorem_bound}};
        } else {
          static_assert(std::is_same_v<T, ExactCertificate>);
          return json{{"type", "exact"},
                      {"blue_mask", c.blue_mask},
                      {"candidates", c.candidates}};
        }
      },
      cert);
}

inline json report_to_json(const RatioReport& r) {
  return json{{"strategy", r.strategy},
              {"ratio", r.ratio},
              {"w_total", r.w_total},
              {"w_red", r.w_red},
              {"w_blue", r.w_blue},
              {"blue_indices", r.parts.blue},
              {"certificate", certificate_to_json(r.certificate)}};
}

inline json disks_to_json(const PointSet& ps, const DiskSystem& ds) {
  json out = json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto p = ps[i];
    out.push_back({{"index", i},
                   {"center", std::vector<double>(p.begin(), p.end())},
                   {"radius", ds.radii[i]}});
  }
  return out;
}

inline json generator_to_json(const GeneratorSpec& gs) {
  json out{{"kind", generator_name(gs.kind)}, {"n", gs.n}, {"seed", gs.seed}};
  if (gs.kind == GeneratorKind::CollinearEps) out["epsilon"] = gs.epsilon;
  if (gs.kind == GeneratorKind::UniformRandom) out["dimension"] = gs.dimension;
  if (gs.kind == GeneratorKind::TwoClusters) out["gap"] = gs.gap;
  return out;
}

inline json summary_to_json(const TrialSummary& s) {
  json out{{"generator", generator_to_json(s.config.generator)},
           {"strategy", s.strategy_label},
           {"trials", s.config.trials},
           {"seed", s.config.seed},
           {"rng", s.rng},
           {"failures", s.failures},
           {"ratio", {{"mean", s.ratio_mean},
                      {"min", s.ratio_min},
                      {"max", s.ratio_max},
                      {"stddev", s.ratio_stddev}}},
           {"threshold", s.config.ratio_threshold},
           {"fraction_above_threshold", s.fraction_above_threshold},
           {"w_over_sqrt_n_mean", s.w_over_sqrt_n_mean},
           {"elapsed_ms_total", s.elapsed_ms_total}};
  if (s.pair_count_min >= 0) out["pair_count_min"] = s.pair_count_min;
  if (s.config.alpha) out["alpha"] = *s.config.alpha;
  return out;
}

inline json beta_to_json(const std::vector<BetaPoint>& pts, std::uint64_t seed) {
  json rows = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const BetaPoint& b = pts[i];
    json row{{"n", b.n},
             {"trials", b.trials},
             {"mean_w_over_sqrt_n", b.mean_w_over_sqrt_n},
             {"min_w", b.min_w},
             {"max_w", b.max_w}};
    if (i > 0) {
      // Stabilization across successive sizes: relative change of the estimate.
      row["rel_change"] = std::fabs(b.mean_w_over_sqrt_n -
                                    pts[i - 1].mean_w_over_sqrt_n) /
                          b.mean_w_over_sqrt_n;
    }
    rows.push_back(std::move(row));
  }
  return json{{"rng", kRngId}, {"seed", seed}, {"points", std::move(rows)}};
}

}  // namespace mstratio
