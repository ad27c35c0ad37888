#pragma once

#include <chrono>
#include <ostream>

#include "mstratio/constructions.hpp"
#include "mstratio/parallel.hpp"
#include "mstratio/partition.hpp"

namespace mstratio {

struct TrialConfig {
  GeneratorSpec generator;  // its seed field is replaced by the per-trial stream
  std::size_t trials = 1;
  Strategy strategy = Strategy::RandomHalves;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> alpha;  // dense strategy only
  double ratio_threshold = 1.0;
  bool record_pair_counts = false;
  std::size_t threads = 0;
};

struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t n = 0;
  bool ok = false;
  std::string error;
  double ratio = 0.0;
  double w_total = 0.0;
  double w_red = 0.0;
  double w_blue = 0.0;
  double w_over_sqrt_n = 0.0;
  double elapsed_ms = 0.0;
  long long pair_count = -1;
};

struct TrialSummary {
  TrialConfig config;
  std::string strategy_label;
  std::size_t failures = 0;
  double ratio_mean = 0.0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double ratio_stddev = 0.0;  // sample standard deviation
  double fraction_above_threshold = 0.0;
  double w_over_sqrt_n_mean = 0.0;
  long long pair_count_min = -1;
  double elapsed_ms_total = 0.0;
  std::string rng{kRngId};
  std::vector<TrialRecord> records;
};

// Runs `trials` independent generate+partition rounds. Each trial draws its own
// seed from the master via splitmix64, so the result is bit-identical for a
// fixed config no matter how many workers execute it (records are stored by
// trial index and reduced serially). A strategy failing on a particular set is
// recorded in that trial's record, not fatal.
inline TrialSummary run_trials(const TrialConfig& cfg) {
  if (cfg.trials < 1) throw InputError("run_trials: need at least 1 trial");
  TrialSummary sum;
  sum.config = cfg;
  sum.strategy_label = std::string(strategy_name(cfg.strategy));
  sum.records.resize(cfg.trials);

  parallel_chunks(cfg.trials, worker_count(cfg.threads),
                  [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      TrialRecord& rec = sum.records[t];
      rec.trial = t;
      auto start = std::chrono::steady_clock::now();
      try {
        GeneratorSpec gs = cfg.generator;
        gs.seed = derive_seed(cfg.seed, t);
        PointSet ps = generate(gs);
        rec.n = ps.size();
        RatioReport rr = apply_strategy(ps, cfg.strategy, cfg.alpha, 1);
        rec.ratio = rr.ratio;
        rec.w_total = rr.w_total;
        rec.w_red = rr.w_red;
        rec.w_blue = rr.w_blue;
        rec.w_over_sqrt_n = rr.w_total / std::sqrt(double(ps.size()));
        if (cfg.record_pair_counts) {
          rec.pair_count = static_cast<long long>(count_disjoint_pairs(ps));
        }
        rec.ok = true;
      } catch (const Error& e) {
        rec.ok = false;
        rec.error = e.what();
        rec.ratio = std::numeric_limits<double>::quiet_NaN();
      }
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  });

  double mean = 0.0, wmean = 0.0, m2 = 0.0;
  std::size_t ok = 0, above = 0;
  for (const TrialRecord& rec : sum.records) {
    sum.elapsed_ms_total += rec.elapsed_ms;
    if (!rec.ok) {
      ++sum.failures;
      continue;
    }
    ++ok;
    if (ok == 1) {
      sum.ratio_min = sum.ratio_max = rec.ratio;
    } else {
      sum.ratio_min = std::min(sum.ratio_min, rec.ratio);
      sum.ratio_max = std::max(sum.ratio_max, rec.ratio);
    }
    double d = rec.ratio - mean;
    mean += d / double(ok);
    m2 += d * (rec.ratio - mean);
    wmean += rec.w_over_sqrt_n;
    if (rec.ratio > cfg.ratio_threshold) ++above;
    if (rec.pair_count >= 0 &&
        (sum.pair_count_min < 0 || rec.pair_count < sum.pair_count_min)) {
      sum.pair_count_min = rec.pair_count;
    }
  }
  sum.ratio_mean = mean;
  sum.ratio_stddev = ok > 1 ? std::sqrt(m2 / double(ok - 1)) : 0.0;
  sum.fraction_above_threshold = double(above) / double(cfg.trials);
  sum.w_over_sqrt_n_mean = ok ? wmean / double(ok) : 0.0;
  return sum;
}

// One row per trial. Wall-clock timing is inherently non-reproducible, so
// determinism comparisons pass include_elapsed = false, which pins the
// elapsed_ms column to 0.
inline void write_trials_csv(const TrialSummary& sum, std::ostream& os,
                             bool include_elapsed = true) {
  os << "trial_id,n,strategy,ratio,w_total,w_red,w_blue,elapsed_ms\n";
  for (const TrialRecord& r : sum.records) {
    os << r.trial << ',' << r.n << ',' << sum.strategy_label << ','
       << format_double(r.ratio) << ',' << format_double(r.w_total) << ','
       << format_double(r.w_red) << ',' << format_double(r.w_blue) << ','
       << (include_elapsed ? format_double(r.elapsed_ms) : "0") << '\n';
  }
}

struct BetaPoint {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_w_over_sqrt_n = 0.0;
  double min_w = 0.0;
  double max_w = 0.0;
  std::vector<double> weights;  // per-trial EMST lengths
};

// Empirical scaling of w/sqrt(n) for uniform points in the unit square.
// Per-(n, trial) streams are derived from the master seed, so estimates for a
// given n do not depend on which other sizes are requested together.
inline std::vector<BetaPoint> beta_estimate(std::span<const std::size_t> n_values,
                                            std::size_t trials, std::uint64_t seed,
                                            std::size_t threads = 0) {
  if (n_values.empty()) throw InputError("beta_estimate: need at least one n");
  if (trials < 1) throw InputError("beta_estimate: need at least 1 trial");
  std::vector<BetaPoint> out;
  for (std::size_t n : n_values) {
    BetaPoint bp;
    bp.n = n;
    bp.trials = trials;
    bp.weights.resize(trials);
    parallel_chunks(trials, worker_count(threads),
                    [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        GeneratorSpec gs;
        gs.kind = GeneratorKind::UniformRandom;
        gs.n = n;
        gs.dimension = 2;
        gs.seed = derive_seed(derive_seed(seed, n), t);
        bp.weights[t] = emst_weight(generate(gs));
      }
    });
    bp.min_w = bp.max_w = bp.weights[0];
    double s = 0.0;
    for (double w : bp.weights) {
      s += w;
      bp.min_w = std::min(bp.min_w, w);
      bp.max_w = std::max(bp.max_w, w);
    }
    bp.mean_w_over_sqrt_n = s / double(trials) / std::sqrt(double(n));
    out.push_back(std::move(bp));
  }
  return out;
}

}  // namespace mstratio
