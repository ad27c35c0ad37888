// Command-line surface for EMSTs, max MST-ratio partitions, disk systems,
// generators, Monte-Carlo trials, and SVG figures.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mstratio/json_io.hpp"
#include "mstratio/mstratio.hpp"
#include "mstratio/svg.hpp"

namespace ms = mstratio;

namespace {

struct GenFlags {
  std::string kind;
  std::size_t n = 0;
  double epsilon = 0.1;
  double gap = 10.0;
  std::size_t dim = 2;
  std::uint64_t seed = ms::kDefaultSeed;
};

void add_gen_flags(CLI::App* cmd, GenFlags& g, bool require_kind = false,
                   bool with_seed = true) {
  auto* opt = cmd->add_option("--gen", g.kind,
                              "generate input: equilateral|rhombus60|square|"
                              "hexagon5|collinear_eps|uniform_random|grid_dense|"
                              "two_clusters");
  if (require_kind) opt->required();
  cmd->add_option("--n", g.n, "point count (generator kinds with free n)");
  cmd->add_option("--eps", g.epsilon, "epsilon for collinear_eps");
  cmd->add_option("--gap", g.gap, "center separation for two_clusters");
  cmd->add_option("--dim", g.dim, "dimension for uniform_random (default 2)");
  if (with_seed) {
    cmd->add_option("--seed", g.seed, "RNG seed (default 1729; never wall clock)");
  }
}

ms::GeneratorSpec to_spec(const GenFlags& g) {
  ms::GeneratorSpec spec;
  spec.kind = ms::parse_generator(g.kind);
  spec.n = g.n;
  if (spec.n == 0) {
    switch (spec.kind) {
      case ms::GeneratorKind::CollinearEps: spec.n = 8; break;
      case ms::GeneratorKind::UniformRandom: spec.n = 100; break;
      case ms::GeneratorKind::GridDense: spec.n = 100; break;
      case ms::GeneratorKind::TwoClusters: spec.n = 12; break;
      default: break;  // fixed-n kinds pick their own
    }
  }
  spec.epsilon = g.epsilon;
  spec.gap = g.gap;
  spec.dimension = g.dim;
  spec.seed = g.seed;
  return spec;
}

ms::PointSet load_points(const std::string& input, const GenFlags& g) {
  if (!g.kind.empty()) return ms::generate(to_spec(g));
  if (input.empty()) {
    throw ms::InputError("no input: give a point file or --gen KIND");
  }
  if (input == "-") return ms::read_points(std::cin);
  return ms::read_points(std::filesystem::path(input));
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ms::InputError("cannot write '" + out + "'");
  f << text;
}

// Subset EMST with edges mapped back to original point indices.
ms::SpanningTree subset_tree(const ms::PointSet& ps,
                             const std::vector<std::uint32_t>& indices) {
  ms::SpanningTree local = ms::emst(ps.subset(indices));
  for (ms::Edge& e : local.edges) {
    e.u = indices[e.u];
    e.v = indices[e.v];
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return local;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean minimum spanning trees and the max MST-ratio of point sets"};
  app.require_subcommand(1);

  std::string input, output, format, strategy = "auto", what = "bipartition";
  GenFlags gen;
  double alpha = 0.0;
  std::size_t trials = 100, prefix = ms::kDisjointPrefix;
  std::uint64_t seed = ms::kDefaultSeed;
  double threshold = 1.0;
  bool count_pairs = false, no_elapsed = false;
  std::vector<std::size_t> beta_ns;

  auto* c_emst = app.add_subcommand("emst", "minimum spanning tree of a point set");
  auto* c_gamma = app.add_subcommand("gamma", "exact max MST-ratio (n <= 22)");
  auto* c_part = app.add_subcommand("partition", "bipartition via a strategy");
  auto* c_disks = app.add_subcommand("disks", "nearest-neighbor disk system");
  auto* c_count = app.add_subcommand("count-pairs", "number of disjoint disk pairs");
  auto* c_gen = app.add_subcommand("gen", "write a generated point set");
  auto* c_trials = app.add_subcommand("trials", "Monte-Carlo strategy trials");
  auto* c_beta = app.add_subcommand("beta", "empirical w/sqrt(n) scaling");
  auto* c_plot = app.add_subcommand("plot", "SVG figure of a point set");

  for (CLI::App* c : {c_emst, c_gamma, c_part, c_disks, c_count, c_plot}) {
    c->add_option("input", input, "point file ('-' for stdin)");
    add_gen_flags(c, gen);
    c->add_option("--format", format, "json|csv|text");
  }
  for (CLI::App* c : {c_emst, c_gamma, c_part, c_disks, c_count}) {
    c->add_option("-o,--out", output, "output file (default stdout)");
  }

  c_part->add_option("--strategy", strategy,
                     "auto|exact|edge-deletion|disjoint-disks|random-halves|dense");
  c_part->add_option("--alpha", alpha, "density constant for --strategy dense");
  c_part->add_option("--prefix", prefix,
                     "prefix size for disjoint-disks (default 12)");

  add_gen_flags(c_gen, gen, /*require_kind=*/true);
  c_gen->add_option("-o,--out", output, "output file (default stdout)");

  add_gen_flags(c_trials, gen, /*require_kind=*/true, /*with_seed=*/false);
  c_trials->add_option("--strategy", strategy, "strategy to apply per trial");
  c_trials->add_option("--trials", trials, "number of trials (default 100)");
  c_trials->add_option("--seed", seed,
                       "master seed; each trial draws its own stream from it");
  c_trials->add_option("--threshold", threshold, "ratio threshold for the summary");
  c_trials->add_option("--alpha", alpha, "density constant for dense trials");
  c_trials->add_flag("--count-pairs", count_pairs, "record disjoint pair counts");
  c_trials->add_flag("--no-elapsed", no_elapsed, "pin elapsed_ms to 0 in the CSV");
  c_trials->add_option("-o,--out", output,
                       "base path: writes <base>.csv and <base>.json");
  c_trials->add_option("--format", format, "stdout format: csv|json|text");

  c_beta->add_option("--n", beta_ns, "point counts (repeatable)")->required();
  c_beta->add_option("--trials", trials, "trials per n (default 100)");
  c_beta->add_option("--seed", seed, "master seed");
  c_beta->add_option("-o,--out", output, "output file (default stdout)");
  c_beta->add_option("--format", format, "text|json");

  c_plot->add_option("--what", what, "emst|disks|bipartition");
  c_plot->add_option("--strategy", strategy, "strategy for --what bipartition")
      ->default_val("disjoint-disks");
  c_plot->add_option("--alpha", alpha, "density constant for dense plots");
  c_plot->add_option("output", output, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage hint
    return 1;
  }

  try {
    if (*c_emst) {
      ms::SpanningTree tree = ms::emst(load_points(input, gen));
      if (format == "text") {
        write_output(output, ms::format_double(tree.total_length) + "\n");
      } else {
        write_output(output, ms::tree_to_json(tree).dump(2) + "\n");
      }
    } else if (*c_gamma) {
      ms::RatioReport r = ms::exact_gamma(load_points(input, gen));
      if (format == "json") {
        write_output(output, ms::report_to_json(r).dump(2) + "\n");
      } else {
        write_output(output, ms::format_double(r.ratio) + "\n");
      }
    } else if (*c_part) {
      ms::PointSet ps = load_points(input, gen);
      ms::Strategy st = ms::parse_strategy(strategy);
      ms::RatioReport r;
      if (st == ms::Strategy::DisjointDisks && prefix != ms::kDisjointPrefix) {
        r = ms::disjoint_disk_partition(ps, {prefix});
      } else {
        r = ms::apply_strategy(ps, st,
                               alpha > 0.0 ? std::optional<double>(alpha)
                                           : std::nullopt);
      }
      if (format == "text") {
        std::ostringstream os;
        os << "strategy " << r.strategy << "\nratio " << ms::format_double(r.ratio)
           << "\nw_total " << ms::format_double(r.w_total) << "\nw_red "
           << ms::format_double(r.w_red) << "\nw_blue "
           << ms::format_double(r.w_blue) << "\nblue";
        for (auto ix : r.parts.blue) os << ' ' << ix;
        os << "\n";
        write_output(output, os.str());
      } else {
        write_output(output, ms::report_to_json(r).dump(2) + "\n");
      }
    } else if (*c_disks) {
      ms::PointSet ps = load_points(input, gen);
      ms::DiskSystem ds = ms::disk_system(ps);
      if (format == "text" || format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          os << i;
          for (double c : ps[i]) os << ' ' << ms::format_double(c);
          os << ' ' << ms::format_double(ds.radii[i]) << '\n';
        }
        write_output(output, os.str());
      } else {
        write_output(output, ms::disks_to_json(ps, ds).dump(2) + "\n");
      }
    } else if (*c_count) {
      ms::PointSet ps = load_points(input, gen);
      std::size_t count = ms::count_disjoint_pairs(ps);
      if (format == "json") {
        double n = double(ps.size());
        ms::json j{{"n", ps.size()},
                   {"count", count},
                   {"lower_bound_n12", n * (n - 1) / 132.0}};
        write_output(output, j.dump(2) + "\n");
      } else {
        write_output(output, std::to_string(count) + "\n");
      }
    } else if (*c_gen) {
      ms::GeneratorSpec spec = to_spec(gen);
      ms::PointSet ps = ms::generate(spec);
      std::ostringstream os;
      std::ostringstream meta;
      meta << "generator: " << ms::generator_name(spec.kind) << " n=" << ps.size()
           << " seed=" << spec.seed << " rng=" << ms::kRngId;
      ms::write_points(os, ps, {meta.str()});
      write_output(output, os.str());
    } else if (*c_trials) {
      ms::TrialConfig cfg;
      cfg.generator = to_spec(gen);
      cfg.trials = trials;
      cfg.strategy = ms::parse_strategy(strategy);
      cfg.seed = seed;
      if (alpha > 0.0) cfg.alpha = alpha;
      cfg.ratio_threshold = threshold;
      cfg.record_pair_counts = count_pairs;
      ms::TrialSummary sum = ms::run_trials(cfg);
      if (!output.empty()) {
        std::ofstream csv(output + ".csv");
        if (!csv) throw ms::InputError("cannot write '" + output + ".csv'");
        ms::write_trials_csv(sum, csv, !no_elapsed);
        std::ofstream js(output + ".json");
        if (!js) throw ms::InputError("cannot write '" + output + ".json'");
        js << ms::summary_to_json(sum).dump(2) << "\n";
        std::cout << "ratio mean " << ms::format_double(sum.ratio_mean) << " min "
                  << ms::format_double(sum.ratio_min) << " max "
                  << ms::format_double(sum.ratio_max) << " (" << trials
                  << " trials, " << sum.failures << " failures)\n";
      } else if (format == "json") {
        std::cout << ms::summary_to_json(sum).dump(2) << "\n";
      } else if (format == "text") {
        std::cout << "strategy " << sum.strategy_label << "\ntrials "
                  << cfg.trials << "\nfailures " << sum.failures << "\nmean "
                  << ms::format_double(sum.ratio_mean) << "\nmin "
                  << ms::format_double(sum.ratio_min) << "\nmax "
                  << ms::format_double(sum.ratio_max) << "\nstddev "
                  << ms::format_double(sum.ratio_stddev)
                  << "\nfraction_above_threshold "
                  << ms::format_double(sum.fraction_above_threshold) << "\n";
      } else {
        std::ostringstream os;
        ms::write_trials_csv(sum, os, !no_elapsed);
        std::cout << os.str();
      }
    } else if (*c_beta) {
      auto pts = ms::beta_estimate(beta_ns, trials, seed);
      if (format == "json") {
        write_output(output, ms::beta_to_json(pts, seed).dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "n,trials,mean_w_over_sqrt_n,min_w,max_w\n";
        for (const auto& b : pts) {
          os << b.n << ',' << b.trials << ',' << ms::format_double(b.mean_w_over_sqrt_n)
             << ',' << ms::format_double(b.min_w) << ',' << ms::format_double(b.max_w)
             << '\n';
        }
        write_output(output, os.str());
      }
    } else if (*c_plot) {
      // With --gen the single positional is the SVG path.
      if (output.empty() && !gen.kind.empty() && !input.empty()) {
        output = input;
        input.clear();
      }
      if (output.empty()) throw ms::InputError("plot: no SVG output path");
      ms::PointSet ps = load_points(input, gen);
      ms::SvgScene scene;
      scene.points = &ps;
      ms::SpanningTree tree = ms::emst(ps);
      scene.tree = &tree;
      ms::SpanningTree red_tree, blue_tree;
      ms::RatioReport report;
      if (what == "disks") {
        ms::DiskSystem ds = ms::disk_system(ps);
        for (std::uint32_t i = 0; i < ps.size(); ++i) {
          scene.disks.emplace_back(i, ds.radii[i]);
        }
      } else if (what == "bipartition") {
        report = ms::apply_strategy(ps, ms::parse_strategy(strategy),
                                    alpha > 0.0 ? std::optional<double>(alpha)
                                                : std::nullopt);
        red_tree = subset_tree(ps, report.parts.red);
        blue_tree = subset_tree(ps, report.parts.blue);
        scene.red_tree = &red_tree;
        scene.blue_tree = &blue_tree;
        scene.parts = &report.parts;
        if (const auto* c = std::get_if<ms::DisjointDiskCertificate>(&report.certificate)) {
          scene.disks.emplace_back(c->p, c->r_p);
          scene.disks.emplace_back(c->q, c->r_q);
        }
      } else if (what != "emst") {
        throw ms::InputError("plot: --what must be emst, disks, or bipartition");
      }
      ms::emit_svg(scene, std::filesystem::path(output));
    }
  } catch (const ms::CounterexampleError& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return 3;
  } catch (const ms::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
