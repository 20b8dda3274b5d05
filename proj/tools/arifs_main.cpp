// arifs: score categorical features with the analogical relevance index and
// the chi-square / mutual information / ReliefF baselines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arifs/baselines.hpp"
#include "arifs/dataset.hpp"
#include "arifs/error.hpp"
#include "arifs/evaluation.hpp"
#include "arifs/protocol.hpp"
#include "arifs/report.hpp"
#include "arifs/synthetic.hpp"

namespace {

using namespace arifs;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ARIFS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "arifs: warning: ignoring non-numeric ARIFS_SEED='" << env << "'\n";
    }
  }
  return 0;
}

std::vector<MethodId> parse_methods(const std::vector<std::string>& names) {
  std::vector<MethodId> out;
  for (const auto& name : names) {
    auto m = parse_method(name);
    if (!m) throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

SyntheticFunction parse_function_or_throw(const std::string& name) {
  auto f = parse_function(name);
  if (!f) throw Error(ErrorCode::InvalidArgument, "unknown function '" + name + "' (g1..g8)");
  return *f;
}

void emit_document(const ReportDocument& doc, const std::string& out_path, bool json_stdout) {
  const auto json = to_json(doc);
  if (json_stdout) {
    std::cout << json;
  } else {
    write_table(doc, std::cout);
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + out_path);
    out << json;
    if (!out) throw Error(ErrorCode::Io, "write failed for " + out_path);
  }
}

struct ProtocolFlags {
  std::size_t reps = 10;
  std::optional<double> fraction;
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;
  bool no_normalize = false;
  std::size_t relief_k = 10;

  void attach(CLI::App& cmd, double default_fraction) {
    fallback_fraction = default_fraction;
    cmd.add_option("--reps", reps, "repetitions of the sampling protocol")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* f = cmd.add_option("--fraction", fraction, "sample fraction in (0, 1]");
    auto* c = cmd.add_option("--count", count, "absolute sample size")->check(CLI::PositiveNumber);
    f->excludes(c);
    cmd.add_option("--seed", seed, "base seed; repetition t uses seed + t (env ARIFS_SEED)")
        ->capture_default_str();
    cmd.add_flag("--no-normalize", no_normalize, "report raw means only");
    cmd.add_option("--relief-k", relief_k, "ReliefF neighbours per class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  ProtocolConfig config() const {
    ProtocolConfig cfg;
    cfg.repetitions = reps;
    if (count) {
      cfg.sample = SampleCount{*count};
    } else {
      cfg.sample = SampleFraction{fraction.value_or(fallback_fraction)};
    }
    cfg.seed = seed;
    cfg.normalize = !no_normalize;
    cfg.relief_neighbors = relief_k;
    return cfg;
  }

  double fallback_fraction = 1.0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analogical relevance index feature selection for categorical data"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic g1..g8 dataset as CSV");
  std::string gen_function;
  std::size_t gen_dim = 10, gen_range = 2;
  bool gen_full = false;
  std::optional<std::size_t> gen_sample;
  std::uint64_t gen_seed = default_seed();
  std::string gen_out;
  gen->add_option("--function", gen_function, "labelling function g1..g8")->required();
  gen->add_option("--dim", gen_dim, "number of features")->capture_default_str();
  gen->add_option("--range", gen_range, "categories per feature")->capture_default_str();
  auto* full_flag = gen->add_flag("--full", gen_full, "enumerate the whole universe");
  auto* sample_opt = gen->add_option("--sample", gen_sample, "uniform draws with replacement")
                         ->check(CLI::PositiveNumber);
  full_flag->excludes(sample_opt);
  gen->add_option("--seed", gen_seed, "seed for --sample")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "output CSV (default: standard output)");

  // score
  auto* score = app.add_subcommand("score", "score features with one or more methods");
  std::string score_data, score_out;
  std::vector<std::string> score_methods{"ari"};
  bool score_json = false;
  ProtocolFlags score_flags;
  score_flags.seed = default_seed();
  score->add_option("data", score_data, "input CSV (header row, label last)")->required();
  score->add_option("--methods", score_methods, "ari,chi2,mi,relief")
      ->delimiter(',')
      ->capture_default_str();
  score_flags.attach(*score, 1.0 / 3.0);
  score->add_option("--out", score_out, "write the JSON report here");
  score->add_flag("--json", score_json, "print JSON instead of the table");

  // eval
  auto* eval = app.add_subcommand("eval", "top-k logistic-regression accuracy per method");
  std::string eval_data, eval_out;
  std::vector<std::string> eval_methods{"ari", "chi2", "mi", "relief"};
  EvalConfig eval_cfg;
  bool eval_json = false, eval_no_stratify = false;
  ProtocolFlags eval_flags;
  eval_flags.seed = default_seed();
  eval->add_option("data", eval_data, "input CSV (header row, label last)")->required();
  eval->add_option("--methods", eval_methods, "ari,chi2,mi,relief")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--k", eval_cfg.k, "feature budget per method")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--folds", eval_cfg.folds, "cross-validation folds")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
      ->capture_default_str();
  eval->add_option("--l2", eval_cfg.classifier.l2_strength, "L2 strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eval->add_option("--lr", eval_cfg.classifier.learning_rate, "gradient-descent step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--iters", eval_cfg.classifier.max_iterations, "gradient-descent steps")
      ->capture_default_str();
  eval->add_flag("--no-stratify", eval_no_stratify, "plain shuffled folds");
  eval_flags.attach(*eval, 1.0 / 3.0);
  eval->add_option("--out", eval_out, "write the JSON report here");
  eval->add_flag("--json", eval_json, "print JSON instead of the table");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "sentinel prevalence across dimension/range/size");
  std::string sweep_function, sweep_out, sweep_method = "ari";
  std::vector<std::size_t> sweep_dims{10}, sweep_ranges{2}, sweep_sizes;
  bool sweep_json = false;
  std::size_t sweep_reps = 10;
  std::uint64_t sweep_seed = default_seed();
  sweep->add_option("--function", sweep_function, "labelling function g1..g8")->required();
  sweep->add_option("--dims", sweep_dims, "dimensions")->delimiter(',')->capture_default_str();
  sweep->add_option("--ranges", sweep_ranges, "categorical ranges")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--sizes", sweep_sizes, "sample sizes")->delimiter(',')->required();
  sweep->add_option("--method", sweep_method, "scoring method")->capture_default_str();
  sweep->add_option("--reps", sweep_reps, "repetitions per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "base seed")->capture_default_str();
  sweep->add_option("--out", sweep_out, "write the JSON report here");
  sweep->add_flag("--json", sweep_json, "print JSON instead of the table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      SyntheticSpec spec;
      spec.function = parse_function_or_throw(gen_function);
      spec.dimension = gen_dim;
      spec.range = gen_range;
      if (gen_sample) {
        spec.mode = UniformSample{*gen_sample, gen_seed};
      } else {
        spec.mode = FullEnumeration{};
      }
      const auto ds = generate(spec);
      if (gen_out.empty()) {
        write_csv(ds, std::cout);
      } else {
        save_csv(ds, gen_out);
      }
      (gen_out.empty() ? std::cerr : std::cout)
          << "wrote " << ds.rows() << " rows x " << ds.features() << " features"
          << (gen_out.empty() ? "" : " to " + gen_out) << "\n";
      return 0;
    }

    if (score->parsed()) {
      const auto ds = load_csv(score_data);
      const auto cfg = score_flags.config();
      ReportDocument doc;
      doc.command = "score";
      doc.dataset = describe(ds, score_data);
      doc.seed = cfg.seed;
      for (auto method : parse_methods(score_methods)) {
        doc.scores.push_back(run_protocol(ds, method, cfg));
      }
      emit_document(doc, score_out, score_json);
      return 0;
    }

    if (eval->parsed()) {
      const auto ds = load_csv(eval_data);
      const auto cfg = eval_flags.config();
      eval_cfg.seed = cfg.seed;
      eval_cfg.stratified = !eval_no_stratify;
      ReportDocument doc;
      doc.command = "eval";
      doc.dataset = describe(ds, eval_data);
      doc.seed = cfg.seed;

      AccuracySection acc;
      acc.config = eval_cfg;
      std::vector<FeatureId> all;
      for (std::size_t i = 0; i < ds.features(); ++i) all.push_back(FeatureId{i});
      acc.baseline = cross_validate(ds, all, eval_cfg);
      for (auto method : parse_methods(eval_methods)) {
        auto report = run_protocol(ds, method, cfg);
        MethodAccuracy entry;
        entry.method = method;
        entry.features = top_k_features(report, eval_cfg.k);
        entry.cv = cross_validate(ds, entry.features, eval_cfg);
        acc.methods.push_back(std::move(entry));
        doc.scores.push_back(std::move(report));
      }
      doc.accuracy = std::move(acc);
      emit_document(doc, eval_out, eval_json);
      return 0;
    }

    if (sweep->parsed()) {
      const auto method = parse_methods({sweep_method}).front();
      ProtocolConfig cfg;
      cfg.repetitions = sweep_reps;
      cfg.seed = sweep_seed;
      ReportDocument doc;
      doc.command = "sweep";
      doc.dataset.source = "synthetic " + sweep_function;
      doc.seed = sweep_seed;
      for (auto dim : sweep_dims) {
        for (auto range : sweep_ranges) {
          SyntheticSpec family;
          family.function = parse_function_or_throw(sweep_function);
          family.dimension = dim;
          family.range = range;
          auto points = dimensionality_sweep(family, sweep_sizes, cfg, method);
          for (auto& p : points) doc.sweep.push_back(std::move(p));
        }
      }
      emit_document(doc, sweep_out, sweep_json);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "arifs: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "arifs: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
