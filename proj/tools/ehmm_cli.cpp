// Command-line front end: dataset generation, forward runs, reference-scheme
// reproduction, regret-bound sweeps and oracle verification. All file output
// is CSV with 12 significant digits.
//
// Exit codes: 0 success, 2 input or limit error, 3 numeric failure
// (zero predictive density), 4 regret-bound violation.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ehmm/csv.hpp"
#include "ehmm/datagen.hpp"
#include "ehmm/forward.hpp"
#include "ehmm/oracles.hpp"
#include "ehmm/reference.hpp"

using namespace ehmm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitBound = 4;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// Member mini-language: dm:<theta> (drifting mean), bayes:<k> (mixture of k
// integer-mean experts 0..k-1), gauss:<mu> (single static expert).
Ehmm build_member(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("member spec '" + spec + "' is not kind:value");
  const std::string kind = spec.substr(0, colon);
  const std::string value = spec.substr(colon + 1);
  try {
    if (kind == "dm") return build_dm({std::stod(value)});
    if (kind == "bayes") {
      const int k = std::stoi(value);
      if (k < 1) throw InvalidInput("bayes:<k> needs k >= 1");
      std::vector<ExpertId> experts;
      for (int e = 0; e < k; ++e) experts.push_back(ExpertId{e});
      return build_bayes(ExpertDist::uniform(experts));
    }
    if (kind == "gauss")
      return build_bayes(ExpertDist::point_mass(ExpertId{std::stoll(value)}));
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("member spec '" + spec + "' has a bad value");
  }
  throw InvalidInput("unknown member kind '" + kind + "'");
}

struct MemberSet {
  std::vector<std::string> specs;
  std::vector<Ehmm> models;
  FiniteDist<int> prior;
};

MemberSet parse_members(const std::string& members_flag,
                        const std::string& prior_flag) {
  MemberSet set;
  set.specs = split(members_flag, ',');
  if (set.specs.empty() || set.specs.front().empty())
    throw InvalidInput("--members must list at least one model spec");
  for (const auto& spec : set.specs) set.models.push_back(build_member(spec));
  const int n = int(set.models.size());
  if (prior_flag == "uniform") {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    set.prior = FiniteDist<int>::uniform(ids);
  } else {
    const auto parts = split(prior_flag, ',');
    if (int(parts.size()) != n)
      throw InvalidInput("--prior needs one weight per member");
    std::vector<FiniteDist<int>::Entry> entries;
    for (int i = 0; i < n; ++i) {
      try {
        entries.emplace_back(i, std::stod(parts[std::size_t(i)]));
      } catch (const std::exception&) {
        throw InvalidInput("--prior weight '" + parts[std::size_t(i)] +
                           "' is not a number");
      }
    }
    set.prior = FiniteDist<int>::from_entries(std::move(entries));
    if (set.prior.size() != std::size_t(n))
      throw InvalidInput("--prior weights must all be positive");
  }
  return set;
}

ExpertDist member_prior_as_experts(const FiniteDist<int>& prior) {
  std::vector<ExpertDist::Entry> entries;
  for (const auto& [i, w] : prior) entries.emplace_back(ExpertId{i}, w);
  return ExpertDist::from_entries(std::move(entries));
}

// Dataset source shared by run/check-bounds/verify.
struct DataFlags {
  std::string dataset_path;
  std::string segments_spec;
  std::string gen_mode = "freezing";
  double noise = 0.0;
  std::uint64_t noise_seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dataset", dataset_path, "input t,x CSV file");
    cmd->add_option("--segments", segments_spec,
                    "generator spec <count>x<len>@<rate>[,...]");
    cmd->add_option("--gen-mode", gen_mode,
                    "generator mode: freezing|sleeping")
        ->check(CLI::IsMember({"freezing", "sleeping"}));
    cmd->add_option("--noise", noise, "generator noise amplitude");
    cmd->add_option("--noise-seed", noise_seed, "generator noise seed");
  }
};

SegmentMode parse_mode(const std::string& mode) {
  if (mode == "freezing") return SegmentMode::kFreezing;
  if (mode == "sleeping") return SegmentMode::kSleeping;
  throw InvalidInput("mode must be freezing or sleeping");
}

// <count>x<len>@<rate>, comma separated; count optional (default 1).
DriftDatasetSpec parse_segments_spec(const std::string& text,
                                     const std::string& mode, double noise,
                                     std::uint64_t seed) {
  DriftDatasetSpec spec;
  spec.mode = parse_mode(mode);
  spec.noise_amplitude = noise;
  spec.seed = seed;
  for (const auto& part : split(text, ',')) {
    const auto x = part.find('x');
    const auto at = part.find('@');
    if (x == std::string::npos || at == std::string::npos || at < x)
      throw InvalidInput("segment spec '" + part +
                         "' is not <count>x<len>@<rate>");
    try {
      const long count = std::stol(part.substr(0, x));
      const long len = std::stol(part.substr(x + 1, at - x - 1));
      const double rate = std::stod(part.substr(at + 1));
      if (count < 1) throw InvalidInput("segment count must be >= 1");
      for (long i = 0; i < count; ++i) spec.segments.push_back({len, rate});
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput("segment spec '" + part + "' has bad numbers");
    }
  }
  return spec;
}

std::vector<double> load_data(const DataFlags& flags) {
  const bool have_file = !flags.dataset_path.empty();
  const bool have_gen = !flags.segments_spec.empty();
  if (have_file == have_gen)
    throw InvalidInput("provide exactly one of --dataset and --segments");
  if (have_file) return read_dataset_file(flags.dataset_path);
  return gen_drift_data(parse_segments_spec(flags.segments_spec,
                                            flags.gen_mode, flags.noise,
                                            flags.noise_seed));
}

std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("EHMM_OUTPUT_DIR");
  if (!dir || !*dir || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(resolve_output(path));
  if (!out)
    throw InvalidInput("cannot open output file '" + resolve_output(path) +
                       "'");
  return out;
}

enum class Algorithm { kBayes, kFs, kFsFreezing, kFsSleeping };

Algorithm parse_algorithm(const std::string& name) {
  if (name == "bayes") return Algorithm::kBayes;
  if (name == "fs") return Algorithm::kFs;
  if (name == "fs_freezing") return Algorithm::kFsFreezing;
  if (name == "fs_sleeping") return Algorithm::kFsSleeping;
  throw InvalidInput("unknown algorithm '" + name + "'");
}

// Everything a forward run needs. bayes/fs treat the members as black-box
// experts fed by their own full-data runs; fs_freezing/fs_sleeping run the
// single union model.
struct Runner {
  Ehmm model;
  TransitionOp op;
  std::unique_ptr<ExpertAdvice> advice;
};

Runner make_runner(Algorithm algorithm, double alpha, const MemberSet& members,
                   const std::vector<double>& data) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInput("--alpha must be in [0,1]");
  Runner runner;
  switch (algorithm) {
    case Algorithm::kBayes:
    case Algorithm::kFs: {
      GaussianAdvice base;
      auto losses = member_round_losses(members.models, base, data);
      runner.advice = std::make_unique<PrecomputedAdvice>(std::move(losses));
      const ExpertDist prior = member_prior_as_experts(members.prior);
      if (algorithm == Algorithm::kBayes) {
        runner.model = build_bayes(prior);
        runner.op = TransitionOp::sparse();
      } else {
        auto [model, op] = build_fixed_share({alpha, prior});
        runner.model = std::move(model);
        runner.op = op;
      }
      break;
    }
    case Algorithm::kFsFreezing:
    case Algorithm::kFsSleeping: {
      auto union_model = build_bayes_union(members.prior, members.models);
      const SegmentMode mode = algorithm == Algorithm::kFsFreezing
                                   ? SegmentMode::kFreezing
                                   : SegmentMode::kSleeping;
      auto [model, op] = build_fs_learning(mode, alpha, std::move(union_model));
      runner.model = std::move(model);
      runner.op = op;
      runner.advice = std::make_unique<GaussianAdvice>();
      break;
    }
  }
  return runner;
}

// ---- gen-data --------------------------------------------------------------

int cmd_gen_data(const std::string& fig2, const DataFlags& flags,
                 const std::string& output) {
  std::vector<double> data;
  if (!fig2.empty()) {
    const auto [sleeping, freezing] = fig2_specs();
    data = gen_drift_data(fig2 == "sleeping" ? sleeping : freezing);
  } else {
    if (flags.segments_spec.empty())
      throw InvalidInput("gen-data needs --fig2 or --segments");
    data = gen_drift_data(parse_segments_spec(flags.segments_spec,
                                              flags.gen_mode, flags.noise,
                                              flags.noise_seed));
  }
  auto out = open_output(output);
  write_dataset_csv(out, data);
  return kExitOk;
}

// ---- run -------------------------------------------------------------------

int cmd_run(const std::string& algorithm_name, double alpha,
            const std::string& members_flag, const std::string& prior_flag,
            const DataFlags& data_flags, const std::string& output,
            std::optional<double> prune_below) {
  const auto data = load_data(data_flags);
  const auto members = parse_members(members_flag, prior_flag);
  auto out = open_output(output);
  out << "t,x,round_loss,cum_loss,active_states\n";

  Runner runner;
  try {
    runner = make_runner(parse_algorithm(algorithm_name), alpha, members, data);
  } catch (const ZeroDensity& e) {
    // A black-box member's own run died; nothing to tabulate beyond the header.
    out.flush();
    std::cerr << "error: " << e.what() << " (in a member's full-data run)\n";
    return kExitNumeric;
  }
  const auto start = std::chrono::steady_clock::now();
  ForwardState state = forward_init(runner.model, runner.op);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::int64_t active = std::int64_t(state.weights.size());
    const std::int64_t t = state.t;
    double loss;
    try {
      auto [next, round_loss] = observe(std::move(state), runner.model,
                                        runner.op, *runner.advice, data[i]);
      state = std::move(next);
      loss = round_loss;
    } catch (const ZeroDensity&) {
      out << t << ',' << format_value(data[i]) << ",inf,inf," << active
          << '\n';
      out.flush();
      std::cerr << "zero predictive density at round " << t << "\n";
      return kExitNumeric;
    }
    out << t << ',' << format_value(data[i]) << ',' << format_value(loss)
        << ',' << format_value(state.cum_log_loss) << ',' << active << '\n';
    if (prune_below) prune_weights_below(state, *prune_below);
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::cerr << "total_log_loss " << format_value(state.cum_log_loss)
            << " wall_seconds " << format_value(elapsed) << "\n";
  return kExitOk;
}

// ---- reproduce-fig2 --------------------------------------------------------

// Per-round losses of the three reference schemes under the matched
// labelling (the member whose rate generated each segment).
void write_scheme_losses(std::ostream& out, const DriftDatasetSpec& spec,
                         const std::vector<double>& data) {
  const GaussianAdvice advice;
  const std::vector<Ehmm> members = {build_dm({0.1}), build_dm({0.3})};
  const Segmentation seg = spec_segmentation(spec);
  std::vector<int> labs;
  for (const auto& s : spec.segments) labs.push_back(s.rate == 0.1 ? 0 : 1);
  const auto losses = scheme_round_losses(seg, Labelling<int>(seg, labs),
                                          members, advice, data);

  out << "t,stbe,ll_freezing,ll_sleeping\n";
  double cum_s = 0.0, cum_f = 0.0, cum_l = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    cum_s += losses.standard[i];
    cum_f += losses.ll_freezing[i];
    cum_l += losses.ll_sleeping[i];
    out << (i + 1) << ',' << format_value(cum_s) << ',' << format_value(cum_f)
        << ',' << format_value(cum_l) << '\n';
  }
}

int cmd_reproduce_fig2(const std::string& out_dir) {
  const auto [sleeping, freezing] = fig2_specs();
  const std::string prefix = out_dir.empty() ? "" : out_dir + "/";
  {
    auto out = open_output(prefix + "fig2_losses_sleeping.csv");
    write_scheme_losses(out, sleeping, gen_drift_data(sleeping));
  }
  {
    auto out = open_output(prefix + "fig2_losses_freezing.csv");
    write_scheme_losses(out, freezing, gen_drift_data(freezing));
  }
  return kExitOk;
}

// ---- check-bounds ----------------------------------------------------------

SchemeKind scheme_for(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFs: return SchemeKind::kStandard;
    case Algorithm::kFsFreezing: return SchemeKind::kLLFreezing;
    case Algorithm::kFsSleeping: return SchemeKind::kLLSleeping;
    default:
      throw InvalidInput(
          "check-bounds needs an algorithm with a bound: fs, fs_freezing or "
          "fs_sleeping");
  }
}

int cmd_check_bounds(const std::string& algorithm_name, double alpha,
                     const std::string& members_flag,
                     const std::string& prior_flag, const DataFlags& data_flags,
                     const std::string& segmentation_flag,
                     const std::string& labels_flag, bool exhaustive,
                     const std::string& output) {
  const auto data = load_data(data_flags);
  const std::int64_t horizon = std::int64_t(data.size());
  const auto members = parse_members(members_flag, prior_flag);
  const Algorithm algorithm = parse_algorithm(algorithm_name);
  const SchemeKind kind = scheme_for(algorithm);

  Runner runner = make_runner(algorithm, alpha, members, data);
  const double algorithm_loss =
      run_forward(runner.model, runner.op, *runner.advice, data)
          .total_log_loss;

  const GaussianAdvice advice;
  const auto tables = ReferenceTables::build(kind, members.models, advice, data);

  std::vector<std::pair<Segmentation, std::vector<int>>> cases;
  if (exhaustive) {
    if (horizon > 10)
      throw LimitExceeded("exhaustive bound sweep is limited to horizons <= 10");
    const int n = int(members.models.size());
    for (const auto& seg : enumerate_segmentations(horizon)) {
      const std::size_t cells = seg.size();
      std::vector<int> labs(cells, 0);
      while (true) {
        cases.emplace_back(seg, labs);
        if (cases.size() > 200000)
          throw LimitExceeded("bound sweep has too many labellings");
        std::size_t c = 0;
        for (; c < cells; ++c) {
          if (++labs[c] < n) break;
          labs[c] = 0;
        }
        if (c == cells) break;
      }
    }
  } else {
    if (segmentation_flag.empty() || labels_flag.empty())
      throw InvalidInput(
          "check-bounds needs --exhaustive or both --segmentation and "
          "--labels");
    Segmentation seg = Segmentation::parse(segmentation_flag, ',');
    if (seg.horizon() != horizon)
      throw InvalidInput("--segmentation must cover the data horizon");
    std::vector<int> labs;
    for (const auto& part : split(labels_flag, ','))
      labs.push_back(std::stoi(part));
    cases.emplace_back(std::move(seg), std::move(labs));
  }

  auto out = open_output(output);
  out << "segmentation,labels,reference_loss,switching_term,selection_term,"
         "rhs,algorithm_loss,slack\n";
  double min_slack = kPosInf;
  for (const auto& [seg, labs] : cases) {
    const Labelling<int> labels(seg, labs);
    const double reference = tables.loss(seg, labels);
    const BoundReport report =
        bound_rhs(horizon, seg, labels, members.prior, alpha, reference);
    const double slack = report.rhs - algorithm_loss;
    min_slack = std::min(min_slack, slack);
    std::string labels_text;
    for (std::size_t c = 0; c < labs.size(); ++c) {
      if (c) labels_text.push_back(';');
      labels_text += std::to_string(labs[c]);
    }
    out << seg.to_string() << ',' << labels_text << ','
        << format_value(report.reference_loss) << ','
        << format_value(report.switching_term) << ','
        << format_value(report.selection_term) << ','
        << format_value(report.rhs) << ',' << format_value(algorithm_loss)
        << ',' << format_value(slack) << '\n';
  }
  std::cerr << "cases " << cases.size() << " min_slack "
            << format_value(min_slack) << "\n";
  if (min_slack < -kBoundTolerance) return kExitBound;
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& oracle_name,
               const std::string& algorithm_name, double alpha,
               const std::string& members_flag, const std::string& prior_flag,
               const DataFlags& data_flags) {
  const auto data = load_data(data_flags);
  const auto members = parse_members(members_flag, prior_flag);
  const Algorithm algorithm = parse_algorithm(algorithm_name);

  Runner runner = make_runner(algorithm, alpha, members, data);
  const double run_loss =
      run_forward(runner.model, runner.op, *runner.advice, data)
          .total_log_loss;

  double oracle_loss;
  if (oracle_name == "path-sum") {
    Ehmm flat;
    switch (algorithm) {
      case Algorithm::kBayes:
        flat = runner.model;
        break;
      case Algorithm::kFs:
      case Algorithm::kFsFreezing:
        flat = materialize_share(runner.model, alpha);
        break;
      case Algorithm::kFsSleeping:
        throw InvalidInput(
            "path-sum cannot materialize the time-dependent sleeping "
            "transition; use --oracle seg-mixture");
    }
    oracle_loss = oracle::path_sum(flat, *runner.advice, data);
  } else if (oracle_name == "seg-mixture") {
    SegmentMode mode;
    switch (algorithm) {
      case Algorithm::kFs:
      case Algorithm::kFsFreezing:
        mode = SegmentMode::kFreezing;
        break;
      case Algorithm::kFsSleeping:
        mode = SegmentMode::kSleeping;
        break;
      default:
        throw InvalidInput("seg-mixture needs fs, fs_freezing or fs_sleeping");
    }
    oracle_loss = oracle::segmentation_mixture(mode, alpha, runner.model,
                                               *runner.advice, data);
  } else {
    throw InvalidInput("unknown oracle '" + oracle_name + "'");
  }

  const double diff = std::abs(run_loss - oracle_loss);
  std::cout << "forward " << format_value(run_loss) << " oracle "
            << format_value(oracle_loss) << " diff " << format_value(diff)
            << "\n";
  return diff <= 1e-9 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential prediction with switching expert hidden Markov models"};
  app.require_subcommand(1);

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "generate a drifting-mean dataset");
  std::string gen_fig2;
  DataFlags gen_flags;
  std::string gen_output = "data.csv";
  gen->add_option("--fig2", gen_fig2,
                  "built-in experiment dataset: sleeping|freezing")
      ->check(CLI::IsMember({"sleeping", "freezing"}));
  gen_flags.attach(gen);
  gen->add_option("--output,-o", gen_output, "output CSV path");

  // run
  auto* run = app.add_subcommand("run", "run an algorithm over a dataset");
  std::string run_algorithm = "fs_sleeping";
  double run_alpha = 0.01;
  std::string run_members = "dm:0.1,dm:0.3";
  std::string run_prior = "uniform";
  DataFlags run_flags;
  std::string run_output = "run.csv";
  double run_prune = 0.0;
  bool run_prune_set = false;
  run->add_option("--algorithm", run_algorithm,
                  "bayes|fs|fs_freezing|fs_sleeping");
  run->add_option("--alpha", run_alpha, "switching rate in [0,1]");
  run->add_option("--members", run_members, "comma-separated model specs");
  run->add_option("--prior", run_prior, "uniform or comma-separated weights");
  run_flags.attach(run);
  run->add_option("--output,-o", run_output, "output CSV path");
  run->add_option("--prune-below", run_prune,
                  "drop states whose posterior log-weight falls below this "
                  "(off by default)")
      ->each([&run_prune_set](const std::string&) { run_prune_set = true; });

  // reproduce-fig2
  auto* fig2 = app.add_subcommand(
      "reproduce-fig2",
      "cumulative losses of the three reference schemes on both datasets");
  std::string fig2_dir;
  fig2->add_option("--out-dir", fig2_dir, "output directory");

  // check-bounds
  auto* bounds = app.add_subcommand(
      "check-bounds", "regret-bound report over reference segmentations");
  std::string bounds_algorithm = "fs_freezing";
  double bounds_alpha = 0.01;
  std::string bounds_members = "dm:0.1,dm:0.3";
  std::string bounds_prior = "uniform";
  DataFlags bounds_flags;
  std::string bounds_segmentation, bounds_labels;
  bool bounds_exhaustive = false;
  std::string bounds_output = "bounds.csv";
  bounds->add_option("--algorithm", bounds_algorithm,
                     "fs|fs_freezing|fs_sleeping");
  bounds->add_option("--alpha", bounds_alpha, "switching rate in [0,1]");
  bounds->add_option("--members", bounds_members, "comma-separated model specs");
  bounds->add_option("--prior", bounds_prior,
                     "uniform or comma-separated weights");
  bounds_flags.attach(bounds);
  bounds->add_option("--segmentation", bounds_segmentation,
                     "reference segmentation, e.g. 1:3,4:8");
  bounds->add_option("--labels", bounds_labels,
                     "member index per cell, e.g. 0,1");
  bounds->add_flag("--exhaustive", bounds_exhaustive,
                   "sweep all segmentations and labellings (horizon <= 10)");
  bounds->add_option("--output,-o", bounds_output, "output CSV path");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "compare a forward run against a brute-force oracle");
  std::string verify_oracle = "seg-mixture";
  std::string verify_algorithm = "fs_freezing";
  double verify_alpha = 0.01;
  std::string verify_members = "dm:0.1,dm:0.3";
  std::string verify_prior = "uniform";
  DataFlags verify_flags;
  verify->add_option("--oracle", verify_oracle, "path-sum|seg-mixture")
      ->check(CLI::IsMember({"path-sum", "seg-mixture"}));
  verify->add_option("--algorithm", verify_algorithm,
                     "bayes|fs|fs_freezing|fs_sleeping");
  verify->add_option("--alpha", verify_alpha, "switching rate in [0,1]");
  verify->add_option("--members", verify_members, "comma-separated model specs");
  verify->add_option("--prior", verify_prior,
                     "uniform or comma-separated weights");
  verify_flags.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed())
      return cmd_gen_data(gen_fig2, gen_flags, gen_output);
    if (run->parsed())
      return cmd_run(run_algorithm, run_alpha, run_members, run_prior,
                     run_flags, run_output,
                     run_prune_set ? std::optional<double>(run_prune)
                                   : std::nullopt);
    if (fig2->parsed()) return cmd_reproduce_fig2(fig2_dir);
    if (bounds->parsed())
      return cmd_check_bounds(bounds_algorithm, bounds_alpha, bounds_members,
                              bounds_prior, bounds_flags, bounds_segmentation,
                              bounds_labels, bounds_exhaustive, bounds_output);
    if (verify->parsed())
      return cmd_verify(verify_oracle, verify_algorithm, verify_alpha,
                        verify_members, verify_prior, verify_flags);
  } catch (const ZeroDensity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const BoundViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
