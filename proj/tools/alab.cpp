// Command-line front end for the active-learning laboratory: run single
// experiments, sweep a parameter axis, evaluate the closed-form bounds,
// generate function classes, and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alab/bounds.hpp"
#include "alab/csvio.hpp"
#include "alab/errors.hpp"
#include "alab/simlab.hpp"
#include "alab/svg.hpp"
#include "alab/verify.hpp"

namespace {

using namespace alab;

struct SimFlags {
  std::string config_path;
  std::string class_spec;
  std::string channel_spec;
  std::vector<std::string> policies;
  std::string msgbs_q = "default";
  std::string mode = "sequential";
  double epsilon = 0.01;
  long budget = 10;
  long episodes = 1000;
  std::uint64_t seed = 1;
  int threads = 0;
};

void add_sim_flags(CLI::App* cmd, SimFlags& f, bool multi_policy) {
  cmd->add_option("--config", f.config_path,
                  "key=value file with the flags below; command-line flags take precedence");
  cmd->add_option("--class", f.class_spec,
                  "function class: disjoint:m=K, threshold:m=K, rich:m=K,labels=L, or a file");
  cmd->add_option("--channel", f.channel_spec, "observation channel: bsc:p=0.2 or a file");
  auto* pol = cmd->add_option("--policy", f.policies, "query policy: ejs, msgbs, random");
  if (!multi_policy) pol->expected(1);
  cmd->add_option("--msgbs-q", f.msgbs_q,
                  "assumed MSGBS noise: a value in (0,0.5), or lambda-opt for the "
                  "rate-maximizing choice (default: the channel crossover)");
  cmd->add_option("--mode", f.mode, "stopping mode: sequential or fixed")
      ->check(CLI::IsMember({"sequential", "fixed"}));
  cmd->add_option("--epsilon", f.epsilon, "sequential mode: stop once max posterior >= 1-epsilon");
  cmd->add_option("--n", f.budget, "fixed mode: number of queries");
  cmd->add_option("--episodes", f.episodes, "Monte Carlo episodes");
  cmd->add_option("--seed", f.seed, "master seed; episodes use per-index substreams");
  cmd->add_option("--threads", f.threads, "worker threads (0 = auto, capped by ALAB_THREADS)");
}

// Fills in flags from a key=value file; anything given on the command line
// wins. Keys match the long flag names without the leading dashes.
void merge_config_file(CLI::App* cmd, SimFlags& f) {
  if (f.config_path.empty()) return;
  std::ifstream in(f.config_path);
  if (!in) throw ValidationError("cannot open config file: " + f.config_path);
  std::ostringstream text;
  text << in.rdbuf();
  for (const auto& [key, value] : parse_key_value_text(text.str(), f.config_path)) {
    if (cmd->count("--" + key) > 0) continue;  // flags override file values
    if (key == "class") {
      f.class_spec = value;
    } else if (key == "channel") {
      f.channel_spec = value;
    } else if (key == "policy") {
      f.policies = {value};
    } else if (key == "msgbs-q") {
      f.msgbs_q = value;
    } else if (key == "mode") {
      if (value != "sequential" && value != "fixed")
        throw ValidationError("config: mode must be sequential or fixed");
      f.mode = value;
    } else if (key == "epsilon") {
      f.epsilon = parse_double(value);
    } else if (key == "n") {
      f.budget = parse_long(value);
    } else if (key == "episodes") {
      f.episodes = parse_long(value);
    } else if (key == "seed") {
      f.seed = parse_u64(value);
    } else if (key == "threads") {
      f.threads = static_cast<int>(parse_long(value));
    } else {
      throw ValidationError("config: unknown key \"" + key + "\"");
    }
  }
}

void require_core_flags(const SimFlags& f) {
  if (f.class_spec.empty()) throw ValidationError("--class is required");
  if (f.channel_spec.empty()) throw ValidationError("--channel is required");
}

PolicyKind resolve_policy(const std::string& name, const SimFlags& f, const ClassSpec& cls,
                          const ChannelSpec& chan) {
  PolicyKind kind;
  if (name == "ejs") {
    kind.tag = PolicyTag::Ejs;
  } else if (name == "random") {
    kind.tag = PolicyTag::Random;
  } else if (name == "msgbs") {
    kind.tag = PolicyTag::Msgbs;
    if (f.msgbs_q == "default") {
      if (!chan.bsc_p)
        throw ValidationError("msgbs needs --msgbs-q for channels that are not bsc:p=...");
      kind.msgbs_q = *chan.bsc_p;
    } else if (f.msgbs_q == "lambda-opt") {
      if (!chan.bsc_p)
        throw ValidationError("--msgbs-q lambda-opt needs a bsc channel");
      kind.msgbs_q = lambda_p(*chan.bsc_p).maximizer;
    } else {
      kind.msgbs_q = parse_double(f.msgbs_q);
    }
    kind.msgbs_c_star = c_star(cls.fc);
  } else {
    throw ValidationError("unknown policy: " + name);
  }
  kind.validate();
  return kind;
}

ExperimentConfig build_config(const SimFlags& f, const std::string& policy,
                              const ClassSpec& cls, const ChannelSpec& chan) {
  ExperimentConfig cfg;
  cfg.fc = cls.fc;
  cfg.ch = chan.channel;
  cfg.policy = resolve_policy(policy, f, cls, chan);
  cfg.rule = f.mode == "sequential" ? StoppingRule::sequential(f.epsilon)
                                    : StoppingRule::fixed_budget(f.budget);
  cfg.episodes = f.episodes;
  cfg.seed = f.seed;
  cfg.threads = f.threads;
  cfg.class_tag = cls.tag;
  cfg.policy_tag = policy;
  if (chan.bsc_p) cfg.bsc_p = *chan.bsc_p;
  cfg.validate();
  return cfg;
}

void echo_config(const ExperimentConfig& cfg) {
  std::cerr << "# class=" << cfg.class_tag << " M=" << cfg.fc.num_functions
            << " columns=" << cfg.fc.num_columns() << " policy=" << cfg.policy_tag;
  if (cfg.policy.msgbs_q) std::cerr << " msgbs_q=" << format_double(*cfg.policy.msgbs_q);
  if (cfg.policy.msgbs_c_star)
    std::cerr << " msgbs_c_star=" << format_double(*cfg.policy.msgbs_c_star);
  if (cfg.rule.mode == StoppingRule::Mode::Sequential)
    std::cerr << " mode=sequential epsilon=" << format_double(cfg.rule.epsilon);
  else
    std::cerr << " mode=fixed n=" << cfg.rule.budget;
  std::cerr << " episodes=" << cfg.episodes << " seed=" << cfg.seed
            << " threads=" << resolve_thread_count(cfg.threads) << "\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write to " + path);
  out << text;
}

int cmd_simulate(CLI::App* cmd, SimFlags f, const std::string& out_path,
                 const std::string& trace_path) {
  merge_config_file(cmd, f);
  require_core_flags(f);
  if (f.policies.empty()) f.policies = {"ejs"};
  const ClassSpec cls = parse_class_spec(f.class_spec);
  const ChannelSpec chan = parse_channel_spec(f.channel_spec);
  ExperimentConfig cfg = build_config(f, f.policies.front(), cls, chan);
  echo_config(cfg);
  write_output(out_path, format_result_csv({monte_carlo(cfg)}));
  if (!trace_path.empty()) {
    ExperimentConfig traced = cfg;
    traced.record_beliefs = true;
    write_output(trace_path, format_trace(run_episode(traced, 0)));
  }
  return 0;
}

int cmd_sweep(CLI::App* cmd, SimFlags f, const std::string& axis,
              const std::vector<double>& values, const std::string& out_path,
              const std::string& svg_path) {
  merge_config_file(cmd, f);
  require_core_flags(f);
  if (f.policies.empty()) f.policies = {"ejs"};
  if (values.empty()) throw ValidationError("sweep needs at least one --values entry");
  const ChannelSpec base_chan = parse_channel_spec(f.channel_spec);
  const ClassSpec base_cls = parse_class_spec(f.class_spec);

  std::vector<ResultRow> rows;
  std::vector<SvgSeries> series(f.policies.size());
  for (std::size_t s = 0; s < f.policies.size(); ++s) series[s].label = f.policies[s];

  for (const double value : values) {
    SimFlags step = f;
    ClassSpec cls = base_cls;
    ChannelSpec chan = base_chan;
    if (axis == "epsilon") {
      step.mode = "sequential";
      step.epsilon = value;
    } else if (axis == "n") {
      step.mode = "fixed";
      step.budget = static_cast<long>(value);
    } else if (axis == "m") {
      if (base_cls.kind == "file")
        throw ValidationError("an m sweep needs a class shorthand, not a file");
      std::string spec = base_cls.kind + ":m=" + std::to_string(static_cast<long>(value));
      if (base_cls.kind == "rich") spec += ",labels=" + std::to_string(base_cls.labels);
      cls = parse_class_spec(spec);
    } else if (axis == "p") {
      if (!base_chan.bsc_p) throw ValidationError("a p sweep needs a bsc channel");
      chan = parse_channel_spec("bsc:p=" + format_double(value));
    } else {
      throw ValidationError("unknown sweep axis: " + axis);
    }
    for (std::size_t s = 0; s < f.policies.size(); ++s) {
      ExperimentConfig cfg = build_config(step, f.policies[s], cls, chan);
      echo_config(cfg);
      const ResultRow row = monte_carlo(cfg);
      series[s].points.push_back(
          {value, cfg.rule.mode == StoppingRule::Mode::Sequential ? row.mean_tau : row.pe});
      rows.push_back(row);
    }
  }
  write_output(out_path, format_result_csv(rows));
  if (!svg_path.empty()) {
    const bool sequential =
        axis == "epsilon" || (axis != "n" && f.mode == "sequential");
    write_output(svg_path, render_line_plot("sweep over " + axis, axis,
                                            sequential ? "mean queries" : "error probability",
                                            series));
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, int threads) {
  VerifyOptions options;
  options.only = only;
  options.threads = threads;
  for (const std::string& g : options.only) {
    const auto& known = verification_groups();
    if (std::find(known.begin(), known.end(), g) == known.end())
      throw ValidationError("unknown verification group: " + g);
  }
  const auto outcomes = run_verification(options);
  int failures = 0;
  for (const auto& o : outcomes) {
    if (!o.pass) ++failures;
    std::printf("%-4s %-14s %s (%.2f s)\n", o.pass ? "ok" : "FAIL", o.group.c_str(),
                o.detail.c_str(), o.seconds);
  }
  std::printf("%zu checks, %d failures\n", outcomes.size(), failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"active-learning laboratory: divergence-guided querying over finite "
               "function classes under observation noise"};
  app.require_subcommand(1);

  SimFlags sim_flags;
  std::string sim_out, sim_trace;
  auto* simulate = app.add_subcommand("simulate", "run one Monte Carlo experiment");
  add_sim_flags(simulate, sim_flags, false);
  simulate->add_option("--out", sim_out, "write the CSV here instead of stdout");
  simulate->add_option("--dump-trace", sim_trace, "write episode 0's step trace here");

  SimFlags sweep_flags;
  std::string sweep_axis = "epsilon", sweep_out, sweep_svg;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "run one experiment per axis value per policy");
  add_sim_flags(sweep, sweep_flags, true);
  sweep->add_option("--axis", sweep_axis, "sweep axis: epsilon, m, n, or p")
      ->check(CLI::IsMember({"epsilon", "m", "n", "p"}));
  sweep->add_option("--values", sweep_values, "axis values")->required();
  sweep->add_option("--out", sweep_out, "write the CSV here instead of stdout");
  sweep->add_option("--svg", sweep_svg, "also write a line plot here");

  std::string bounds_class = "rich";
  int bounds_m = 5;
  double bounds_eps = 0.01, bounds_p = 0.2;
  auto* bounds = app.add_subcommand("bounds", "evaluate the query-count bounds for a class");
  bounds->add_option("--class", bounds_class, "disjoint, threshold, or rich")
      ->check(CLI::IsMember({"disjoint", "threshold", "rich"}));
  bounds->add_option("--m", bounds_m, "number of functions")->required();
  bounds->add_option("--epsilon", bounds_eps, "target error probability")->required();
  bounds->add_option("--p", bounds_p, "BSC crossover probability")->required();

  std::vector<double> sweep_ps;
  auto* constants = app.add_subcommand("constants-sweep",
                                       "tabulate C, C1, (1/2-p)^2 and lambda over p");
  constants->add_option("--p", sweep_ps, "crossover probabilities")->required();

  std::string gen_class, gen_out;
  bool gen_report = false;
  auto* classgen = app.add_subcommand("classgen", "emit a function class file");
  classgen->add_option("--class", gen_class, "class shorthand or file")->required();
  classgen->add_option("--out", gen_out, "write the class here instead of stdout");
  classgen->add_flag("--report", gen_report, "print the structural report CSV");

  std::vector<std::string> verify_only;
  int verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "run the invariant and acceptance suites");
  verify->add_option("--only", verify_only, "restrict to these check groups");
  verify->add_option("--threads", verify_threads, "worker threads for the heavy checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(simulate, sim_flags, sim_out, sim_trace);
    if (sweep->parsed())
      return cmd_sweep(sweep, sweep_flags, sweep_axis, sweep_values, sweep_out, sweep_svg);
    if (bounds->parsed()) {
      std::cout << format_bound_csv(
          {class_bound_report(bounds_class, bounds_m, bounds_eps, bounds_p)});
      return 0;
    }
    if (constants->parsed()) {
      std::cout << format_constants_csv(constants_sweep(sweep_ps));
      return 0;
    }
    if (classgen->parsed()) {
      const ClassSpec cls = parse_class_spec(gen_class);
      if (!gen_out.empty() || !gen_report) write_output(gen_out, format_function_class(cls.fc));
      if (gen_report) {
        const ClassReport rep = make_class_report(cls.fc);
        std::cout << "class,M,columns,one_neighborly,locally_identifiable,sample_rich,"
                     "c_star,n0\n"
                  << cls.tag << ',' << cls.fc.num_functions << ',' << cls.fc.num_columns()
                  << ',' << (rep.one_neighborly ? 1 : 0) << ','
                  << (rep.locally_identifiable ? 1 : 0) << ',' << (rep.sample_rich ? 1 : 0)
                  << ',' << (rep.c_star ? format_double(*rep.c_star) : "") << ',' << rep.n0
                  << '\n';
      }
      return 0;
    }
    if (verify->parsed()) return cmd_verify(verify_only, verify_threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
