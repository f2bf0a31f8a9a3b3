// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli.hpp"
#include "lfb/error.hpp"

namespace lfb::cli {
namespace {

struct Flags {
  ExperimentConfig config;
  std::string log_base = "e";
  bool fixed_codebook = false;
};

void add_options(CLI::App& app, Flags& f) {
  auto& c = f.config;
  const std::map<std::string, ChannelKind> channels{{"miso", ChannelKind::kMiso},
                                                    {"mimo", ChannelKind::kMimo}};
  const std::map<std::string, BoundKind> bounds{{"lower", BoundKind::kLower},
                                                {"upper", BoundKind::kUpper}};
  const std::map<std::string, EtaMode> eta{{"asymptotic", EtaMode::kAsymptotic},
                                           {"mc", EtaMode::kMonteCarlo}};

  app.add_option("--channel", c.channel, "miso or mimo")
      ->transform(CLI::CheckedTransformer(channels, CLI::ignore_case));
  app.add_option("--nt", c.n_t, "transmit antennas N_t");
  app.add_option("--nrbar", c.n_r_bar, "receive antennas per transmit antenna (MIMO)");
  app.add_option("--snr-db", c.snr_db, "background SNR in dB");
  app.add_option("--lbar", c.l_bar, "normalized coherence block L / N_t");
  app.add_option("--mu", c.mu, "symbols per feedback bit");
  app.add_option("--tbar", c.t_bar, "normalized training length T / N_t");
  app.add_option("--bbar", c.b_bar, "normalized feedback B / N_t");
  app.add_option("--sigma-w2", c.sigma_w2, "estimation error variance (overrides --tbar)");
  app.add_option("--bits", c.bits, "codebook bits B for simulate (overrides --bbar)");
  app.add_option("--bound", c.bound, "lower or upper")
      ->transform(CLI::CheckedTransformer(bounds, CLI::ignore_case));
  app.add_option("--c", c.c_estimate, "MIMO concentration factor c");
  app.add_option("--eta", c.eta_mode, "MIMO E[eta] source: asymptotic or mc")
      ->transform(CLI::CheckedTransformer(eta, CLI::ignore_case));
  app.add_option("--trials", c.simulation.trials, "Monte Carlo trials");
  app.add_option("--seed", c.simulation.seed, "Monte Carlo seed");
  app.add_option("--workers", c.simulation.workers, "worker threads (0 = all cores)");
  app.add_flag("--fixed-codebook", f.fixed_codebook, "share one codebook across trials");
  app.add_flag("--reference", c.reference, "also estimate perfect-CSI reference rates");
  app.add_option("--ratio", c.ratio, "sweep: T_bar / (mu B_bar); 0 optimizes the split");
  app.add_option("--points", c.points, "sweep points");
  app.add_option("--nt-list", c.n_t_list, "asymptotics: comma-separated N_t values")
      ->delimiter(',');
  app.add_option("--name", c.figure, "figure preset fig1 .. fig6");
  app.add_option("--log-base", f.log_base, "rate units: e (nats) or 2 (bits)")
      ->check(CLI::IsMember({"e", "2"}));
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", c.output, "output path (default stdout)");
}

ExperimentConfig resolve(const Flags& f, Command command) {
  ExperimentConfig c = f.config;
  c.command = command;
  c.bits_output = f.log_base == "2";
  c.simulation.fresh_codebook_per_trial = !f.fixed_codebook;
  return c;
}

void emit(const ExperimentConfig& c, const std::vector<Record>& records, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (c.format == "json") {
      write_jsonl(os, records);
    } else {
      write_csv(os, records);
    }
  };
  if (c.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw std::runtime_error("cannot open output file " + c.output);
  write(file);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Training and feedback overhead for limited-feedback beamforming", "lfb"};
  app.set_config("--config", "", "read `key = value` settings from a file");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Flags flags;
  add_options(app, flags);

  const std::pair<Command, const char*> commands[] = {
      {Command::kBounds, "closed-form capacity bounds"},
      {Command::kOptimize, "optimize the training/feedback split"},
      {Command::kSweep, "rate versus total overhead"},
      {Command::kSimulate, "Monte Carlo rates"},
      {Command::kAsymptotics, "large-N_t predictions and convergence series"},
      {Command::kFigure, "run a figure preset"},
  };
  for (const auto& [cmd, help] : commands) {
    app.add_subcommand(std::string(command_name(cmd)), help)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command command = *parse_command(app.get_subcommands().front()->get_name());
  ExperimentConfig config = resolve(flags, command);
  try {
    emit(config, execute(config), out);
  } catch (const DomainError& e) {
    err << "lfb: domain error: " << e.what() << '\n';
    return 3;
  } catch (const RegimeError& e) {
    err << "lfb: out of regime: " << e.what() << '\n';
    return 3;
  } catch (const CapacityError& e) {
    err << "lfb: resource cap: " << e.what() << '\n';
    return 3;
  } catch (const SingularInputError& e) {
    err << "lfb: singular input: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "lfb: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "lfb: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace lfb::cli
