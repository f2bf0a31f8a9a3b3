// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cli.hpp"
#include "lfb/bounds.hpp"
#include "lfb/error.hpp"
#include "lfb/numerics.hpp"

namespace lfb::cli {
namespace {

// Reference rates use an exhaustive codebook search per trial; beyond this
// size the preset runs become impractically slow.
constexpr int kReferenceBitsCap = 12;

std::string_view channel_name(ChannelKind k) { return k == ChannelKind::kMiso ? "miso" : "mimo"; }
std::string_view bound_name(BoundKind k) { return k == BoundKind::kLower ? "lower" : "upper"; }

struct Units {
  double nats_per_unit = 1.0;
  const char* tag = "nats";
};

Units units_of(const ExperimentConfig& c) {
  return c.bits_output ? Units{kLn2, "bits"} : Units{};
}

Record echo(const ExperimentConfig& c) {
  const SystemConfig sys = c.system();
  Record r;
  if (!c.figure.empty()) r.set("figure", c.figure);
  if (!c.curve.empty()) r.set("curve", c.curve);
  r.set("command", std::string(command_name(c.command)))
      .set("channel", std::string(channel_name(c.channel)))
      .set("bound", std::string(bound_name(c.bound)))
      .set("nt", sys.n_t)
      .set("nr", sys.n_r)
      .set("nrbar", sys.n_r_bar())
      .set("snr_db", c.snr_db)
      .set("snr", sys.snr)
      .set("lbar", c.l_bar)
      .set("mu", c.mu);
  return r;
}

void finish(Record& r, const ExperimentConfig& c, bool monte_carlo) {
  if (monte_carlo) {
    r.set("trials", c.simulation.trials).set("seed", c.simulation.seed);
    r.set("fresh_codebook", c.simulation.fresh_codebook_per_trial);
  }
  r.set("units", units_of(c).tag).set("version", kToolVersion);
}

void set_rate(Record& r, std::string_view key, double nats, const Units& u) {
  r.set(key, nats / u.nats_per_unit);
}

void set_mean(Record& r, const std::string& key, const SampleMean& m, const Units& u) {
  r.set(key, m.mean / u.nats_per_unit).set(key + "_std_err", m.std_err / u.nats_per_unit);
}

[[noreturn]] void missing(const char* what, const ExperimentConfig& c) {
  throw std::invalid_argument(std::string(command_name(c.command)) + " needs " + what);
}

double resolve_sigma_w2(const ExperimentConfig& c) {
  if (c.sigma_w2) return *c.sigma_w2;
  if (c.t_bar) return mse_variance(*c.t_bar, snr_from_db(c.snr_db));
  missing("--sigma-w2 or --tbar", c);
}

RateObjective objective_of(const ExperimentConfig& c) {
  return RateObjective{c.system(), c.channel, c.bound, c.c_estimate};
}

void add_reference(Record& r, const ExperimentConfig& c, int bits, const Units& u) {
  const int used = std::min(bits, kReferenceBitsCap);
  const auto ref = reference_rates(c.system(), used, c.simulation.trials, c.simulation.seed,
                                   c.simulation.workers);
  r.set("reference_bits", used);
  set_mean(r, "perfect_csi_rate", ref.perfect_csi, u);
  set_mean(r, "csir_rvq_rate", ref.rvq_perfect_estimation, u);
}

std::vector<Record> run_bounds(const ExperimentConfig& c) {
  if (!c.b_bar) missing("--bbar", c);
  const Units u = units_of(c);
  const SystemConfig sys = c.system();
  const double s = resolve_sigma_w2(c);
  const double b = *c.b_bar;

  Record r = echo(c);
  if (c.t_bar) r.set("tbar", *c.t_bar);
  r.set("bbar", b).set("sigma_w2", s);

  CapacityBounds bounds;
  const bool mc = c.channel == ChannelKind::kMimo && c.eta_mode == EtaMode::kMonteCarlo;
  if (c.channel == ChannelKind::kMiso) {
    bounds = miso_bounds_from_variance(sys, s, b);
  } else if (!mc) {
    bounds = mimo_bounds_from_variance(sys, s, b, c.c_estimate);
    r.set("c", c.c_estimate);
  } else {
    const int bits = c.bits.value_or(feedback_bits(b, sys.n_t));
    const EtaStats eta = estimate_eta_stats(sys, s, bits, c.simulation);
    bounds = mimo_bounds_from_eta(sys, s, eta.e_eta.mean, eta.c_factor);
    r.set("bits", bits).set("e_eta", eta.e_eta.mean).set("e_eta_std_err", eta.e_eta.std_err);
    r.set("c", eta.c_factor);
  }
  set_rate(r, "lower", bounds.lower, u);
  set_rate(r, "upper", bounds.upper, u);

  if (c.t_bar) {
    const auto a = OverheadAllocation::from_overhead(*c.t_bar, b, c.l_bar, c.mu);
    if (a.d_bar >= 0.0) {
      r.set("dbar", a.d_bar);
      set_rate(r, "effective_lower", effective_rate(bounds.lower, a, c.l_bar).value, u);
      set_rate(r, "effective_upper", effective_rate(bounds.upper, a, c.l_bar).value, u);
    }
  }
  finish(r, c, mc);
  return {r};
}

std::vector<Record> run_optimize(const ExperimentConfig& c) {
  const Units u = units_of(c);
  const SystemConfig sys = c.system();
  Record r = echo(c);

  OptimizationResult opt;
  const bool mc = c.channel == ChannelKind::kMimo && c.bound == BoundKind::kLower &&
                  c.eta_mode == EtaMode::kMonteCarlo;
  if (mc) {
    const auto conc = optimize_with_concentration(sys, c.simulation);
    opt = conc.optimum;
    r.set("c", conc.eta.c_factor).set("c_bits", conc.bits);
  } else {
    opt = optimize_allocation(objective_of(c));
    if (c.channel == ChannelKind::kMimo) r.set("c", c.c_estimate);
  }
  const auto& a = opt.allocation;
  r.set("tbar", a.t_bar).set("bbar", a.b_bar).set("dbar", a.d_bar);
  r.set("overhead_fraction", a.overhead_fraction(c.l_bar, c.mu));
  r.set("t_fraction", a.t_bar / c.l_bar)
      .set("b_fraction", c.mu * a.b_bar / c.l_bar)
      .set("d_fraction", a.d_bar / c.l_bar);
  set_rate(r, "rate", opt.rate.value, u);
  set_rate(r, "per_symbol_rate", a.d_bar > 0.0 ? opt.rate.value * c.l_bar / a.d_bar : 0.0, u);
  r.set("iterations", opt.iterations)
      .set("tolerance_met", opt.tolerance_met)
      .set("at_feedback_cap", opt.at_feedback_cap)
      .set("degenerate", opt.degenerate);
  if (c.reference) add_reference(r, c, feedback_bits(a.b_bar, sys.n_t), u);
  finish(r, c, mc || c.reference);
  return {r};
}

std::vector<Record> run_sweep(const ExperimentConfig& c) {
  const Units u = units_of(c);
  const RateObjective objective = objective_of(c);
  const auto points = c.ratio > 0.0 ? sweep_overhead(objective, c.ratio, c.points)
                                    : sweep_overhead_optimized(objective, c.points);
  std::vector<Record> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Record r = echo(c);
    if (c.channel == ChannelKind::kMimo) r.set("c", c.c_estimate);
    if (c.ratio > 0.0) {
      r.set("ratio", c.ratio);
    } else {
      r.set("ratio", "optimized");
    }
    r.set("overhead_fraction", p.overhead_fraction).set("tbar", p.t_bar).set("bbar", p.b_bar);
    set_rate(r, "rate", p.rate, u);
    finish(r, c, false);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> run_simulate(const ExperimentConfig& c) {
  const Units u = units_of(c);
  const SystemConfig sys = c.system();
  int bits = 0;
  if (c.bits) {
    bits = *c.bits;
  } else if (c.b_bar) {
    bits = feedback_bits(*c.b_bar, sys.n_t);
  } else {
    missing("--bits or --bbar", c);
  }
  const double s = resolve_sigma_w2(c);

  Record r = echo(c);
  if (c.t_bar) r.set("tbar", *c.t_bar);
  r.set("bits", bits).set("bbar", static_cast<double>(bits) / sys.n_t).set("sigma_w2", s);
  const RatePair rates = simulate_rates(sys, s, bits, c.simulation);
  set_mean(r, "genie_rate", rates.genie, u);
  set_mean(r, "lower_rate", rates.lower, u);
  if (c.channel == ChannelKind::kMiso && sys.n_t >= 2) {
    const auto bounds = miso_bounds_from_variance(sys, s, static_cast<double>(bits) / sys.n_t);
    set_rate(r, "bound_lower", bounds.lower, u);
    set_rate(r, "bound_upper", bounds.upper, u);
  }
  if (c.channel == ChannelKind::kMimo) {
    const EtaStats eta = estimate_eta_stats(sys, s, bits, c.simulation);
    r.set("e_eta", eta.e_eta.mean).set("e_eta_std_err", eta.e_eta.std_err);
    r.set("sigma_eta", eta.sigma_eta).set("c", eta.c_factor);
  }
  if (c.reference) add_reference(r, c, bits, u);
  finish(r, c, true);
  return {r};
}

void set_prediction(Record& r, const AsymptoticPrediction& p, const Units& u) {
  r.set("tbar_pred", p.t_bar_pred).set("bbar_pred", p.b_bar_pred);
  set_rate(r, "offset_upper", p.offset_upper, u);
  set_rate(r, "offset_lower", p.offset_lower, u);
  r.set("d_fraction_pred", p.data_fraction_pred);
  set_rate(r, "rate_pred", p.capacity_pred, u);
}

std::vector<Record> run_asymptotics(const ExperimentConfig& c) {
  const Units u = units_of(c);
  if (c.n_t_list.empty()) {
    Record r = echo(c);
    set_prediction(r, asymptotic_prediction(c.system(), c.channel), u);
    finish(r, c, false);
    return {r};
  }
  std::vector<Record> out;
  const auto rows =
      convergence_series(c.system(), c.channel, c.n_t_list, c.n_r_bar, c.bound);
  for (const auto& row : rows) {
    ExperimentConfig at = c;
    at.n_t = row.n_t;
    Record r = echo(at);
    const auto& a = row.optimum.allocation;
    r.set("tbar", a.t_bar).set("bbar", a.b_bar).set("dbar", a.d_bar);
    r.set("d_fraction", a.d_bar / c.l_bar);
    set_rate(r, "rate", row.optimum.rate.value, u);
    r.set("t_scaled", row.t_scaled).set("b_scaled", row.b_scaled).set("ratio", row.ratio);
    set_rate(r, "capacity_offset", row.capacity_offset, u);
    r.set("at_feedback_cap", row.optimum.at_feedback_cap);
    set_prediction(r, row.prediction, u);
    finish(r, c, false);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> run_figure(const ExperimentConfig& c) {
  if (c.figure.empty()) missing("--name", c);
  std::vector<Record> out;
  for (ExperimentConfig preset : figure_presets(c.figure)) {
    preset.bits_output = c.bits_output;
    preset.simulation.seed = c.simulation.seed;
    preset.simulation.workers = c.simulation.workers;
    preset.validate();
    auto records = execute(preset);
    out.insert(out.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  return out;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kBounds: return "bounds";
    case Command::kOptimize: return "optimize";
    case Command::kSweep: return "sweep";
    case Command::kSimulate: return "simulate";
    case Command::kAsymptotics: return "asymptotics";
    case Command::kFigure: return "figure";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kBounds, Command::kOptimize, Command::kSweep, Command::kSimulate,
                    Command::kAsymptotics, Command::kFigure}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

SystemConfig ExperimentConfig::system() const {
  SystemConfig s;
  s.n_t = n_t;
  s.n_r = channel == ChannelKind::kMiso
              ? 1
              : std::max(1, static_cast<int>(std::lround(n_r_bar * n_t)));
  s.snr = snr_from_db(snr_db);
  s.l_bar = l_bar;
  s.mu = mu;
  return s;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& m) { detail::throw_domain(m); };
  if (n_t < 1) fail("--nt must be at least 1");
  if (!(n_r_bar > 0.0) || !std::isfinite(n_r_bar)) fail("--nrbar must be positive");
  if (!std::isfinite(snr_db)) fail("--snr-db must be finite");
  if (!(l_bar > 0.0) || !std::isfinite(l_bar)) fail("--lbar must be positive");
  if (!(mu > 0.0) || !std::isfinite(mu)) fail("--mu must be positive");
  if (t_bar && !(*t_bar >= 0.0)) fail("--tbar must be nonnegative");
  if (b_bar && !(*b_bar >= 0.0)) fail("--bbar must be nonnegative");
  if (sigma_w2 && !(*sigma_w2 >= 0.0 && *sigma_w2 <= 1.0)) fail("--sigma-w2 must lie in [0, 1]");
  if (bits && *bits < 0) fail("--bits must be nonnegative");
  if (!(c_estimate >= 0.0 && c_estimate < 1.0)) fail("--c must lie in [0, 1)");
  if (points < 2) fail("--points must be at least 2");
  simulation.validate();
  for (int n : n_t_list) {
    if (n < 3) fail("--nt-list entries must be at least 3");
  }
}

std::vector<Record> execute(const ExperimentConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::kBounds: return run_bounds(config);
    case Command::kOptimize: return run_optimize(config);
    case Command::kSweep: return run_sweep(config);
    case Command::kSimulate: return run_simulate(config);
    case Command::kAsymptotics: return run_asymptotics(config);
    case Command::kFigure: return run_figure(config);
  }
  return {};
}

}  // namespace lfb::cli
