// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "cli.hpp"
#include "lfb/error.hpp"

namespace lfb::cli {
namespace {

ExperimentConfig base(Command command, std::string_view figure, std::string curve) {
  ExperimentConfig c;
  c.command = command;
  c.figure = std::string(figure);
  c.curve = std::move(curve);
  c.snr_db = 5.0;
  c.mu = 1.0;
  return c;
}

std::vector<ExperimentConfig> fig1() {
  std::vector<ExperimentConfig> out;
  for (int n_t = 2; n_t <= 12; ++n_t) {
    auto c = base(Command::kSimulate, "fig1", "sandwich");
    c.n_t = n_t;
    c.b_bar = 1.0;
    c.sigma_w2 = 0.15;
    c.simulation.trials = 10000;
    out.push_back(c);
  }
  return out;
}

std::vector<ExperimentConfig> fig2() {
  std::vector<ExperimentConfig> out;
  for (double l_bar : {5.0, 10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0}) {
    auto c = base(Command::kOptimize, "fig2", "optimized_lower");
    c.n_t = 10;
    c.l_bar = l_bar;
    c.reference = true;
    c.simulation.trials = 2000;
    out.push_back(c);
  }
  return out;
}

std::vector<ExperimentConfig> fig3() {
  std::vector<ExperimentConfig> out;
  for (double ratio : {0.0, 1.0, 0.5}) {
    auto c = base(Command::kSweep, "fig3",
                  ratio > 0.0 ? "ratio_" + format_number(ratio) : "optimized");
    c.n_t = 6;
    c.l_bar = 100.0;
    c.ratio = ratio;
    c.points = 101;
    out.push_back(c);
  }
  return out;
}

constexpr int kMimoNt[] = {2, 3, 4, 5, 6, 8, 10, 15, 20, 30, 50, 100};

ExperimentConfig mimo_base(Command command, std::string_view figure, std::string curve,
                           int n_t) {
  auto c = base(command, figure, std::move(curve));
  c.channel = ChannelKind::kMimo;
  c.n_t = n_t;
  c.n_r_bar = 2.0;
  c.l_bar = 50.0;
  return c;
}

std::vector<ExperimentConfig> fig4() {
  std::vector<ExperimentConfig> out;
  for (int n_t : kMimoNt) out.push_back(mimo_base(Command::kOptimize, "fig4", "optimized_lower", n_t));
  return out;
}

std::vector<ExperimentConfig> fig5() {
  std::vector<ExperimentConfig> out;
  for (int n_t : {2, 3, 4, 5, 6, 8}) {
    auto opt = mimo_base(Command::kOptimize, "fig5", "optimized_lower", n_t);
    opt.eta_mode = EtaMode::kMonteCarlo;
    opt.reference = true;
    opt.simulation.trials = 10000;
    out.push_back(opt);

    auto heuristic = mimo_base(Command::kBounds, "fig5", "heuristic_lower", n_t);
    heuristic.t_bar = 1.5;
    heuristic.b_bar = 1.0;
    heuristic.eta_mode = EtaMode::kMonteCarlo;
    heuristic.simulation.trials = 10000;
    out.push_back(heuristic);

    auto miso = base(Command::kOptimize, "fig5", "miso_optimized_lower");
    miso.n_t = n_t;
    miso.l_bar = 50.0;
    out.push_back(miso);
  }
  return out;
}

std::vector<ExperimentConfig> fig6() {
  std::vector<ExperimentConfig> out;
  for (double ratio : {0.0, 1.0, 2.0, 4.0}) {
    auto c = mimo_base(Command::kSweep, "fig6",
                       ratio > 0.0 ? "ratio_" + format_number(ratio) : "optimized", 9);
    c.l_bar = 10.0;
    c.ratio = ratio;
    c.points = 101;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<ExperimentConfig> figure_presets(std::string_view name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  throw std::invalid_argument("unknown figure preset '" + std::string(name) +
                              "' (expected fig1 .. fig6)");
}

}  // namespace lfb::cli
