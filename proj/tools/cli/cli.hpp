// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfb/channel.hpp"
#include "lfb/montecarlo.hpp"
#include "lfb/optimizer.hpp"
#include "records.hpp"

namespace lfb::cli {

inline constexpr const char* kToolVersion = "0.3.0";

enum class Command { kBounds, kOptimize, kSweep, kSimulate, kAsymptotics, kFigure };

enum class EtaMode {
  kAsymptotic,  ///< E[eta] from gamma_rvq, c from --c
  kMonteCarlo,  ///< E[eta] and c estimated at B = round(b_bar N_t)
};

/// Fully resolved inputs of one command. Every numeric field is checked by
/// validate() before dispatch.
struct ExperimentConfig {
  Command command = Command::kBounds;
  ChannelKind channel = ChannelKind::kMiso;
  BoundKind bound = BoundKind::kLower;

  int n_t = 2;
  double n_r_bar = 1.0;  ///< MIMO only; n_r = round(n_r_bar n_t)
  double snr_db = 5.0;
  double l_bar = 10.0;
  double mu = 1.0;

  std::optional<double> t_bar;
  std::optional<double> b_bar;
  std::optional<double> sigma_w2;  ///< overrides the value implied by t_bar
  std::optional<int> bits;         ///< overrides round(b_bar n_t) in simulate
  double c_estimate = 0.0;
  EtaMode eta_mode = EtaMode::kAsymptotic;

  SimulationSpec simulation;
  bool reference = false;  ///< simulate: also emit the perfect-CSI reference rates

  double ratio = 1.0;     ///< sweep: t_bar / (mu b_bar); <= 0 optimizes the split
  int points = 101;
  std::vector<int> n_t_list;

  bool bits_output = false;  ///< log base 2
  std::string format = "csv";
  std::string output;
  std::string figure;
  std::string curve;  ///< label attached to records of a figure preset

  SystemConfig system() const;
  void validate() const;
};

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Named parameter sets for the standard figure reproductions.
std::vector<ExperimentConfig> figure_presets(std::string_view name);

/// Runs one resolved command and returns its records.
std::vector<Record> execute(const ExperimentConfig& config);

/// Command-line entry point. Exit status: 0 success, 2 usage error,
/// 3 domain or regime error, 1 anything else.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfb::cli
