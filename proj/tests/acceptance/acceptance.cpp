// Copyright 2026 The lfb Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfb/bounds.hpp"
#include "lfb/channel.hpp"
#include "lfb/montecarlo.hpp"
#include "lfb/numerics.hpp"
#include "lfb/optimizer.hpp"
#include "lfb/rvq.hpp"

using namespace lfb;

namespace {

// Tolerances.
constexpr double kSigmas = 3.0;          // Monte Carlo agreement, in standard errors
constexpr double kExactTwoThirds = 1e-12;
constexpr double kResidualTol = 1e-12;
constexpr double kSeriesCoeff = 5.0;     // series error bound coefficient on zeta^{5/2}
constexpr double kSeriesFloor = 1e-12;   // absolute floor where zeta^{5/2} underflows the solver
constexpr double kSweepRel = 0.02;
constexpr double kTrendGapMiso = 0.25;
constexpr double kTrendGapMimo = 0.30;

constexpr std::uint64_t kRateTrials = 10000;
constexpr std::uint64_t kMomentTrials = 100000;
constexpr std::uint64_t kSeed = 20260101;

const double kRho = snr_from_db(5.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += (ok ? "" : "FAILED ") + what;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

SimulationSpec spec_for(std::uint64_t trials, unsigned workers) {
  SimulationSpec s;
  s.trials = trials;
  s.seed = kSeed;
  s.workers = workers;
  return s;
}

// Every Monte Carlo run used by the criteria, as a function of the worker
// count. Criterion 11 replays each of them.
struct McJob {
  std::string name;
  std::function<std::vector<double>(unsigned)> run;
};

std::vector<double> flatten(const SampleMean& m) { return {m.mean, m.std_err}; }

std::vector<McJob> mc_jobs() {
  std::vector<McJob> jobs;
  for (int n_t : {2, 4, 6, 8, 10}) {
    jobs.push_back({"rates n_t=" + std::to_string(n_t), [n_t](unsigned w) {
                      const SystemConfig cfg{n_t, 1, kRho, 10.0, 1.0};
                      const auto r = simulate_rates(cfg, 0.15, n_t, spec_for(kRateTrials, w));
                      return std::vector<double>{r.genie.mean, r.genie.std_err, r.lower.mean,
                                                 r.lower.std_err};
                    }});
  }
  for (int n_t : {2, 4, 6}) {
    for (int b : {0, 1, 4, 8}) {
      jobs.push_back({"e_nu " + std::to_string(n_t) + "," + std::to_string(b),
                      [n_t, b](unsigned w) {
                        return flatten(validate_e_nu(n_t, b, spec_for(kMomentTrials, w)));
                      }});
    }
  }
  for (auto [n_t, t] : {std::pair{8, 4}, std::pair{4, 8}}) {
    for (double rho : {1.0, kRho}) {
      jobs.push_back({"mse " + std::to_string(n_t) + "," + std::to_string(t),
                      [n_t, t, rho](unsigned w) {
                        return flatten(validate_mse(n_t, t, rho, spec_for(kMomentTrials, w)));
                      }});
    }
  }
  jobs.push_back({"concentration fig6", [](unsigned w) {
                    const SystemConfig cfg{9, 18, kRho, 10.0, 1.0};
                    const auto r = optimize_with_concentration(cfg, spec_for(kRateTrials, w));
                    return std::vector<double>{r.eta.e_eta.mean, r.eta.c_factor,
                                               r.optimum.rate.value};
                  }});
  jobs.push_back({"fig5 heuristic", [](unsigned w) {
                    const SystemConfig cfg{3, 6, kRho, 50.0, 1.0};
                    const auto r = finite_size_mimo_bounds(cfg, 1.5, 1.0, spec_for(kRateTrials, w));
                    return std::vector<double>{r.eta.e_eta.mean, r.eta.c_factor,
                                               r.lower_rate.value};
                  }});
  jobs.push_back({"fig5 optimized", [](unsigned w) {
                    const SystemConfig cfg{3, 6, kRho, 50.0, 1.0};
                    const auto r = optimize_with_concentration(cfg, spec_for(kRateTrials, w));
                    return std::vector<double>{r.eta.e_eta.mean, r.eta.c_factor,
                                               r.optimum.rate.value};
                  }});
  jobs.push_back({"fig5 reference", [](unsigned w) {
                    const SystemConfig cfg{3, 6, kRho, 50.0, 1.0};
                    const auto r = reference_rates(cfg, 3, kRateTrials, kSeed, w);
                    return std::vector<double>{r.perfect_csi.mean, r.perfect_csi.std_err,
                                               r.rvq_perfect_estimation.mean};
                  }});
  return jobs;
}

Outcome criterion1() {
  Outcome o;
  for (int n_t : {2, 4, 6, 8, 10}) {
    const SystemConfig cfg{n_t, 1, kRho, 10.0, 1.0};
    const auto b = miso_bounds_from_variance(cfg, 0.15, 1.0);
    const auto r = simulate_rates(cfg, 0.15, n_t, spec_for(kRateTrials, 0));
    const bool ok = b.lower - kSigmas * r.lower.std_err <= r.lower.mean &&
                    r.genie.mean <= b.upper + kSigmas * r.genie.std_err;
    note(o, ok, "n_t=" + std::to_string(n_t) + fmt2(" Cl=%.4f lower=%.4f", b.lower, r.lower.mean) +
                    fmt2(" genie=%.4f Cu=%.4f", r.genie.mean, b.upper));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  for (int n_t : {2, 4, 6}) {
    for (int b : {0, 1, 4, 8}) {
      const auto mc = validate_e_nu(n_t, b, spec_for(kMomentTrials, 0));
      const double exact = expected_nu_exact(n_t, b);
      const double z = std::abs(mc.mean - exact) / mc.std_err;
      worst = std::max(worst, z);
      if (!(z < kSigmas)) {
        note(o, false, "n_t=" + std::to_string(n_t) + " B=" + std::to_string(b) +
                           fmt(" z=%.2f", z));
      }
    }
  }
  note(o, true, fmt("max |z| = %.2f", worst));
  const double err = std::abs(expected_nu_exact(2, 1) - 2.0 / 3.0);
  note(o, err < kExactTwoThirds, fmt("|E[nu](2,1) - 2/3| = %.2e", err));
  return o;
}

Outcome criterion3() {
  Outcome o;
  int checked = 0;
  for (int n_t = 2; n_t <= 64; ++n_t) {
    for (int k = 0; k <= 16; ++k) {
      const double b_bar = 0.25 * k;
      const auto bounds = expected_nu_bounds(n_t, b_bar);
      const double exact = expected_nu_exact(n_t, b_bar * n_t);
      ++checked;
      if (!(bounds.lower <= exact && exact <= bounds.upper)) {
        note(o, false, "n_t=" + std::to_string(n_t) + fmt(" b=%.2f", b_bar));
      }
    }
  }
  note(o, true, std::to_string(checked) + " grid points");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (auto [n_t, t] : {std::pair{8, 4}, std::pair{4, 8}}) {
    for (double rho : {1.0, kRho}) {
      const auto mc = validate_mse(n_t, t, rho, spec_for(kMomentTrials, 0));
      const double formula = mse_variance(static_cast<double>(t) / n_t, rho);
      const double z = std::abs(mc.mean - formula) / mc.std_err;
      note(o, z < kSigmas, "n_t=" + std::to_string(n_t) + " t=" + std::to_string(t) +
                               fmt(" rho=%.3f", rho) + fmt2(" mc=%.5f formula=%.5f", mc.mean, formula));
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst_residual = 0.0;
  double worst_series_ratio = 0.0;
  for (double nr : {0.5, 1.0, 2.0, 4.0}) {
    const double limit = b_star(nr);
    for (int i = 0; i < 50; ++i) {
      const double b_bar = limit * i / 49.0;
      const auto g = gamma_rvq(nr, b_bar);
      worst_residual = std::max(worst_residual, std::abs(gamma_rvq_residual(g.value, nr, b_bar)));
    }
    const double at_zero = std::abs(gamma_rvq(nr, 0.0).value - nr);
    note(o, at_zero < kResidualTol, fmt2("|gamma(%.1f,0) - Nr| = %.1e", nr, at_zero));

    // Series in zeta, compared on gamma / Nr so the bound is scale free.
    for (int k = 0; k <= 20; ++k) {
      const double b_bar = 0.001 * k;
      const double zeta = -2.0 * std::expm1(-b_bar * kLn2 / nr);
      const double sz = std::sqrt(zeta);
      const double series = 1.0 + sz + zeta / 3.0 + 11.0 / 72.0 * zeta * sz;
      const double err = std::abs(gamma_rvq(nr, b_bar).value / nr - series);
      const double tol = kSeriesCoeff * std::pow(zeta, 2.5) + kSeriesFloor;
      worst_series_ratio = std::max(worst_series_ratio, err / tol);
      if (!(err <= tol)) {
        note(o, false, fmt2("series nr=%.1f b=%.3f", nr, b_bar) + fmt(" err=%.2e", err));
      }
    }
  }
  note(o, worst_residual < kResidualTol, fmt("max residual %.1e", worst_residual));
  note(o, true, fmt("max series err/tol %.3f", worst_series_ratio));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SystemConfig cfg{6, 1, kRho, 100.0, 1.0};
  const RateObjective obj{cfg, ChannelKind::kMiso, BoundKind::kLower, 0.0};
  const auto r = optimize_allocation(obj);
  const double frac = r.allocation.overhead_fraction(cfg.l_bar, cfg.mu);
  note(o, frac >= 0.07 && frac <= 0.13, fmt("overhead fraction %.4f", frac));
  double peak = 0.0;
  for (const auto& p : sweep_overhead(obj, 1.0, 101)) peak = std::max(peak, p.rate);
  const double rel = (r.rate.value - peak) / r.rate.value;
  note(o, rel <= kSweepRel && rel >= -kSweepRel, fmt("equal-split peak gap %.4f", rel));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SystemConfig cfg{9, 18, kRho, 10.0, 1.0};
  const auto r = optimize_with_concentration(cfg, spec_for(kRateTrials, 0));
  const double frac = r.optimum.allocation.overhead_fraction(cfg.l_bar, cfg.mu);
  note(o, frac >= 0.15 && frac <= 0.25,
       fmt("overhead fraction %.4f", frac) + fmt(" (c = %.4f)", r.eta.c_factor));
  return o;
}

// True if |x_i - target| is nonincreasing along the sequence.
bool approaches(const std::vector<double>& xs, double target) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs(xs[i] - target) > std::abs(xs[i - 1] - target)) return false;
  }
  return true;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : ",") + fmt("%.3f", x);
  return "[" + s + "]";
}

Outcome criterion8() {
  Outcome o;
  const SystemConfig tmpl{2, 1, kRho, 50.0, 1.0};
  const auto rows = convergence_series(tmpl, ChannelKind::kMiso, {100, 1000, 10000, 100000});
  std::vector<double> t, b;
  for (const auto& row : rows) {
    t.push_back(row.t_scaled);
    b.push_back(row.b_scaled);
  }
  const double l = tmpl.l_bar;
  note(o, approaches(t, l), "T log N_t " + join(t) + " toward " + fmt("%.0f", l));
  note(o, approaches(b, l), "mu B log N_t " + join(b));
  const double gap_t = std::abs(t.back() - l) / l;
  const double gap_b = std::abs(b.back() - l) / l;
  note(o, gap_t < kTrendGapMiso, fmt("final T gap %.3f", gap_t));
  note(o, gap_b < kTrendGapMiso, fmt("final B gap %.3f", gap_b));
  const double ratio = rows.back().ratio;
  note(o, ratio >= 0.8 && ratio <= 1.2, fmt("mu B / T at 1e5 = %.3f", ratio));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const SystemConfig tmpl{2, 2, kRho, 50.0, 1.0};
  const double n_r_bar = 2.0;
  const auto rows =
      convergence_series(tmpl, ChannelKind::kMimo, {100, 1000, 10000, 100000}, n_r_bar);
  std::vector<double> b, ratio;
  for (const auto& row : rows) {
    b.push_back(row.b_scaled);
    ratio.push_back(row.ratio);
  }
  const double target =
      tmpl.l_bar * tmpl.l_bar * kLn2 / (2.0 * tmpl.mu * tmpl.mu * n_r_bar);
  note(o, approaches(b, target), "B log^2 N_t " + join(b) + " toward " + fmt("%.1f", target));
  const double gap = std::abs(b.back() - target) / target;
  note(o, gap < kTrendGapMimo, fmt("final gap %.3f", gap));
  bool decreasing = true;
  for (std::size_t i = 1; i < ratio.size(); ++i) decreasing = decreasing && ratio[i] < ratio[i - 1];
  note(o, decreasing, "mu B / T " + join(ratio));
  return o;
}

Outcome criterion10() {
  Outcome o;
  const SystemConfig cfg{3, 6, kRho, 50.0, 1.0};
  const auto spec = spec_for(kRateTrials, 0);
  const auto heuristic = finite_size_mimo_bounds(cfg, 1.5, 1.0, spec);
  const auto optimized = optimize_with_concentration(cfg, spec);
  const double opt = optimized.optimum.rate.value;
  const double gain = opt / heuristic.lower_rate.value - 1.0;
  note(o, gain >= 0.05 && gain <= 0.15,
       fmt2("optimized %.4f vs heuristic %.4f", opt, heuristic.lower_rate.value) +
           fmt(" (+%.1f%%)", 100.0 * gain));
  const auto ref = reference_rates(cfg, 3, kRateTrials, kSeed);
  const double excess = ref.perfect_csi.mean / opt - 1.0;
  note(o, excess >= 0.25 && excess <= 0.55,
       fmt("perfect CSI %.4f", ref.perfect_csi.mean) + fmt(" (+%.1f%%)", 100.0 * excess));
  return o;
}

Outcome criterion11() {
  Outcome o;
  int identical = 0;
  const auto jobs = mc_jobs();
  for (const auto& job : jobs) {
    const auto one = job.run(1);
    const auto eight = job.run(8);
    const bool same = one.size() == eight.size() &&
                      std::memcmp(one.data(), eight.data(), one.size() * sizeof(double)) == 0;
    if (same) {
      ++identical;
    } else {
      note(o, false, job.name + " differs");
    }
  }
  note(o, true, std::to_string(identical) + "/" + std::to_string(jobs.size()) +
                    " runs bit-identical across 1 and 8 workers");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lfb acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"capacity sandwich", criterion1},       {"quantization gain", criterion2},
      {"quantization bounds", criterion3},     {"estimation error", criterion4},
      {"fixed point", criterion5},             {"MISO optimum", criterion6},
      {"MIMO optimum", criterion7},            {"MISO scaling trend", criterion8},
      {"MIMO scaling trend", criterion9},      {"finite-size comparison", criterion10},
      {"reproducibility", criterion11},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, out.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
