// Scenario execution: each runner turns a validated config into CSV/JSON
// artifacts plus a metadata sidecar.  The runners only orchestrate module
// calls and serialization; they perform no physics arithmetic themselves.
#pragma once

#include <filesystem>
#include <vector>

#include "cavitylz/config.hpp"

namespace cavitylz::runners {

struct RunResult {
  std::vector<std::filesystem::path> outputs;
};

// Mode spectrum over a displacement grid (+ optional two-level fit sidecar).
[[nodiscard]] RunResult run_modes(const config::ScenarioConfig& cfg,
                                  const std::filesystem::path& out_dir,
                                  int jobs);

// Amplitude trajectories: one CSV per (order, delta_ratio).
[[nodiscard]] RunResult run_sweep(const config::ScenarioConfig& cfg,
                                  const std::filesystem::path& out_dir,
                                  int jobs);

// Side-to-side amplitude ratios along the mode branches (+ extrema summary).
[[nodiscard]] RunResult run_transfer(const config::ScenarioConfig& cfg,
                                     const std::filesystem::path& out_dir,
                                     int jobs);

// Regime classification map, single-point report, feasibility and
// moving-medium diagnostics.
[[nodiscard]] RunResult run_regimes(const config::ScenarioConfig& cfg,
                                    const std::filesystem::path& out_dir,
                                    int jobs);

// Mirror transmission curves (+ optional matched-delta overlay, resonances).
[[nodiscard]] RunResult run_mirror(const config::ScenarioConfig& cfg,
                                   const std::filesystem::path& out_dir,
                                   int jobs);

}  // namespace cavitylz::runners
