// Copyright 2026 The spinphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINPHASE_TOOLS_CLI_H_
#define SPINPHASE_TOOLS_CLI_H_

// Command-line front end. Every subcommand writes CSV (or JSON for states)
// with 17 significant digits, so identical arguments give identical bytes.
//
//   spinphase state    --state optimal --n 10
//   spinphase metrics  --states coherent,noon --n 2..100 [--format json]
//   spinphase twist    --n 20 --sweep 0:1:400
//   spinphase twist    --optimize --n 10..100:10 [--metric xi|zeta] [--fit]
//   spinphase panel    --n 20 --states coherent,pss,sss,yurke,noon --out DIR
//   spinphase mixtures --n 4,10,20 --count 100 --seed 7
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinphase/twist.h"

namespace spinphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr int kDefaultParticles = 20;

struct RunConfig {
  std::string subcommand;
  std::vector<int> n_values{kDefaultParticles};
  std::vector<std::string> states;
  double alpha = kDefaultYurkeAlpha;
  std::string format = "csv";
  std::string out;  // file (or directory for panel); empty means stdout

  int phase_points = 0;     // 0: library default
  int wigner_phi = 0;       // equal-area export resolution, 0: default
  int wigner_costheta = 0;

  // twist
  bool optimize = false;
  bool fit = false;
  std::optional<TwistMetric> metric;
  std::optional<std::string> sweep;  // "start:stop:count"

  // mixtures
  int count = 100;
  std::uint64_t seed = 1;
};

/// "20", "2..100", "10..100:10", or a comma list of any of these.
std::vector<int> parse_n_list(std::string_view text);

struct SweepRange {
  double start;
  double stop;
  int count;
};
SweepRange parse_sweep(std::string_view text);

void cmd_state(const RunConfig& config, std::ostream& out);
void cmd_metrics(const RunConfig& config, std::ostream& out);
void cmd_twist(const RunConfig& config, std::ostream& out);
/// Writes the panel files into config.out and lists their paths on `out`.
std::vector<std::filesystem::path> cmd_panel(const RunConfig& config, std::ostream& out);
void cmd_mixtures(const RunConfig& config, std::ostream& out);

/// Parses argv, dispatches, maps failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinphase::cli

#endif  // SPINPHASE_TOOLS_CLI_H_
