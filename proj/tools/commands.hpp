// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORENTZ_TOOLS_COMMANDS_HPP_
#define LORENTZ_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lorentz/certify.hpp"

namespace lorentz::cli {

// Exit codes: computed and accepted, failed to compute, computed and rejected.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRejected = 2;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;      // empty: write to the output stream
  std::string output_dir;  // sample only
  int n = 0;
  int d = 0;
  std::vector<int> kappa;
  std::string rates = "uniform";  // or a rates JSON file
  std::vector<double> times{0.0};
  std::string mode = "lorentzian";
  std::string space = "multiaffine-lorentzian";
  std::string direction = "up";
  bool polarized = false;
  bool interior = false;
  int directions = kDefaultDirections;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultCertifyTolerance;
  int count = 1;
};

int cmd_certify(const RunConfig& config, std::ostream& out);
int cmd_flow(const RunConfig& config, std::ostream& out);
int cmd_trajectory(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_polarize(const RunConfig& config, std::ostream& out);
int cmd_ballmap(const RunConfig& config, std::ostream& out);
int cmd_strata(const RunConfig& config, std::ostream& out);
int cmd_sample(const RunConfig& config, std::ostream& out);

// Parses argv-style arguments (without the program name) and dispatches.
// Rejection exceptions map to kExitRejected, other exceptions to kExitError,
// with a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli

#endif  // LORENTZ_TOOLS_COMMANDS_HPP_
