// Copyright 2026 The entgen Authors
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

#ifndef ENTGEN_COMMANDS_HPP
#define ENTGEN_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace entgen {

// Exit codes shared by all commands:
//   0 success, 1 usage or parse error, 2 validation failure (non-CP),
//   3 internal tolerance breach.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotCp = 2;
inline constexpr int kExitToleranceBreach = 3;

/// Prints the assembled coefficient-matrix eigenvalues and the CP verdict.
int cmd_validate(const std::string& model_path, std::ostream& out);

/// Prints flip vectors, the witness matrix, all non-skipped minors, the
/// first-order verdict and, for marginal states, the escalation trail.
int cmd_witness(const std::string& model_path, const std::string& state_spec,
                std::ostream& out, double tol_minor = 1e-9);

/// CSV with header t,negativity,min_pt_eigenvalue,trace_error.
int cmd_evolve(const std::string& model_path, const std::string& state_spec,
               double t_max, int steps, std::ostream& out);

/// CSV with header p1,p2,is_cp,min_minor,verdict,onset_t; one row per grid
/// point in row-major order (p1 outer).
int cmd_scan(const std::string& model_path, const std::string& scan_path,
             std::ostream& out, std::uint64_t seed = 1);

/// Prints singular values, eta_max and the canonical maximizer state.
int cmd_capability(const std::string& model_path, std::ostream& out,
                   int budget = 32, std::uint64_t seed = 12345);

/// Exception-to-exit-code wrapper used by the CLI and by tests: runs `fn`
/// and maps ParseError / std::invalid_argument to 1 and ToleranceBreach
/// to 3, printing the message to `err`.
int run_guarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace entgen

#endif  // ENTGEN_COMMANDS_HPP
