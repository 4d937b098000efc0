// Copyright 2026 The Tatami Authors.
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

// Embedded CDCL solver (two watched literals, first-UIP learning with clause
// minimization, VSIDS, phase saving, Luby restarts, activity-based learnt
// clause deletion), model counting by blocking clauses, and a bridge to
// external DIMACS solvers.

#ifndef TATAMI_SAT_HPP_
#define TATAMI_SAT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatami/encoder.hpp"

namespace tatami {

enum class SatStatus : std::uint8_t { Sat, Unsat, Timeout };

const char* to_string(SatStatus s);

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learned = 0;
};

struct SolverConfig {
  std::uint64_t seed = 0;
  // Conflicts allowed per solve call; exhausting it yields Timeout.
  std::optional<std::uint64_t> conflict_budget;
  // Fraction of decisions taken on a seeded random variable.
  double random_decision_freq = 0.0;
};

struct SolveResult {
  SatStatus status = SatStatus::Unsat;
  std::vector<bool> model;  // model[v] for v in 1..num_vars when Sat
  SolverStats stats;
};

// Incremental solver. Clauses may be added between solve calls; variables are
// 1-based as in DIMACS.
class Solver {
 public:
  explicit Solver(SolverConfig cfg = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  int num_vars() const;
  int new_var();
  void reserve_vars(int n);  // makes variables 1..n exist

  // Returns false when the formula has become unsatisfiable at level 0.
  bool add_clause(std::vector<int> lits);
  // Value tried first when branching on `var` before any phase is saved.
  void set_default_phase(int var, bool value);

  // Overrides the per-call conflict budget from the config.
  void set_conflict_budget(std::optional<std::uint64_t> budget);

  SatStatus solve();
  // Model of the last Sat answer (index 0 unused).
  const std::vector<bool>& model() const;
  const SolverStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Checks every clause against the model (independently of the solver).
bool verify_model(const CnfInstance& c, const std::vector<bool>& model);

SolveResult solve(const CnfInstance& c, const SolverConfig& cfg = {});

struct BlockingState {
  std::vector<int> projection;              // variables models are compared on
  std::vector<std::vector<int>> clauses;    // one per returned model
};

struct CountResult {
  std::uint64_t count = 0;  // exact when complete, otherwise a lower bound
  bool complete = false;    // false when the conflict budget ran out
  BlockingState blocking;
  SolverStats stats;
};

// Number of distinct projections of models onto `projection` (all variables
// when nullopt). The conflict budget in cfg applies to the whole enumeration.
CountResult count_models(const CnfInstance& c,
                         const std::optional<std::vector<int>>& projection,
                         const SolverConfig& cfg = {});

enum class ExternalError : std::uint8_t {
  None,
  MissingBinary,
  NonzeroExit,
  MalformedOutput,
  BadModel,
};

const char* to_string(ExternalError e);

struct ExternalSolverConfig {
  std::string command;  // run as `<command> <file.cnf>`
};

struct ExternalResult {
  ExternalError error = ExternalError::None;
  std::string message;
  SolveResult result;
};

// Writes the DIMACS text to a temporary file, runs the command on it and parses
// SAT-competition output ("s ..." and "v ..." lines). Exit codes 0, 10 and 20
// are accepted. Models are re-verified against the parsed instance.
ExternalResult solve_external(const std::string& dimacs,
                              const ExternalSolverConfig& cfg);

}  // namespace tatami

#endif  // TATAMI_SAT_HPP_
