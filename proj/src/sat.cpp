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

#include "tatami/sat.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tatami {

namespace {

// Internal literal: 2 * var + (negated ? 1 : 0), with 0-based variables.
using Lit = std::uint32_t;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr std::int8_t kFalse = 0, kTrue = 1, kUndef = 2;

inline Lit make_lit(int var, bool negated) {
  return static_cast<Lit>(2 * var + (negated ? 1 : 0));
}
inline Lit negate(Lit l) { return l ^ 1u; }
inline int var_of(Lit l) { return static_cast<int>(l >> 1); }
inline bool is_negated(Lit l) { return (l & 1u) != 0; }

Lit from_dimacs(int lit) { return make_lit(std::abs(lit) - 1, lit < 0); }

struct ClauseRec {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  double activity = 0;
};

struct Watcher {
  std::uint32_t cref;
  Lit blocker;
};

// Finite subsequence of the Luby sequence: 1 1 2 1 1 2 4 1 1 2 ...
double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

const char* to_string(SatStatus s) {
  switch (s) {
    case SatStatus::Sat: return "SAT";
    case SatStatus::Unsat: return "UNSAT";
    case SatStatus::Timeout: return "TIMEOUT";
  }
  return "unknown";
}

const char* to_string(ExternalError e) {
  switch (e) {
    case ExternalError::None: return "ok";
    case ExternalError::MissingBinary: return "missing solver binary";
    case ExternalError::NonzeroExit: return "solver exited abnormally";
    case ExternalError::MalformedOutput: return "malformed solver output";
    case ExternalError::BadModel: return "solver model does not satisfy the instance";
  }
  return "unknown";
}

struct Solver::Impl {
  explicit Impl(SolverConfig c) : cfg(c), rng(c.seed), budget(c.conflict_budget) {}

  SolverConfig cfg;
  std::mt19937_64 rng;
  std::optional<std::uint64_t> budget;
  SolverStats stats;
  bool ok = true;

  std::vector<ClauseRec> clauses;
  std::vector<std::uint32_t> learnts;
  std::vector<std::vector<Watcher>> watches;  // indexed by watched literal

  std::vector<std::int8_t> assigns;
  std::vector<std::int8_t> saved_phase;    // kUndef until first assignment
  std::vector<std::int8_t> default_phase;  // kFalse or kTrue
  std::vector<std::uint32_t> reason;
  std::vector<int> level;
  std::vector<Lit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  std::vector<double> activity;
  double var_inc = 1;
  double cla_inc = 1;
  double max_learnts = 0;

  // Binary max-heap of variables keyed on activity.
  std::vector<int> heap;
  std::vector<int> heap_pos;  // -1 when absent

  std::vector<std::uint8_t> seen;
  std::vector<bool> model;

  int nvars() const { return static_cast<int>(assigns.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  std::int8_t value(Lit l) const {
    const std::int8_t a = assigns[var_of(l)];
    if (a == kUndef) return kUndef;
    return static_cast<std::int8_t>(a ^ static_cast<std::int8_t>(is_negated(l)));
  }

  // ---- heap -------------------------------------------------------------
  bool heap_less(int a, int b) const {
    if (activity[a] != activity[b]) return activity[a] > activity[b];
    return a < b;
  }
  void heap_up(std::size_t i) {
    const int v = heap[i];
    while (i > 0) {
      const std::size_t p = (i - 1) / 2;
      if (!heap_less(v, heap[p])) break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>(i);
  }
  void heap_down(std::size_t i) {
    const int v = heap[i];
    for (;;) {
      std::size_t c = 2 * i + 1;
      if (c >= heap.size()) break;
      if (c + 1 < heap.size() && heap_less(heap[c + 1], heap[c])) ++c;
      if (!heap_less(heap[c], v)) break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>(i);
  }
  void heap_insert(int v) {
    if (heap_pos[v] >= 0) return;
    heap.push_back(v);
    heap_up(heap.size() - 1);
  }
  int heap_pop() {
    const int top = heap[0];
    heap_pos[top] = -1;
    heap[0] = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap_pos[heap[0]] = 0;
      heap_down(0);
    }
    return top;
  }

  // ---- variables ----------------------------------------------------------
  int new_var() {
    const int v = nvars();
    assigns.push_back(kUndef);
    saved_phase.push_back(kUndef);
    default_phase.push_back(kFalse);
    reason.push_back(kNone);
    level.push_back(0);
    seen.push_back(0);
    watches.emplace_back();
    watches.emplace_back();
    double a = 0;
    if (cfg.seed != 0) a = std::uniform_real_distribution<double>(0, 1e-5)(rng);
    activity.push_back(a);
    heap_pos.push_back(-1);
    heap_insert(v);
    return v;
  }

  void bump_var(int v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos[v]));
  }
  void bump_clause(ClauseRec& c) {
    if ((c.activity += cla_inc) > 1e20) {
      for (std::uint32_t i : learnts) clauses[i].activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  // ---- trail ---------------------------------------------------------------
  void enqueue(Lit l, std::uint32_t from) {
    const int v = var_of(l);
    assigns[v] = is_negated(l) ? kFalse : kTrue;
    reason[v] = from;
    level[v] = decision_level();
    trail.push_back(l);
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > trail_lim[lvl];) {
      const int v = var_of(trail[i]);
      saved_phase[v] = assigns[v];
      assigns[v] = kUndef;
      reason[v] = kNone;
      heap_insert(v);
    }
    trail.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  void attach(std::uint32_t cref) {
    const ClauseRec& c = clauses[cref];
    watches[c.lits[0]].push_back({cref, c.lits[1]});
    watches[c.lits[1]].push_back({cref, c.lits[0]});
  }

  std::uint32_t propagate() {
    std::uint32_t conflict = kNone;
    while (qhead < trail.size()) {
      const Lit p = trail[qhead++];
      const Lit false_lit = negate(p);
      std::vector<Watcher>& ws = watches[false_lit];
      ++stats.propagations;
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        const Watcher w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        ClauseRec& c = clauses[w.cref];
        if (c.deleted) {
          ++i;
          continue;
        }
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        ++i;
        const Lit first = c.lits[0];
        const Watcher kept{w.cref, first};
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = kept;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) != kFalse) {
            std::swap(c.lits[1], c.lits[k]);
            watches[c.lits[1]].push_back(kept);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = kept;
        if (value(first) == kFalse) {
          conflict = w.cref;
          qhead = trail.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNone) break;
    }
    return conflict;
  }

  // First-UIP conflict analysis with basic clause minimization.
  void analyze(std::uint32_t confl, std::vector<Lit>& out, int& bt_level) {
    out.assign(1, 0);
    int path = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t idx = trail.size();
    do {
      ClauseRec& c = clauses[confl];
      if (c.learnt) bump_clause(c);
      for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
        const Lit q = c.lits[k];
        const int v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level()) {
          ++path;
        } else {
          out.push_back(q);
        }
      }
      do {
        --idx;
      } while (!seen[var_of(trail[idx])]);
      p = trail[idx];
      have_p = true;
      confl = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    out[0] = negate(p);

    // Drop literals implied by the rest of the clause through their reason.
    std::vector<Lit> dropped;
    std::size_t keep = 1;
    for (std::size_t k = 1; k < out.size(); ++k) {
      const int v = var_of(out[k]);
      const std::uint32_t r = reason[v];
      bool redundant = r != kNone;
      if (redundant) {
        const ClauseRec& rc = clauses[r];
        for (std::size_t m = 1; m < rc.lits.size(); ++m) {
          const int u = var_of(rc.lits[m]);
          if (!seen[u] && level[u] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (redundant) {
        dropped.push_back(out[k]);
      } else {
        out[keep++] = out[k];
      }
    }
    out.resize(keep);
    for (Lit l : out) seen[var_of(l)] = 0;
    for (Lit l : dropped) seen[var_of(l)] = 0;

    bt_level = 0;
    if (out.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < out.size(); ++k) {
        if (level[var_of(out[k])] > level[var_of(out[max_i])]) max_i = k;
      }
      std::swap(out[1], out[max_i]);
      bt_level = level[var_of(out[1])];
    }
  }

  bool locked(std::uint32_t cref) const {
    const ClauseRec& c = clauses[cref];
    return reason[var_of(c.lits[0])] == cref && value(c.lits[0]) == kTrue;
  }

  void reduce_db() {
    std::sort(learnts.begin(), learnts.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (clauses[a].activity != clauses[b].activity) {
        return clauses[a].activity < clauses[b].activity;
      }
      return a < b;
    });
    std::vector<std::uint32_t> kept;
    const std::size_t half = learnts.size() / 2;
    for (std::size_t i = 0; i < learnts.size(); ++i) {
      ClauseRec& c = clauses[learnts[i]];
      if (i < half && c.lits.size() > 2 && !locked(learnts[i])) {
        c.deleted = true;
        std::vector<Lit>().swap(c.lits);
      } else {
        kept.push_back(learnts[i]);
      }
    }
    learnts.swap(kept);
  }

  int pick_branch_var() {
    if (cfg.random_decision_freq > 0 && !heap.empty() &&
        std::uniform_real_distribution<double>(0, 1)(rng) < cfg.random_decision_freq) {
      const int v = heap[std::uniform_int_distribution<std::size_t>(0, heap.size() - 1)(rng)];
      if (assigns[v] == kUndef) return v;
    }
    while (!heap.empty()) {
      const int v = heap_pop();
      if (assigns[v] == kUndef) return v;
    }
    return -1;
  }

  // Returns Sat, Unsat, or Timeout; kUndef-like restarts are signalled by
  // returning nullopt.
  std::optional<SatStatus> search(double restart_conflicts,
                                  std::uint64_t& conflicts_left) {
    std::uint64_t local = 0;
    std::vector<Lit> learnt;
    for (;;) {
      const std::uint32_t confl = propagate();
      if (confl != kNone) {
        ++stats.conflicts;
        ++local;
        if (conflicts_left > 0) --conflicts_left;
        if (decision_level() == 0) {
          ok = false;
          return SatStatus::Unsat;
        }
        int bt = 0;
        analyze(confl, learnt, bt);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNone);
        } else {
          const auto cref = static_cast<std::uint32_t>(clauses.size());
          clauses.push_back({learnt, true, false, 0});
          learnts.push_back(cref);
          attach(cref);
          bump_clause(clauses[cref]);
          enqueue(learnt[0], cref);
        }
        ++stats.learned;
        var_inc /= 0.95;
        cla_inc /= 0.999;
        continue;
      }
      if (budget && conflicts_left == 0) {
        cancel_until(0);
        return SatStatus::Timeout;
      }
      if (static_cast<double>(local) >= restart_conflicts) {
        cancel_until(0);
        return std::nullopt;
      }
      if (static_cast<double>(learnts.size()) - static_cast<double>(trail.size()) >=
          max_learnts) {
        reduce_db();
      }
      const int v = pick_branch_var();
      if (v < 0) return SatStatus::Sat;
      ++stats.decisions;
      const std::int8_t phase =
          saved_phase[v] != kUndef ? saved_phase[v] : default_phase[v];
      trail_lim.push_back(trail.size());
      enqueue(make_lit(v, phase == kFalse), kNone);
    }
  }

  SatStatus solve() {
    model.clear();
    if (!ok) return SatStatus::Unsat;
    cancel_until(0);
    if (propagate() != kNone) {
      ok = false;
      return SatStatus::Unsat;
    }
    max_learnts = std::max(1000.0, static_cast<double>(clauses.size()) / 3.0);
    std::uint64_t conflicts_left = budget.value_or(0);
    for (int restart = 0;; ++restart) {
      const double limit = luby(2, restart) * 100;
      const std::optional<SatStatus> st = search(limit, conflicts_left);
      if (!st) {
        ++stats.restarts;
        max_learnts *= 1.05;
        continue;
      }
      if (*st == SatStatus::Sat) {
        model.assign(static_cast<std::size_t>(nvars()) + 1, false);
        for (int v = 0; v < nvars(); ++v) model[v + 1] = assigns[v] == kTrue;
        cancel_until(0);
      }
      return *st;
    }
  }

  bool add_clause(std::vector<int> in) {
    if (!ok) return false;
    cancel_until(0);
    std::vector<Lit> lits;
    lits.reserve(in.size());
    for (int l : in) {
      if (l == 0 || std::abs(l) > nvars()) {
        throw std::invalid_argument("literal " + std::to_string(l) +
                                    " is out of range");
      }
      lits.push_back(from_dimacs(l));
    }
    std::sort(lits.begin(), lits.end());
    std::size_t keep = 0;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i > 0 && lits[i] == lits[i - 1]) continue;
      if (i > 0 && lits[i] == negate(lits[i - 1])) return true;  // tautology
      const std::int8_t val = value(lits[i]);
      if (val == kTrue) return true;
      if (val == kFalse) continue;
      lits[keep++] = lits[i];
    }
    lits.resize(keep);
    if (lits.empty()) {
      ok = false;
      return false;
    }
    if (lits.size() == 1) {
      enqueue(lits[0], kNone);
      if (propagate() != kNone) ok = false;
      return ok;
    }
    const auto cref = static_cast<std::uint32_t>(clauses.size());
    clauses.push_back({std::move(lits), false, false, 0});
    attach(cref);
    return true;
  }
};

Solver::Solver(SolverConfig cfg) : impl_(std::make_unique<Impl>(cfg)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

int Solver::num_vars() const { return impl_->nvars(); }
int Solver::new_var() { return impl_->new_var() + 1; }
void Solver::reserve_vars(int n) {
  while (impl_->nvars() < n) impl_->new_var();
}
bool Solver::add_clause(std::vector<int> lits) {
  return impl_->add_clause(std::move(lits));
}
void Solver::set_default_phase(int var, bool value) {
  impl_->default_phase.at(static_cast<std::size_t>(var) - 1) = value ? kTrue : kFalse;
}
void Solver::set_conflict_budget(std::optional<std::uint64_t> budget) {
  impl_->budget = budget;
}
SatStatus Solver::solve() { return impl_->solve(); }
const std::vector<bool>& Solver::model() const { return impl_->model; }
const SolverStats& Solver::stats() const { return impl_->stats; }

bool verify_model(const CnfInstance& c, const std::vector<bool>& model) {
  if (model.size() != static_cast<std::size_t>(c.num_vars) + 1) return false;
  for (const Clause& cl : c.clauses) {
    bool sat = false;
    for (int l : cl.lits) {
      if (model[static_cast<std::size_t>(std::abs(l))] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

Solver load(const CnfInstance& c, const SolverConfig& cfg) {
  Solver s(cfg);
  s.reserve_vars(c.num_vars);
  for (const Clause& cl : c.clauses) {
    if (!s.add_clause(cl.lits)) break;
  }
  return s;
}

}  // namespace

SolveResult solve(const CnfInstance& c, const SolverConfig& cfg) {
  Solver s = load(c, cfg);
  SolveResult out;
  out.status = s.solve();
  out.stats = s.stats();
  if (out.status == SatStatus::Sat) {
    out.model = s.model();
    if (!verify_model(c, out.model)) {
      throw std::logic_error("internal solver error: model fails verification");
    }
  }
  return out;
}

CountResult count_models(const CnfInstance& c,
                         const std::optional<std::vector<int>>& projection,
                         const SolverConfig& cfg) {
  CountResult out;
  if (projection) {
    for (int v : *projection) {
      if (v < 1 || v > c.num_vars) {
        throw std::invalid_argument("projection variable " + std::to_string(v) +
                                    " out of range");
      }
    }
    out.blocking.projection = *projection;
  } else {
    for (int v = 1; v <= c.num_vars; ++v) out.blocking.projection.push_back(v);
  }
  SolverConfig per_call = cfg;
  per_call.conflict_budget.reset();
  Solver s = load(c, per_call);
  for (;;) {
    if (cfg.conflict_budget) {
      const std::uint64_t used = s.stats().conflicts;
      if (used >= *cfg.conflict_budget) break;
      s.set_conflict_budget(*cfg.conflict_budget - used);
    }
    const SatStatus st = s.solve();
    if (st == SatStatus::Timeout) break;
    if (st == SatStatus::Unsat) {
      out.complete = true;
      break;
    }
    const std::vector<bool>& m = s.model();
    if (!verify_model(c, m)) {
      throw std::logic_error("internal solver error: model fails verification");
    }
    ++out.count;
    std::vector<int> block;
    for (int v : out.blocking.projection) block.push_back(m[v] ? -v : v);
    out.blocking.clauses.push_back(block);
    if (!s.add_clause(std::move(block))) {
      out.complete = true;
      break;
    }
  }
  out.stats = s.stats();
  return out;
}

ExternalResult solve_external(const std::string& dimacs,
                              const ExternalSolverConfig& cfg) {
  ExternalResult out;
  CnfInstance inst;
  try {
    inst = parse_dimacs(dimacs);
  } catch (const ParseError& e) {
    out.error = ExternalError::MalformedOutput;
    out.message = std::string("input is not valid DIMACS: ") + e.what();
    return out;
  }
  if (cfg.command.empty()) {
    out.error = ExternalError::MissingBinary;
    out.message = "no external solver command configured";
    return out;
  }

  char path[] = "/tmp/tatami-XXXXXX";
  const int fd = mkstemp(path);
  if (fd < 0) throw std::runtime_error("cannot create temporary file");
  close(fd);
  {
    std::ofstream f(path);
    f << dimacs;
  }
  const std::string cmd = cfg.command + " '" + path + "' 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::remove(path);
    out.error = ExternalError::MissingBinary;
    out.message = "cannot start: " + cfg.command;
    return out;
  }
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  const int status = pclose(pipe);
  std::remove(path);

  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code == 127) {
    out.error = ExternalError::MissingBinary;
    out.message = "command not found: " + cfg.command;
    return out;
  }
  if (code != 0 && code != 10 && code != 20) {
    out.error = ExternalError::NonzeroExit;
    out.message = "exit status " + std::to_string(code);
    return out;
  }

  std::optional<SatStatus> st;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) != 0) continue;
    const std::string word = line.substr(2);
    if (word.rfind("SATISFIABLE", 0) == 0) st = SatStatus::Sat;
    else if (word.rfind("UNSATISFIABLE", 0) == 0) st = SatStatus::Unsat;
    else if (word.rfind("UNKNOWN", 0) == 0) st = SatStatus::Timeout;
  }
  if (!st) {
    out.error = ExternalError::MalformedOutput;
    out.message = "no 's' status line in solver output";
    return out;
  }
  out.result.status = *st;
  if (*st == SatStatus::Sat) {
    try {
      out.result.model = parse_model(text, inst.num_vars);
    } catch (const ParseError& e) {
      out.error = ExternalError::MalformedOutput;
      out.message = e.what();
      return out;
    }
    if (!verify_model(inst, out.result.model)) {
      out.error = ExternalError::BadModel;
      out.message = "returned model violates a clause";
    }
  }
  return out;
}

}  // namespace tatami
