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

// Formula corpora shared by the reduction tests and the acceptance run.

#ifndef TATAMI_TESTS_FORMULA_CORPUS_HPP_
#define TATAMI_TESTS_FORMULA_CORPUS_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tatami/reduce.hpp"

namespace tatami::testing {

// Every clause (1 to 3 distinct variables, any signs) over n variables.
inline std::vector<std::vector<Literal>> all_clauses(int n) {
  std::vector<std::vector<Literal>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v) {
      if (mask & (1 << v)) vars.push_back(v);
    }
    if (vars.size() > 3) continue;
    for (int signs = 0; signs < (1 << vars.size()); ++signs) {
      std::vector<Literal> c;
      for (std::size_t i = 0; i < vars.size(); ++i) c.push_back({vars[i], ((signs >> i) & 1) != 0});
      out.push_back(c);
    }
  }
  return out;
}

// All formulas with 1..max_vars variables (each used) and 1..max_clauses
// clauses, clause lists taken as multisets.
inline std::vector<Formula3Cnf> formula_corpus(int max_vars, int max_clauses) {
  std::vector<Formula3Cnf> out;
  for (int n = 1; n <= max_vars; ++n) {
    const auto clauses = all_clauses(n);
    std::vector<std::size_t> pick;
    auto emit = [&] {
      Formula3Cnf f{n, {}};
      int used = 0;
      for (std::size_t i : pick) {
        f.clauses.push_back(clauses[i]);
        for (const Literal& l : clauses[i]) used |= 1 << l.var;
      }
      if (used == (1 << n) - 1) out.push_back(f);
    };
    // Non-decreasing index sequences of length 1..max_clauses.
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!pick.empty()) emit();
      if (static_cast<int>(pick.size()) == max_clauses) return;
      for (std::size_t i = from; i < clauses.size(); ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

inline Formula3Cnf random_formula(std::mt19937_64& rng, int max_vars, int max_clauses) {
  const int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  Formula3Cnf f{n, {}};
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int c = 0; c < m; ++c) {
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    const int w = std::uniform_int_distribution<int>(1, std::min(3, n))(rng);
    std::vector<Literal> clause;
    for (int i = 0; i < w; ++i) {
      clause.push_back({vars[static_cast<std::size_t>(i)], std::bernoulli_distribution(0.5)(rng)});
    }
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace tatami::testing

#endif  // TATAMI_TESTS_FORMULA_CORPUS_HPP_
