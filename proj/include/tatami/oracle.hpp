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

// Exhaustive backtracking enumeration of tatami coverings. This is the
// reference the SAT pipeline is tested against, so it deliberately shares no
// code with the encoder: it works directly on cells and tile ownership.

#ifndef TATAMI_ORACLE_HPP_
#define TATAMI_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tatami/region.hpp"

namespace tatami {

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationConfig {
  bool allow_monominoes = false;
  std::optional<std::uint64_t> max_results;  // stop after this many
  bool count_only = false;                   // do not materialize coverings
  std::size_t exhaustive_limit = 64;         // largest area searched blindly
};

struct EnumerationResult {
  std::vector<Covering> coverings;  // empty when count_only
  std::uint64_t count = 0;
  bool truncated = false;  // max_results was reached
};

// Lists (or counts) every covering accepted by check_covering, in the order
// produced by filling the first uncovered cell (row-major) with a monomino,
// then a horizontal domino, then a vertical domino.
EnumerationResult enumerate(const Region& r, const EnumerationConfig& cfg = {});

// Visitor form. The callback receives the tiles in placement order and returns
// false to stop the search. No size limit is applied.
void for_each_covering(const Region& r, bool allow_monominoes,
                       const std::function<bool(const std::vector<Tile>&)>& fn);

struct CornerLemmaReport {
  bool pass = false;
  std::uint64_t total = 0;           // all monomino-domino tatami coverings
  std::uint64_t monomino_free = 0;   // pure domino coverings
  std::uint64_t with_monomino = 0;
  // Coverings with a monomino on the top-left, top-right, bottom-left and
  // bottom-right corner cell respectively (a covering may count in several).
  std::array<std::uint64_t, 4> corner_monominoes{};
  std::optional<Covering> counterexample;
};

// Exhaustively checks that every monomino-domino tatami covering of the n x n
// square which uses a monomino has one on a corner cell.
CornerLemmaReport verify_corner_lemma(int n);

// The pure-domino tatami coverings of the 8x8 square, in enumeration order.
// Throws std::invalid_argument unless r is the full 8x8 square.
std::array<Covering, 2> two_coverings_of_square(const Region& r);

}  // namespace tatami

#endif  // TATAMI_ORACLE_HPP_
