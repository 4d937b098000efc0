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

// A deliberately naive reference used only by tests: generate every perfect
// domino matching (column-major, no pruning) and filter it with
// check_covering. Shares nothing with the oracle's search.

#ifndef TATAMI_TESTS_BRUTE_HPP_
#define TATAMI_TESTS_BRUTE_HPP_

#include <set>
#include <vector>

#include "tatami/region.hpp"

namespace tatami::testing {

inline void brute_rec(const Region& r, std::set<Cell>& left, Covering& cur,
                      std::vector<Covering>& out) {
  if (left.empty()) {
    if (check_covering(r, cur).valid()) {
      Covering c = cur;
      c.normalize();
      out.push_back(c);
    }
    return;
  }
  // Column-major first cell.
  Cell first = *left.begin();
  for (const Cell& c : left) {
    if (c.col < first.col || (c.col == first.col && c.row < first.row)) first = c;
  }
  const Cell right{first.row, first.col + 1}, down{first.row + 1, first.col};
  for (int k = 0; k < 2; ++k) {
    const Cell other = k == 0 ? down : right;
    if (!left.count(other)) continue;
    left.erase(first);
    left.erase(other);
    cur.tiles.push_back(
        {k == 0 ? TileKind::Vertical : TileKind::Horizontal, first});
    brute_rec(r, left, cur, out);
    cur.tiles.pop_back();
    left.insert(first);
    left.insert(other);
  }
}

inline std::vector<Covering> brute_coverings(const Region& r) {
  std::vector<Cell> cs = r.cells();
  std::set<Cell> left(cs.begin(), cs.end());
  Covering cur;
  std::vector<Covering> out;
  brute_rec(r, left, cur, out);
  return out;
}

// Region from a bitmask over a rows x cols box (bit i = cell i row-major),
// without normalizing the box.
inline Region region_from_mask(unsigned mask, int rows, int cols) {
  Region r(rows, cols);
  for (int i = 0; i < rows * cols; ++i) {
    if (mask >> i & 1u) r.set({i / cols, i % cols});
  }
  return r;
}

}  // namespace tatami::testing

#endif  // TATAMI_TESTS_BRUTE_HPP_
