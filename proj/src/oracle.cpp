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

#include "tatami/oracle.hpp"

#include <string>

namespace tatami {

namespace {

class Backtracker {
 public:
  Backtracker(const Region& r, bool allow_monominoes,
              const std::function<bool(const std::vector<Tile>&)>& fn)
      : rows_(r.rows()),
        cols_(r.cols()),
        allow_monominoes_(allow_monominoes),
        fn_(fn),
        member_(static_cast<std::size_t>(rows_) * cols_, 0),
        owner_(member_.size(), -1) {
    for (const Cell& c : r.cells()) member_[index(c.row, c.col)] = 1;
  }

  void run() { search(0); }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  bool member(int r, int c) const {
    return r >= 0 && c >= 0 && r < rows_ && c < cols_ && member_[index(r, c)];
  }
  bool free(int r, int c) const {
    return member(r, c) && owner_[index(r, c)] == -1;
  }

  // Checks the up to four points around (r,c) whose cells are all covered.
  bool points_ok(int r, int c) const {
    for (int pr = r - 1; pr <= r; ++pr) {
      for (int pc = c - 1; pc <= c; ++pc) {
        if (!member(pr, pc) || !member(pr, pc + 1) || !member(pr + 1, pc) ||
            !member(pr + 1, pc + 1)) {
          continue;
        }
        const int a = owner_[index(pr, pc)], b = owner_[index(pr, pc + 1)];
        const int d = owner_[index(pr + 1, pc)],
                  e = owner_[index(pr + 1, pc + 1)];
        if (a < 0 || b < 0 || d < 0 || e < 0) continue;
        if (a != b && a != d && a != e && b != d && b != e && d != e) {
          return false;
        }
      }
    }
    return true;
  }

  bool place(const Tile& t) {
    const int id = static_cast<int>(tiles_.size());
    tiles_.push_back(t);
    const std::vector<Cell> cs = t.cells();
    for (const Cell& c : cs) owner_[index(c.row, c.col)] = id;
    for (const Cell& c : cs) {
      if (!points_ok(c.row, c.col)) return false;
    }
    return true;
  }

  void unplace() {
    for (const Cell& c : tiles_.back().cells()) owner_[index(c.row, c.col)] = -1;
    tiles_.pop_back();
  }

  // Returns false once the callback asks to stop.
  bool search(std::size_t from) {
    std::size_t i = from;
    while (i < member_.size() && !(member_[i] && owner_[i] == -1)) ++i;
    if (i == member_.size()) return fn_(tiles_);
    const int r = static_cast<int>(i / cols_), c = static_cast<int>(i % cols_);

    const Tile options[3] = {
        Tile::monomino({r, c}),
        Tile{TileKind::Horizontal, {r, c}},
        Tile{TileKind::Vertical, {r, c}},
    };
    for (const Tile& t : options) {
      if (t.kind == TileKind::Monomino && !allow_monominoes_) continue;
      if (t.kind == TileKind::Horizontal && !free(r, c + 1)) continue;
      if (t.kind == TileKind::Vertical && !free(r + 1, c)) continue;
      const bool ok = place(t);
      const bool go_on = !ok || search(i + 1);
      unplace();
      if (!go_on) return false;
    }
    return true;
  }

  int rows_, cols_;
  bool allow_monominoes_;
  const std::function<bool(const std::vector<Tile>&)>& fn_;
  std::vector<std::uint8_t> member_;
  std::vector<int> owner_;
  std::vector<Tile> tiles_;
};

}  // namespace

void for_each_covering(const Region& r, bool allow_monominoes,
                       const std::function<bool(const std::vector<Tile>&)>& fn) {
  Backtracker(r, allow_monominoes, fn).run();
}

EnumerationResult enumerate(const Region& r, const EnumerationConfig& cfg) {
  if (cfg.max_results && *cfg.max_results == 0) {
    throw std::invalid_argument("max_results must be at least 1");
  }
  const std::size_t area = r.area();
  if (area > cfg.exhaustive_limit && !cfg.count_only && !cfg.max_results) {
    throw SizeLimitError("region area " + std::to_string(area) +
                         " exceeds the exhaustive limit of " +
                         std::to_string(cfg.exhaustive_limit) + " cells");
  }
  EnumerationResult out;
  // Odd area cannot be tiled by dominoes alone; skip the search outright.
  if (!cfg.allow_monominoes && area % 2 == 1) return out;
  for_each_covering(r, cfg.allow_monominoes, [&](const std::vector<Tile>& ts) {
    ++out.count;
    if (!cfg.count_only) {
      Covering c{ts};
      c.normalize();
      out.coverings.push_back(std::move(c));
    }
    if (cfg.max_results && out.count >= *cfg.max_results) {
      out.truncated = true;
      return false;
    }
    return true;
  });
  return out;
}

CornerLemmaReport verify_corner_lemma(int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("verify_corner_lemma supports 1 <= n <= 8");
  }
  CornerLemmaReport rep;
  rep.pass = true;
  const Cell corners[4] = {{0, 0}, {0, n - 1}, {n - 1, 0}, {n - 1, n - 1}};
  for_each_covering(
      Region::rectangle(n, n), true, [&](const std::vector<Tile>& ts) {
        ++rep.total;
        bool any_mono = false;
        bool corner_mono = false;
        for (const Tile& t : ts) {
          if (t.is_domino()) continue;
          any_mono = true;
          for (int k = 0; k < 4; ++k) {
            // A 1x1 square has one corner cell listed four times.
            if (t.anchor == corners[k]) {
              corner_mono = true;
              ++rep.corner_monominoes[k];
            }
          }
        }
        if (!any_mono) {
          ++rep.monomino_free;
        } else {
          ++rep.with_monomino;
          if (!corner_mono && rep.pass) {
            rep.pass = false;
            Covering c{ts};
            c.normalize();
            rep.counterexample = std::move(c);
          }
        }
        return true;
      });
  return rep;
}

std::array<Covering, 2> two_coverings_of_square(const Region& r) {
  if (r != Region::rectangle(8, 8)) {
    throw std::invalid_argument("two_coverings_of_square expects the 8x8 square");
  }
  const EnumerationResult res = enumerate(r);
  if (res.coverings.size() != 2) {
    throw std::logic_error("the 8x8 square should have exactly two coverings, found " +
                           std::to_string(res.coverings.size()));
  }
  return {res.coverings[0], res.coverings[1]};
}

}  // namespace tatami
