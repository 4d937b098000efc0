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

#include "tatami/region.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tatami {

namespace {

constexpr int kMaxSide = 1 << 15;

std::string line_error(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

std::vector<Cell> Tile::cells() const {
  if (kind == TileKind::Monomino) return {anchor};
  return {anchor, slot().second()};
}

Region::Region(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows > kMaxSide || cols > kMaxSide) {
    throw std::invalid_argument("region box out of range: " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               0);
}

Region Region::rectangle(int rows, int cols) {
  Region r(rows, cols);
  std::fill(r.bits_.begin(), r.bits_.end(), std::uint8_t{1});
  return r;
}

Region Region::from_cells(const std::vector<Cell>& cells, bool normalize) {
  if (cells.empty()) return Region(0, 0);
  int min_r = std::numeric_limits<int>::max(), min_c = min_r;
  int max_r = std::numeric_limits<int>::min(), max_c = max_r;
  for (const Cell& c : cells) {
    min_r = std::min(min_r, c.row);
    min_c = std::min(min_c, c.col);
    max_r = std::max(max_r, c.row);
    max_c = std::max(max_c, c.col);
  }
  if (!normalize) {
    if (min_r < 0 || min_c < 0) {
      throw std::invalid_argument("negative cell coordinate");
    }
    min_r = 0;
    min_c = 0;
  }
  Region r(max_r - min_r + 1, max_c - min_c + 1);
  for (const Cell& c : cells) r.set({c.row - min_r, c.col - min_c});
  return r;
}

Region Region::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(current);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty region");

  const std::size_t width = lines.front().size();
  if (width == 0) throw ParseError(line_error(1, "empty row"));
  Region r(static_cast<int>(lines.size()), static_cast<int>(width));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& row = lines[i];
    if (row.size() != width) {
      throw ParseError(line_error(static_cast<int>(i) + 1,
                                  "ragged row (expected " +
                                      std::to_string(width) + " columns, got " +
                                      std::to_string(row.size()) + ")"));
    }
    for (std::size_t j = 0; j < width; ++j) {
      if (row[j] == '#') {
        r.set({static_cast<int>(i), static_cast<int>(j)});
      } else if (row[j] != '.') {
        throw ParseError(line_error(static_cast<int>(i) + 1,
                                    std::string("unexpected character '") +
                                        row[j] + "'"));
      }
    }
  }
  if (r.empty()) throw ParseError("region has no cells");
  return r.canonical();
}

void Region::set(Cell c, bool member) {
  if (!in_box(c)) {
    throw std::out_of_range("cell (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ") outside region box");
  }
  bits_[index(c)] = member ? 1 : 0;
}

std::size_t Region::area() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Cell> Region::cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (bits_[index({r, c})]) out.push_back({r, c});
    }
  }
  return out;
}

Region Region::canonical(Cell* offset) const {
  const std::vector<Cell> cs = cells();
  if (cs.empty()) {
    if (offset) *offset = {0, 0};
    return Region(0, 0);
  }
  int min_r = rows_, min_c = cols_;
  for (const Cell& c : cs) {
    min_r = std::min(min_r, c.row);
    min_c = std::min(min_c, c.col);
  }
  if (offset) *offset = {min_r, min_c};
  return from_cells(cs, true);
}

bool Region::is_canonical() const {
  Cell off;
  Region c = canonical(&off);
  return off == Cell{0, 0} && c.rows_ == rows_ && c.cols_ == cols_;
}

std::string Region::serialize() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    if (r) out.push_back('\n');
    for (int c = 0; c < cols_; ++c) out.push_back(contains({r, c}) ? '#' : '.');
  }
  return out;
}

std::vector<DominoSlot> domino_slots(const Region& r) {
  std::vector<DominoSlot> out;
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      if (!r.contains({i, j})) continue;
      if (r.contains({i, j + 1})) out.push_back({{i, j}, Orientation::Horizontal});
      if (r.contains({i + 1, j})) out.push_back({{i, j}, Orientation::Vertical});
    }
  }
  return out;
}

std::vector<TatamiPoint> tatami_points(const Region& r) {
  std::vector<TatamiPoint> out;
  for (int i = 0; i + 1 < r.rows(); ++i) {
    for (int j = 0; j + 1 < r.cols(); ++j) {
      if (r.contains({i, j}) && r.contains({i, j + 1}) &&
          r.contains({i + 1, j}) && r.contains({i + 1, j + 1})) {
        out.push_back({{i, j}});
      }
    }
  }
  return out;
}

void Covering::normalize() { std::sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) {
  if (a.anchor != b.anchor) return a.anchor < b.anchor;
  return a.kind < b.kind;
}); }

bool Covering::has_monomino() const {
  return std::any_of(tiles.begin(), tiles.end(),
                     [](const Tile& t) { return !t.is_domino(); });
}

std::string Covering::serialize() const {
  std::ostringstream os;
  for (const Tile& t : tiles) {
    const char k = t.kind == TileKind::Horizontal ? 'H'
                   : t.kind == TileKind::Vertical ? 'V'
                                                  : 'M';
    os << k << ' ' << t.anchor.row << ' ' << t.anchor.col << '\n';
  }
  return os.str();
}

Covering Covering::parse(std::string_view text) {
  Covering out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    long long r = 0, c = 0;
    if (!(ls >> kind >> r >> c)) {
      throw ParseError(line_error(line_no, "expected '<H|V|M> row col'"));
    }
    std::string extra;
    if (ls >> extra) throw ParseError(line_error(line_no, "trailing text"));
    if (r < 0 || c < 0 || r > kMaxSide || c > kMaxSide) {
      throw ParseError(line_error(line_no, "coordinate out of range"));
    }
    Tile t;
    if (kind == "H") {
      t.kind = TileKind::Horizontal;
    } else if (kind == "V") {
      t.kind = TileKind::Vertical;
    } else if (kind == "M") {
      t.kind = TileKind::Monomino;
    } else {
      throw ParseError(line_error(line_no, "unknown tile kind '" + kind + "'"));
    }
    t.anchor = {static_cast<int>(r), static_cast<int>(c)};
    out.tiles.push_back(t);
  }
  return out;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::None: return "valid";
    case ViolationKind::OutsideRegion: return "tile outside region";
    case ViolationKind::Overlap: return "overlapping tiles";
    case ViolationKind::Uncovered: return "uncovered cell";
    case ViolationKind::Monomino: return "monomino not allowed";
    case ViolationKind::FourTilesMeet: return "four tiles meet";
  }
  return "unknown";
}

CoveringVerdict check_covering(const Region& r, const Covering& c,
                               bool allow_monominoes) {
  auto report = [](ViolationKind k, Cell w) {
    CoveringVerdict v;
    v.kind = k;
    v.witness = w;
    v.message = std::string(to_string(k)) + " at (" + std::to_string(w.row) +
                "," + std::to_string(w.col) + ")";
    return v;
  };

  for (const Tile& t : c.tiles) {
    for (const Cell& cell : t.cells()) {
      if (!r.contains(cell)) return report(ViolationKind::OutsideRegion, cell);
    }
  }

  const std::size_t n = static_cast<std::size_t>(r.rows()) * r.cols();
  std::vector<int> owner(n, -1);
  auto at = [&](Cell x) -> int& {
    return owner[static_cast<std::size_t>(x.row) * r.cols() + x.col];
  };
  for (std::size_t i = 0; i < c.tiles.size(); ++i) {
    for (const Cell& cell : c.tiles[i].cells()) {
      if (at(cell) != -1) return report(ViolationKind::Overlap, cell);
      at(cell) = static_cast<int>(i);
    }
  }
  for (const Cell& cell : r.cells()) {
    if (at(cell) == -1) return report(ViolationKind::Uncovered, cell);
  }
  if (!allow_monominoes) {
    for (const Tile& t : c.tiles) {
      if (!t.is_domino()) return report(ViolationKind::Monomino, t.anchor);
    }
  }
  for (const TatamiPoint& p : tatami_points(r)) {
    const Cell a = p.top_left;
    const int t0 = at(a), t1 = at({a.row, a.col + 1});
    const int t2 = at({a.row + 1, a.col}), t3 = at({a.row + 1, a.col + 1});
    if (t0 != t1 && t0 != t2 && t0 != t3 && t1 != t2 && t1 != t3 && t2 != t3) {
      return report(ViolationKind::FourTilesMeet, a);
    }
  }
  return {};
}

Covering translate(const Covering& c, Cell offset) {
  Covering out = c;
  for (Tile& t : out.tiles) {
    t.anchor.row += offset.row;
    t.anchor.col += offset.col;
  }
  return out;
}

Region transpose(const Region& r) {
  Region out(r.cols(), r.rows());
  for (const Cell& c : r.cells()) out.set({c.col, c.row});
  return out;
}

Covering transpose(const Covering& c) {
  Covering out;
  for (const Tile& t : c.tiles) {
    Tile u = t;
    u.anchor = {t.anchor.col, t.anchor.row};
    if (t.kind == TileKind::Horizontal) u.kind = TileKind::Vertical;
    else if (t.kind == TileKind::Vertical) u.kind = TileKind::Horizontal;
    out.tiles.push_back(u);
  }
  out.normalize();
  return out;
}

}  // namespace tatami
