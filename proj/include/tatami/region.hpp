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

// Rectilinear regions on the integer lattice, domino slots, tatami points and
// coverings. Coordinates are row-major with rows increasing downward.

#ifndef TATAMI_REGION_HPP_
#define TATAMI_REGION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tatami {

// Raised for malformed textual input (regions, coverings, DIMACS, gadget
// files). The message names the offending line where one exists.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Orientation : std::uint8_t { Horizontal, Vertical };

// A domino position: the anchor cell and its right (Horizontal) or lower
// (Vertical) neighbour.
struct DominoSlot {
  Cell anchor;
  Orientation orientation = Orientation::Horizontal;

  Cell second() const {
    return orientation == Orientation::Horizontal
               ? Cell{anchor.row, anchor.col + 1}
               : Cell{anchor.row + 1, anchor.col};
  }
  bool covers(Cell c) const { return c == anchor || c == second(); }

  friend auto operator<=>(const DominoSlot&, const DominoSlot&) = default;
};

enum class TileKind : std::uint8_t { Horizontal, Vertical, Monomino };

// A placed tile of a covering. Dominoes are identified with their slot.
struct Tile {
  TileKind kind = TileKind::Horizontal;
  Cell anchor;

  static Tile domino(const DominoSlot& s) {
    return {s.orientation == Orientation::Horizontal ? TileKind::Horizontal
                                                     : TileKind::Vertical,
            s.anchor};
  }
  static Tile monomino(Cell c) { return {TileKind::Monomino, c}; }

  bool is_domino() const { return kind != TileKind::Monomino; }
  DominoSlot slot() const {
    return {anchor, kind == TileKind::Vertical ? Orientation::Vertical
                                               : Orientation::Horizontal};
  }
  // One cell for a monomino, two for a domino.
  std::vector<Cell> cells() const;

  friend auto operator<=>(const Tile&, const Tile&) = default;
};

// The lattice point shared by cells (r,c), (r,c+1), (r+1,c), (r+1,c+1);
// identified by its top-left cell.
struct TatamiPoint {
  Cell top_left;

  friend auto operator<=>(const TatamiPoint&, const TatamiPoint&) = default;
};

class Region {
 public:
  Region() = default;
  // An empty region with the given bounding box.
  Region(int rows, int cols);

  static Region rectangle(int rows, int cols);
  // Tight region holding exactly `cells` (translated so the minimum row and
  // column become 0 when `normalize` is set).
  static Region from_cells(const std::vector<Cell>& cells,
                           bool normalize = true);
  // Parses the '#'/'.' grid format. The result is canonical (tight box).
  static Region parse(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool in_box(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.row < rows_ && c.col < cols_;
  }
  bool contains(Cell c) const {
    return in_box(c) && bits_[index(c)] != 0;
  }
  void set(Cell c, bool member = true);

  std::size_t area() const;
  std::vector<Cell> cells() const;  // row-major
  bool empty() const { return area() == 0; }

  // Smallest region with the same cells, plus the offset of its (0,0) cell in
  // this region's coordinates.
  Region canonical(Cell* offset = nullptr) const;
  bool is_canonical() const;

  // '#'/'.' rows joined by '\n', no trailing newline or whitespace.
  std::string serialize() const;

  bool operator==(const Region& other) const = default;

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Slots whose two cells are both members, row-major by anchor with Horizontal
// before Vertical.
std::vector<DominoSlot> domino_slots(const Region& r);

// Points whose four surrounding cells are all members, row-major.
std::vector<TatamiPoint> tatami_points(const Region& r);

struct Covering {
  std::vector<Tile> tiles;

  // Sorts tiles into row-major anchor order.
  void normalize();
  bool has_monomino() const;

  // One tile per line: "H r c", "V r c" or "M r c".
  std::string serialize() const;
  static Covering parse(std::string_view text);

  bool operator==(const Covering& other) const = default;
};

enum class ViolationKind : std::uint8_t {
  None,
  OutsideRegion,
  Overlap,
  Uncovered,
  Monomino,
  FourTilesMeet,
};

struct CoveringVerdict {
  ViolationKind kind = ViolationKind::None;
  Cell witness;  // cell, or top-left cell of the offending point
  std::string message;

  bool valid() const { return kind == ViolationKind::None; }
};

const char* to_string(ViolationKind kind);

CoveringVerdict check_covering(const Region& r, const Covering& c,
                               bool allow_monominoes = false);

// Geometric helpers used when placing gadgets.
Covering translate(const Covering& c, Cell offset);
Region transpose(const Region& r);
Covering transpose(const Covering& c);

}  // namespace tatami

#endif  // TATAMI_REGION_HPP_
