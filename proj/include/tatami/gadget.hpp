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

// Signal squares, interface labels, gadget specifications and their
// verification, and composition of placed gadgets into one region.
//
// An 8x8 signal square whose corner cells have no outside neighbours is
// covered by one of its two tatami coverings in every covering of the whole
// region; call them phase 0 and phase 1 (enumeration order). A connector
// touches a square along a band of four cells on one side, starting at an
// offset 0..4 along that side. The band is covered by three tiles (T) in one
// phase and two tiles (F) in the other. Labels therefore belong to a
// (side, offset) pair, not to the square.

#ifndef TATAMI_GADGET_HPP_
#define TATAMI_GADGET_HPP_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/region.hpp"
#include "tatami/sat.hpp"

namespace tatami {

inline constexpr int kSquareSize = 8;
inline constexpr int kSquarePitch = 16;

enum class Side : std::uint8_t { N, E, S, W };

char to_char(Side s);
Side parse_side(char c);

class GadgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The two coverings of the 8x8 square anchored at (0,0).
const std::array<Covering, 2>& square_coverings();
// Phase `phase` covering of the square at `anchor`.
Covering square_covering(Cell anchor, int phase);

// The four cells of the band, relative to the square anchor.
std::array<Cell, 4> band_cells(Side side, int offset);
// Tiles of the phase covering meeting the band, relative to the anchor.
std::vector<Tile> band_tiles(int phase, Side side, int offset);
// true = T (three tiles), false = F (two tiles). Throws GadgetError when the
// band does not distinguish the two phases.
bool interface_value(int phase, Side side, int offset);
int phase_for(Side side, int offset, bool value);

struct InterfaceConfig {
  Side side = Side::N;
  int offset = 2;
  bool value = false;
  std::vector<Tile> tiles;  // the band's partial covering, square-relative
};

InterfaceConfig interface_config(Side side, int offset, bool value);

struct SignalSquare {
  Cell anchor;
};

struct Port {
  std::string name;
  int square = 0;  // index into GadgetSpec::squares
  Side side = Side::N;
  int offset = 2;
  bool output = false;
};

struct TruthRow {
  std::vector<bool> values;  // in port order
  bool coverable = false;
};

struct GadgetSpec {
  std::string name;
  int rows = 0, cols = 0;             // bounding box
  std::vector<SignalSquare> squares;  // anchors on the 16-pitch grid
  Region connector;                   // connector cells only, rows x cols
  std::vector<Port> ports;
  std::vector<TruthRow> table;

  // Connector plus squares.
  Region full_region() const;
  // Row in `table` for the given port values, if listed.
  const TruthRow* row_for(const std::vector<bool>& values) const;
};

// Checks structure: square placement, disjointness from the connector,
// isolated corners, distinct port squares and a truth table listing every
// value tuple exactly once. Throws GadgetError with the first problem. The
// band of a port only fixes how its label is read; the connector may touch
// the rest of that side too.
void validate(const GadgetSpec& g);

GadgetSpec parse_gadget(std::string_view text);
std::string serialize_gadget(const GadgetSpec& g);

// "TT->T" style label of a tuple (inputs, arrow, outputs).
std::string tuple_label(const GadgetSpec& g, const std::vector<bool>& values);

struct TupleReport {
  std::vector<bool> values;
  bool expected = false;
  SatStatus status = SatStatus::Unsat;  // Timeout counts as a failure
  bool ok() const;
};

struct GadgetVerdict {
  bool pass = false;
  std::vector<TupleReport> tuples;
  std::string message;  // names the first failing tuple
};

// Pins each port square to the phase presenting the tuple's value on the
// port's band and solves; passes iff every verdict matches the table.
GadgetVerdict verify_gadget(const GadgetSpec& g, const SolverConfig& cfg = {});
// verify_gadget restricted to one-port gadgets accepting exactly T.
GadgetVerdict verify_terminator(const GadgetSpec& g, const SolverConfig& cfg = {});

// ---- composition ---------------------------------------------------------

struct Placement {
  const GadgetSpec* gadget = nullptr;
  Cell offset;  // multiple of the pitch
  std::string label;
};

struct PortBinding {
  std::size_t placement = 0;
  std::string port;
  Cell square;  // absolute anchor
  Side side = Side::N;
  int offset = 2;
};

struct Composition {
  Region region;
  std::vector<Cell> squares;  // absolute anchors, sorted
  std::vector<PortBinding> ports;
  // Owning placement of every connector cell (for diagnostics and tests).
  std::map<Cell, std::size_t> owner;
};

// Unions the placements. Squares may be shared; connector cells of different
// placements may neither overlap nor touch, and no connector may touch a
// square its gadget does not declare. Every square keeps isolated corners.
Composition compose(const std::vector<Placement>& placements,
                    const std::vector<Cell>& extra_squares = {});

// Phase of the square at `anchor` in a covering of a region containing it, or
// nullopt when the covering restricted to the square is neither phase.
std::optional<int> square_phase(const Covering& c, Cell anchor);

// Builds a gadget spec from a composition: the chosen bindings become the
// ports (in order) and the truth table is filled in from `relation`.
GadgetSpec spec_from_composition(
    const std::string& name, const Composition& comp,
    const std::vector<std::pair<std::size_t, bool>>& port_bindings,
    const std::function<bool(const std::vector<bool>&)>& relation);

class GadgetCatalog {
 public:
  // Loads every *.gadget file in `dir`, verifying each. A gadget that fails
  // verification is reported as an error, never loaded.
  static GadgetCatalog load_directory(const std::string& dir,
                                      const SolverConfig& cfg = {});
  void add_verified(GadgetSpec g, const SolverConfig& cfg = {});

  bool contains(const std::string& name) const { return gadgets_.count(name) > 0; }
  const GadgetSpec& get(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, GadgetSpec> gadgets_;
};

}  // namespace tatami

#endif  // TATAMI_GADGET_HPP_
