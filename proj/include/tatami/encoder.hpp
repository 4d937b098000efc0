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

// CNF encoding of domino tatami covering. One Boolean variable per domino
// slot; three clause families:
//
//   Matching  (-a | -b)        for distinct slots a, b sharing a cell
//   Perfect   (a | b | ...)    over the slots covering a cell
//   Tatami    (h | h' | v | v') over the four slots between the cells
//                              around an interior lattice point
//
// Clauses are emitted in canonical order (family, then lexicographic) and
// exact duplicates are dropped, so DIMACS output is reproducible.

#ifndef TATAMI_ENCODER_HPP_
#define TATAMI_ENCODER_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/region.hpp"

namespace tatami {

enum class Provenance : std::uint8_t {
  Matching,
  Perfect,
  Tatami,
  Pin,
  Blocking,
  Input,  // read from a DIMACS file
};

const char* to_string(Provenance p);

struct Clause {
  std::vector<int> lits;
  Provenance provenance = Provenance::Input;

  bool operator==(const Clause& o) const = default;
};

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  // Set when the instance contains an empty clause: an isolated cell in the
  // encoded region, or a contradiction introduced by pinning.
  bool trivially_unsat = false;
  std::vector<Cell> isolated_cells;
  bool pin_contradiction = false;

  // Same variables and clause literals, ignoring provenance and flags.
  bool same_clauses(const CnfInstance& o) const;
};

class EdgeVarMap {
 public:
  EdgeVarMap() = default;
  explicit EdgeVarMap(std::vector<DominoSlot> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  // 1-based variable of a slot, or nullopt when the slot is not in the region.
  std::optional<int> var_of(const DominoSlot& s) const;
  const DominoSlot& slot_of(int var) const { return slots_.at(var - 1); }
  const std::vector<DominoSlot>& slots() const { return slots_; }

 private:
  std::vector<DominoSlot> slots_;
  std::map<DominoSlot, int> index_;
};

struct Encoding {
  CnfInstance cnf;
  EdgeVarMap map;
};

Encoding encode(const Region& r);

struct SlotPin {
  DominoSlot slot;
  bool value = true;
};

// Appends unit clauses (provenance Pin). Throws std::invalid_argument when a
// slot is not part of the encoded region.
CnfInstance pin(const CnfInstance& c, const EdgeVarMap& map,
                const std::vector<SlotPin>& pins);

// Pins a partial covering: its dominoes true and every other slot touching a
// covered cell false. Overlapping tiles set pin_contradiction and add an empty
// clause. Monominoes are rejected (they have no variable).
CnfInstance pin_partial_covering(const CnfInstance& c, const EdgeVarMap& map,
                                 const std::vector<Tile>& tiles);

std::string to_dimacs(const CnfInstance& c);
CnfInstance parse_dimacs(std::string_view text);

// model[v] is the value of variable v; model[0] is ignored.
Covering decode_model(const std::vector<bool>& model, const EdgeVarMap& map);

// Reads "v" lines (signed literals, 0-terminated) into a model of the given
// size. Variables not mentioned are false.
std::vector<bool> parse_model(std::string_view text, int num_vars);

}  // namespace tatami

#endif  // TATAMI_ENCODER_HPP_
