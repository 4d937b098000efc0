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

// Connector search. A rectangle is split into kept (K), excluded (X),
// optional (A) and interface (C) cells; the search looks for a subset A' of
// the optional cells such that the region A' + K + C admits a covering
// extending every good partial covering of C and none extending a bad one.
//
// The default strategy is a counterexample loop: an outer SAT instance (one
// selector per optional cell, one copy of the tiling constraints per good
// covering) proposes regions; each proposal is checked against the bad
// coverings and, if one of them extends, that exact region is forbidden.
//
// The forcing strategy instead asks, in the same single SAT call, for a proof
// that each bad covering fails: a derivation of bounded depth in which slots
// are forced in or out by the covering and tatami rules until some cell,
// slot or point becomes contradictory. It finds fewer regions (only those
// refutable this way) but needs no outer iterations.

#ifndef TATAMI_SYNTH_HPP_
#define TATAMI_SYNTH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/gadget.hpp"
#include "tatami/region.hpp"
#include "tatami/sat.hpp"

namespace tatami {

enum class CellClass : std::uint8_t { Excluded, Kept, Optional, Interface };

char to_char(CellClass c);

struct PartialCovering {
  std::string label;
  std::vector<Tile> tiles;
};

enum class SearchMode : std::uint8_t { Loop, Forcing };

struct GadgetSearchSpec {
  std::string name;
  int rows = 0, cols = 0;
  std::vector<CellClass> classes;  // row-major, rows * cols
  std::vector<PartialCovering> good, bad;

  // Optional gadget description; when present the outcome can be written as a
  // gadget file and G/B may be derived from the table.
  std::vector<SignalSquare> squares;
  std::vector<Port> ports;
  std::vector<TruthRow> table;

  std::uint64_t max_iterations = 200000;
  SearchMode mode = SearchMode::Loop;
  int forcing_rounds = 24;
  SolverConfig solver;

  CellClass at(Cell c) const;
  void set(Cell c, CellClass k);
  std::vector<Cell> cells_of(CellClass k) const;
};

class SearchSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SearchSpecError when the partition is malformed, a partial covering
// leaves the interface cells, or a covering is both good and bad.
void validate(const GadgetSearchSpec& spec);

// Fills good/bad from squares, ports and table: each tuple pins the full
// coverings of the port squares in the phases presenting its values.
void derive_coverings(GadgetSearchSpec& spec);

// A spec for connecting the given squares through a rectangle: square cells
// are interface cells, cells beside a square outside its port bands and the
// outside neighbours of square corners are excluded, everything else is
// optional. G/B are derived from the table.
GadgetSearchSpec port_search_spec(const std::string& name, int rows, int cols,
                                  std::vector<SignalSquare> squares,
                                  std::vector<Port> ports,
                                  std::vector<TruthRow> table);

// Text format:
//   search <name>
//   box <rows> <cols>
//   [square <r> <c>]* [port ...]*         (as in gadget files)
//   [mode loop|forcing] [rounds <T>] [iterations <N>] [seed <S>]
//   grid                                   rows of K/X/A/C
//   table ... end                          or
//   good <label> / bad <label> blocks of "H r c" tiles, closed by "end"
GadgetSearchSpec parse_search_spec(std::string_view text);
std::string serialize_search_spec(const GadgetSearchSpec& spec);

enum class SearchStatus : std::uint8_t { Found, Exhausted, BudgetExceeded };

const char* to_string(SearchStatus s);

struct IterationLog {
  std::uint64_t iteration = 0;
  std::size_t optional_cells = 0;  // |A'| of the candidate
  std::string rejected_by;         // label of the admitted bad covering
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  Region region;  // A' + K in the spec box (Found only)
  std::uint64_t iterations = 0;
  std::uint64_t forbidden = 0;  // regions blocked by the loop
  std::vector<IterationLog> log;
  std::string note;
};

// `progress`, when set, is called after every loop iteration (and once in
// forcing mode).
SearchOutcome search(const GadgetSearchSpec& spec,
                     const std::function<void(const IterationLog&)>& progress = {});

struct CandidateVerdict {
  bool clean = false;
  std::vector<std::string> admitted_bad;   // b in B the region fails to exclude
  std::vector<std::string> rejected_good;  // g in G the region fails to admit
};

// `region` holds the candidate's kept and optional cells (interface cells are
// added automatically). Bad coverings are checked concurrently.
CandidateVerdict check_candidate(const Region& region,
                                 const GadgetSearchSpec& spec);

// Region plus interface cells.
Region with_interface(const Region& region, const GadgetSearchSpec& spec);

// Gadget file for a Found outcome; needs squares and ports in the spec.
GadgetSpec outcome_gadget(const GadgetSearchSpec& spec,
                          const SearchOutcome& outcome);

}  // namespace tatami

#endif  // TATAMI_SYNTH_HPP_
