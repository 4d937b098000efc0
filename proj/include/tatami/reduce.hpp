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

// Planar 3-CNF to region reduction.
//
// Pipeline: formula -> variable/clause incidence graph -> visibility layout
// (vertices as vertical segments in their own column, edges as horizontal
// segments in their own row) -> placed gadgets -> region. A covering of the
// region exists iff the formula is satisfiable, and any covering can be read
// back as a satisfying assignment.
//
// Geometry of the emitted region, in units of square positions (16 cells):
// layout column X owns square columns 5X..5X+4 and layout row Y owns square
// rows 5Y..5Y+4, so the layout pitch is 80 cells.
//   * A variable is a vertical chain of squares in square column 5X+2 from
//     its first to its last edge row. Its value is the east-side label of
//     those squares (phase 0 reads T).
//   * An edge in row Y is a horizontal chain of squares in square row 5Y from
//     the variable chain to one of the clause's input tracks.
//   * A clause owns tracks in square columns 5X+1..5X+3. Each track turns its
//     input downwards; the vertical label of a track square is the negation
//     of the horizontal one, so a track carries the negated literal. A
//     negated literal enters through the diagonal turn, which flips the
//     phase and therefore delivers the variable's own value.
//   * Below the tracks AND gates combine the negated literals and a
//     terminator on the east side of the last square accepts only when the
//     conjunction is F, i.e. when the clause is satisfied.

#ifndef TATAMI_REDUCE_HPP_
#define TATAMI_REDUCE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/gadget.hpp"
#include "tatami/region.hpp"

namespace tatami {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

struct Formula3Cnf {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;

  // Throws std::invalid_argument when a clause is empty, wider than three,
  // repeats a variable or names a variable out of range.
  void validate() const;
  bool evaluate(const std::vector<bool>& assignment) const;
  // Exhaustive; intended for small formulas.
  std::optional<std::vector<bool>> brute_force_model() const;

  // DIMACS CNF input (clause width <= 3 enforced).
  static Formula3Cnf from_dimacs(std::string_view text);
  std::string to_dimacs() const;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for a non-planar incidence graph, with a Kuratowski subgraph.
class NonPlanarError : public ReductionError {
 public:
  NonPlanarError(const std::string& what, std::vector<std::pair<int, int>> witness)
      : ReductionError(what), witness_(std::move(witness)) {}
  const std::vector<std::pair<int, int>>& witness() const { return witness_; }

 private:
  std::vector<std::pair<int, int>> witness_;
};

struct IncidenceEdge {
  int var = 0;
  int clause = 0;
  bool negated = false;
};

// Vertices 0..num_vars-1 are variables, num_vars.. are clauses.
struct IncidenceGraph {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<IncidenceEdge> edges;

  int num_vertices() const { return num_vars + num_clauses; }
  int clause_vertex(int c) const { return num_vars + c; }
};

IncidenceGraph build_incidence(const Formula3Cnf& f);

struct VertexSegment {
  int column = 0;
  int row_lo = 0, row_hi = 0;
};

struct EdgeSegment {
  int row = 0;
  int col_lo = 0, col_hi = 0;
};

// Five square positions per layout unit: spine, up to three clause tracks and
// a spare column that keeps neighbouring units apart.
inline constexpr int kDefaultPitch = 5 * kSquarePitch;

struct LayoutPlan {
  std::vector<VertexSegment> vertices;  // indexed like the incidence graph
  std::vector<EdgeSegment> edges;       // indexed like the incidence edges
  // Per clause, its edges ordered by track (left to right).
  std::vector<std::vector<int>> clause_inputs;
  int rows = 0, cols = 0;  // layout units
  int pitch = kDefaultPitch;  // cells per layout unit
};

// Rejects non-planar graphs with NonPlanarError. The pitch must be a multiple
// of the square pitch and at least kDefaultPitch.
LayoutPlan layout(const IncidenceGraph& g, int pitch = kDefaultPitch);

// Throws ReductionError naming the first violated layout invariant.
void validate_layout(const LayoutPlan& plan, const IncidenceGraph& g);

struct ReductionArtifact {
  Formula3Cnf formula;
  LayoutPlan plan;
  Composition composition;
  Region region;
  std::vector<Cell> variable_squares;    // defining square of each variable
  std::vector<Cell> clause_terminators;  // terminator square of each clause
};

// Catalog entries used: wire_h, wire_v, turn_e, turn_w, and, term.
ReductionArtifact emit_region(const Formula3Cnf& f, const LayoutPlan& plan,
                              const GadgetCatalog& catalog);
ReductionArtifact reduce(const Formula3Cnf& f, const GadgetCatalog& catalog,
                         int pitch = kDefaultPitch);

// Reads each variable's defining square. Throws ReductionError for a covering
// that is not valid for the region, or std::logic_error if the decoded
// assignment fails the formula (which would be a construction bug).
std::vector<bool> decode_witness(const ReductionArtifact& a, const Covering& c);

// Sidecar text: "var <i> <row> <col>" and "clause <j> <row> <col>" lines.
std::string port_map(const ReductionArtifact& a);

}  // namespace tatami

#endif  // TATAMI_REDUCE_HPP_
