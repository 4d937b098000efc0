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

#include "tatami/reduce.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "formula_corpus.hpp"
#include "tatami/encoder.hpp"
#include "tatami/sat.hpp"

using namespace tatami;

namespace {

const GadgetCatalog& catalog() {
  static const GadgetCatalog c = GadgetCatalog::load_directory(TATAMI_SOURCE_DIR "/data/gadgets");
  return c;
}

Literal pos(int v) { return {v, false}; }
Literal neg(int v) { return {v, true}; }

// (a or not b or c) and (b or not d)
Formula3Cnf four_var_example() { return {4, {{pos(0), neg(1), pos(2)}, {pos(1), neg(3)}}}; }

std::optional<Covering> cover(const Region& r) {
  const Encoding enc = encode(r);
  const SolveResult res = solve(enc.cnf);
  REQUIRE(res.status != SatStatus::Timeout);
  if (res.status != SatStatus::Sat) return std::nullopt;
  return decode_model(res.model, enc.map);
}

}  // namespace

TEST_CASE("incidence graph of small formulas") {
  const IncidenceGraph g = build_incidence(four_var_example());
  CHECK(g.num_vars == 4);
  CHECK(g.num_clauses == 2);
  CHECK(g.edges.size() == 5);
  CHECK(g.edges[1].negated);

  const IncidenceGraph one = build_incidence({1, {{pos(0)}}});
  CHECK(one.num_vertices() == 2);
  CHECK(one.edges.size() == 1);

  const IncidenceGraph both = build_incidence({1, {{pos(0)}, {neg(0)}}});
  CHECK(both.num_vertices() == 3);
  REQUIRE(both.edges.size() == 2);
  CHECK(both.edges[0].negated != both.edges[1].negated);

  CHECK_THROWS_AS(build_incidence({2, {{pos(0), neg(0)}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_incidence({1, {{}}}), std::invalid_argument);
}

TEST_CASE("DIMACS formulas enforce clause width") {
  const Formula3Cnf f = Formula3Cnf::from_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(f.clauses[0][1] == neg(1));
  CHECK(Formula3Cnf::from_dimacs(f.to_dimacs()).clauses == f.clauses);
  CHECK_THROWS_AS(Formula3Cnf::from_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
}

TEST_CASE("layouts are valid visibility drawings") {
  const IncidenceGraph single = build_incidence({1, {{pos(0)}}});
  const LayoutPlan p1 = layout(single);
  CHECK(p1.vertices.size() == 2);
  CHECK(p1.edges.size() == 1);
  CHECK(p1.edges[0].col_hi - p1.edges[0].col_lo >= 1);

  // A path x1 - c1 - x2.
  const IncidenceGraph path = build_incidence({2, {{pos(0), pos(1)}}});
  CHECK_NOTHROW(validate_layout(layout(path), path));

  const IncidenceGraph g = build_incidence(four_var_example());
  const LayoutPlan p = layout(g);
  CHECK_NOTHROW(validate_layout(p, g));
  CHECK(p.cols == 6);
  CHECK(p.rows <= 6);
  CHECK(p.clause_inputs[0].size() == 3);

  // Tampering is caught.
  LayoutPlan bad = p;
  bad.edges[0].row = bad.edges[1].row;
  CHECK_THROWS_AS(validate_layout(bad, g), ReductionError);

  CHECK_THROWS_AS(layout(g, 72), ReductionError);
}

TEST_CASE("non-planar incidence graphs are rejected with a witness") {
  // Three clauses over the same three variables: K3,3.
  const Formula3Cnf f{3, {{pos(0), pos(1), pos(2)}, {neg(0), pos(1), pos(2)}, {pos(0), neg(1), neg(2)}}};
  try {
    layout(build_incidence(f));
    FAIL("expected NonPlanarError");
  } catch (const NonPlanarError& e) {
    CHECK(e.witness().size() == 9);
  }
}

TEST_CASE("layouts of random planar formulas validate") {
  std::mt19937_64 rng(7);
  int planar = 0;
  for (int i = 0; i < 200; ++i) {
    const Formula3Cnf f = testing::random_formula(rng, 6, 5);
    const IncidenceGraph g = build_incidence(f);
    try {
      const LayoutPlan p = layout(g);
      CHECK_NOTHROW(validate_layout(p, g));
      ++planar;
    } catch (const NonPlanarError&) {
    }
  }
  CHECK(planar > 100);
}

TEST_CASE("a single positive clause reduces to a coverable region") {
  const ReductionArtifact a = reduce({1, {{pos(0)}}}, catalog());
  const std::optional<Covering> c = cover(a.region);
  REQUIRE(c.has_value());
  CHECK(decode_witness(a, *c) == std::vector<bool>{true});
}

TEST_CASE("a contradiction reduces to an uncoverable region") {
  const ReductionArtifact a = reduce({1, {{pos(0)}, {neg(0)}}}, catalog());
  CHECK(!cover(a.region).has_value());
}

TEST_CASE("a lone variable admits both values") {
  const ReductionArtifact a = reduce({1, {}}, catalog());
  const Encoding enc = encode(a.region);
  std::set<bool> seen;
  for (int phase = 0; phase < 2; ++phase) {
    const CnfInstance pinned = pin_partial_covering(
        enc.cnf, enc.map, square_covering(a.variable_squares[0], phase).tiles);
    const SolveResult res = solve(pinned);
    REQUIRE(res.status == SatStatus::Sat);
    seen.insert(decode_witness(a, decode_model(res.model, enc.map))[0]);
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("the four-variable example decodes to a model") {
  const Formula3Cnf f = four_var_example();
  const ReductionArtifact a = reduce(f, catalog());
  const std::optional<Covering> c = cover(a.region);
  REQUIRE(c.has_value());
  CHECK(f.evaluate(decode_witness(a, *c)));

  // A covering that misses a tile is rejected.
  Covering broken = *c;
  broken.tiles.pop_back();
  CHECK_THROWS_AS(decode_witness(a, broken), ReductionError);

  const std::string ports = port_map(a);
  CHECK(ports.find("var 4 ") != std::string::npos);
  CHECK(ports.find("clause 2 ") != std::string::npos);
}

TEST_CASE("two-variable corpus round-trips satisfiability") {
  int checked = 0;
  for (const Formula3Cnf& f : testing::formula_corpus(2, 2)) {
    const ReductionArtifact a = reduce(f, catalog());
    const bool sat = f.brute_force_model().has_value();
    const std::optional<Covering> c = cover(a.region);
    CHECK_MESSAGE(c.has_value() == sat, f.to_dimacs());
    if (c) CHECK(f.evaluate(decode_witness(a, *c)));
    ++checked;
  }
  CHECK(checked == 39);
}
