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

#include "doctest.h"
#include "gadget_oracle.hpp"
#include "tatami/synth.hpp"

using namespace tatami;

namespace {

std::vector<TruthRow> terminator_table() { return {{{false}, false}, {{true}, true}}; }

GadgetSearchSpec terminator_spec() {
  GadgetSearchSpec s = port_search_spec("term", 8, 16, {{{0, 0}}},
                                        {{"in", 0, Side::E, 2, false}}, terminator_table());
  return s;
}

}  // namespace

TEST_CASE("port search spec partitions the box") {
  const GadgetSearchSpec s = terminator_spec();
  CHECK(s.cells_of(CellClass::Interface).size() == 64);
  // Column 8 beside the square: rows 2..5 are the band, the rest excluded.
  for (int r = 0; r < 8; ++r) {
    CHECK((s.at({r, 8}) == CellClass::Optional) == (r >= 2 && r <= 5));
  }
  CHECK(s.good.size() == 1);
  CHECK(s.bad.size() == 1);
  CHECK(s.good[0].label == "T");
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("search spec text round-trips") {
  const GadgetSearchSpec s = terminator_spec();
  const std::string text = serialize_search_spec(s);
  const GadgetSearchSpec t = parse_search_spec(text);
  CHECK(serialize_search_spec(t) == text);
  CHECK(t.good.size() == 1);
  CHECK(t.bad[0].tiles == s.bad[0].tiles);

  // Explicit covering lists instead of a table.
  GadgetSearchSpec e = s;
  e.table.clear();
  const GadgetSearchSpec f = parse_search_spec(serialize_search_spec(e));
  CHECK(f.good[0].tiles == s.good[0].tiles);
  CHECK(f.bad[0].label == "F");
}

TEST_CASE("contradictory search spec is rejected") {
  GadgetSearchSpec s = terminator_spec();
  s.bad.push_back(s.good[0]);
  CHECK_THROWS_AS(validate(s), SearchSpecError);
  GadgetSearchSpec t = terminator_spec();
  t.good[0].tiles.push_back({TileKind::Horizontal, {3, 9}});
  CHECK_THROWS_AS(validate(t), SearchSpecError);
}

TEST_CASE("check_candidate names what a region gets wrong") {
  const GadgetSearchSpec s = terminator_spec();
  // Nothing attached: the lone square is coverable either way.
  CandidateVerdict empty = check_candidate(Region(8, 16), s);
  CHECK(!empty.clean);
  CHECK(empty.admitted_bad == std::vector<std::string>{"F"});
  CHECK(empty.rejected_good.empty());
  // A single cell stub can never be covered.
  Region stub(8, 16);
  stub.set({3, 8});
  CandidateVerdict v = check_candidate(stub, s);
  CHECK(v.rejected_good == std::vector<std::string>{"T"});
  CHECK(v.admitted_bad.empty());
}

TEST_CASE("loop search finds a terminator and the result verifies") {
  const GadgetSearchSpec s = terminator_spec();
  const SearchOutcome out = search(s);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.forbidden + 1 == out.iterations);
  CHECK(check_candidate(out.region, s).clean);
  const GadgetSpec g = outcome_gadget(s, out);
  const GadgetVerdict v = verify_terminator(g);
  CHECK_MESSAGE(v.pass, v.message);
  // Independent reading by exhaustive enumeration.
  CHECK(testing::realised_tuples(g) == std::set<std::vector<bool>>{{true}});

  // Restart with the found cells kept: one outer iteration.
  GadgetSearchSpec again = s;
  for (const Cell& c : out.region.cells()) again.set(c, CellClass::Kept);
  const SearchOutcome second = search(again);
  CHECK(second.status == SearchStatus::Found);
  CHECK(second.iterations == 1);
}

TEST_CASE("forcing search finds a terminator") {
  GadgetSearchSpec s = terminator_spec();
  s.mode = SearchMode::Forcing;
  s.forcing_rounds = 12;
  const SearchOutcome out = search(s);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(verify_terminator(outcome_gadget(s, out)).pass);
}

TEST_CASE("an impossible search is exhausted") {
  // Interface square with every side excluded: the F covering always extends.
  GadgetSearchSpec s = terminator_spec();
  for (const Cell& c : s.cells_of(CellClass::Optional)) s.set(c, CellClass::Excluded);
  const SearchOutcome out = search(s);
  CHECK(out.status == SearchStatus::Exhausted);
  CHECK(out.forbidden == 1);
}

TEST_CASE("the shipped AND region passes its own search spec") {
  const GadgetCatalog cat = GadgetCatalog::load_directory(TATAMI_SOURCE_DIR "/data/gadgets");
  const GadgetSpec& g = cat.get("and");
  const GadgetSearchSpec s =
      port_search_spec(g.name, g.rows, g.cols, g.squares, g.ports, g.table);
  const CandidateVerdict v = check_candidate(g.connector, s);
  CHECK(v.clean);
  CHECK(v.admitted_bad.empty());
  CHECK(v.rejected_good.empty());
}
