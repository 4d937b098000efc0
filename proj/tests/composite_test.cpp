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

#include <set>

#include "composites.hpp"
#include "doctest.h"
#include "gadget_oracle.hpp"
#include "tatami/gadget.hpp"

using namespace tatami;

namespace {

const GadgetCatalog& catalog() {
  static const GadgetCatalog c = GadgetCatalog::load_directory(TATAMI_SOURCE_DIR "/data/gadgets");
  return c;
}

std::set<std::vector<bool>> expected_tuples(const GadgetSpec& g) {
  std::set<std::vector<bool>> out;
  for (const TruthRow& r : g.table) {
    if (r.coverable) out.insert(r.values);
  }
  return out;
}

}  // namespace

TEST_CASE("catalog holds the reduction's primitives") {
  for (const char* name : {"wire_h", "wire_v", "not_h", "turn_e", "turn_w", "and", "term"}) {
    CHECK_MESSAGE(catalog().contains(name), name);
  }
}

TEST_CASE("turns and terminator agree with exhaustive enumeration") {
  for (const char* name : {"turn_e", "turn_w", "term", "wire_v"}) {
    const GadgetSpec& g = catalog().get(name);
    CHECK_MESSAGE(testing::realised_tuples(g) == expected_tuples(g), name);
  }
}

TEST_CASE("turns invert the square covering") {
  const GadgetSpec& g = catalog().get("turn_e");
  // Equal labels on an E band and an N band mean opposite phases.
  CHECK(phase_for(Side::E, 2, true) != phase_for(Side::N, 2, true));
  CHECK(g.row_for({true, true})->coverable);
}

TEST_CASE("branch carries one value to all four sides") {
  const GadgetSpec b = testing::branch_gadget(catalog());
  const GadgetVerdict v = verify_gadget(b);
  CHECK_MESSAGE(v.pass, v.message);
  CHECK(v.tuples.size() == 16);
}

TEST_CASE("one-input clause is its terminator") {
  const GadgetSpec c = testing::clause_gadget(catalog(), 1);
  const GadgetVerdict v = verify_gadget(c);
  CHECK_MESSAGE(v.pass, v.message);
}

TEST_CASE("and gate agrees with exhaustive enumeration") {
  const GadgetSpec& g = catalog().get("and");
  CHECK(testing::realised_tuples(g) == expected_tuples(g));
}

TEST_CASE("two- and three-input clauses reject only all-false inputs") {
  for (int k : {2, 3}) {
    const GadgetSpec c = testing::clause_gadget(catalog(), k);
    const GadgetVerdict v = verify_gadget(c);
    CHECK_MESSAGE(v.pass, v.message);
    int rejected = 0;
    for (const TruthRow& r : c.table) rejected += r.coverable ? 0 : 1;
    CHECK(rejected == 1);
  }
}
