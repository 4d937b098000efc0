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
#include "tatami/region.hpp"

using namespace tatami;

TEST_CASE("parse_region basic shapes") {
  Region sq = Region::parse("##\n##");
  CHECK(sq.rows() == 2);
  CHECK(sq.cols() == 2);
  CHECK(sq.area() == 4);

  Region diag = Region::parse("#.\n.#");
  CHECK(diag.area() == 2);
  CHECK(diag.contains({0, 0}));
  CHECK(diag.contains({1, 1}));
  CHECK_FALSE(diag.contains({0, 1}));

  Region ring = Region::parse("###\n#.#\n###");
  CHECK(ring.area() == 8);
  CHECK_FALSE(ring.contains({1, 1}));
}

TEST_CASE("parse_region tightens the bounding box") {
  Region r = Region::parse("....\n.##.\n....\n");
  CHECK(r.rows() == 1);
  CHECK(r.cols() == 2);
  CHECK(r.is_canonical());
}

TEST_CASE("parse_region errors") {
  CHECK_THROWS_AS(Region::parse(""), ParseError);
  CHECK_THROWS_AS(Region::parse("\n\n"), ParseError);
  CHECK_THROWS_AS(Region::parse("..\n.."), ParseError);
  CHECK_THROWS_WITH_AS(Region::parse("##\n#"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(Region::parse("#x"), doctest::Contains("line 1"), ParseError);
}

TEST_CASE("serialize round trip") {
  for (const char* text : {"##\n##", "#.\n.#", "###\n#.#\n###", "#..#\n####"}) {
    Region r = Region::parse(text);
    CHECK(r.serialize() == text);
    CHECK(Region::parse(r.serialize()) == r);
  }
}

TEST_CASE("domino slots") {
  CHECK(domino_slots(Region::rectangle(1, 2)).size() == 1);
  CHECK(domino_slots(Region::rectangle(2, 2)).size() == 4);
  // The annulus has 8 adjacent pairs around its ring.
  CHECK(domino_slots(Region::parse("###\n#.#\n###")).size() == 8);

  auto s = domino_slots(Region::rectangle(2, 2));
  CHECK(s[0] == DominoSlot{{0, 0}, Orientation::Horizontal});
  CHECK(s[1] == DominoSlot{{0, 0}, Orientation::Vertical});
  CHECK(s[2] == DominoSlot{{0, 1}, Orientation::Vertical});
  CHECK(s[3] == DominoSlot{{1, 0}, Orientation::Horizontal});
}

TEST_CASE("rectangle closed forms") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      Region r = Region::rectangle(m, n);
      CHECK(domino_slots(r).size() == static_cast<std::size_t>(m * (n - 1) + (m - 1) * n));
      CHECK(tatami_points(r).size() == static_cast<std::size_t>((m - 1) * (n - 1)));
    }
  }
}

TEST_CASE("tatami points") {
  CHECK(tatami_points(Region::rectangle(2, 2)).size() == 1);
  CHECK(tatami_points(Region::rectangle(2, 3)).size() == 2);
  CHECK(tatami_points(Region::parse("###\n#.#\n###")).empty());
}

TEST_CASE("check_covering") {
  Region sq = Region::rectangle(2, 2);
  Covering two_h{{{TileKind::Horizontal, {0, 0}}, {TileKind::Horizontal, {1, 0}}}};
  CHECK(check_covering(sq, two_h).valid());

  // Four horizontal dominoes in a 4x4 brick-free stack: the point between
  // rows 0-1 and columns 1-2 sees four distinct tiles.
  Region r4 = Region::rectangle(4, 4);
  Covering stacked;
  for (int row = 0; row < 4; ++row) {
    stacked.tiles.push_back({TileKind::Horizontal, {row, 0}});
    stacked.tiles.push_back({TileKind::Horizontal, {row, 2}});
  }
  CoveringVerdict v = check_covering(r4, stacked);
  CHECK(v.kind == ViolationKind::FourTilesMeet);
  CHECK(v.witness == Cell{0, 1});

  Covering overlap{{{TileKind::Horizontal, {0, 0}}, {TileKind::Vertical, {0, 0}}}};
  CHECK(check_covering(sq, overlap).kind == ViolationKind::Overlap);

  Covering partial{{{TileKind::Horizontal, {0, 0}}}};
  CHECK(check_covering(sq, partial).kind == ViolationKind::Uncovered);

  Covering outside{{{TileKind::Horizontal, {0, 1}}}};
  CHECK(check_covering(sq, outside).kind == ViolationKind::OutsideRegion);

  Covering monos{{Tile::monomino({0, 0}), Tile::monomino({0, 1}),
                  {TileKind::Horizontal, {1, 0}}}};
  CHECK(check_covering(sq, monos).kind == ViolationKind::Monomino);
  CHECK(check_covering(sq, monos, true).valid());
}

TEST_CASE("covering text format") {
  Covering c = Covering::parse("H 0 0\n# comment\nV 1 2\nM 3 4\n");
  REQUIRE(c.tiles.size() == 3);
  CHECK(c.tiles[2].kind == TileKind::Monomino);
  CHECK(Covering::parse(c.serialize()) == c);
  CHECK_THROWS_WITH_AS(Covering::parse("H 0 0\nQ 1 1\n"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_AS(Covering::parse("H 0\n"), ParseError);
}

TEST_CASE("transpose") {
  Region r = Region::parse("##.\n###");
  Region t = transpose(r);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(transpose(t) == r);
  Covering c{{{TileKind::Horizontal, {0, 0}}}};
  CHECK(transpose(c).tiles[0].kind == TileKind::Vertical);
}
