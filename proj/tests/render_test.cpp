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

#include "tatami/render.hpp"

#include <regex>
#include <stack>

#include "doctest.h"
#include "tatami/gadget.hpp"

using namespace tatami;

namespace {

// Minimal well-formedness check: balanced tags and quoted attributes.
bool well_formed(const std::string& xml, int* rects) {
  std::stack<std::string> open;
  const std::regex tag(R"(<(/?)([a-zA-Z?][\w:-]*)((?:\s+[\w:-]+="[^"<>]*")*)\s*(/?|\?)>)");
  std::size_t pos = 0;
  *rects = 0;
  for (auto it = std::sregex_iterator(xml.begin(), xml.end(), tag); it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    if (xml.substr(pos, static_cast<std::size_t>(m.position()) - pos).find_first_of("<>") != std::string::npos) {
      return false;
    }
    pos = static_cast<std::size_t>(m.position() + m.length());
    const std::string name = m[2];
    if (name[0] == '?') continue;
    if (name == "rect") ++*rects;
    if (m[1] == "/") {
      if (open.empty() || open.top() != name) return false;
      open.pop();
    } else if (m[4] != "/") {
      open.push(name);
    }
  }
  return open.empty() && xml.substr(pos).find_first_of("<>") == std::string::npos;
}

}  // namespace

TEST_CASE("ascii render marks tiles") {
  const Region r = Region::rectangle(2, 3);
  const Covering c = Covering::parse("H 0 0\nH 1 0\nV 0 2\n");
  CHECK(render(r, &c, {}) == "<>^\n<>v\n");
  CHECK(render(Region::parse("#.\n##"), nullptr, {}) == "#.\n##\n");
}

TEST_CASE("svg render is well formed with one rect per tile") {
  const Covering c = square_covering({0, 0}, 0);
  RenderStyle st;
  st.format = RenderFormat::Svg;
  st.tatami_points = true;
  const std::string svg = render(Region::rectangle(8, 8), &c, st);
  int rects = 0;
  CHECK(well_formed(svg, &rects));
  CHECK(rects == 64 + 32);  // region cells plus tiles
  CHECK(svg.find("<circle") != std::string::npos);

  st.cell_size = 0;
  CHECK_THROWS_AS(render(Region::rectangle(8, 8), &c, st), std::invalid_argument);
}
