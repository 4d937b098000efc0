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

// Text and SVG pictures of regions and coverings.

#ifndef TATAMI_RENDER_HPP_
#define TATAMI_RENDER_HPP_

#include <cstdint>
#include <string>

#include "tatami/region.hpp"

namespace tatami {

enum class RenderFormat : std::uint8_t { Ascii, Svg };

struct RenderStyle {
  RenderFormat format = RenderFormat::Ascii;
  int cell_size = 12;  // SVG pixels per cell
  std::string outline = "#202020";
  std::string region_fill = "#e6e6e6";
  std::string horizontal_fill = "#f2d398";
  std::string vertical_fill = "#9cc3e6";
  std::string monomino_fill = "#e89a9a";
  // Marks lattice points where three tiles meet (and, in red, four).
  bool tatami_points = false;
};

// ASCII: '.' outside, '#' uncovered member, "<>" horizontal domino, '^'/'v'
// vertical domino, 'o' monomino. SVG: one <rect> per member cell in the
// "region" group and one <rect> per tile in the "tiles" group.
// Throws std::invalid_argument for a non-positive cell size or a tile
// outside the region's box.
std::string render(const Region& r, const Covering* c, const RenderStyle& style);

}  // namespace tatami

#endif  // TATAMI_RENDER_HPP_
