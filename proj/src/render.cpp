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

#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tatami {

namespace {

// Tile index per cell of the box, -1 where no tile lies.
std::vector<int> owners(const Region& r, const Covering& c) {
  std::vector<int> own(static_cast<std::size_t>(r.rows()) * static_cast<std::size_t>(r.cols()), -1);
  for (std::size_t i = 0; i < c.tiles.size(); ++i) {
    for (const Cell& x : c.tiles[i].cells()) {
      if (!r.in_box(x)) throw std::invalid_argument("tile outside the region's box");
      own[static_cast<std::size_t>(x.row) * static_cast<std::size_t>(r.cols()) +
          static_cast<std::size_t>(x.col)] = static_cast<int>(i);
    }
  }
  return own;
}

std::string ascii(const Region& r, const Covering* c) {
  std::vector<std::string> rows(static_cast<std::size_t>(r.rows()),
                                std::string(static_cast<std::size_t>(r.cols()), '.'));
  for (const Cell& x : r.cells()) rows[static_cast<std::size_t>(x.row)][static_cast<std::size_t>(x.col)] = '#';
  if (c != nullptr) {
    for (const Tile& t : c->tiles) {
      const std::vector<Cell> cells = t.cells();
      for (const Cell& x : cells) {
        if (!r.in_box(x)) throw std::invalid_argument("tile outside the region's box");
      }
      auto put = [&](const Cell& x, char ch) {
        rows[static_cast<std::size_t>(x.row)][static_cast<std::size_t>(x.col)] = ch;
      };
      switch (t.kind) {
        case TileKind::Horizontal: put(cells[0], '<'); put(cells[1], '>'); break;
        case TileKind::Vertical: put(cells[0], '^'); put(cells[1], 'v'); break;
        case TileKind::Monomino: put(cells[0], 'o'); break;
      }
    }
  }
  std::string out;
  for (const std::string& row : rows) out += row + "\n";
  return out;
}

std::string svg(const Region& r, const Covering* c, const RenderStyle& st) {
  const int s = st.cell_size;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.cols() * s << "\" height=\""
     << r.rows() * s << "\" viewBox=\"0 0 " << r.cols() * s << ' ' << r.rows() * s << "\">\n";
  os << "<g class=\"region\" fill=\"" << st.region_fill << "\" stroke=\"none\">\n";
  for (const Cell& x : r.cells()) {
    os << "<rect x=\"" << x.col * s << "\" y=\"" << x.row * s << "\" width=\"" << s
       << "\" height=\"" << s << "\"/>\n";
  }
  os << "</g>\n";
  if (c != nullptr) {
    const std::vector<int> own = owners(r, *c);
    os << "<g class=\"tiles\" stroke=\"" << st.outline << "\" stroke-width=\"" << std::max(1, s / 8)
       << "\">\n";
    for (const Tile& t : c->tiles) {
      const bool h = t.kind == TileKind::Horizontal, v = t.kind == TileKind::Vertical;
      const char* kind = h ? "H" : v ? "V" : "M";
      const std::string& fill = h ? st.horizontal_fill : v ? st.vertical_fill : st.monomino_fill;
      os << "<rect class=\"" << kind << "\" x=\"" << t.anchor.col * s << "\" y=\""
         << t.anchor.row * s << "\" width=\"" << (h ? 2 : 1) * s << "\" height=\""
         << (v ? 2 : 1) * s << "\" fill=\"" << fill << "\"/>\n";
    }
    os << "</g>\n";
    if (st.tatami_points) {
      os << "<g class=\"points\" stroke=\"none\">\n";
      for (int i = 0; i + 1 < r.rows(); ++i) {
        for (int j = 0; j + 1 < r.cols(); ++j) {
          std::set<int> tiles;
          bool full = true;
          for (const Cell& x : {Cell{i, j}, Cell{i, j + 1}, Cell{i + 1, j}, Cell{i + 1, j + 1}}) {
            const int o = own[static_cast<std::size_t>(x.row) * static_cast<std::size_t>(r.cols()) +
                              static_cast<std::size_t>(x.col)];
            full &= o >= 0;
            tiles.insert(o);
          }
          if (!full || tiles.size() < 3) continue;
          os << "<circle cx=\"" << (j + 1) * s << "\" cy=\"" << (i + 1) * s << "\" r=\""
             << std::max(1, s / 6) << "\" fill=\"" << (tiles.size() == 4 ? "#d00000" : "#202020")
             << "\"/>\n";
        }
      }
      os << "</g>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const Region& r, const Covering* c, const RenderStyle& style) {
  if (style.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  return style.format == RenderFormat::Ascii ? ascii(r, c) : svg(r, c, style);
}

}  // namespace tatami
