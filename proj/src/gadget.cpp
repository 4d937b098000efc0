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

#include "tatami/gadget.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "tatami/encoder.hpp"
#include "tatami/oracle.hpp"

namespace tatami {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Cell add(Cell a, Cell b) { return {a.row + b.row, a.col + b.col}; }

constexpr std::array<Cell, 4> kSteps{{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}};

bool in_square(Cell anchor, Cell x) {
  return x.row >= anchor.row && x.row < anchor.row + kSquareSize &&
         x.col >= anchor.col && x.col < anchor.col + kSquareSize;
}

// Outside neighbours of the four corner cells.
std::array<Cell, 8> corner_neighbours(Cell a) {
  const int r = a.row, c = a.col, e = kSquareSize;
  return {{{r - 1, c}, {r, c - 1}, {r - 1, c + e - 1}, {r, c + e},
           {r + e, c}, {r + e - 1, c - 1}, {r + e, c + e - 1},
           {r + e - 1, c + e}}};
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string lerr(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line + 1) + ": " + what;
}

}  // namespace

char to_char(Side s) {
  switch (s) {
    case Side::N: return 'N';
    case Side::E: return 'E';
    case Side::S: return 'S';
    case Side::W: return 'W';
  }
  return '?';
}

Side parse_side(char c) {
  switch (c) {
    case 'N': return Side::N;
    case 'E': return Side::E;
    case 'S': return Side::S;
    case 'W': return Side::W;
    default: throw ParseError(std::string("unknown side '") + c + "'");
  }
}

const std::array<Covering, 2>& square_coverings() {
  static const std::array<Covering, 2> cached =
      two_coverings_of_square(Region::rectangle(kSquareSize, kSquareSize));
  return cached;
}

Covering square_covering(Cell anchor, int phase) {
  if (phase != 0 && phase != 1) throw std::invalid_argument("phase must be 0 or 1");
  return translate(square_coverings()[static_cast<std::size_t>(phase)], anchor);
}

std::array<Cell, 4> band_cells(Side side, int offset) {
  if (offset < 0 || offset + 4 > kSquareSize) {
    throw std::invalid_argument("band offset out of range: " + std::to_string(offset));
  }
  std::array<Cell, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const int k = offset + i;
    switch (side) {
      case Side::N: out[static_cast<std::size_t>(i)] = {0, k}; break;
      case Side::S: out[static_cast<std::size_t>(i)] = {kSquareSize - 1, k}; break;
      case Side::W: out[static_cast<std::size_t>(i)] = {k, 0}; break;
      case Side::E: out[static_cast<std::size_t>(i)] = {k, kSquareSize - 1}; break;
    }
  }
  return out;
}

std::vector<Tile> band_tiles(int phase, Side side, int offset) {
  const auto cells = band_cells(side, offset);
  std::vector<Tile> out;
  for (const Tile& t : square_coverings().at(static_cast<std::size_t>(phase)).tiles) {
    for (const Cell& x : t.cells()) {
      if (std::find(cells.begin(), cells.end(), x) != cells.end()) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

bool interface_value(int phase, Side side, int offset) {
  const std::size_t mine = band_tiles(phase, side, offset).size();
  const std::size_t other = band_tiles(1 - phase, side, offset).size();
  if (mine == 3 && other == 2) return true;
  if (mine == 2 && other == 3) return false;
  throw GadgetError(std::string("band ") + to_char(side) + std::to_string(offset) +
                    " does not separate the two phases");
}

int phase_for(Side side, int offset, bool value) {
  return interface_value(0, side, offset) == value ? 0 : 1;
}

InterfaceConfig interface_config(Side side, int offset, bool value) {
  InterfaceConfig cfg;
  cfg.side = side;
  cfg.offset = offset;
  cfg.value = value;
  cfg.tiles = band_tiles(phase_for(side, offset, value), side, offset);
  return cfg;
}

// ---- GadgetSpec ------------------------------------------------------------

Region GadgetSpec::full_region() const {
  Region r = connector;
  for (const SignalSquare& s : squares) {
    for (int i = 0; i < kSquareSize; ++i) {
      for (int j = 0; j < kSquareSize; ++j) r.set({s.anchor.row + i, s.anchor.col + j});
    }
  }
  return r;
}

const TruthRow* GadgetSpec::row_for(const std::vector<bool>& values) const {
  for (const TruthRow& row : table) {
    if (row.values == values) return &row;
  }
  return nullptr;
}

void validate(const GadgetSpec& g) {
  const std::string who = "gadget '" + g.name + "': ";
  if (g.name.empty()) throw GadgetError("gadget has no name");
  if (g.connector.rows() != g.rows || g.connector.cols() != g.cols) {
    throw GadgetError(who + "connector grid does not match the box");
  }
  if (g.squares.empty()) throw GadgetError(who + "no signal squares");
  std::set<Cell> anchors;
  for (const SignalSquare& s : g.squares) {
    const Cell a = s.anchor;
    if (a.row % kSquarePitch != 0 || a.col % kSquarePitch != 0 || a.row < 0 || a.col < 0) {
      throw GadgetError(who + "square " + cell_str(a) + " is off the pitch grid");
    }
    if (a.row + kSquareSize > g.rows || a.col + kSquareSize > g.cols) {
      throw GadgetError(who + "square " + cell_str(a) + " leaves the box");
    }
    if (!anchors.insert(a).second) {
      throw GadgetError(who + "square " + cell_str(a) + " listed twice");
    }
    for (int i = 0; i < kSquareSize; ++i) {
      for (int j = 0; j < kSquareSize; ++j) {
        if (g.connector.contains({a.row + i, a.col + j})) {
          throw GadgetError(who + "connector overlaps square " + cell_str(a));
        }
      }
    }
    for (const Cell& x : corner_neighbours(a)) {
      if (g.connector.contains(x)) {
        throw GadgetError(who + "corner of square " + cell_str(a) + " is not isolated");
      }
    }
  }

  std::set<int> port_squares;
  std::set<std::string> port_names;
  for (const Port& p : g.ports) {
    if (p.square < 0 || p.square >= static_cast<int>(g.squares.size())) {
      throw GadgetError(who + "port '" + p.name + "' names a missing square");
    }
    if (!port_squares.insert(p.square).second) {
      throw GadgetError(who + "two ports on one square");
    }
    if (!port_names.insert(p.name).second) {
      throw GadgetError(who + "duplicate port name '" + p.name + "'");
    }
    if (p.offset < 0 || p.offset + 4 > kSquareSize) {
      throw GadgetError(who + "port '" + p.name + "' band offset out of range");
    }
    (void)interface_value(0, p.side, p.offset);  // throws for a blind band
  }

  const std::size_t n = g.ports.size();
  if (n > 16) throw GadgetError(who + "too many ports");
  if (g.table.size() != (std::size_t{1} << n)) {
    throw GadgetError(who + "truth table must list all " +
                      std::to_string(std::size_t{1} << n) + " tuples");
  }
  std::set<std::vector<bool>> seen;
  for (const TruthRow& row : g.table) {
    if (row.values.size() != n) throw GadgetError(who + "truth row of wrong width");
    if (!seen.insert(row.values).second) {
      throw GadgetError(who + "tuple " + tuple_label(g, row.values) + " listed twice");
    }
  }
}

std::string tuple_label(const GadgetSpec& g, const std::vector<bool>& values) {
  std::string ins, outs;
  for (std::size_t i = 0; i < g.ports.size() && i < values.size(); ++i) {
    (g.ports[i].output ? outs : ins).push_back(values[i] ? 'T' : 'F');
  }
  if (ins.empty()) return outs;
  if (outs.empty()) return ins;
  return ins + "->" + outs;
}

namespace {

std::vector<bool> parse_label(const GadgetSpec& g, const std::string& label,
                              std::size_t line) {
  std::string ins, outs;
  const auto arrow = label.find("->");
  std::size_t n_in = 0;
  for (const Port& p : g.ports) n_in += p.output ? 0 : 1;
  const std::size_t n_out = g.ports.size() - n_in;
  if (arrow != std::string::npos) {
    ins = label.substr(0, arrow);
    outs = label.substr(arrow + 2);
  } else if (n_in == 0) {
    outs = label;
  } else {
    ins = label;
  }
  if (ins.size() != n_in || outs.size() != n_out) {
    throw ParseError(lerr(line, "tuple '" + label + "' does not match the ports"));
  }
  std::vector<bool> values(g.ports.size());
  std::size_t ii = 0, oi = 0;
  for (std::size_t k = 0; k < g.ports.size(); ++k) {
    const char ch = g.ports[k].output ? outs[oi++] : ins[ii++];
    if (ch != 'T' && ch != 'F') {
      throw ParseError(lerr(line, std::string("bad value '") + ch + "'"));
    }
    values[k] = ch == 'T';
  }
  return values;
}

}  // namespace

GadgetSpec parse_gadget(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);
  GadgetSpec g;
  bool have_box = false, ended = false;
  std::size_t i = 0;
  auto blank = [](const std::string& s) {
    const auto f = s.find_first_not_of(" \t");
    return f == std::string::npos || s[f] == ';';
  };
  for (; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    std::istringstream ls(lines[i]);
    std::string key;
    ls >> key;
    if (key == "gadget") {
      if (!(ls >> g.name)) throw ParseError(lerr(i, "gadget needs a name"));
    } else if (key == "box") {
      if (!(ls >> g.rows >> g.cols) || g.rows <= 0 || g.cols <= 0 || g.rows > 4096 ||
          g.cols > 4096) {
        throw ParseError(lerr(i, "box needs two positive sizes"));
      }
      have_box = true;
    } else if (key == "square") {
      SignalSquare s;
      if (!(ls >> s.anchor.row >> s.anchor.col)) {
        throw ParseError(lerr(i, "square needs row and column"));
      }
      g.squares.push_back(s);
    } else if (key == "port") {
      Port p;
      std::string side, dir;
      if (!(ls >> p.name >> p.square >> side >> p.offset >> dir) || side.size() != 1 ||
          (dir != "in" && dir != "out")) {
        throw ParseError(lerr(i, "expected 'port <name> <square> <N|E|S|W> <offset> <in|out>'"));
      }
      p.side = parse_side(side[0]);
      p.output = dir == "out";
      g.ports.push_back(p);
    } else if (key == "grid") {
      if (!have_box) throw ParseError(lerr(i, "grid before box"));
      g.connector = Region(g.rows, g.cols);
      for (int r = 0; r < g.rows; ++r) {
        ++i;
        if (i >= lines.size()) throw ParseError(lerr(i, "grid truncated"));
        const std::string& row = lines[i];
        if (static_cast<int>(row.size()) != g.cols) {
          throw ParseError(lerr(i, "grid row has " + std::to_string(row.size()) +
                                       " columns, expected " + std::to_string(g.cols)));
        }
        for (int c = 0; c < g.cols; ++c) {
          const char ch = row[static_cast<std::size_t>(c)];
          if (ch == '#') {
            g.connector.set({r, c});
          } else if (ch != '.' && ch != 'o') {
            throw ParseError(lerr(i, std::string("unexpected character '") + ch + "'"));
          }
        }
      }
    } else if (key == "table") {
      for (++i; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::istringstream ts(lines[i]);
        std::string label, verdict, extra;
        ts >> label;
        if (label == "end") break;
        if (!(ts >> verdict) || (verdict != "SAT" && verdict != "UNSAT") || (ts >> extra)) {
          throw ParseError(lerr(i, "expected '<tuple> <SAT|UNSAT>'"));
        }
        g.table.push_back({parse_label(g, label, i), verdict == "SAT"});
      }
      ended = i < lines.size();
      break;
    } else {
      throw ParseError(lerr(i, "unknown directive '" + key + "'"));
    }
  }
  if (!ended) throw ParseError("gadget file is missing 'table' ... 'end'");
  if (g.connector.rows() != g.rows) throw ParseError("gadget file has no grid");

  // The 'o' marks must agree with the declared squares.
  std::set<Cell> marked, declared;
  for (std::size_t k = 0, r = 0; k < lines.size(); ++k) {
    if (lines[k].rfind("grid", 0) != 0) continue;
    for (r = 0; r < static_cast<std::size_t>(g.rows); ++r) {
      const std::string& row = lines[k + 1 + r];
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 'o') marked.insert({static_cast<int>(r), static_cast<int>(c)});
      }
    }
    break;
  }
  for (const SignalSquare& s : g.squares) {
    for (int a = 0; a < kSquareSize; ++a) {
      for (int b = 0; b < kSquareSize; ++b) declared.insert({s.anchor.row + a, s.anchor.col + b});
    }
  }
  if (marked != declared) throw ParseError("'o' cells do not match the declared squares");

  try {
    validate(g);
  } catch (const GadgetError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string serialize_gadget(const GadgetSpec& g) {
  std::ostringstream os;
  os << "gadget " << g.name << "\n";
  os << "box " << g.rows << ' ' << g.cols << "\n";
  for (const SignalSquare& s : g.squares) {
    os << "square " << s.anchor.row << ' ' << s.anchor.col << "\n";
  }
  for (const Port& p : g.ports) {
    os << "port " << p.name << ' ' << p.square << ' ' << to_char(p.side) << ' ' << p.offset
       << ' ' << (p.output ? "out" : "in") << "\n";
  }
  os << "grid\n";
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      char ch = g.connector.contains({r, c}) ? '#' : '.';
      for (const SignalSquare& s : g.squares) {
        if (in_square(s.anchor, {r, c})) ch = 'o';
      }
      os << ch;
    }
    os << "\n";
  }
  os << "table\n";
  std::vector<TruthRow> rows = g.table;
  // Canonical order: binary count with T = 1, first port most significant.
  std::sort(rows.begin(), rows.end(), [](const TruthRow& a, const TruthRow& b) {
    return a.values < b.values;
  });
  for (const TruthRow& row : rows) {
    os << tuple_label(g, row.values) << ' ' << (row.coverable ? "SAT" : "UNSAT") << "\n";
  }
  os << "end\n";
  return os.str();
}

// ---- verification ------------------------------------------------------------

bool TupleReport::ok() const {
  if (status == SatStatus::Timeout) return false;
  return (status == SatStatus::Sat) == expected;
}

GadgetVerdict verify_gadget(const GadgetSpec& g, const SolverConfig& cfg) {
  validate(g);
  GadgetVerdict v;
  const Encoding enc = encode(g.full_region());
  for (const TruthRow& row : g.table) {
    std::vector<Tile> tiles;
    for (std::size_t k = 0; k < g.ports.size(); ++k) {
      const Port& p = g.ports[k];
      const int phase = phase_for(p.side, p.offset, row.values[k]);
      const Covering sq =
          square_covering(g.squares[static_cast<std::size_t>(p.square)].anchor, phase);
      tiles.insert(tiles.end(), sq.tiles.begin(), sq.tiles.end());
    }
    const CnfInstance pinned = pin_partial_covering(enc.cnf, enc.map, tiles);
    TupleReport rep;
    rep.values = row.values;
    rep.expected = row.coverable;
    rep.status = solve(pinned, cfg).status;
    if (!rep.ok() && v.message.empty()) {
      v.message = "gadget '" + g.name + "' tuple " + tuple_label(g, row.values) +
                  ": expected " + (row.coverable ? "SAT" : "UNSAT") + ", got " +
                  to_string(rep.status);
    }
    v.tuples.push_back(std::move(rep));
  }
  v.pass = v.message.empty();
  return v;
}

GadgetVerdict verify_terminator(const GadgetSpec& g, const SolverConfig& cfg) {
  if (g.ports.size() != 1) throw GadgetError("terminator must have exactly one port");
  const TruthRow* t = g.row_for({true});
  const TruthRow* f = g.row_for({false});
  if (!t || !f || !t->coverable || f->coverable) {
    throw GadgetError("terminator table must accept exactly T");
  }
  return verify_gadget(g, cfg);
}

// ---- composition ---------------------------------------------------------------

std::optional<int> square_phase(const Covering& c, Cell anchor) {
  std::set<Tile> have(c.tiles.begin(), c.tiles.end());
  for (int phase = 0; phase < 2; ++phase) {
    const Covering sq = square_covering(anchor, phase);
    if (std::all_of(sq.tiles.begin(), sq.tiles.end(),
                    [&](const Tile& t) { return have.count(t) > 0; })) {
      return phase;
    }
  }
  return std::nullopt;
}

Composition compose(const std::vector<Placement>& placements,
                    const std::vector<Cell>& extra_squares) {
  Composition comp;
  std::set<Cell> squares(extra_squares.begin(), extra_squares.end());
  std::vector<std::set<Cell>> own_squares(placements.size());
  int rows = 0, cols = 0;
  auto name_of = [&](std::size_t i) {
    const Placement& p = placements[i];
    return p.label.empty() ? p.gadget->name + "#" + std::to_string(i) : p.label;
  };
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const Placement& p = placements[i];
    if (!p.gadget) throw GadgetError("placement without a gadget");
    if (p.offset.row % kSquarePitch != 0 || p.offset.col % kSquarePitch != 0 ||
        p.offset.row < 0 || p.offset.col < 0) {
      throw GadgetError(name_of(i) + ": offset " + cell_str(p.offset) +
                        " is not a non-negative multiple of the pitch");
    }
    rows = std::max(rows, p.offset.row + p.gadget->rows);
    cols = std::max(cols, p.offset.col + p.gadget->cols);
    for (const SignalSquare& s : p.gadget->squares) {
      const Cell a = add(s.anchor, p.offset);
      squares.insert(a);
      own_squares[i].insert(a);
    }
  }
  for (const Cell& a : squares) {
    if (a.row % kSquarePitch != 0 || a.col % kSquarePitch != 0 || a.row < 0 || a.col < 0) {
      throw GadgetError("square " + cell_str(a) + " is off the pitch grid");
    }
    rows = std::max(rows, a.row + kSquareSize);
    cols = std::max(cols, a.col + kSquareSize);
  }

  // Square cell -> anchor.
  auto square_at = [&](Cell x) -> std::optional<Cell> {
    if (x.row < 0 || x.col < 0) return std::nullopt;
    const Cell a{x.row - x.row % kSquarePitch, x.col - x.col % kSquarePitch};
    if (squares.count(a) && in_square(a, x)) return a;
    return std::nullopt;
  };

  for (std::size_t i = 0; i < placements.size(); ++i) {
    for (const Cell& local : placements[i].gadget->connector.cells()) {
      const Cell x = add(local, placements[i].offset);
      if (square_at(x)) {
        throw GadgetError(name_of(i) + " overlaps square at " + cell_str(*square_at(x)));
      }
      auto [it, fresh] = comp.owner.emplace(x, i);
      if (!fresh) {
        throw GadgetError(name_of(i) + " overlaps " + name_of(it->second) + " at " +
                          cell_str(x));
      }
    }
  }
  for (const auto& [x, i] : comp.owner) {
    for (const Cell& d : kSteps) {
      const Cell y = add(x, d);
      auto it = comp.owner.find(y);
      if (it != comp.owner.end() && it->second != i) {
        throw GadgetError(name_of(i) + " touches " + name_of(it->second) + " at " +
                          cell_str(x));
      }
      if (auto a = square_at(y); a && !own_squares[i].count(*a)) {
        throw GadgetError(name_of(i) + " touches foreign square " + cell_str(*a));
      }
    }
  }

  comp.region = Region(rows, cols);
  for (const Cell& a : squares) {
    for (int r = 0; r < kSquareSize; ++r) {
      for (int c = 0; c < kSquareSize; ++c) comp.region.set({a.row + r, a.col + c});
    }
  }
  for (const auto& [x, i] : comp.owner) comp.region.set(x);
  for (const Cell& a : squares) {
    for (const Cell& x : corner_neighbours(a)) {
      if (comp.region.contains(x)) {
        throw GadgetError("corner of square " + cell_str(a) + " is not isolated");
      }
    }
  }
  comp.squares.assign(squares.begin(), squares.end());
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const GadgetSpec& g = *placements[i].gadget;
    for (const Port& p : g.ports) {
      comp.ports.push_back({i, p.name,
                            add(g.squares[static_cast<std::size_t>(p.square)].anchor,
                                placements[i].offset),
                            p.side, p.offset});
    }
  }
  return comp;
}

GadgetSpec spec_from_composition(
    const std::string& name, const Composition& comp,
    const std::vector<std::pair<std::size_t, bool>>& port_bindings,
    const std::function<bool(const std::vector<bool>&)>& relation) {
  GadgetSpec g;
  g.name = name;
  g.rows = comp.region.rows();
  g.cols = comp.region.cols();
  g.connector = Region(g.rows, g.cols);
  for (const auto& [x, i] : comp.owner) g.connector.set(x);
  for (const Cell& a : comp.squares) g.squares.push_back({a});
  for (std::size_t k = 0; k < port_bindings.size(); ++k) {
    const PortBinding& b = comp.ports.at(port_bindings[k].first);
    Port p;
    p.name = b.port + std::to_string(k);
    p.square = static_cast<int>(
        std::find(comp.squares.begin(), comp.squares.end(), b.square) - comp.squares.begin());
    p.side = b.side;
    p.offset = b.offset;
    p.output = port_bindings[k].second;
    g.ports.push_back(p);
  }
  const std::size_t n = g.ports.size();
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    TruthRow row;
    for (std::size_t k = 0; k < n; ++k) row.values.push_back((m >> (n - 1 - k)) & 1);
    row.coverable = relation(row.values);
    g.table.push_back(std::move(row));
  }
  validate(g);
  return g;
}

// ---- catalog -----------------------------------------------------------------

GadgetCatalog GadgetCatalog::load_directory(const std::string& dir, const SolverConfig& cfg) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw GadgetError("no gadget directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".gadget") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  GadgetCatalog cat;
  for (const fs::path& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    GadgetSpec g;
    try {
      g = parse_gadget(buf.str());
    } catch (const ParseError& e) {
      throw GadgetError(f.filename().string() + ": " + e.what());
    }
    cat.add_verified(std::move(g), cfg);
  }
  return cat;
}

void GadgetCatalog::add_verified(GadgetSpec g, const SolverConfig& cfg) {
  const GadgetVerdict v = verify_gadget(g, cfg);
  if (!v.pass) throw GadgetError("verification failed: " + v.message);
  const std::string name = g.name;
  gadgets_.insert_or_assign(name, std::move(g));
}

const GadgetSpec& GadgetCatalog::get(const std::string& name) const {
  auto it = gadgets_.find(name);
  if (it == gadgets_.end()) throw GadgetError("no gadget named '" + name + "'");
  return it->second;
}

std::vector<std::string> GadgetCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : gadgets_) out.push_back(k);
  return out;
}

}  // namespace tatami
