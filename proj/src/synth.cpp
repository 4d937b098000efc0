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

#include "tatami/synth.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "tatami/encoder.hpp"

namespace tatami {

namespace {

std::string lerr(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line + 1) + ": " + what;
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

std::set<Tile> tile_set(const PartialCovering& p) {
  return {p.tiles.begin(), p.tiles.end()};
}

// Slot geometry over the searchable cells (everything not excluded).
struct Universe {
  const GadgetSearchSpec& spec;
  std::vector<DominoSlot> slots;
  std::map<DominoSlot, int> slot_index;
  std::map<Cell, std::vector<int>> incident;  // cell -> slot indices
  std::vector<Cell> cells;
  std::vector<Cell> points;  // top-left cells of points inside the universe

  explicit Universe(const GadgetSearchSpec& s) : spec(s) {
    auto in = [&](Cell c) {
      return c.row >= 0 && c.col >= 0 && c.row < s.rows && c.col < s.cols &&
             s.at(c) != CellClass::Excluded;
    };
    for (int r = 0; r < s.rows; ++r) {
      for (int c = 0; c < s.cols; ++c) {
        if (!in({r, c})) continue;
        cells.push_back({r, c});
        if (in({r, c + 1})) slots.push_back({{r, c}, Orientation::Horizontal});
        if (in({r + 1, c})) slots.push_back({{r, c}, Orientation::Vertical});
        if (in({r, c + 1}) && in({r + 1, c}) && in({r + 1, c + 1})) points.push_back({r, c});
      }
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      slot_index[slots[i]] = static_cast<int>(i);
      incident[slots[i].anchor].push_back(static_cast<int>(i));
      incident[slots[i].second()].push_back(static_cast<int>(i));
    }
  }

  // The four slots meeting at a point, as indices.
  std::array<int, 4> inner(Cell p) const {
    return {slot_index.at({p, Orientation::Horizontal}),
            slot_index.at({{p.row + 1, p.col}, Orientation::Horizontal}),
            slot_index.at({p, Orientation::Vertical}),
            slot_index.at({{p.row, p.col + 1}, Orientation::Vertical})};
  }
  static std::array<Cell, 4> quad(Cell p) {
    return {p, Cell{p.row, p.col + 1}, Cell{p.row + 1, p.col}, Cell{p.row + 1, p.col + 1}};
  }
};

// Outer-instance builder with a constant-true variable and light clause
// simplification.
class Outer {
 public:
  Outer(const Universe& u, const SolverConfig& cfg) : u_(u), solver_(cfg) {
    top_ = solver_.new_var();
    solver_.add_clause({top_});
    for (const Cell& c : u.cells) {
      if (u.spec.at(c) == CellClass::Optional) {
        const int v = solver_.new_var();
        sel_[c] = v;
        solver_.set_default_phase(v, false);
      }
    }
  }

  int top() const { return top_; }
  int sel(Cell c) const {
    auto it = sel_.find(c);
    return it == sel_.end() ? top_ : it->second;
  }
  const std::map<Cell, int>& selectors() const { return sel_; }
  int fresh() { return solver_.new_var(); }
  Solver& solver() { return solver_; }

  void add(std::vector<int> lits) {
    std::vector<int> out;
    for (int l : lits) {
      if (l == top_) return;
      if (l == -top_) continue;
      if (std::find(out.begin(), out.end(), -l) != out.end()) return;
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    solver_.add_clause(std::move(out));
  }

  // One tiling copy whose slots are pinned by the good covering g.
  void add_good_copy(const PartialCovering& g) {
    const std::set<Tile> pinned = tile_set(g);
    std::set<Cell> covered;
    for (const Tile& t : g.tiles) {
      for (const Cell& x : t.cells()) covered.insert(x);
    }
    std::vector<int> var(u_.slots.size());
    for (std::size_t i = 0; i < u_.slots.size(); ++i) {
      const DominoSlot& s = u_.slots[i];
      if (pinned.count(Tile::domino(s))) {
        var[i] = top_;
      } else if (covered.count(s.anchor) || covered.count(s.second())) {
        var[i] = -top_;
      } else {
        var[i] = fresh();
        add({-var[i], sel(s.anchor)});
        add({-var[i], sel(s.second())});
      }
    }
    for (const Cell& x : u_.cells) {
      const std::vector<int>& inc = u_.incident.count(x) ? u_.incident.at(x) : empty_;
      std::vector<int> cl{-sel(x)};
      for (int i : inc) cl.push_back(var[static_cast<std::size_t>(i)]);
      add(cl);
      for (std::size_t a = 0; a < inc.size(); ++a) {
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          add({-var[static_cast<std::size_t>(inc[a])], -var[static_cast<std::size_t>(inc[b])]});
        }
      }
    }
    for (const Cell& p : u_.points) {
      std::vector<int> cl;
      for (const Cell& y : Universe::quad(p)) cl.push_back(-sel(y));
      for (int i : u_.inner(p)) cl.push_back(var[static_cast<std::size_t>(i)]);
      add(cl);
    }
  }

  // Bounded forcing derivation refuting the bad covering b.
  void add_refutation(const PartialCovering& b, int rounds) {
    const std::set<Tile> pinned = tile_set(b);
    std::set<Cell> covered;
    for (const Tile& t : b.tiles) {
      for (const Cell& x : t.cells()) covered.insert(x);
    }
    const std::size_t n = u_.slots.size();
    // Constant slots: +1 pinned in, -1 pinned out, 0 free.
    std::vector<int> fixed(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const DominoSlot& s = u_.slots[i];
      if (pinned.count(Tile::domino(s))) fixed[i] = 1;
      else if (covered.count(s.anchor) || covered.count(s.second())) fixed[i] = -1;
    }
    const std::size_t T = static_cast<std::size_t>(rounds);
    std::vector<std::vector<int>> Fv(T + 1, std::vector<int>(n, 0)), Tv = Fv;
    auto F = [&](std::size_t t, std::size_t i) {
      if (fixed[i]) return fixed[i] < 0 ? top_ : -top_;
      return Fv[t][i];
    };
    auto Tr = [&](std::size_t t, std::size_t i) {
      if (fixed[i]) return fixed[i] > 0 ? top_ : -top_;
      return Tv[t][i];
    };
    for (std::size_t t = 0; t <= T; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!fixed[i]) {
          Fv[t][i] = fresh();
          Tv[t][i] = fresh();
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (fixed[i]) continue;
      const DominoSlot& s = u_.slots[i];
      add({-Fv[0][i], -sel(s.anchor), -sel(s.second())});
      add({-Tv[0][i]});
    }
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        if (fixed[i]) continue;
        const DominoSlot& s = u_.slots[i];
        const std::array<Cell, 2> ends{s.anchor, s.second()};
        std::vector<int> fr{Fv[t][i], -sel(s.anchor), -sel(s.second())};
        for (const Cell& x : ends) {
          for (int j : u_.incident.at(x)) {
            if (static_cast<std::size_t>(j) != i) fr.push_back(Tr(t, static_cast<std::size_t>(j)));
          }
        }
        fr.insert(fr.begin(), -Fv[t + 1][i]);
        add(fr);

        std::vector<int> tr{-Tv[t + 1][i], Tv[t][i]};
        for (const Cell& x : ends) {
          const int y = fresh();
          tr.push_back(y);
          add({-y, sel(x)});
          for (int j : u_.incident.at(x)) {
            if (static_cast<std::size_t>(j) != i) add({-y, F(t, static_cast<std::size_t>(j))});
          }
        }
        for (const Cell& p : points_of_slot(i)) {
          const int y = fresh();
          tr.push_back(y);
          for (const Cell& z : Universe::quad(p)) add({-y, sel(z)});
          for (int j : u_.inner(p)) {
            if (static_cast<std::size_t>(j) != i) add({-y, F(t, static_cast<std::size_t>(j))});
          }
        }
        add(tr);
      }
    }
    std::vector<int> conflict;
    for (const Cell& x : u_.cells) {
      const int y = fresh();
      conflict.push_back(y);
      add({-y, sel(x)});
      if (u_.incident.count(x)) {
        for (int j : u_.incident.at(x)) add({-y, F(T, static_cast<std::size_t>(j))});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (fixed[i]) continue;
      const int y = fresh();
      conflict.push_back(y);
      add({-y, Fv[T][i]});
      add({-y, Tv[T][i]});
    }
    for (const Cell& p : u_.points) {
      const auto q = Universe::quad(p);
      if (std::all_of(q.begin(), q.end(),
                      [&](Cell z) { return u_.spec.at(z) == CellClass::Interface; })) {
        continue;
      }
      const int y = fresh();
      conflict.push_back(y);
      for (const Cell& z : q) add({-y, sel(z)});
      for (int j : u_.inner(p)) add({-y, F(T, static_cast<std::size_t>(j))});
    }
    add(conflict);
  }

 private:
  std::vector<Cell> points_of_slot(std::size_t i) const {
    const DominoSlot& s = u_.slots[i];
    std::vector<Cell> out;
    // Points whose inner slots include s.
    std::vector<Cell> cand;
    if (s.orientation == Orientation::Horizontal) {
      cand = {s.anchor, {s.anchor.row - 1, s.anchor.col}};
    } else {
      cand = {s.anchor, {s.anchor.row, s.anchor.col - 1}};
    }
    for (const Cell& p : cand) {
      if (std::binary_search(u_.points.begin(), u_.points.end(), p)) out.push_back(p);
    }
    return out;
  }

  const Universe& u_;
  Solver solver_;
  int top_ = 0;
  std::map<Cell, int> sel_;
  std::vector<int> empty_;
};

SatStatus extends(const Region& full, const PartialCovering& p, const SolverConfig& cfg) {
  const Encoding enc = encode(full);
  for (const Tile& t : p.tiles) {
    if (!t.is_domino() || !enc.map.var_of(t.slot())) return SatStatus::Unsat;
  }
  return solve(pin_partial_covering(enc.cnf, enc.map, p.tiles), cfg).status;
}

}  // namespace

char to_char(CellClass c) {
  switch (c) {
    case CellClass::Excluded: return 'X';
    case CellClass::Kept: return 'K';
    case CellClass::Optional: return 'A';
    case CellClass::Interface: return 'C';
  }
  return '?';
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget exceeded";
  }
  return "?";
}

CellClass GadgetSearchSpec::at(Cell c) const {
  return classes.at(static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(c.col));
}

void GadgetSearchSpec::set(Cell c, CellClass k) {
  classes.at(static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c.col)) = k;
}

std::vector<Cell> GadgetSearchSpec::cells_of(CellClass k) const {
  std::vector<Cell> out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (at({r, c}) == k) out.push_back({r, c});
    }
  }
  return out;
}

void validate(const GadgetSearchSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0) throw SearchSpecError("empty search box");
  if (spec.classes.size() != static_cast<std::size_t>(spec.rows) * spec.cols) {
    throw SearchSpecError("cell partition does not match the box");
  }
  auto check = [&](const PartialCovering& p) {
    std::set<Cell> seen;
    for (const Tile& t : p.tiles) {
      if (!t.is_domino()) throw SearchSpecError("'" + p.label + "' uses a monomino");
      for (const Cell& x : t.cells()) {
        if (x.row < 0 || x.col < 0 || x.row >= spec.rows || x.col >= spec.cols ||
            spec.at(x) != CellClass::Interface) {
          throw SearchSpecError("'" + p.label + "' tiles a non-interface cell");
        }
        if (!seen.insert(x).second) throw SearchSpecError("'" + p.label + "' overlaps itself");
      }
    }
  };
  for (const auto& g : spec.good) check(g);
  for (const auto& b : spec.bad) check(b);
  for (const auto& g : spec.good) {
    for (const auto& b : spec.bad) {
      if (tile_set(g) == tile_set(b)) {
        throw SearchSpecError("covering '" + g.label + "' is both good and bad");
      }
    }
  }
  if (spec.forcing_rounds < 1) throw SearchSpecError("forcing rounds must be positive");
}

void derive_coverings(GadgetSearchSpec& spec) {
  spec.good.clear();
  spec.bad.clear();
  GadgetSpec shape;
  shape.ports = spec.ports;
  for (const TruthRow& row : spec.table) {
    PartialCovering p;
    p.label = tuple_label(shape, row.values);
    for (std::size_t k = 0; k < spec.ports.size(); ++k) {
      const Port& port = spec.ports[k];
      const Covering sq = square_covering(
          spec.squares.at(static_cast<std::size_t>(port.square)).anchor,
          phase_for(port.side, port.offset, row.values[k]));
      p.tiles.insert(p.tiles.end(), sq.tiles.begin(), sq.tiles.end());
    }
    (row.coverable ? spec.good : spec.bad).push_back(std::move(p));
  }
}

GadgetSearchSpec port_search_spec(const std::string& name, int rows, int cols,
                                  std::vector<SignalSquare> squares,
                                  std::vector<Port> ports,
                                  std::vector<TruthRow> table) {
  GadgetSearchSpec spec;
  spec.name = name;
  spec.rows = rows;
  spec.cols = cols;
  spec.classes.assign(static_cast<std::size_t>(rows) * cols, CellClass::Optional);
  auto exclude = [&](Cell c) {
    if (c.row >= 0 && c.col >= 0 && c.row < rows && c.col < cols &&
        spec.at(c) != CellClass::Interface) {
      spec.set(c, CellClass::Excluded);
    }
  };
  for (const SignalSquare& s : squares) {
    for (int i = 0; i < kSquareSize; ++i) {
      for (int j = 0; j < kSquareSize; ++j) {
        spec.set({s.anchor.row + i, s.anchor.col + j}, CellClass::Interface);
      }
    }
  }
  for (std::size_t si = 0; si < squares.size(); ++si) {
    const Cell a = squares[si].anchor;
    for (Side side : {Side::N, Side::E, Side::S, Side::W}) {
      int lo = kSquareSize, hi = kSquareSize;  // open band [lo, hi)
      for (const Port& p : ports) {
        if (p.square == static_cast<int>(si) && p.side == side) {
          lo = p.offset;
          hi = p.offset + 4;
        }
      }
      for (int k = 0; k < kSquareSize; ++k) {
        if (k >= lo && k < hi) continue;
        switch (side) {
          case Side::N: exclude({a.row - 1, a.col + k}); break;
          case Side::S: exclude({a.row + kSquareSize, a.col + k}); break;
          case Side::W: exclude({a.row + k, a.col - 1}); break;
          case Side::E: exclude({a.row + k, a.col + kSquareSize}); break;
        }
      }
    }
  }
  spec.squares = std::move(squares);
  spec.ports = std::move(ports);
  spec.table = std::move(table);
  derive_coverings(spec);
  return spec;
}

GadgetSearchSpec parse_search_spec(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);
  GadgetSearchSpec spec;
  bool have_grid = false, ended = false, have_table = false;
  auto blank = [](const std::string& s) {
    const auto f = s.find_first_not_of(" \t");
    return f == std::string::npos || s[f] == ';';
  };
  std::size_t i = 0;
  for (; i < lines.size() && !ended; ++i) {
    if (blank(lines[i])) continue;
    std::istringstream ls(lines[i]);
    std::string key;
    ls >> key;
    if (key == "search") {
      if (!(ls >> spec.name)) throw ParseError(lerr(i, "search needs a name"));
    } else if (key == "box") {
      if (!(ls >> spec.rows >> spec.cols) || spec.rows <= 0 || spec.cols <= 0 ||
          spec.rows > 4096 || spec.cols > 4096) {
        throw ParseError(lerr(i, "box needs two positive sizes"));
      }
    } else if (key == "square") {
      SignalSquare s;
      if (!(ls >> s.anchor.row >> s.anchor.col)) throw ParseError(lerr(i, "bad square"));
      spec.squares.push_back(s);
    } else if (key == "port") {
      Port p;
      std::string side, dir;
      if (!(ls >> p.name >> p.square >> side >> p.offset >> dir) || side.size() != 1 ||
          (dir != "in" && dir != "out")) {
        throw ParseError(lerr(i, "expected 'port <name> <square> <side> <offset> <in|out>'"));
      }
      if (p.square < 0 || p.square >= static_cast<int>(spec.squares.size())) {
        throw ParseError(lerr(i, "port names a missing square"));
      }
      p.side = parse_side(side[0]);
      p.output = dir == "out";
      spec.ports.push_back(p);
    } else if (key == "mode") {
      std::string m;
      ls >> m;
      if (m == "loop") spec.mode = SearchMode::Loop;
      else if (m == "forcing") spec.mode = SearchMode::Forcing;
      else throw ParseError(lerr(i, "mode must be loop or forcing"));
    } else if (key == "rounds") {
      if (!(ls >> spec.forcing_rounds)) throw ParseError(lerr(i, "bad rounds"));
    } else if (key == "iterations") {
      if (!(ls >> spec.max_iterations)) throw ParseError(lerr(i, "bad iterations"));
    } else if (key == "seed") {
      if (!(ls >> spec.solver.seed)) throw ParseError(lerr(i, "bad seed"));
    } else if (key == "grid") {
      if (spec.rows == 0) throw ParseError(lerr(i, "grid before box"));
      spec.classes.assign(static_cast<std::size_t>(spec.rows) * spec.cols, CellClass::Excluded);
      for (int r = 0; r < spec.rows; ++r) {
        ++i;
        if (i >= lines.size() || static_cast<int>(lines[i].size()) != spec.cols) {
          throw ParseError(lerr(i, "grid row must have " + std::to_string(spec.cols) + " cells"));
        }
        for (int c = 0; c < spec.cols; ++c) {
          CellClass k;
          switch (lines[i][static_cast<std::size_t>(c)]) {
            case 'K': k = CellClass::Kept; break;
            case 'X': k = CellClass::Excluded; break;
            case 'A': k = CellClass::Optional; break;
            case 'C': k = CellClass::Interface; break;
            default: throw ParseError(lerr(i, "cell class must be K, X, A or C"));
          }
          spec.set({r, c}, k);
        }
      }
      have_grid = true;
    } else if (key == "table") {
      GadgetSpec shape;
      shape.ports = spec.ports;
      for (++i; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::istringstream ts(lines[i]);
        std::string label, verdict;
        ts >> label;
        if (label == "end") {
          ended = true;
          break;
        }
        if (!(ts >> verdict) || (verdict != "SAT" && verdict != "UNSAT")) {
          throw ParseError(lerr(i, "expected '<tuple> <SAT|UNSAT>'"));
        }
        std::string bits;
        for (char ch : label) {
          if (ch == 'T' || ch == 'F') bits.push_back(ch);
        }
        if (bits.size() != spec.ports.size()) throw ParseError(lerr(i, "tuple width mismatch"));
        // Labels list inputs before outputs; map back to port order.
        TruthRow row;
        row.values.resize(spec.ports.size());
        std::size_t pos = 0;
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t k = 0; k < spec.ports.size(); ++k) {
            if (spec.ports[k].output == (pass == 1)) row.values[k] = bits[pos++] == 'T';
          }
        }
        row.coverable = verdict == "SAT";
        spec.table.push_back(row);
      }
      have_table = true;
      --i;  // the loop increment moves past "end"
    } else if (key == "good" || key == "bad") {
      PartialCovering p;
      ls >> p.label;
      std::string body;
      for (++i; i < lines.size(); ++i) {
        std::istringstream ts(lines[i]);
        std::string k;
        ts >> k;
        if (k != "H" && k != "V") break;
        body += lines[i] + "\n";
      }
      --i;
      try {
        p.tiles = Covering::parse(body).tiles;
      } catch (const ParseError& e) {
        throw ParseError(lerr(i, e.what()));
      }
      (key == "good" ? spec.good : spec.bad).push_back(std::move(p));
    } else if (key == "end") {
      ended = true;
    } else {
      throw ParseError(lerr(i, "unknown directive '" + key + "'"));
    }
  }
  if (!have_grid) throw ParseError("search spec has no grid");
  if (!ended) throw ParseError("search spec is missing 'end'");
  if (have_table) {
    if (!spec.good.empty() || !spec.bad.empty()) {
      throw ParseError("give either a table or good/bad coverings, not both");
    }
    derive_coverings(spec);
  }
  try {
    validate(spec);
  } catch (const SearchSpecError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

std::string serialize_search_spec(const GadgetSearchSpec& spec) {
  std::ostringstream os;
  os << "search " << spec.name << "\n";
  os << "box " << spec.rows << ' ' << spec.cols << "\n";
  for (const SignalSquare& s : spec.squares) {
    os << "square " << s.anchor.row << ' ' << s.anchor.col << "\n";
  }
  for (const Port& p : spec.ports) {
    os << "port " << p.name << ' ' << p.square << ' ' << to_char(p.side) << ' ' << p.offset
       << ' ' << (p.output ? "out" : "in") << "\n";
  }
  os << "mode " << (spec.mode == SearchMode::Loop ? "loop" : "forcing") << "\n";
  os << "rounds " << spec.forcing_rounds << "\n";
  os << "iterations " << spec.max_iterations << "\n";
  os << "seed " << spec.solver.seed << "\n";
  os << "grid\n";
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) os << to_char(spec.at({r, c}));
    os << "\n";
  }
  if (!spec.table.empty()) {
    GadgetSpec shape;
    shape.ports = spec.ports;
    os << "table\n";
    for (const TruthRow& row : spec.table) {
      os << tuple_label(shape, row.values) << ' ' << (row.coverable ? "SAT" : "UNSAT") << "\n";
    }
  } else {
    for (int pass = 0; pass < 2; ++pass) {
      for (const PartialCovering& p : pass == 0 ? spec.good : spec.bad) {
        os << (pass == 0 ? "good " : "bad ") << p.label << "\n";
        Covering c{p.tiles};
        os << c.serialize();
      }
    }
  }
  os << "end\n";
  return os.str();
}

Region with_interface(const Region& region, const GadgetSearchSpec& spec) {
  Region full(spec.rows, spec.cols);
  for (const Cell& c : region.cells()) full.set(c);
  for (const Cell& c : spec.cells_of(CellClass::Interface)) full.set(c);
  return full;
}

CandidateVerdict check_candidate(const Region& region, const GadgetSearchSpec& spec) {
  const Region full = with_interface(region, spec);
  CandidateVerdict v;
  for (const PartialCovering& g : spec.good) {
    if (extends(full, g, spec.solver) != SatStatus::Sat) v.rejected_good.push_back(g.label);
  }
  std::vector<std::future<SatStatus>> pending;
  for (const PartialCovering& b : spec.bad) {
    pending.push_back(std::async(std::launch::async,
                                 [&full, &b, &spec] { return extends(full, b, spec.solver); }));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    // A timeout is not a proof of exclusion.
    if (pending[i].get() != SatStatus::Unsat) v.admitted_bad.push_back(spec.bad[i].label);
  }
  v.clean = v.rejected_good.empty() && v.admitted_bad.empty();
  return v;
}

SearchOutcome search(const GadgetSearchSpec& spec,
                     const std::function<void(const IterationLog&)>& progress) {
  validate(spec);
  const Universe u(spec);
  Outer outer(u, spec.solver);
  for (const PartialCovering& g : spec.good) outer.add_good_copy(g);
  SearchOutcome out;

  auto candidate = [&] {
    Region r(spec.rows, spec.cols);
    const std::vector<bool>& m = outer.solver().model();
    std::size_t picked = 0;
    for (const Cell& c : spec.cells_of(CellClass::Kept)) r.set(c);
    for (const auto& [c, v] : outer.selectors()) {
      if (m[static_cast<std::size_t>(v)]) {
        r.set(c);
        ++picked;
      }
    }
    return std::make_pair(r, picked);
  };

  if (spec.mode == SearchMode::Forcing) {
    for (const PartialCovering& b : spec.bad) outer.add_refutation(b, spec.forcing_rounds);
    out.iterations = 1;
    const SatStatus st = outer.solver().solve();
    if (st == SatStatus::Timeout) {
      out.status = SearchStatus::BudgetExceeded;
      return out;
    }
    if (st == SatStatus::Unsat) {
      out.status = SearchStatus::Exhausted;
      out.note = "no region refutes every bad covering within " +
                 std::to_string(spec.forcing_rounds) + " forcing rounds";
      return out;
    }
    auto [r, picked] = candidate();
    out.log.push_back({1, picked, ""});
    if (progress) progress(out.log.back());
    const CandidateVerdict v = check_candidate(r, spec);
    if (!v.clean) throw std::logic_error("forcing certificate accepted a bad region");
    out.status = SearchStatus::Found;
    out.region = std::move(r);
    return out;
  }

  while (out.iterations < spec.max_iterations) {
    ++out.iterations;
    const SatStatus st = outer.solver().solve();
    if (st == SatStatus::Timeout) {
      out.status = SearchStatus::BudgetExceeded;
      return out;
    }
    if (st == SatStatus::Unsat) {
      out.status = SearchStatus::Exhausted;
      return out;
    }
    auto [r, picked] = candidate();
    const Region full = with_interface(r, spec);
    std::string rejected;
    for (const PartialCovering& b : spec.bad) {
      if (extends(full, b, spec.solver) != SatStatus::Unsat) {
        rejected = b.label;
        break;
      }
    }
    out.log.push_back({out.iterations, picked, rejected});
    if (progress) progress(out.log.back());
    if (rejected.empty()) {
      out.status = SearchStatus::Found;
      out.region = std::move(r);
      return out;
    }
    // Forbid exactly this region.
    std::vector<int> block;
    const std::vector<bool>& m = outer.solver().model();
    for (const auto& [c, v] : outer.selectors()) {
      block.push_back(m[static_cast<std::size_t>(v)] ? -v : v);
    }
    ++out.forbidden;
    if (block.empty() || !outer.solver().add_clause(block)) {
      out.status = SearchStatus::Exhausted;
      return out;
    }
  }
  out.status = SearchStatus::BudgetExceeded;
  return out;
}

GadgetSpec outcome_gadget(const GadgetSearchSpec& spec, const SearchOutcome& outcome) {
  if (outcome.status != SearchStatus::Found) {
    throw SearchSpecError("no region to write: search " + std::string(to_string(outcome.status)));
  }
  if (spec.squares.empty()) throw SearchSpecError("search spec has no squares");
  GadgetSpec g;
  g.name = spec.name;
  g.rows = spec.rows;
  g.cols = spec.cols;
  g.squares = spec.squares;
  g.ports = spec.ports;
  g.table = spec.table;
  g.connector = Region(spec.rows, spec.cols);
  for (const Cell& c : outcome.region.cells()) {
    if (spec.at(c) != CellClass::Interface) g.connector.set(c);
  }
  validate(g);
  return g;
}

}  // namespace tatami
