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

#include "tatami/encoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace tatami {

namespace {

// Literal order inside a clause and between clauses: by variable, then
// negative before positive.
bool lit_less(int a, int b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return a < b;
}

bool clause_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      lit_less);
}

void sort_family(std::vector<std::vector<int>>& family) {
  for (auto& c : family) std::sort(c.begin(), c.end(), lit_less);
  std::sort(family.begin(), family.end(), clause_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::string line_error(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Matching: return "matching";
    case Provenance::Perfect: return "perfect";
    case Provenance::Tatami: return "tatami";
    case Provenance::Pin: return "pin";
    case Provenance::Blocking: return "blocking";
    case Provenance::Input: return "input";
  }
  return "unknown";
}

bool CnfInstance::same_clauses(const CnfInstance& o) const {
  if (num_vars != o.num_vars || clauses.size() != o.clauses.size()) return false;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].lits != o.clauses[i].lits) return false;
  }
  return true;
}

EdgeVarMap::EdgeVarMap(std::vector<DominoSlot> slots) : slots_(std::move(slots)) {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (!index_.emplace(slots_[i], static_cast<int>(i) + 1).second) {
      throw std::invalid_argument("duplicate slot in variable map");
    }
  }
}

std::optional<int> EdgeVarMap::var_of(const DominoSlot& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Encoding encode(const Region& r) {
  Encoding out;
  out.map = EdgeVarMap(domino_slots(r));
  const EdgeVarMap& map = out.map;
  out.cnf.num_vars = map.size();

  // Slots incident to each member cell.
  std::map<Cell, std::vector<int>> incident;
  for (const Cell& c : r.cells()) incident[c];
  for (int v = 1; v <= map.size(); ++v) {
    const DominoSlot& s = map.slot_of(v);
    incident[s.anchor].push_back(v);
    incident[s.second()].push_back(v);
  }

  std::vector<std::vector<int>> matching, perfect, tatami;
  for (const auto& [cell, vars] : incident) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        matching.push_back({-vars[i], -vars[j]});
      }
    }
    if (vars.empty()) out.cnf.isolated_cells.push_back(cell);
    perfect.push_back(vars);
  }
  for (const TatamiPoint& p : tatami_points(r)) {
    const Cell a = p.top_left;
    tatami.push_back({
        *map.var_of({a, Orientation::Horizontal}),
        *map.var_of({{a.row + 1, a.col}, Orientation::Horizontal}),
        *map.var_of({a, Orientation::Vertical}),
        *map.var_of({{a.row, a.col + 1}, Orientation::Vertical}),
    });
  }
  sort_family(matching);
  sort_family(perfect);
  sort_family(tatami);

  std::set<std::vector<int>> seen;
  auto emit = [&](std::vector<std::vector<int>>& family, Provenance p) {
    for (auto& c : family) {
      if (seen.insert(c).second) out.cnf.clauses.push_back({std::move(c), p});
    }
  };
  emit(matching, Provenance::Matching);
  emit(perfect, Provenance::Perfect);
  emit(tatami, Provenance::Tatami);
  out.cnf.trivially_unsat = !out.cnf.isolated_cells.empty();
  return out;
}

CnfInstance pin(const CnfInstance& c, const EdgeVarMap& map,
                const std::vector<SlotPin>& pins) {
  CnfInstance out = c;
  std::map<int, bool> assigned;
  for (const SlotPin& p : pins) {
    const std::optional<int> v = map.var_of(p.slot);
    if (!v) {
      throw std::invalid_argument(
          "pinned slot at (" + std::to_string(p.slot.anchor.row) + "," +
          std::to_string(p.slot.anchor.col) + ") is not in the region");
    }
    auto [it, fresh] = assigned.emplace(*v, p.value);
    if (!fresh) {
      if (it->second != p.value) out.pin_contradiction = true;
      continue;
    }
    out.clauses.push_back({{p.value ? *v : -*v}, Provenance::Pin});
  }
  if (out.pin_contradiction) {
    out.clauses.push_back({{}, Provenance::Pin});
    out.trivially_unsat = true;
  }
  return out;
}

CnfInstance pin_partial_covering(const CnfInstance& c, const EdgeVarMap& map,
                                 const std::vector<Tile>& tiles) {
  std::set<Cell> covered;
  bool overlap = false;
  std::vector<SlotPin> pins;
  std::set<DominoSlot> chosen;
  for (const Tile& t : tiles) {
    if (!t.is_domino()) {
      throw std::invalid_argument("monominoes cannot be pinned");
    }
    for (const Cell& x : t.cells()) {
      if (!covered.insert(x).second) overlap = true;
    }
    chosen.insert(t.slot());
    pins.push_back({t.slot(), true});
  }
  // Every other slot touching a covered cell must be absent.
  for (const DominoSlot& s : map.slots()) {
    if (chosen.count(s)) continue;
    if (covered.count(s.anchor) || covered.count(s.second())) {
      pins.push_back({s, false});
    }
  }
  CnfInstance out = pin(c, map, pins);
  if (overlap && !out.pin_contradiction) {
    out.pin_contradiction = true;
    out.trivially_unsat = true;
    out.clauses.push_back({{}, Provenance::Pin});
  }
  return out;
}

std::string to_dimacs(const CnfInstance& c) {
  std::ostringstream os;
  os << "p cnf " << c.num_vars << ' ' << c.clauses.size() << '\n';
  for (const Clause& cl : c.clauses) {
    for (int l : cl.lits) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == 'c') continue;
    if (line[first] == '%') break;  // end marker used by some benchmark sets
    std::istringstream ls(line);
    if (line[first] == 'p') {
      if (have_header) throw ParseError(line_error(line_no, "duplicate header"));
      std::string p, fmt;
      long long vars = 0;
      if (!(ls >> p >> fmt >> vars >> declared_clauses) || fmt != "cnf" ||
          vars < 0 || declared_clauses < 0 || vars > (1 << 28)) {
        throw ParseError(line_error(line_no, "malformed 'p cnf' header"));
      }
      std::string extra;
      if (ls >> extra) throw ParseError(line_error(line_no, "trailing text in header"));
      out.num_vars = static_cast<int>(vars);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_error(line_no, "clause before header"));
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') {
        throw ParseError(line_error(line_no, "bad literal '" + tok + "'"));
      }
      if (v == 0) {
        out.clauses.push_back({std::move(current), Provenance::Input});
        current.clear();
        continue;
      }
      if (std::llabs(v) > out.num_vars) {
        throw ParseError(line_error(line_no, "literal " + tok +
                                                 " exceeds declared variable count"));
      }
      current.push_back(static_cast<int>(v));
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<long long>(out.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses but " + std::to_string(out.clauses.size()) +
                     " were read");
  }
  for (const Clause& cl : out.clauses) {
    if (cl.lits.empty()) out.trivially_unsat = true;
  }
  return out;
}

Covering decode_model(const std::vector<bool>& model, const EdgeVarMap& map) {
  if (model.size() != static_cast<std::size_t>(map.size()) + 1) {
    throw std::invalid_argument("model has " + std::to_string(model.size() - 1) +
                                " variables, map has " +
                                std::to_string(map.size()));
  }
  Covering out;
  for (int v = 1; v <= map.size(); ++v) {
    if (model[v]) out.tiles.push_back(Tile::domino(map.slot_of(v)));
  }
  out.normalize();
  return out;
}

std::vector<bool> parse_model(std::string_view text, int num_vars) {
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head != "v") continue;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') {
        throw ParseError(line_error(line_no, "bad literal '" + tok + "'"));
      }
      if (v == 0) continue;
      if (std::llabs(v) > num_vars) {
        throw ParseError(line_error(line_no, "variable " + tok + " out of range"));
      }
      model[static_cast<std::size_t>(std::llabs(v))] = v > 0;
    }
  }
  return model;
}

}  // namespace tatami
