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

// Command-line front end.
//
// Exit codes (all subcommands):
//   0  positive answer: coverable, valid, found, all verdicts match
//   1  negative answer: uncoverable, invalid covering, search exhausted,
//      gadget table mismatch
//   2  input error: unreadable or malformed file, bad flag
//   3  undecided: a conflict or iteration budget ran out
//   4  internal inconsistency: engines disagree, a checked result failed

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tatami/encoder.hpp"
#include "tatami/gadget.hpp"
#include "tatami/oracle.hpp"
#include "tatami/reduce.hpp"
#include "tatami/region.hpp"
#include "tatami/render.hpp"
#include "tatami/sat.hpp"
#include "tatami/synth.hpp"

#ifndef TATAMI_GADGET_DIR
#define TATAMI_GADGET_DIR "data/gadgets"
#endif

namespace {

using namespace tatami;

enum Exit : int { kOk = 0, kNo = 1, kInput = 2, kUndecided = 3, kInternal = 4 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string engine = "sat";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string external;
  int pitch = kDefaultPitch;
  std::string format = "ascii";
  std::string output;
  std::string gadget_dir = TATAMI_GADGET_DIR;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, typename F>
T parse_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.seed = o.seed;
  cfg.conflict_budget = o.budget;
  return cfg;
}

Region load_region(const std::string& path) {
  return parse_file<Region>(path, [](const std::string& t) { return Region::parse(t); });
}

// nullopt: undecided.
struct EngineAnswer {
  std::optional<bool> coverable;
  Covering covering;
};

EngineAnswer solve_sat(const Region& r, const Options& o) {
  const Encoding enc = encode(r);
  SolveResult res;
  if (!o.external.empty()) {
    const ExternalResult ext = solve_external(to_dimacs(enc.cnf), {o.external});
    if (ext.error != ExternalError::None) {
      throw InputError(std::string("external solver: ") + to_string(ext.error) + ": " + ext.message);
    }
    res = ext.result;
  } else {
    res = solve(enc.cnf, solver_config(o));
  }
  EngineAnswer a;
  if (res.status == SatStatus::Timeout) return a;
  a.coverable = res.status == SatStatus::Sat;
  if (*a.coverable) {
    a.covering = decode_model(res.model, enc.map);
    a.covering.normalize();
  }
  return a;
}

EngineAnswer solve_oracle(const Region& r) {
  EngineAnswer a;
  a.coverable = false;
  for_each_covering(r, false, [&](const std::vector<Tile>& tiles) {
    a.coverable = true;
    a.covering.tiles = tiles;
    a.covering.normalize();
    return false;
  });
  return a;
}

void check_engine(const std::string& e) {
  if (e != "sat" && e != "oracle" && e != "both") throw InputError("unknown engine " + e);
}

int cmd_solve(const Options& o, const std::string& region_path) {
  check_engine(o.engine);
  const Region r = load_region(region_path);
  std::optional<EngineAnswer> sat, oracle;
  if (o.engine != "oracle") sat = solve_sat(r, o);
  if (o.engine != "sat") oracle = solve_oracle(r);
  if (sat && oracle && sat->coverable && *sat->coverable != *oracle->coverable) {
    std::cerr << "engines disagree: sat says " << (*sat->coverable ? "coverable" : "uncoverable")
              << ", oracle says " << (*oracle->coverable ? "coverable" : "uncoverable") << "\n";
    return kInternal;
  }
  const EngineAnswer& a = sat ? *sat : *oracle;
  if (!a.coverable) {
    std::cout << "UNKNOWN (conflict budget exhausted)\n";
    return kUndecided;
  }
  if (!*a.coverable) {
    std::cout << "UNCOVERABLE\n";
    return kNo;
  }
  const CoveringVerdict v = check_covering(r, a.covering);
  if (!v.valid()) {
    std::cerr << "produced covering is invalid: " << v.message << "\n";
    return kInternal;
  }
  write_output(o, a.covering.serialize());
  return kOk;
}

int cmd_count(const Options& o, const std::string& region_path) {
  check_engine(o.engine);
  const Region r = load_region(region_path);
  std::optional<std::uint64_t> sat_count, oracle_count;
  bool complete = true;
  if (o.engine != "oracle") {
    const CountResult c = count_models(encode(r).cnf, std::nullopt, solver_config(o));
    complete = c.complete;
    sat_count = c.count;
    std::cout << "sat " << (c.complete ? "" : ">=") << c.count << "\n";
  }
  if (o.engine != "sat") {
    std::uint64_t n = 0;
    for_each_covering(r, false, [&](const std::vector<Tile>&) {
      ++n;
      return true;
    });
    oracle_count = n;
    std::cout << "oracle " << n << "\n";
  }
  if (sat_count && oracle_count && complete && *sat_count != *oracle_count) {
    std::cerr << "engines disagree\n";
    return kInternal;
  }
  return complete ? kOk : kUndecided;
}

int cmd_encode(const Options& o, const std::string& region_path) {
  const Encoding enc = encode(load_region(region_path));
  write_output(o, to_dimacs(enc.cnf));
  return kOk;
}

int cmd_verify(const std::string& region_path, const std::string& covering_path, bool monominoes) {
  const Region r = load_region(region_path);
  const Covering c =
      parse_file<Covering>(covering_path, [](const std::string& t) { return Covering::parse(t); });
  const CoveringVerdict v = check_covering(r, c, monominoes);
  if (v.valid()) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid: " << v.message << "\n";
  return kNo;
}

int cmd_reduce(const Options& o, const std::string& formula_path, const std::string& ports_path,
               bool solve_it) {
  const Formula3Cnf f = parse_file<Formula3Cnf>(
      formula_path, [](const std::string& t) { return Formula3Cnf::from_dimacs(t); });
  const GadgetCatalog catalog = GadgetCatalog::load_directory(o.gadget_dir, solver_config(o));
  ReductionArtifact art;
  try {
    art = reduce(f, catalog, o.pitch);
  } catch (const NonPlanarError& e) {
    std::cerr << e.what() << "; witness edges:";
    for (const auto& [u, v] : e.witness()) std::cerr << ' ' << u << '-' << v;
    std::cerr << "\n";
    return kInput;
  } catch (const ReductionError& e) {
    throw InputError(e.what());
  }
  write_output(o, art.region.serialize() + "\n");
  if (!ports_path.empty()) {
    std::ofstream out(ports_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + ports_path);
    out << port_map(art);
  }
  std::cerr << "region " << art.region.rows() << "x" << art.region.cols() << ", "
            << art.region.area() << " cells\n";
  if (!solve_it) return kOk;
  const EngineAnswer a = solve_sat(art.region, o);
  if (!a.coverable) return kUndecided;
  if (!*a.coverable) {
    std::cerr << "UNCOVERABLE\n";
    return kNo;
  }
  const std::vector<bool> assignment = decode_witness(art, a.covering);
  std::cerr << "assignment:";
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    std::cerr << ' ' << (assignment[v] ? "" : "-") << v + 1;
  }
  std::cerr << "\n";
  return kOk;
}

int cmd_synth(const Options& o, const std::string& spec_path) {
  GadgetSearchSpec spec = parse_file<GadgetSearchSpec>(
      spec_path, [](const std::string& t) { return parse_search_spec(t); });
  spec.solver.seed = o.seed;
  if (o.budget) spec.solver.conflict_budget = o.budget;
  const SearchOutcome out = search(spec);
  std::cerr << spec.name << ": " << to_string(out.status) << " after " << out.iterations
            << " iterations, " << out.forbidden << " regions blocked\n";
  if (!out.note.empty()) std::cerr << out.note << "\n";
  if (out.status == SearchStatus::BudgetExceeded) return kUndecided;
  if (out.status == SearchStatus::Exhausted) return kNo;
  const GadgetSpec g = outcome_gadget(spec, out);
  const GadgetVerdict v = verify_gadget(g, solver_config(o));
  if (!v.pass) {
    std::cerr << "synthesized gadget fails verification: " << v.message << "\n";
    return kInternal;
  }
  write_output(o, serialize_gadget(g));
  return kOk;
}

int cmd_check_gadget(const Options& o, const std::vector<std::string>& paths) {
  int code = kOk;
  for (const std::string& path : paths) {
    const GadgetSpec g =
        parse_file<GadgetSpec>(path, [](const std::string& t) { return parse_gadget(t); });
    const GadgetVerdict v = verify_gadget(g, solver_config(o));
    std::cout << g.name << ": " << (v.pass ? "pass" : "FAIL") << "\n";
    for (const TupleReport& t : v.tuples) {
      std::cout << "  " << tuple_label(g, t.values) << ' ' << to_string(t.status)
                << (t.ok() ? "" : "  (expected " + std::string(t.expected ? "SAT" : "UNSAT") + ")")
                << "\n";
    }
    if (!v.pass) {
      const bool undecided = std::any_of(v.tuples.begin(), v.tuples.end(), [](const TupleReport& t) {
        return t.status == SatStatus::Timeout;
      });
      code = std::max(code, undecided ? static_cast<int>(kUndecided) : static_cast<int>(kNo));
    }
  }
  return code;
}

int cmd_render(const Options& o, const std::string& region_path, const std::string& covering_path,
               int cell_size, bool points) {
  const Region r = load_region(region_path);
  std::optional<Covering> c;
  if (!covering_path.empty()) {
    c = parse_file<Covering>(covering_path, [](const std::string& t) { return Covering::parse(t); });
  }
  RenderStyle st;
  if (o.format == "svg") {
    st.format = RenderFormat::Svg;
  } else if (o.format != "ascii") {
    throw InputError("unknown format " + o.format);
  }
  st.cell_size = cell_size;
  st.tatami_points = points;
  try {
    write_output(o, render(r, c ? &*c : nullptr, st));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tatami domino coverings: solve, count, reduce and synthesize."};
  app.set_config("--config", "", "INI/TOML file with default flag values");
  app.require_subcommand(1);
  Options o;

  auto engine = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "sat, oracle or both")
        ->check(CLI::IsMember({"sat", "oracle", "both"}));
  };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "solver seed");
    sub->add_option("--budget-conflicts", o.budget, "conflict budget");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "output file (default stdout)"); };

  std::string region, covering, formula, ports, spec;
  std::vector<std::string> gadget_files;
  bool monominoes = false, solve_it = false, points = false;
  int cell_size = 12;

  CLI::App* solve_cmd = app.add_subcommand("solve", "find a tatami domino covering of a region");
  solve_cmd->add_option("region", region, "region file")->required();
  engine(solve_cmd);
  solver_flags(solve_cmd);
  solve_cmd->add_option("--external-solver", o.external, "DIMACS solver command");
  output(solve_cmd);

  CLI::App* count_cmd = app.add_subcommand("count", "count tatami domino coverings");
  count_cmd->add_option("region", region, "region file")->required();
  engine(count_cmd);
  solver_flags(count_cmd);

  CLI::App* encode_cmd = app.add_subcommand("encode", "write the DIMACS encoding of a region");
  encode_cmd->add_option("region", region, "region file")->required();
  output(encode_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a covering against a region");
  verify_cmd->add_option("region", region, "region file")->required();
  verify_cmd->add_option("covering", covering, "covering file")->required();
  verify_cmd->add_flag("--allow-monominoes", monominoes, "accept monomino tiles");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "build the region of a planar 3CNF formula");
  reduce_cmd->add_option("formula", formula, "DIMACS file, clauses of width 1 to 3")->required();
  reduce_cmd->add_option("--ports", ports, "write the port map here");
  reduce_cmd->add_option("--pitch", o.pitch, "cells per layout unit");
  reduce_cmd->add_option("--gadgets", o.gadget_dir, "gadget catalog directory");
  reduce_cmd->add_flag("--solve", solve_it, "also solve the region and decode the assignment");
  solver_flags(reduce_cmd);
  reduce_cmd->add_option("--external-solver", o.external, "DIMACS solver command");
  output(reduce_cmd);

  CLI::App* synth_cmd = app.add_subcommand("synth", "search for a gadget from a search spec");
  synth_cmd->add_option("spec", spec, "search spec file")->required();
  solver_flags(synth_cmd);
  output(synth_cmd);

  CLI::App* gadget_cmd = app.add_subcommand("check-gadget", "verify gadget files against their tables");
  gadget_cmd->add_option("files", gadget_files, "gadget files")->required();
  solver_flags(gadget_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "draw a region and optional covering");
  render_cmd->add_option("region", region, "region file")->required();
  render_cmd->add_option("--covering", covering, "covering file");
  render_cmd->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--cell-size", cell_size, "SVG pixels per cell")->check(CLI::PositiveNumber);
  render_cmd->add_flag("--points", points, "mark points where three tiles meet");
  output(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, region);
    if (*count_cmd) return cmd_count(o, region);
    if (*encode_cmd) return cmd_encode(o, region);
    if (*verify_cmd) return cmd_verify(region, covering, monominoes);
    if (*reduce_cmd) return cmd_reduce(o, formula, ports, solve_it);
    if (*synth_cmd) return cmd_synth(o, spec);
    if (*gadget_cmd) return cmd_check_gadget(o, gadget_files);
    if (*render_cmd) return cmd_render(o, region, covering, cell_size, points);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SearchSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const GadgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
