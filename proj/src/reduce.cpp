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

#include "tatami/reduce.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>

#include "tatami/encoder.hpp"

namespace tatami {

// ---- formulas ----------------------------------------------------------------

void Formula3Cnf::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    const std::string where = "clause " + std::to_string(i + 1);
    if (c.empty() || c.size() > 3) {
      throw std::invalid_argument(where + " has " + std::to_string(c.size()) +
                                  " literals (1 to 3 allowed)");
    }
    std::set<int> vars;
    for (const Literal& l : c) {
      if (l.var < 0 || l.var >= num_vars) throw std::invalid_argument(where + ": variable out of range");
      if (!vars.insert(l.var).second) throw std::invalid_argument(where + " repeats a variable");
    }
  }
}

bool Formula3Cnf::evaluate(const std::vector<bool>& a) const {
  if (a.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("assignment has the wrong length");
  }
  return std::all_of(clauses.begin(), clauses.end(), [&](const std::vector<Literal>& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return a[static_cast<std::size_t>(l.var)] != l.negated;
    });
  });
}

std::optional<std::vector<bool>> Formula3Cnf::brute_force_model() const {
  if (num_vars > 24) throw std::invalid_argument("too many variables for brute force");
  std::vector<bool> a(static_cast<std::size_t>(num_vars));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << num_vars); ++m) {
    for (int v = 0; v < num_vars; ++v) a[static_cast<std::size_t>(v)] = (m >> v) & 1;
    if (evaluate(a)) return a;
  }
  return std::nullopt;
}

Formula3Cnf Formula3Cnf::from_dimacs(std::string_view text) {
  const CnfInstance cnf = parse_dimacs(text);
  Formula3Cnf f;
  f.num_vars = cnf.num_vars;
  for (const Clause& c : cnf.clauses) {
    std::vector<Literal> lits;
    for (int l : c.lits) lits.push_back({std::abs(l) - 1, l < 0});
    f.clauses.push_back(std::move(lits));
  }
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return f;
}

std::string Formula3Cnf::to_dimacs() const {
  std::ostringstream os;
  os << "p cnf " << num_vars << ' ' << clauses.size() << "\n";
  for (const auto& c : clauses) {
    for (const Literal& l : c) os << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    os << "0\n";
  }
  return os.str();
}

IncidenceGraph build_incidence(const Formula3Cnf& f) {
  f.validate();
  IncidenceGraph g;
  g.num_vars = f.num_vars;
  g.num_clauses = static_cast<int>(f.clauses.size());
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (const Literal& l : f.clauses[c]) g.edges.push_back({l.var, static_cast<int>(c), l.negated});
  }
  return g;
}

// ---- layout --------------------------------------------------------------------

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::property<boost::vertex_index_t, int>,
                                   boost::property<boost::edge_index_t, int>>;
using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;
using Embedding = std::vector<std::vector<EdgeDesc>>;

void reindex(Graph& g) {
  int i = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(boost::edge_index, g, *it, i++);
}

bool embed(Graph& g, Embedding& emb) {
  reindex(g);
  emb.assign(boost::num_vertices(g), {});
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                             boost::boyer_myrvold_params::embedding = &emb[0]);
}

// st-numbering of a biconnected graph for the edge (s, t) (Tarjan's list
// construction over a depth-first search that leaves s through t first).
std::vector<int> st_numbering(const std::vector<std::vector<int>>& adj, int s, int t) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> pre(n, -1), parent(n, -1), low(n, -1), order;
  // Iterative DFS.
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  pre[s] = 0;
  order.push_back(s);
  stack.push_back({s, 0});
  std::vector<int> s_adj = adj[s];
  std::stable_partition(s_adj.begin(), s_adj.end(), [t](int w) { return w == t; });
  auto nbrs = [&](int v) -> const std::vector<int>& { return v == s ? s_adj : adj[v]; };
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& a = nbrs(f.v);
    if (f.next < a.size()) {
      const int w = a[f.next++];
      if (pre[w] < 0) {
        pre[w] = static_cast<int>(order.size());
        parent[w] = f.v;
        order.push_back(w);
        stack.push_back({w, 0});
      }
    } else {
      stack.pop_back();
    }
  }
  if (static_cast<int>(order.size()) != n || order[1] != t) {
    throw std::logic_error("st-numbering needs a connected graph with edge (s,t)");
  }
  // low[v]: vertex of smallest preorder reachable from v's subtree by one back edge.
  for (int v : order) low[v] = v;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    for (int w : adj[v]) {
      if (pre[w] < pre[low[v]]) low[v] = w;
      if (parent[w] == v && pre[low[w]] < pre[low[v]]) low[v] = low[w];
    }
  }
  std::list<int> L{s, t};
  std::vector<std::list<int>::iterator> where(n);
  where[s] = L.begin();
  where[t] = std::next(L.begin());
  std::vector<bool> plus(n, false);
  for (std::size_t i = 2; i < order.size(); ++i) {
    const int v = order[i], p = parent[v];
    if (!plus[low[v]]) {
      where[v] = L.insert(where[p], v);
      plus[p] = true;
    } else {
      where[v] = L.insert(std::next(where[p]), v);
      plus[p] = false;
    }
  }
  std::vector<int> num(n);
  int k = 0;
  for (int v : L) num[v] = k++;
  // Check: every vertex but s and t has a lower and a higher neighbour.
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    bool lo = false, hi = false;
    for (int w : adj[v]) (num[w] < num[v] ? lo : hi) = true;
    if (!lo || !hi) throw std::logic_error("st-numbering failed");
  }
  return num;
}

}  // namespace

LayoutPlan layout(const IncidenceGraph& ig, int pitch) {
  if (pitch < kDefaultPitch || pitch % kSquarePitch != 0) {
    throw ReductionError("pitch must be a multiple of " + std::to_string(kSquarePitch) +
                         " and at least " + std::to_string(kDefaultPitch));
  }
  LayoutPlan plan;
  plan.pitch = pitch;
  const int n = ig.num_vertices();
  plan.vertices.assign(static_cast<std::size_t>(n), {});
  plan.edges.assign(ig.edges.size(), {});
  plan.clause_inputs.assign(static_cast<std::size_t>(ig.num_clauses), {});
  if (n == 0) return plan;

  Graph g(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> real;
  for (const IncidenceEdge& e : ig.edges) {
    const int u = e.var, v = ig.clause_vertex(e.clause);
    if (!real.insert({u, v}).second) throw ReductionError("repeated incidence edge");
    boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g);
  }
  {
    reindex(g);
    Embedding emb(static_cast<std::size_t>(n));
    std::vector<EdgeDesc> kur;
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding = &emb[0],
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (!planar) {
      std::vector<std::pair<int, int>> witness;
      for (const EdgeDesc& e : kur) {
        witness.push_back({static_cast<int>(boost::source(e, g)),
                           static_cast<int>(boost::target(e, g))});
      }
      throw NonPlanarError("incidence graph is not planar (Kuratowski subgraph with " +
                               std::to_string(witness.size()) + " edges)",
                           std::move(witness));
    }
  }

  // Vertex columns and edge rows from an st-visibility drawing of a planar
  // biconnected supergraph.
  std::vector<int> column(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, long> edge_x;  // undirected (min,max) -> x
  std::map<int, std::vector<std::pair<int, int>>> all_edges_at;
  if (n >= 2) {
    boost::make_connected(g);
    Embedding emb;
    embed(g, emb);
    boost::make_biconnected_planar(g, &emb[0]);
    if (!embed(g, emb)) throw std::logic_error("augmented graph lost planarity");

    const std::size_t m = boost::num_edges(g);
    std::vector<int> eu(m), ev(m);
    for (auto [it, end] = boost::edges(g); it != end; ++it) {
      const int i = boost::get(boost::edge_index, g, *it);
      eu[static_cast<std::size_t>(i)] = static_cast<int>(boost::source(*it, g));
      ev[static_cast<std::size_t>(i)] = static_cast<int>(boost::target(*it, g));
    }
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n)), adj(static_cast<std::size_t>(n));
    std::vector<std::map<int, std::size_t>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (const EdgeDesc& e : emb[static_cast<std::size_t>(v)]) {
        const int i = boost::get(boost::edge_index, g, e);
        pos[static_cast<std::size_t>(v)][i] = rot[static_cast<std::size_t>(v)].size();
        rot[static_cast<std::size_t>(v)].push_back(i);
        const std::size_t k = static_cast<std::size_t>(i);
        adj[static_cast<std::size_t>(v)].push_back(eu[k] == v ? ev[k] : eu[k]);
      }
    }
    // Darts: 2i leaves eu[i], 2i+1 leaves ev[i].
    auto to = [&](std::size_t d) { return d % 2 == 0 ? ev[d / 2] : eu[d / 2]; };
    std::vector<int> face(2 * m, -1);
    int faces = 0;
    for (std::size_t d0 = 0; d0 < 2 * m; ++d0) {
      if (face[d0] >= 0) continue;
      std::size_t d = d0;
      while (face[d] < 0) {
        face[d] = faces;
        const int v = to(d);
        const auto& r = rot[static_cast<std::size_t>(v)];
        const std::size_t p = pos[static_cast<std::size_t>(v)].at(static_cast<int>(d / 2));
        const int nxt = r[(p + 1) % r.size()];
        const std::size_t k = static_cast<std::size_t>(nxt);
        d = 2 * k + (eu[k] == v ? 0 : 1);
      }
      ++faces;
    }

    const int s = 0;
    const int st_edge = rot[0].front();
    const int t = eu[static_cast<std::size_t>(st_edge)] == s ? ev[static_cast<std::size_t>(st_edge)]
                                                            : eu[static_cast<std::size_t>(st_edge)];
    const std::vector<int> num = st_numbering(adj, s, t);

    // Dual: left face -> right face of every edge oriented upwards; the outer
    // face (right of s->t) is split into a source and a sink.
    const std::size_t st_dart = 2 * static_cast<std::size_t>(st_edge) +
                                (eu[static_cast<std::size_t>(st_edge)] == s ? 0 : 1);
    const int outer = face[st_dart];
    const int src = faces, snk = faces + 1;
    std::vector<std::vector<int>> dual(static_cast<std::size_t>(faces + 2));
    std::vector<int> left_node(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool fwd = num[static_cast<std::size_t>(eu[i])] < num[static_cast<std::size_t>(ev[i])];
      const int right = face[2 * i + (fwd ? 0 : 1)];
      const int left = face[2 * i + (fwd ? 1 : 0)];
      const int l = left == outer ? src : left;
      const int r = right == outer ? snk : right;
      left_node[i] = l;
      dual[static_cast<std::size_t>(l)].push_back(r);
    }
    std::vector<int> indeg(dual.size(), 0);
    for (const auto& out : dual) {
      for (int w : out) ++indeg[static_cast<std::size_t>(w)];
    }
    std::vector<long> X(dual.size(), 0);
    std::queue<int> q;
    for (std::size_t f = 0; f < dual.size(); ++f) {
      if (indeg[f] == 0) q.push(static_cast<int>(f));
    }
    std::size_t seen = 0;
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      ++seen;
      for (int w : dual[static_cast<std::size_t>(f)]) {
        X[static_cast<std::size_t>(w)] = std::max(X[static_cast<std::size_t>(w)], X[static_cast<std::size_t>(f)] + 1);
        if (--indeg[static_cast<std::size_t>(w)] == 0) q.push(w);
      }
    }
    if (seen != dual.size()) throw std::logic_error("dual graph is not acyclic");

    for (int v = 0; v < n; ++v) column[static_cast<std::size_t>(v)] = num[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < m; ++i) {
      const std::pair<int, int> key{std::min(eu[i], ev[i]), std::max(eu[i], ev[i])};
      edge_x[key] = X[static_cast<std::size_t>(left_node[i])];
      all_edges_at[eu[i]].push_back(key);
      all_edges_at[ev[i]].push_back(key);
    }
  }

  // One row per edge: order by x, ties in a fixed order; this keeps every
  // vertex on its side of every edge.
  std::vector<std::pair<long, std::pair<int, int>>> order;
  for (const auto& [key, x] : edge_x) order.push_back({x, key});
  std::sort(order.begin(), order.end());
  std::map<std::pair<int, int>, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].second] = static_cast<int>(i);

  // Rows used by real edges, or standing in for an edgeless vertex.
  std::vector<int> vertex_row(static_cast<std::size_t>(n), -1);
  std::set<int> used;
  for (const auto& key : real) used.insert(rank.at(key));
  for (int v = 0; v < n; ++v) {
    bool has_real = false;
    for (const auto& key : all_edges_at[v]) has_real |= real.count(key) > 0;
    if (!has_real) {
      const int r = all_edges_at[v].empty() ? 0 : rank.at(all_edges_at[v].front());
      vertex_row[static_cast<std::size_t>(v)] = r;
      used.insert(r);
    }
  }
  std::map<int, int> compact;
  for (int r : used) compact.emplace(r, static_cast<int>(compact.size()));

  for (int v = 0; v < n; ++v) {
    VertexSegment& s = plan.vertices[static_cast<std::size_t>(v)];
    s.column = column[static_cast<std::size_t>(v)];
    s.row_lo = std::numeric_limits<int>::max();
    s.row_hi = std::numeric_limits<int>::min();
    if (vertex_row[static_cast<std::size_t>(v)] >= 0) {
      s.row_lo = s.row_hi = compact.at(vertex_row[static_cast<std::size_t>(v)]);
    }
  }
  for (std::size_t i = 0; i < ig.edges.size(); ++i) {
    const IncidenceEdge& e = ig.edges[i];
    const int u = e.var, v = ig.clause_vertex(e.clause);
    const int row = compact.at(rank.at({std::min(u, v), std::max(u, v)}));
    EdgeSegment& seg = plan.edges[i];
    seg.row = row;
    seg.col_lo = std::min(column[static_cast<std::size_t>(u)], column[static_cast<std::size_t>(v)]);
    seg.col_hi = std::max(column[static_cast<std::size_t>(u)], column[static_cast<std::size_t>(v)]);
    for (int w : {u, v}) {
      VertexSegment& s = plan.vertices[static_cast<std::size_t>(w)];
      s.row_lo = std::min(s.row_lo, row);
      s.row_hi = std::max(s.row_hi, row);
    }
  }
  plan.rows = static_cast<int>(compact.size());
  plan.cols = n;

  // Tracks: inputs from the left take the leftmost tracks, the lowest of them
  // furthest left; inputs from the right mirror this.
  for (int c = 0; c < ig.num_clauses; ++c) {
    const int cc = column[static_cast<std::size_t>(ig.clause_vertex(c))];
    std::vector<int> left, right;
    for (std::size_t i = 0; i < ig.edges.size(); ++i) {
      if (ig.edges[i].clause != c) continue;
      (column[static_cast<std::size_t>(ig.edges[i].var)] < cc ? left : right).push_back(static_cast<int>(i));
    }
    auto lower_first = [&](int a, int b) {
      return plan.edges[static_cast<std::size_t>(a)].row > plan.edges[static_cast<std::size_t>(b)].row;
    };
    std::sort(left.begin(), left.end(), lower_first);
    std::sort(right.begin(), right.end(), lower_first);
    std::vector<int>& tracks = plan.clause_inputs[static_cast<std::size_t>(c)];
    tracks = left;
    tracks.insert(tracks.end(), right.rbegin(), right.rend());
  }
  validate_layout(plan, ig);
  return plan;
}

void validate_layout(const LayoutPlan& plan, const IncidenceGraph& g) {
  const int n = g.num_vertices();
  if (static_cast<int>(plan.vertices.size()) != n || plan.edges.size() != g.edges.size()) {
    throw ReductionError("layout does not match the graph");
  }
  auto fail = [](const std::string& what) { throw ReductionError("invalid layout: " + what); };
  std::set<int> rows;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const EdgeSegment& e = plan.edges[i];
    if (!rows.insert(e.row).second) fail("two edges share row " + std::to_string(e.row));
    const int u = g.edges[i].var, v = g.clause_vertex(g.edges[i].clause);
    const VertexSegment& a = plan.vertices[static_cast<std::size_t>(u)];
    const VertexSegment& b = plan.vertices[static_cast<std::size_t>(v)];
    if (e.col_lo != std::min(a.column, b.column) || e.col_hi != std::max(a.column, b.column) ||
        a.column == b.column) {
      fail("edge " + std::to_string(i) + " does not join its endpoint columns");
    }
    for (const VertexSegment* s : {&a, &b}) {
      if (e.row < s->row_lo || e.row > s->row_hi) fail("edge " + std::to_string(i) + " misses an endpoint");
    }
    for (int w = 0; w < n; ++w) {
      const VertexSegment& s = plan.vertices[static_cast<std::size_t>(w)];
      if (s.column > e.col_lo && s.column < e.col_hi && e.row >= s.row_lo && e.row <= s.row_hi) {
        fail("edge " + std::to_string(i) + " crosses vertex " + std::to_string(w));
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    const VertexSegment& s = plan.vertices[static_cast<std::size_t>(v)];
    if (s.row_lo > s.row_hi || s.row_lo < 0 || s.row_hi >= std::max(plan.rows, 1) ||
        s.column < 0 || s.column >= plan.cols) {
      fail("vertex " + std::to_string(v) + " outside the grid");
    }
    for (int w = v + 1; w < n; ++w) {
      const VertexSegment& o = plan.vertices[static_cast<std::size_t>(w)];
      if (o.column == s.column && !(o.row_hi < s.row_lo || s.row_hi < o.row_lo)) {
        fail("vertices " + std::to_string(v) + " and " + std::to_string(w) + " overlap");
      }
    }
  }
  for (int c = 0; c < g.num_clauses; ++c) {
    const auto& in = plan.clause_inputs.at(static_cast<std::size_t>(c));
    std::size_t k = 0;
    for (const IncidenceEdge& e : g.edges) k += e.clause == c ? 1 : 0;
    if (in.size() != k || k == 0 || k > 3) fail("clause " + std::to_string(c) + " inputs");
  }
}

// ---- emission ------------------------------------------------------------------

namespace {

Cell at_square(int r, int c) { return {r * kSquarePitch, c * kSquarePitch}; }

}  // namespace

ReductionArtifact emit_region(const Formula3Cnf& f, const LayoutPlan& plan,
                              const GadgetCatalog& catalog) {
  const IncidenceGraph g = build_incidence(f);
  validate_layout(plan, g);
  const GadgetSpec& wire_h = catalog.get("wire_h");
  const GadgetSpec& wire_v = catalog.get("wire_v");
  const GadgetSpec& turn_e = catalog.get("turn_e");
  const GadgetSpec& turn_w = catalog.get("turn_w");
  const GadgetSpec& term = catalog.get("term");
  // Only formulas with wide clauses need the gate.
  auto gate = [&]() -> const GadgetSpec& { return catalog.get("and"); };

  if (plan.pitch < kDefaultPitch || plan.pitch % kSquarePitch != 0) {
    throw ReductionError("pitch " + std::to_string(plan.pitch) + " is not usable");
  }
  const int unit = plan.pitch / kSquarePitch;  // square positions per layout unit
  ReductionArtifact art;
  art.formula = f;
  art.plan = plan;
  std::vector<Placement> placed;
  std::vector<Cell> lone;
  auto put = [&](const GadgetSpec& gs, int r, int c, const std::string& label) {
    placed.push_back({&gs, at_square(r, c), label});
  };

  for (int v = 0; v < f.num_vars; ++v) {
    const VertexSegment& s = plan.vertices[static_cast<std::size_t>(v)];
    const int col = unit * s.column + 2;
    for (int r = unit * s.row_lo; r < unit * s.row_hi; ++r) {
      put(wire_v, r, col, "x" + std::to_string(v + 1) + " spine");
    }
    art.variable_squares.push_back(at_square(unit * s.row_lo, col));
    lone.push_back(art.variable_squares.back());
  }

  for (int c = 0; c < g.num_clauses; ++c) {
    const std::string name = "c" + std::to_string(c + 1);
    const VertexSegment& cs = plan.vertices[static_cast<std::size_t>(g.clause_vertex(c))];
    const int base = unit * cs.column;
    const auto& inputs = plan.clause_inputs[static_cast<std::size_t>(c)];
    const int k = static_cast<int>(inputs.size());
    std::vector<int> track(static_cast<std::size_t>(k)), start(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const int ei = inputs[static_cast<std::size_t>(i)];
      const IncidenceEdge& e = g.edges[static_cast<std::size_t>(ei)];
      const int t = base + 1 + i;
      const int y = unit * plan.edges[static_cast<std::size_t>(ei)].row;
      const int spine = unit * plan.vertices[static_cast<std::size_t>(e.var)].column + 2;
      const std::string label = name + " input " + std::to_string(i + 1);
      track[static_cast<std::size_t>(i)] = t;
      start[static_cast<std::size_t>(i)] = e.negated ? y + 1 : y;
      if (spine < t) {
        const int end = e.negated ? t - 1 : t;
        for (int col = spine; col < end; ++col) put(wire_h, y, col, label);
        if (e.negated) put(turn_e, y, t - 1, label + " turn");
      } else {
        const int end = e.negated ? t + 1 : t;
        for (int col = end; col < spine; ++col) put(wire_h, y, col, label);
        if (e.negated) put(turn_w, y, t, label + " turn");
      }
    }
    const int bottom = *std::max_element(start.begin(), start.end()) + 1;
    for (int i = 0; i < k; ++i) {
      for (int r = start[static_cast<std::size_t>(i)]; r < bottom; ++r) {
        put(wire_v, r, track[static_cast<std::size_t>(i)], name + " track");
      }
    }
    int out_row = bottom;
    if (k == 2) {
      put(gate(), bottom, track[0], name + " and");
      out_row = bottom + 1;
    } else if (k == 3) {
      put(gate(), bottom, track[1], name + " and 1");
      put(wire_v, bottom, track[0], name + " track");
      put(gate(), bottom + 1, track[0], name + " and 2");
      out_row = bottom + 2;
    }
    put(term, out_row, track[0], name + " end");
    art.clause_terminators.push_back(at_square(out_row, track[0]));
  }

  try {
    art.composition = compose(placed, lone);
  } catch (const GadgetError& e) {
    throw std::logic_error(std::string("layout too dense for the gadgets: ") + e.what());
  }
  art.region = art.composition.region;
  return art;
}

ReductionArtifact reduce(const Formula3Cnf& f, const GadgetCatalog& catalog, int pitch) {
  return emit_region(f, layout(build_incidence(f), pitch), catalog);
}

std::vector<bool> decode_witness(const ReductionArtifact& a, const Covering& c) {
  const CoveringVerdict v = check_covering(a.region, c);
  if (!v.valid()) throw ReductionError("covering rejected: " + v.message);
  std::vector<bool> out;
  for (const Cell& sq : a.variable_squares) {
    const std::optional<int> phase = square_phase(c, sq);
    if (!phase) throw ReductionError("variable square is not in a square covering");
    out.push_back(interface_value(*phase, Side::E, 2));
  }
  if (!a.formula.evaluate(out)) throw std::logic_error("decoded assignment fails the formula");
  return out;
}

std::string port_map(const ReductionArtifact& a) {
  std::ostringstream os;
  os << "; square anchors (row col) of variable and clause-terminator squares\n";
  for (std::size_t i = 0; i < a.variable_squares.size(); ++i) {
    os << "var " << i + 1 << ' ' << a.variable_squares[i].row << ' ' << a.variable_squares[i].col
       << "\n";
  }
  for (std::size_t i = 0; i < a.clause_terminators.size(); ++i) {
    os << "clause " << i + 1 << ' ' << a.clause_terminators[i].row << ' '
       << a.clause_terminators[i].col << "\n";
  }
  return os.str();
}

}  // namespace tatami
