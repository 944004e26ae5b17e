#include "wcm/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace wcm {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

std::string num(long long v) { return std::to_string(v); }

std::string literal_label(int lit) { return "x." + num(std::abs(lit)) + (lit > 0 ? "+" : "-"); }

class Builder {
 public:
  Vertex vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const Vertex v = graph.add_vertex();
    labels.push_back(label);
    index_.emplace(label, v);
    return v;
  }

  void edge(const std::string& a, const std::string& b, Weight w) {
    const Vertex u = vertex(a);
    const Vertex v = vertex(b);
    if (auto e = graph.find_edge(u, v)) {
      if (graph.edge(*e).w != w) throw Error("conflicting weights on gadget edge " + a + " " + b);
      return;
    }
    graph.add_edge(u, v, w);
  }

  LabeledInstance finish(ReductionKind kind, Weight k, ReductionSource source) {
    LabeledInstance out;
    out.kind = kind;
    out.graph = std::move(graph);
    out.k = k;
    out.labels = std::move(labels);
    out.source = std::move(source);
    out.rebuild_index();
    return out;
  }

  WeightedGraph graph;
  std::vector<std::string> labels;

 private:
  std::unordered_map<std::string, Vertex> index_;
};

void check_cnf(const Cnf& f, bool three_literals) {
  if (f.num_vars < 0) throw Error("negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (c.empty()) throw Error("clause " + num(static_cast<long long>(j) + 1) + " is empty");
    if (three_literals && c.size() != 3) {
      throw Error("clause " + num(static_cast<long long>(j) + 1) + " has " + num(static_cast<long long>(c.size())) +
                  " literals, expected 3");
    }
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > f.num_vars) {
        throw Error("clause " + num(static_cast<long long>(j) + 1) + " has literal " + num(lit) + " out of range");
      }
    }
  }
}

std::vector<int> clause_key(const std::vector<int>& c) {
  std::vector<int> key = c;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

std::vector<std::string> split_label(const std::string& label) {
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  return parts;
}

Matching matching_from_labels(const LabeledInstance& inst,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EdgeId> edges;
  for (const auto& [a, b] : pairs) {
    const auto e = inst.graph.find_edge(inst.at(a), inst.at(b));
    if (!e) throw Error("gadget edge " + a + " " + b + " missing from instance");
    edges.push_back(*e);
  }
  return Matching::from_edges(inst.graph, std::move(edges));
}

void check_target(const LabeledInstance& inst, const Matching& m) {
  if (!induced_by_matching_connected(inst.graph, m)) throw Error("matching is not connected");
  if (m.weight() < inst.k) {
    throw Error("matching weight " + num(m.weight()) + " is below the threshold " + num(inst.k));
  }
}

Assignment read_assignment(const LabeledInstance& inst, const Matching& m, int num_vars) {
  Assignment a(idx(num_vars), false);
  for (int i = 1; i <= num_vars; ++i) a[idx(i - 1)] = m.saturates(inst.at("x." + num(i) + "+"));
  return a;
}

void require_satisfying(const Cnf& f, const Assignment& a, const std::string& what) {
  if (static_cast<int>(a.size()) != f.num_vars) {
    throw Error(what + ": assignment has " + num(static_cast<long long>(a.size())) + " values for " + num(f.num_vars) +
                " variables");
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    bool ok = false;
    for (int lit : f.clauses[j]) ok = ok || a[idx(std::abs(lit) - 1)] == (lit > 0);
    if (!ok) throw Error(what + ": clause " + num(static_cast<long long>(j) + 1) + " is not satisfied");
  }
}

/// Deduplicated union of the clause sets, in first-occurrence order.
std::vector<std::vector<int>> union_clauses(const std::vector<Cnf>& instances) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  for (const Cnf& f : instances) {
    for (const auto& c : f.clauses) {
      auto key = clause_key(c);
      if (seen.insert(key).second) out.push_back(std::move(key));
    }
  }
  return out;
}

}  // namespace

bool satisfies(const Cnf& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars) return false;
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (int lit : c) ok = ok || a[idx(std::abs(lit) - 1)] == (lit > 0);
    if (!ok) return false;
  }
  return true;
}

std::optional<Assignment> solve_sat_exhaustive(const Cnf& f) {
  check_cnf(f, false);
  if (f.num_vars > 24) throw Error("truth-table search limited to 24 variables");
  Assignment a(idx(f.num_vars));
  for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
    for (int i = 0; i < f.num_vars; ++i) a[idx(i)] = (mask >> i) & 1u;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::string check_steiner_tree(const SteinerInstance& inst, const SteinerTree& t) {
  const WeightedGraph& g = inst.graph;
  std::vector<char> in_tree(idx(g.num_vertices()), 0);
  for (Vertex v : t.vertices) {
    if (!g.has_vertex(v)) return "tree vertex " + num(v + 1) + " out of range";
    if (in_tree[idx(v)]) return "tree vertex " + num(v + 1) + " repeated";
    in_tree[idx(v)] = 1;
  }
  WeightedGraph tree(g.num_vertices());
  for (auto [u, v] : t.edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.find_edge(u, v)) {
      return "tree edge " + num(u + 1) + " " + num(v + 1) + " is not a source edge";
    }
    if (!in_tree[idx(u)] || !in_tree[idx(v)]) return "tree edge endpoint outside the tree vertex set";
    if (tree.find_edge(u, v)) return "tree edge repeated";
    tree.add_edge(u, v, 0);
  }
  for (Vertex r : inst.terminals) {
    if (!g.has_vertex(r) || !in_tree[idx(r)]) return "terminal " + num(r + 1) + " not in tree";
  }
  if (!t.vertices.empty()) {
    if (t.edges.size() + 1 != t.vertices.size()) return "edge count does not match a tree";
    if (!induces_connected(tree, t.vertices)) return "tree is not connected";
  }
  if (static_cast<int>(t.edges.size()) > inst.budget) {
    return "tree uses " + num(static_cast<long long>(t.edges.size())) + " edges, budget " + num(inst.budget);
  }
  return {};
}

std::optional<SteinerTree> solve_steiner_exhaustive(const SteinerInstance& inst) {
  const WeightedGraph& g = inst.graph;
  const int m = g.num_edges();
  if (m > 24) throw Error("exhaustive Steiner search limited to 24 edges");
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > inst.budget) continue;
    SteinerTree t;
    std::set<Vertex> vs(inst.terminals.begin(), inst.terminals.end());
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1u) {
        t.edges.emplace_back(g.edge(e).u, g.edge(e).v);
        vs.insert(g.edge(e).u);
        vs.insert(g.edge(e).v);
      }
    }
    t.vertices.assign(vs.begin(), vs.end());
    if (check_steiner_tree(inst, t).empty()) return t;
  }
  return std::nullopt;
}

std::string check_set_cover(const SetCoverInstance& inst, const SetFamily& family) {
  std::vector<char> covered(idx(inst.universe), 0);
  std::set<int> seen;
  for (int s : family) {
    if (s < 0 || s >= static_cast<int>(inst.sets.size())) return "set index " + num(s + 1) + " out of range";
    if (!seen.insert(s).second) return "set " + num(s + 1) + " repeated";
    for (int e : inst.sets[idx(s)]) covered[idx(e)] = 1;
  }
  for (int e = 0; e < inst.universe; ++e) {
    if (!covered[idx(e)]) return "element " + num(e + 1) + " not covered";
  }
  if (static_cast<int>(family.size()) > inst.budget) {
    return "family has " + num(static_cast<long long>(family.size())) + " sets, budget " + num(inst.budget);
  }
  return {};
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Starlike:
      return "starlike";
    case ReductionKind::Bip4:
      return "bip4";
    case ReductionKind::PlanarSubcubic:
      return "planar-subcubic";
    case ReductionKind::PlanarBipartite:
      return "planar-bipartite";
    case ReductionKind::CrossComposition:
      return "crosscomp";
    case ReductionKind::WcsToWcm:
      return "wcs";
  }
  return "unknown";
}

ReductionKind parse_reduction_kind(const std::string& name) {
  for (auto kind : {ReductionKind::Starlike, ReductionKind::Bip4, ReductionKind::PlanarSubcubic,
                    ReductionKind::PlanarBipartite, ReductionKind::CrossComposition, ReductionKind::WcsToWcm}) {
    if (to_string(kind) == name) return kind;
  }
  if (name == "steiner") return ReductionKind::PlanarSubcubic;
  throw Error("unknown reduction kind '" + name + "'");
}

Vertex LabeledInstance::at(const std::string& label) const {
  auto v = find(label);
  if (!v) throw Error("label '" + label + "' not present in instance");
  return *v;
}

std::optional<Vertex> LabeledInstance::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void LabeledInstance::rebuild_index() {
  if (static_cast<int>(labels.size()) != graph.num_vertices()) throw Error("label count does not match vertex count");
  index_.clear();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].empty()) throw Error("vertex " + num(static_cast<long long>(v) + 1) + " has no label");
    if (!index_.emplace(labels[v], static_cast<Vertex>(v)).second) throw Error("label '" + labels[v] + "' repeated");
  }
}

SteinerParams steiner_params(const SteinerInstance& inst) {
  SteinerParams s;
  const WeightedGraph& g = inst.graph;
  s.q = g.max_degree();
  s.p = s.q * (g.num_vertices() - static_cast<Weight>(inst.terminals.size())) + 1;
  s.r = s.p * g.num_edges() + 1;
  s.k = s.r * static_cast<Weight>(inst.terminals.size()) - s.p * inst.budget;
  return s;
}

LabeledInstance gen_starlike(const Cnf& f) {
  check_cnf(f, true);
  Builder b;
  for (int i = 1; i <= f.num_vars; ++i) {
    const std::string x = "x." + num(i);
    b.edge(x, x + "+", 1);
    b.edge(x, x + "-", 1);
    b.edge(x + "+", x + "-", -1);
  }
  for (int i = 1; i <= f.num_vars; ++i) {
    for (int j = i + 1; j <= f.num_vars; ++j) {
      for (const char* si : {"+", "-"}) {
        for (const char* sj : {"+", "-"}) b.edge("x." + num(i) + si, "x." + num(j) + sj, -1);
      }
    }
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string c = "c." + num(static_cast<long long>(j) + 1);
    b.edge(c + "+", c + "-", 1);
    for (int lit : f.clauses[j]) {
      b.edge(c + "+", literal_label(lit), -1);
      b.edge(c + "-", literal_label(lit), -1);
    }
  }
  return b.finish(ReductionKind::Starlike, f.num_vars + static_cast<Weight>(f.clauses.size()), f);
}

LabeledInstance gen_bip4(const Cnf& f) {
  check_cnf(f, true);
  Builder b;
  b.edge("h+", "h-", 1);
  for (int i = 1; i <= f.num_vars; ++i) {
    const std::string x = "x." + num(i);
    b.edge(x + "+", x, 1);
    b.edge(x, x + "-", 1);
    b.edge(x, "h+", 0);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string c = "c." + num(static_cast<long long>(j) + 1);
    b.edge(c + "+", c + "-", 1);
    for (int lit : f.clauses[j]) b.edge(c + "+", literal_label(lit), 0);
  }
  b.vertex("u");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) b.edge("c." + num(static_cast<long long>(j) + 1) + "+", "u", 0);
  for (int i = 1; i <= f.num_vars; ++i) {
    b.edge("x." + num(i) + "+", "h-", 0);
    b.edge("x." + num(i) + "-", "h-", 0);
  }
  for (int i = 1; i <= f.num_vars; ++i) {
    for (int j = 1; j <= f.num_vars; ++j) {
      if (i == j) continue;
      b.edge("x." + num(i), "x." + num(j) + "+", 0);
      b.edge("x." + num(i), "x." + num(j) + "-", 0);
    }
  }
  return b.finish(ReductionKind::Bip4, f.num_vars + static_cast<Weight>(f.clauses.size()) + 1, f);
}

LabeledInstance gen_planar_subcubic(const SteinerInstance& inst) {
  const WeightedGraph& g = inst.graph;
  if (inst.terminals.empty()) throw Error("Steiner instance needs at least one terminal");
  std::vector<char> terminal(idx(g.num_vertices()), 0);
  for (Vertex r : inst.terminals) {
    if (!g.has_vertex(r)) throw Error("terminal " + num(r + 1) + " out of range");
    if (terminal[idx(r)]) throw Error("terminal " + num(r + 1) + " repeated");
    terminal[idx(r)] = 1;
  }
  const SteinerParams s = steiner_params(inst);
  Builder b;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    const Weight length = terminal[idx(w)] ? 2 * s.r : 2 * s.q;
    std::vector<Vertex> nbrs;
    for (EdgeId e : g.incident(w)) nbrs.push_back(g.other(e, w));
    std::sort(nbrs.begin(), nbrs.end());
    const auto d = static_cast<Weight>(nbrs.size());
    std::vector<std::string> names(static_cast<std::size_t>(length));
    for (Weight t = 0; t < length; ++t) names[static_cast<std::size_t>(t)] = "cyc." + num(w + 1) + "." + num(t + 1);
    for (Weight i = 0; i < d; ++i) {
      names[static_cast<std::size_t>(i * length / d)] = "vw." + num(w + 1) + "." + num(nbrs[static_cast<std::size_t>(i)] + 1);
    }
    for (Weight t = 0; t < length; ++t) b.vertex(names[static_cast<std::size_t>(t)]);
    for (Weight t = 0; t + 1 < length; ++t) {
      b.edge(names[static_cast<std::size_t>(t)], names[static_cast<std::size_t>(t + 1)], 1);
    }
    if (length >= 3) b.edge(names[static_cast<std::size_t>(length - 1)], names[0], 1);
  }
  for (const Edge& e : g.edges()) {
    const Vertex w = std::min(e.u, e.v);
    const Vertex u = std::max(e.u, e.v);
    const std::string prefix = "path." + num(w + 1) + "." + num(u + 1) + ".";
    for (Weight t = 1; t < 2 * s.p; ++t) b.edge(prefix + num(t), prefix + num(t + 1), -1);
    b.edge(prefix + "1", "vw." + num(w + 1) + "." + num(u + 1), -1);
    b.edge(prefix + num(2 * s.p), "vw." + num(u + 1) + "." + num(w + 1), -1);
  }
  return b.finish(ReductionKind::PlanarSubcubic, s.k, inst);
}

LabeledInstance gen_planar_bipartite(const Cnf& f) {
  check_cnf(f, false);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    const bool pos = c[0] > 0;
    for (int lit : c) {
      if ((lit > 0) != pos) throw Error("clause " + num(static_cast<long long>(j) + 1) + " is not monotone");
    }
  }
  Builder b;
  const int n = f.num_vars;
  for (int i = 1; i <= n; ++i) {
    const std::string x = "x." + num(i);
    b.vertex(x);
    b.edge(x, x + "+", 1);
    b.edge(x, x + "-", 1);
    b.edge("v." + num(i), "u." + num(i), 1);
  }
  for (int i = 1; i <= n; ++i) {
    b.edge("v." + num(i), "x." + num(i), 0);
    b.edge("v." + num(i), "x." + num(i % n + 1), 0);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string c = "c." + num(static_cast<long long>(j) + 1);
    b.edge(c + "+", c + "-", 1);
    for (int lit : f.clauses[j]) b.edge(c + "+", literal_label(lit), 0);
  }
  return b.finish(ReductionKind::PlanarBipartite, 2 * static_cast<Weight>(n) + static_cast<Weight>(f.clauses.size()), f);
}

LabeledInstance gen_crosscomp(const std::vector<Cnf>& instances) {
  if (instances.empty()) throw Error("cross-composition needs at least one instance");
  const int n = instances[0].num_vars;
  for (std::size_t l = 0; l < instances.size(); ++l) {
    if (instances[l].num_vars != n) {
      throw Error("instance " + num(static_cast<long long>(l) + 1) + " has a different variable set");
    }
    check_cnf(instances[l], false);
  }
  const auto clauses = union_clauses(instances);
  Builder b;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const std::string c = "c." + num(static_cast<long long>(j) + 1);
    b.edge(c + "+", c + "-", 1);
  }
  for (int i = 1; i <= n; ++i) {
    const std::string x = "x." + num(i);
    b.edge(x + "-", x + "*", 1);
    b.edge(x + "*", x + "+", 1);
  }
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    for (int lit : clauses[j]) b.edge("c." + num(static_cast<long long>(j) + 1) + "+", literal_label(lit), 0);
  }
  b.edge("h+", "h-", 1);
  for (int i = 1; i <= n; ++i) b.edge("h+", "x." + num(i) + "*", 0);
  for (std::size_t l = 0; l < instances.size(); ++l) {
    const std::string y = "y." + num(static_cast<long long>(l) + 1);
    b.edge("q", y, 1);
    std::set<std::vector<int>> own;
    for (const auto& c : instances[l].clauses) own.insert(clause_key(c));
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (!own.count(clauses[j])) b.edge("c." + num(static_cast<long long>(j) + 1) + "-", y, 0);
    }
    b.edge("h+", y, 0);
  }
  const Weight k = static_cast<Weight>(clauses.size()) + n + 2;
  return b.finish(ReductionKind::CrossComposition, k, instances);
}

LabeledInstance gen_wcs_to_wcm(const VertexWeightedGraph& g, Weight k) {
  Weight q = 1;
  for (Weight w : g.weights()) q += std::max<Weight>(w, 0);
  Builder b;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    b.edge("vert." + num(w + 1), "pair." + num(w + 1), g.weight(w));
  }
  for (auto [x, y] : g.edges()) b.edge("vert." + num(x + 1), "vert." + num(y + 1), -q);
  return b.finish(ReductionKind::WcsToWcm, k, WcsSource{g, k});
}

WcsInstance gen_setcover_to_wcs(const SetCoverInstance& inst) {
  const int q = inst.universe;
  const int p = static_cast<int>(inst.sets.size());
  std::vector<char> covered(idx(q), 0);
  for (int j = 0; j < p; ++j) {
    if (inst.sets[idx(j)].empty()) throw Error("set " + num(j + 1) + " is empty");
    for (int e : inst.sets[idx(j)]) {
      if (e < 0 || e >= q) throw Error("set " + num(j + 1) + " holds element " + num(e + 1) + " out of range");
      covered[idx(e)] = 1;
    }
  }
  for (int e = 0; e < q; ++e) {
    if (!covered[idx(e)]) throw Error("element " + num(e + 1) + " is in no set");
  }
  WcsInstance out;
  const Vertex h = out.graph.add_vertex(q + 1);
  out.labels.push_back("h+");
  for (int e = 0; e < q; ++e) {
    out.graph.add_vertex(q + 1);
    out.labels.push_back("x." + num(e + 1));
  }
  for (int j = 0; j < p; ++j) {
    const Vertex c = out.graph.add_vertex(-1);
    out.labels.push_back("c." + num(j + 1) + "+");
    std::vector<int> members = inst.sets[idx(j)];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int e : members) out.graph.add_edge(1 + e, c);
    out.graph.add_edge(h, c);
  }
  out.k = static_cast<Weight>(q + 1) * (p + 1) - inst.budget;
  return out;
}

LabeledInstance attach_source(ReductionKind kind, WeightedGraph graph, Weight k, std::vector<std::string> labels,
                              ReductionSource source) {
  LabeledInstance inst;
  inst.kind = kind;
  inst.graph = std::move(graph);
  inst.k = k;
  inst.labels = std::move(labels);
  inst.source = std::move(source);
  inst.rebuild_index();
  // Regenerate and compare so that certificates are translated against the
  // construction the labels claim to describe.
  LabeledInstance fresh;
  switch (kind) {
    case ReductionKind::Starlike:
      fresh = gen_starlike(std::get<Cnf>(inst.source));
      break;
    case ReductionKind::Bip4:
      fresh = gen_bip4(std::get<Cnf>(inst.source));
      break;
    case ReductionKind::PlanarSubcubic:
      fresh = gen_planar_subcubic(std::get<SteinerInstance>(inst.source));
      break;
    case ReductionKind::PlanarBipartite:
      fresh = gen_planar_bipartite(std::get<Cnf>(inst.source));
      break;
    case ReductionKind::CrossComposition:
      fresh = gen_crosscomp(std::get<std::vector<Cnf>>(inst.source));
      break;
    case ReductionKind::WcsToWcm: {
      const auto& src = std::get<WcsSource>(inst.source);
      fresh = gen_wcs_to_wcm(src.graph, src.k);
      break;
    }
  }
  if (fresh.graph.num_vertices() != inst.graph.num_vertices() || fresh.graph.num_edges() != inst.graph.num_edges()) {
    throw Error("graph does not match the " + to_string(kind) + " construction of the source");
  }
  for (const Edge& e : fresh.graph.edges()) {
    const auto& la = fresh.labels[idx(e.u)];
    const auto& lb = fresh.labels[idx(e.v)];
    const auto a = inst.find(la);
    const auto b2 = inst.find(lb);
    if (!a || !b2) throw Error("label map lacks gadget vertex " + (a ? lb : la));
    const auto found = inst.graph.find_edge(*a, *b2);
    if (!found || inst.graph.edge(*found).w != e.w) {
      throw Error("graph edge " + la + " " + lb + " differs from the construction");
    }
  }
  if (fresh.k != inst.k) throw Error("threshold " + num(inst.k) + " differs from the construction value " + num(fresh.k));
  return inst;
}

Matching lift_certificate(const LabeledInstance& inst, const SourceSolution& solution) {
  std::vector<std::pair<std::string, std::string>> pairs;
  auto variable_edges = [&](const Assignment& a, const char* center_suffix) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string x = "x." + num(static_cast<long long>(i) + 1);
      pairs.emplace_back(x + center_suffix, x + (a[i] ? "+" : "-"));
    }
  };
  auto clause_edges = [&](std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
      const std::string c = "c." + num(static_cast<long long>(j) + 1);
      pairs.emplace_back(c + "+", c + "-");
    }
  };
  switch (inst.kind) {
    case ReductionKind::Starlike:
    case ReductionKind::Bip4:
    case ReductionKind::PlanarBipartite: {
      const Cnf& f = std::get<Cnf>(inst.source);
      const auto* a = std::get_if<Assignment>(&solution);
      if (!a) throw Error("expected a truth assignment");
      require_satisfying(f, *a, "source solution");
      variable_edges(*a, "");
      clause_edges(f.clauses.size());
      if (inst.kind == ReductionKind::Bip4) pairs.emplace_back("h+", "h-");
      if (inst.kind == ReductionKind::PlanarBipartite) {
        for (int i = 1; i <= f.num_vars; ++i) pairs.emplace_back("v." + num(i), "u." + num(i));
      }
      break;
    }
    case ReductionKind::CrossComposition: {
      const auto& instances = std::get<std::vector<Cnf>>(inst.source);
      const auto* cert = std::get_if<CrossCompositionCertificate>(&solution);
      if (!cert) throw Error("expected a cross-composition certificate");
      if (cert->instance < 0 || cert->instance >= static_cast<int>(instances.size())) {
        throw Error("certificate names instance " + num(cert->instance + 1) + " out of range");
      }
      require_satisfying(instances[idx(cert->instance)], cert->assignment, "source solution");
      variable_edges(cert->assignment, "*");
      clause_edges(union_clauses(instances).size());
      pairs.emplace_back("h+", "h-");
      pairs.emplace_back("q", "y." + num(cert->instance + 1));
      break;
    }
    case ReductionKind::PlanarSubcubic: {
      const auto& src = std::get<SteinerInstance>(inst.source);
      const auto* tree = std::get_if<SteinerTree>(&solution);
      if (!tree) throw Error("expected a Steiner tree");
      if (auto why = check_steiner_tree(src, *tree); !why.empty()) throw Error("source solution: " + why);
      std::vector<EdgeId> edges;
      std::vector<char> in_gadget(idx(inst.graph.num_vertices()), 0);
      for (Vertex w : tree->vertices) {
        const std::string cyc = "cyc." + num(w + 1) + ".";
        const std::string vw = "vw." + num(w + 1) + ".";
        std::vector<Vertex> members;
        for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
          const auto& l = inst.labels[idx(v)];
          if (l.rfind(cyc, 0) == 0 || l.rfind(vw, 0) == 0) {
            members.push_back(v);
            in_gadget[idx(v)] = 1;
          }
        }
        if (members.empty()) continue;
        // Walk the gadget cycle (or path) and take every other edge.
        Vertex start = members[0];
        for (Vertex v : members) {
          int gadget_degree = 0;
          for (EdgeId e : inst.graph.incident(v)) gadget_degree += in_gadget[idx(inst.graph.other(e, v))];
          if (gadget_degree == 1) start = v;
        }
        Vertex prev = -1;
        Vertex cur = start;
        std::vector<EdgeId> walk;
        while (walk.size() + 1 < members.size()) {
          EdgeId next = -1;
          for (EdgeId e : inst.graph.incident(cur)) {
            const Vertex o = inst.graph.other(e, cur);
            if (o != prev && in_gadget[idx(o)]) {
              next = e;
              break;
            }
          }
          if (next == -1) break;
          walk.push_back(next);
          prev = cur;
          cur = inst.graph.other(next, cur);
        }
        for (std::size_t i = 0; i < walk.size(); i += 2) edges.push_back(walk[i]);
        for (Vertex v : members) in_gadget[idx(v)] = 0;
      }
      const SteinerParams s = steiner_params(src);
      for (auto [a, b] : tree->edges) {
        const std::string prefix = "path." + num(std::min(a, b) + 1) + "." + num(std::max(a, b) + 1) + ".";
        for (Weight t = 1; t < 2 * s.p; t += 2) {
          const auto e = inst.graph.find_edge(inst.at(prefix + num(t)), inst.at(prefix + num(t + 1)));
          edges.push_back(*e);
        }
      }
      return Matching::from_edges(inst.graph, std::move(edges));
    }
    case ReductionKind::WcsToWcm: {
      const auto* vs = std::get_if<std::vector<Vertex>>(&solution);
      if (!vs) throw Error("expected a vertex set");
      const auto& src = std::get<WcsSource>(inst.source);
      if (!induces_connected(src.graph, *vs)) throw Error("source solution: vertex set is not connected");
      for (Vertex w : *vs) {
        if (w < 0 || w >= src.graph.num_vertices()) throw Error("source solution: vertex out of range");
        pairs.emplace_back("vert." + num(w + 1), "pair." + num(w + 1));
      }
      break;
    }
  }
  return matching_from_labels(inst, pairs);
}

SourceSolution project_certificate(const LabeledInstance& inst, const Matching& m) {
  check_target(inst, m);
  switch (inst.kind) {
    case ReductionKind::Starlike:
    case ReductionKind::Bip4:
    case ReductionKind::PlanarBipartite: {
      const Cnf& f = std::get<Cnf>(inst.source);
      Assignment a = read_assignment(inst, m, f.num_vars);
      require_satisfying(f, a, "projected assignment");
      return a;
    }
    case ReductionKind::CrossComposition: {
      const auto& instances = std::get<std::vector<Cnf>>(inst.source);
      const Vertex q = inst.at("q");
      int chosen = -1;
      for (EdgeId e : m.edges()) {
        const Edge& ed = inst.graph.edge(e);
        if (ed.u != q && ed.v != q) continue;
        const auto parts = split_label(inst.labels[idx(ed.u == q ? ed.v : ed.u)]);
        chosen = std::stoi(parts.at(1)) - 1;
      }
      if (chosen == -1) throw Error("matching leaves q unsaturated");
      CrossCompositionCertificate cert{chosen, read_assignment(inst, m, instances[0].num_vars)};
      require_satisfying(instances[idx(chosen)], cert.assignment, "projected assignment");
      return cert;
    }
    case ReductionKind::PlanarSubcubic: {
      const auto& src = std::get<SteinerInstance>(inst.source);
      const int n = src.graph.num_vertices();
      std::vector<char> touched(idx(n), 0);
      std::map<std::pair<Vertex, Vertex>, int> path_unsaturated;
      for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
        const auto parts = split_label(inst.labels[idx(v)]);
        if (parts[0] == "cyc" || parts[0] == "vw") {
          if (m.saturates(v)) touched[idx(std::stoi(parts[1]) - 1)] = 1;
        } else if (parts[0] == "path") {
          auto& count = path_unsaturated[{std::stoi(parts[1]) - 1, std::stoi(parts[2]) - 1}];
          if (!m.saturates(v)) ++count;
        }
      }
      std::vector<std::vector<Vertex>> adj(idx(n));
      for (const auto& [key, missing] : path_unsaturated) {
        if (missing == 0 && touched[idx(key.first)] && touched[idx(key.second)]) {
          adj[idx(key.first)].push_back(key.second);
          adj[idx(key.second)].push_back(key.first);
        }
      }
      SteinerTree tree;
      const Vertex root = src.terminals.at(0);
      std::vector<char> seen(idx(n), 0);
      std::deque<Vertex> queue{root};
      seen[idx(root)] = 1;
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        tree.vertices.push_back(v);
        for (Vertex u : adj[idx(v)]) {
          if (seen[idx(u)]) continue;
          seen[idx(u)] = 1;
          tree.edges.emplace_back(std::min(u, v), std::max(u, v));
          queue.push_back(u);
        }
      }
      std::sort(tree.vertices.begin(), tree.vertices.end());
      std::sort(tree.edges.begin(), tree.edges.end());
      if (auto why = check_steiner_tree(src, tree); !why.empty()) throw Error("projected tree: " + why);
      return tree;
    }
    case ReductionKind::WcsToWcm: {
      const auto& src = std::get<WcsSource>(inst.source);
      std::vector<Vertex> vs;
      Weight total = 0;
      for (Vertex w = 0; w < src.graph.num_vertices(); ++w) {
        const auto e = inst.graph.find_edge(inst.at("vert." + num(w + 1)), inst.at("pair." + num(w + 1)));
        if (std::binary_search(m.edges().begin(), m.edges().end(), *e)) {
          vs.push_back(w);
          total += src.graph.weight(w);
        }
      }
      if (!induces_connected(src.graph, vs)) throw Error("projected vertex set is not connected");
      if (total < src.k) throw Error("projected vertex set weight " + num(total) + " is below " + num(src.k));
      return vs;
    }
  }
  throw Error("unknown reduction kind");
}

std::vector<Vertex> lift_set_cover(const WcsInstance& inst, const SetCoverInstance& source, const SetFamily& family) {
  if (auto why = check_set_cover(source, family); !why.empty()) throw Error("source solution: " + why);
  std::vector<Vertex> out{0};
  for (int e = 0; e < source.universe; ++e) out.push_back(1 + e);
  for (int s : family) out.push_back(1 + source.universe + s);
  std::sort(out.begin(), out.end());
  if (!induces_connected(inst.graph, out)) throw Error("lifted vertex set is not connected");
  return out;
}

SetFamily project_set_cover(const WcsInstance& inst, const SetCoverInstance& source, std::span<const Vertex> vertices) {
  if (!induces_connected(inst.graph, vertices)) throw Error("vertex set is not connected");
  Weight total = 0;
  SetFamily family;
  for (Vertex v : vertices) {
    if (v < 0 || v >= inst.graph.num_vertices()) throw Error("vertex out of range");
    total += inst.graph.weight(v);
    if (v > source.universe) family.push_back(v - 1 - source.universe);
  }
  if (total < inst.k) throw Error("vertex set weight " + num(total) + " is below " + num(inst.k));
  std::sort(family.begin(), family.end());
  if (auto why = check_set_cover(source, family); !why.empty()) throw Error("projected family: " + why);
  return family;
}

}  // namespace wcm
