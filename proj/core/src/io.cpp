#include "wcm/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace wcm {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

class LineReader {
 public:
  explicit LineReader(std::istream& in, bool keep_comments = false) : in_(in), keep_comments_(keep_comments) {}

  /// Next non-blank line split on whitespace; comment lines are skipped
  /// unless requested.
  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::istringstream ss(raw);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty()) continue;
      if (tokens[0] == "c" && !keep_comments_) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw Error("line " + std::to_string(line_) + ": " + msg); }

  long long integer(const std::string& token) const {
    long long v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + token + "'");
    return v;
  }

  /// 1-based id in [1, n], returned 0-based.
  Vertex vertex(const std::string& token, int n) const {
    const long long v = integer(token);
    if (v < 1 || v > n) fail("vertex " + token + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
  }

  void arity(const std::vector<std::string>& tokens, std::size_t expected) const {
    if (tokens.size() != expected) {
      fail("'" + tokens[0] + "' line expects " + std::to_string(expected - 1) + " fields, got " +
           std::to_string(tokens.size() - 1));
    }
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  bool keep_comments_;
  int line_ = 0;
};

/// Reads the "p <format> a b" header; returns (a, b).
std::pair<int, int> read_header(LineReader& r, const std::string& format) {
  std::vector<std::string> t;
  if (!r.next(t)) throw Error("missing 'p " + format + "' header");
  if (t[0] != "p" || t.size() != 4 || t[1] != format) r.fail("expected 'p " + format + " <a> <b>' header");
  const long long a = r.integer(t[2]);
  const long long b = r.integer(t[3]);
  if (a < 0 || b < 0 || a > (1LL << 30) || b > (1LL << 30)) r.fail("header counts out of range");
  return {static_cast<int>(a), static_cast<int>(b)};
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  LineReader r(in);
  const auto [n, m] = read_header(r, "wcm");
  WeightedGraph g(n);
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] != "e") r.fail("unexpected line type '" + t[0] + "'");
    r.arity(t, 4);
    if (g.num_edges() == m) r.fail("more than " + std::to_string(m) + " edge lines");
    const Vertex u = r.vertex(t[1], n);
    const Vertex v = r.vertex(t[2], n);
    const Weight w = r.integer(t[3]);
    if (u == v) r.fail("self-loop on vertex " + t[1]);
    if (g.find_edge(u, v)) r.fail("duplicate edge " + t[1] + " " + t[2]);
    g.add_edge(u, v, w);
  }
  if (g.num_edges() != m) {
    throw Error("header declares " + std::to_string(m) + " edges, found " + std::to_string(g.num_edges()));
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p wcm " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

Matching read_certificate(std::istream& in, const WeightedGraph& g) {
  LineReader r(in);
  std::vector<EdgeId> edges;
  std::vector<char> used(idx(g.num_vertices()), 0);
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] != "m") r.fail("unexpected line type '" + t[0] + "'");
    r.arity(t, 3);
    const Vertex u = r.vertex(t[1], g.num_vertices());
    const Vertex v = r.vertex(t[2], g.num_vertices());
    const auto e = g.find_edge(u, v);
    if (!e) r.fail("no edge " + t[1] + " " + t[2] + " in graph");
    for (Vertex x : {u, v}) {
      if (used[idx(x)]) r.fail("vertex " + std::to_string(x + 1) + " matched twice");
      used[idx(x)] = 1;
    }
    edges.push_back(*e);
  }
  return Matching::from_edges(g, std::move(edges));
}

void write_certificate(std::ostream& out, const WeightedGraph& g, const Matching& m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (EdgeId e : m.edges()) {
    const Edge& ed = g.edge(e);
    pairs.emplace_back(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
  }
  std::sort(pairs.begin(), pairs.end());
  for (auto [u, v] : pairs) out << "m " << u + 1 << ' ' << v + 1 << '\n';
}

LabelMap read_map(std::istream& in, int num_vertices) {
  LineReader r(in, true);
  LabelMap map;
  map.labels.assign(idx(num_vertices), {});
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "c") {
      if (t.size() == 3 && t[1] == "kind") map.kind = t[2];
      if (t.size() == 3 && t[1] == "k") map.k = r.integer(t[2]);
      continue;
    }
    if (t[0] != "map") r.fail("unexpected line type '" + t[0] + "'");
    r.arity(t, 3);
    const Vertex v = r.vertex(t[1], num_vertices);
    if (!map.labels[idx(v)].empty()) r.fail("vertex " + t[1] + " labelled twice");
    map.labels[idx(v)] = t[2];
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (map.labels[idx(v)].empty()) throw Error("vertex " + std::to_string(v + 1) + " has no label");
  }
  return map;
}

void write_map(std::ostream& out, const LabeledInstance& inst) {
  out << "c kind " << to_string(inst.kind) << '\n';
  out << "c k " << inst.k << '\n';
  for (std::size_t v = 0; v < inst.labels.size(); ++v) out << "map " << v + 1 << ' ' << inst.labels[v] << '\n';
}

Cnf read_cnf(std::istream& in) {
  LineReader r(in);
  const auto [n, m] = read_header(r, "cnf");
  Cnf f;
  f.num_vars = n;
  std::vector<int> clause;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "%") break;
    for (const auto& tok : t) {
      const long long lit = r.integer(tok);
      if (lit == 0) {
        if (clause.empty()) r.fail("empty clause");
        f.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (lit < -n || lit > n) r.fail("literal " + tok + " out of range for " + std::to_string(n) + " variables");
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!clause.empty()) throw Error("last clause is not terminated by 0");
  if (static_cast<int>(f.clauses.size()) != m) {
    throw Error("header declares " + std::to_string(m) + " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

void write_cnf(std::ostream& out, const Cnf& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

SteinerInstance read_steiner(std::istream& in) {
  LineReader r(in);
  const auto [n, m] = read_header(r, "steiner");
  SteinerInstance inst;
  inst.graph = WeightedGraph(n);
  bool have_budget = false;
  std::vector<char> terminal(idx(n), 0);
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "e") {
      r.arity(t, 3);
      const Vertex u = r.vertex(t[1], n);
      const Vertex v = r.vertex(t[2], n);
      if (u == v) r.fail("self-loop on vertex " + t[1]);
      if (inst.graph.find_edge(u, v)) r.fail("duplicate edge " + t[1] + " " + t[2]);
      inst.graph.add_edge(u, v, 1);
    } else if (t[0] == "t") {
      r.arity(t, 2);
      const Vertex v = r.vertex(t[1], n);
      if (terminal[idx(v)]) r.fail("terminal " + t[1] + " repeated");
      terminal[idx(v)] = 1;
      inst.terminals.push_back(v);
    } else if (t[0] == "k") {
      r.arity(t, 2);
      const long long k = r.integer(t[1]);
      if (k < 0 || k > (1LL << 30)) r.fail("budget out of range");
      inst.budget = static_cast<int>(k);
      have_budget = true;
    } else {
      r.fail("unexpected line type '" + t[0] + "'");
    }
  }
  if (inst.graph.num_edges() != m) {
    throw Error("header declares " + std::to_string(m) + " edges, found " + std::to_string(inst.graph.num_edges()));
  }
  if (!have_budget) throw Error("missing 'k <budget>' line");
  return inst;
}

void write_steiner(std::ostream& out, const SteinerInstance& inst) {
  out << "p steiner " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (Vertex v : inst.terminals) out << "t " << v + 1 << '\n';
  out << "k " << inst.budget << '\n';
}

SetCoverInstance read_setcover(std::istream& in) {
  LineReader r(in);
  const auto [q, p] = read_header(r, "setcover");
  SetCoverInstance inst;
  inst.universe = q;
  bool have_budget = false;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "s") {
      if (t.size() < 2) r.fail("empty set");
      std::vector<int> set;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const long long e = r.integer(t[i]);
        if (e < 1 || e > q) r.fail("element " + t[i] + " out of range 1.." + std::to_string(q));
        set.push_back(static_cast<int>(e - 1));
      }
      inst.sets.push_back(std::move(set));
    } else if (t[0] == "k") {
      r.arity(t, 2);
      const long long k = r.integer(t[1]);
      if (k < 0 || k > (1LL << 30)) r.fail("budget out of range");
      inst.budget = static_cast<int>(k);
      have_budget = true;
    } else {
      r.fail("unexpected line type '" + t[0] + "'");
    }
  }
  if (static_cast<int>(inst.sets.size()) != p) {
    throw Error("header declares " + std::to_string(p) + " sets, found " + std::to_string(inst.sets.size()));
  }
  if (!have_budget) throw Error("missing 'k <budget>' line");
  return inst;
}

void write_setcover(std::ostream& out, const SetCoverInstance& inst) {
  out << "p setcover " << inst.universe << ' ' << inst.sets.size() << '\n';
  for (const auto& s : inst.sets) {
    out << 's';
    for (int e : s) out << ' ' << e + 1;
    out << '\n';
  }
  out << "k " << inst.budget << '\n';
}

WcsSource read_wcs(std::istream& in) {
  LineReader r(in);
  const auto [n, m] = read_header(r, "wcs");
  std::vector<Weight> weights(idx(n), 0);
  std::vector<char> seen(idx(n), 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> edge_set;
  WcsSource src;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "v") {
      r.arity(t, 3);
      const Vertex v = r.vertex(t[1], n);
      if (seen[idx(v)]) r.fail("vertex " + t[1] + " weighted twice");
      seen[idx(v)] = 1;
      weights[idx(v)] = r.integer(t[2]);
    } else if (t[0] == "e") {
      r.arity(t, 3);
      const Vertex u = r.vertex(t[1], n);
      const Vertex v = r.vertex(t[2], n);
      if (u == v) r.fail("self-loop on vertex " + t[1]);
      if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second) r.fail("duplicate edge " + t[1] + " " + t[2]);
      edges.emplace_back(u, v);
    } else if (t[0] == "k") {
      r.arity(t, 2);
      src.k = r.integer(t[1]);
    } else {
      r.fail("unexpected line type '" + t[0] + "'");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[idx(v)]) throw Error("vertex " + std::to_string(v + 1) + " has no 'v' line");
  }
  if (static_cast<int>(edges.size()) != m) {
    throw Error("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  src.graph = VertexWeightedGraph(std::move(weights));
  for (auto [u, v] : edges) src.graph.add_edge(u, v);
  return src;
}

void write_wcs(std::ostream& out, const VertexWeightedGraph& g, Weight k, const std::vector<std::string>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << "c map " << v + 1 << ' ' << labels[v] << '\n';
  out << "p wcs " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  out << "k " << k << '\n';
}

SourceSolution read_source_solution(std::istream& in, ReductionKind kind, const ReductionSource& source) {
  LineReader r(in);
  std::vector<std::string> t;
  switch (kind) {
    case ReductionKind::Starlike:
    case ReductionKind::Bip4:
    case ReductionKind::PlanarBipartite:
    case ReductionKind::CrossComposition: {
      const int n = kind == ReductionKind::CrossComposition ? std::get<std::vector<Cnf>>(source).at(0).num_vars
                                                            : std::get<Cnf>(source).num_vars;
      std::vector<int> value(idx(n), -1);
      int instance = -1;
      bool terminated = false;
      while (r.next(t)) {
        if (t[0] == "i" && kind == ReductionKind::CrossComposition) {
          r.arity(t, 2);
          const long long l = r.integer(t[1]);
          const auto count = static_cast<long long>(std::get<std::vector<Cnf>>(source).size());
          if (l < 1 || l > count) r.fail("instance " + t[1] + " out of range 1.." + std::to_string(count));
          instance = static_cast<int>(l - 1);
          continue;
        }
        if (t[0] != "v") r.fail("unexpected line type '" + t[0] + "'");
        for (std::size_t i = 1; i < t.size(); ++i) {
          const long long lit = r.integer(t[i]);
          if (lit == 0) {
            terminated = true;
            continue;
          }
          if (lit < -n || lit > n) r.fail("literal " + t[i] + " out of range");
          auto& slot = value[idx(static_cast<int>(std::abs(lit)) - 1)];
          if (slot != -1) r.fail("variable " + std::to_string(std::abs(lit)) + " assigned twice");
          slot = lit > 0 ? 1 : 0;
        }
      }
      if (!terminated) throw Error("assignment is not terminated by 0");
      Assignment a(idx(n));
      for (int i = 0; i < n; ++i) {
        if (value[idx(i)] == -1) throw Error("variable " + std::to_string(i + 1) + " unassigned");
        a[idx(i)] = value[idx(i)] == 1;
      }
      if (kind != ReductionKind::CrossComposition) return a;
      if (instance == -1) throw Error("missing 'i <instance>' line");
      return CrossCompositionCertificate{instance, std::move(a)};
    }
    case ReductionKind::PlanarSubcubic: {
      const int n = std::get<SteinerInstance>(source).graph.num_vertices();
      SteinerTree tree;
      while (r.next(t)) {
        if (t[0] == "n") {
          r.arity(t, 2);
          tree.vertices.push_back(r.vertex(t[1], n));
        } else if (t[0] == "e") {
          r.arity(t, 3);
          tree.edges.emplace_back(r.vertex(t[1], n), r.vertex(t[2], n));
        } else {
          r.fail("unexpected line type '" + t[0] + "'");
        }
      }
      return tree;
    }
    case ReductionKind::WcsToWcm: {
      const int n = std::get<WcsSource>(source).graph.num_vertices();
      std::vector<Vertex> vs;
      while (r.next(t)) {
        if (t[0] != "n") r.fail("unexpected line type '" + t[0] + "'");
        r.arity(t, 2);
        vs.push_back(r.vertex(t[1], n));
      }
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw Error("vertex listed twice");
      return vs;
    }
  }
  throw Error("unknown reduction kind");
}

void write_source_solution(std::ostream& out, const SourceSolution& solution) {
  auto write_assignment = [&](const Assignment& a) {
    out << 'v';
    for (std::size_t i = 0; i < a.size(); ++i) out << ' ' << (a[i] ? "" : "-") << i + 1;
    out << " 0\n";
  };
  if (const auto* a = std::get_if<Assignment>(&solution)) {
    write_assignment(*a);
  } else if (const auto* c = std::get_if<CrossCompositionCertificate>(&solution)) {
    out << "i " << c->instance + 1 << '\n';
    write_assignment(c->assignment);
  } else if (const auto* tree = std::get_if<SteinerTree>(&solution)) {
    for (Vertex v : tree->vertices) out << "n " << v + 1 << '\n';
    for (auto [u, v] : tree->edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    for (Vertex v : std::get<std::vector<Vertex>>(solution)) out << "n " << v + 1 << '\n';
  }
}

}  // namespace wcm
