#include "wcm/tree_decomposition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace wcm {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return static_cast<int>(best) - 1;
}

int NiceTreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return static_cast<int>(best) - 1;
}

int validate_td(const WeightedGraph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (n == 0) return -1;
    throw Error("decomposition has no bags");
  }
  if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
    throw Error("bag graph is not a tree: " + std::to_string(td.tree_edges.size()) + " edges for " +
                std::to_string(nb) + " bags");
  }
  std::vector<std::vector<int>> tree_adj(idx(nb));
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      throw Error("bag tree edge out of range: " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    }
    tree_adj[idx(a)].push_back(b);
    tree_adj[idx(b)].push_back(a);
  }
  {
    std::vector<char> seen(idx(nb), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[idx(x)]) {
        if (!seen[idx(y)]) {
          seen[idx(y)] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != nb) throw Error("bag graph is not a tree: disconnected");
  }

  std::vector<std::vector<int>> occ(idx(n));
  for (int i = 0; i < nb; ++i) {
    const auto& bag = td.bags[idx(i)];
    for (std::size_t k = 0; k < bag.size(); ++k) {
      const Vertex v = bag[k];
      if (v < 0 || v >= n) throw Error("bag " + std::to_string(i + 1) + " holds unknown vertex " + std::to_string(v + 1));
      if (k > 0 && bag[k - 1] >= v) throw Error("bag " + std::to_string(i + 1) + " is not strictly sorted");
      occ[idx(v)].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occ[idx(v)].empty()) throw Error("vertex coverage fails: vertex " + std::to_string(v + 1) + " in no bag");
  }
  for (const Edge& e : g.edges()) {
    if (!sorted_intersects(occ[idx(e.u)], occ[idx(e.v)])) {
      throw Error("edge coverage fails: edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
                  " in no bag");
    }
  }
  std::vector<int> inner_edges(idx(n), 0);
  for (auto [a, b] : td.tree_edges) {
    const auto& x = td.bags[idx(a)];
    const auto& y = td.bags[idx(b)];
    std::vector<Vertex> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    for (Vertex v : common) ++inner_edges[idx(v)];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner_edges[idx(v)] != static_cast<int>(occ[idx(v)].size()) - 1) {
      throw Error("running intersection fails: bags holding vertex " + std::to_string(v + 1) +
                  " are not connected");
    }
  }
  return td.width();
}

TreeDecomposition heuristic_td(const WeightedGraph& g, EliminationHeuristic method) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<std::set<Vertex>> adj(idx(n));
  for (const Edge& e : g.edges()) {
    adj[idx(e.u)].insert(e.v);
    adj[idx(e.v)].insert(e.u);
  }
  std::vector<char> eliminated(idx(n), 0);
  std::vector<int> position(idx(n), -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> bag_of(idx(n));

  auto fill_in = [&](Vertex v) {
    long long missing = 0;
    const auto& nv = adj[idx(v)];
    for (auto a = nv.begin(); a != nv.end(); ++a) {
      for (auto b = std::next(a); b != nv.end(); ++b) {
        if (!adj[idx(*a)].count(*b)) ++missing;
      }
    }
    return missing;
  };

  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    long long best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[idx(v)]) continue;
      const long long score = method == EliminationHeuristic::MinDegree
                                  ? static_cast<long long>(adj[idx(v)].size())
                                  : fill_in(v) * (n + 1) + static_cast<long long>(adj[idx(v)].size());
      if (pick == -1 || score < best) {
        pick = v;
        best = score;
      }
    }
    auto& bag = bag_of[idx(pick)];
    bag.assign(adj[idx(pick)].begin(), adj[idx(pick)].end());
    bag.push_back(pick);
    std::sort(bag.begin(), bag.end());
    const std::vector<Vertex> nbrs(adj[idx(pick)].begin(), adj[idx(pick)].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      adj[idx(nbrs[i])].erase(pick);
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[idx(nbrs[i])].insert(nbrs[j]);
        adj[idx(nbrs[j])].insert(nbrs[i]);
      }
    }
    adj[idx(pick)].clear();
    eliminated[idx(pick)] = 1;
    position[idx(pick)] = step;
    order.push_back(pick);
  }

  // Parent of v's bag: the bag of the earliest-eliminated later neighbour.
  std::vector<Vertex> parent(idx(n), -1);
  for (Vertex v : order) {
    for (Vertex u : bag_of[idx(v)]) {
      if (u == v) continue;
      if (parent[idx(v)] == -1 || position[idx(u)] < position[idx(parent[idx(v)])]) parent[idx(v)] = u;
    }
  }
  // Contract bags contained in their parent bag.
  std::vector<char> removed(idx(n), 0);
  for (Vertex v : order) {
    const Vertex p = parent[idx(v)];
    if (p == -1) continue;
    const auto& a = bag_of[idx(v)];
    const auto& b = bag_of[idx(p)];
    if (std::includes(b.begin(), b.end(), a.begin(), a.end())) removed[idx(v)] = 1;
  }
  auto kept_ancestor = [&](Vertex v) {
    Vertex p = parent[idx(v)];
    while (p != -1 && removed[idx(p)]) p = parent[idx(p)];
    return p;
  };
  std::vector<int> bag_id(idx(n), -1);
  for (Vertex v : order) {
    if (removed[idx(v)]) continue;
    bag_id[idx(v)] = static_cast<int>(td.bags.size());
    td.bags.push_back(bag_of[idx(v)]);
  }
  int previous_root = -1;
  for (Vertex v : order) {
    if (removed[idx(v)]) continue;
    const Vertex p = kept_ancestor(v);
    if (p != -1) {
      td.tree_edges.emplace_back(bag_id[idx(v)], bag_id[idx(p)]);
    } else {
      // Roots of separate components are chained together.
      if (previous_root != -1) td.tree_edges.emplace_back(previous_root, bag_id[idx(v)]);
      previous_root = bag_id[idx(v)];
    }
  }
  return td;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, Vertex pi) {
  const int nb = static_cast<int>(td.bags.size());
  int root_bag = -1;
  for (int i = 0; i < nb && root_bag == -1; ++i) {
    if (std::binary_search(td.bags[idx(i)].begin(), td.bags[idx(i)].end(), pi)) root_bag = i;
  }
  if (root_bag == -1) throw Error("vertex " + std::to_string(pi + 1) + " is in no bag");

  std::vector<std::vector<int>> tree_adj(idx(nb));
  for (auto [a, b] : td.tree_edges) {
    tree_adj[idx(a)].push_back(b);
    tree_adj[idx(b)].push_back(a);
  }
  std::vector<int> parent(idx(nb), -1);
  std::vector<int> order{root_bag};
  std::vector<char> seen(idx(nb), 0);
  seen[idx(root_bag)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int y : tree_adj[idx(order[i])]) {
      if (seen[idx(y)]) continue;
      seen[idx(y)] = 1;
      parent[idx(y)] = order[i];
      order.push_back(y);
    }
  }

  NiceTreeDecomposition nice;
  nice.pi = pi;
  auto push = [&](NiceKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    nice.nodes.push_back({kind, v, std::move(bag), std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  // Turns node `top` (holding bag `from`) into a chain ending at bag `to`.
  auto transition = [&](int top, const std::vector<Vertex>& to) {
    std::vector<Vertex> cur = nice.nodes[idx(top)].bag;
    std::vector<Vertex> drop;
    std::set_difference(cur.begin(), cur.end(), to.begin(), to.end(), std::back_inserter(drop));
    for (Vertex v : drop) {
      cur.erase(std::lower_bound(cur.begin(), cur.end(), v));
      top = push(NiceKind::Forget, v, cur, {top});
    }
    std::vector<Vertex> add;
    std::set_difference(to.begin(), to.end(), cur.begin(), cur.end(), std::back_inserter(add));
    for (Vertex v : add) {
      cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
      top = push(NiceKind::Introduce, v, cur, {top});
    }
    return top;
  };

  std::vector<std::vector<int>> kids(idx(nb));
  for (int i : order) {
    if (parent[idx(i)] != -1) kids[idx(parent[idx(i)])].push_back(i);
  }
  std::vector<int> top_of(idx(nb), -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const auto& bag = td.bags[idx(t)];
    std::vector<int> tops;
    for (int c : kids[idx(t)]) tops.push_back(transition(top_of[idx(c)], bag));
    if (tops.empty()) tops.push_back(transition(push(NiceKind::Leaf, -1, {}, {}), bag));
    int top = tops[0];
    for (std::size_t k = 1; k < tops.size(); ++k) top = push(NiceKind::Join, -1, bag, {top, tops[k]});
    top_of[idx(t)] = top;
  }
  int top = transition(top_of[idx(root_bag)], {pi});
  nice.root = push(NiceKind::Forget, pi, {}, {top});
  return nice;
}

void validate_nice(const NiceTreeDecomposition& nice) {
  const int count = static_cast<int>(nice.nodes.size());
  if (nice.root != count - 1) throw Error("nice decomposition root must be the last node");
  std::vector<int> parents(idx(count), 0);
  for (int i = 0; i < count; ++i) {
    const NiceNode& x = nice.nodes[idx(i)];
    for (int c : x.children) {
      if (c < 0 || c >= i) throw Error("nice node " + std::to_string(i) + " has a child that is not earlier");
      ++parents[idx(c)];
    }
    auto expect_children = [&](std::size_t k) {
      if (x.children.size() != k) throw Error("nice node " + std::to_string(i) + " has the wrong child count");
    };
    switch (x.kind) {
      case NiceKind::Leaf:
        expect_children(0);
        if (!x.bag.empty()) throw Error("leaf bag not empty at node " + std::to_string(i));
        break;
      case NiceKind::Introduce: {
        expect_children(1);
        auto child = nice.nodes[idx(x.children[0])].bag;
        child.insert(std::lower_bound(child.begin(), child.end(), x.vertex), x.vertex);
        if (child != x.bag || std::adjacent_find(child.begin(), child.end()) != child.end()) {
          throw Error("introduce node " + std::to_string(i) + " does not add exactly its vertex");
        }
        break;
      }
      case NiceKind::Forget: {
        expect_children(1);
        auto bag = x.bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), x.vertex), x.vertex);
        if (bag != nice.nodes[idx(x.children[0])].bag || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
          throw Error("forget node " + std::to_string(i) + " does not drop exactly its vertex");
        }
        break;
      }
      case NiceKind::Join:
        expect_children(2);
        for (int c : x.children) {
          if (nice.nodes[idx(c)].bag != x.bag) throw Error("join node " + std::to_string(i) + " bag mismatch");
        }
        break;
    }
  }
  for (int i = 0; i < count - 1; ++i) {
    if (parents[idx(i)] != 1) throw Error("nice node " + std::to_string(i) + " does not have exactly one parent");
  }
  const NiceNode& r = nice.nodes[idx(nice.root)];
  if (r.kind != NiceKind::Forget || r.vertex != nice.pi || !r.bag.empty()) {
    throw Error("nice root must be an empty bag forgetting the designated vertex");
  }
}

TreeDecomposition flatten(const NiceTreeDecomposition& nice) {
  TreeDecomposition td;
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    td.bags.push_back(nice.nodes[i].bag);
    for (int c : nice.nodes[i].children) td.tree_edges.emplace_back(c, static_cast<int>(i));
  }
  return td;
}

TreeDecomposition read_td(std::istream& in, int expected_vertices) {
  TreeDecomposition td;
  std::string line;
  int line_no = 0;
  bool header = false;
  int declared_bags = 0;
  int declared_vertices = 0;
  std::vector<char> bag_seen;
  auto fail = [&](const std::string& msg) { throw Error("td line " + std::to_string(line_no) + ": " + msg); };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int width_plus_one = 0;
      if (header) fail("duplicate header");
      if (!(ss >> kind >> declared_bags >> width_plus_one >> declared_vertices) || kind != "td" || declared_bags < 0 ||
          declared_vertices < 0) {
        fail("malformed header, expected 's td <bags> <width+1> <vertices>'");
      }
      if (expected_vertices >= 0 && declared_vertices != expected_vertices) {
        fail("decomposition declares " + std::to_string(declared_vertices) + " vertices, graph has " +
             std::to_string(expected_vertices));
      }
      header = true;
      td.bags.assign(idx(declared_bags), {});
      bag_seen.assign(idx(declared_bags), 0);
      continue;
    }
    if (!header) fail("content before header");
    if (tok == "b") {
      int id = 0;
      if (!(ss >> id) || id < 1 || id > declared_bags) fail("bag id out of range");
      if (bag_seen[idx(id - 1)]) fail("duplicate bag " + std::to_string(id));
      bag_seen[idx(id - 1)] = 1;
      auto& bag = td.bags[idx(id - 1)];
      long long v = 0;
      while (ss >> v) {
        if (v < 1 || v > declared_vertices) fail("vertex out of range in bag " + std::to_string(id));
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      if (!ss.eof()) fail("non-integer token in bag");
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) fail("repeated vertex in bag");
      continue;
    }
    std::istringstream edge_line(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(edge_line >> a >> b) || (edge_line >> extra)) fail("expected bag tree edge '<i> <j>'");
    if (a < 1 || b < 1 || a > declared_bags || b > declared_bags) fail("bag tree edge out of range");
    td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!header) throw Error("td: missing header");
  for (int i = 0; i < declared_bags; ++i) {
    if (!bag_seen[idx(i)]) throw Error("td: bag " + std::to_string(i + 1) + " declared but not listed");
  }
  return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int num_vertices) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace wcm
