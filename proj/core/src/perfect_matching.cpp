#include "wcm/perfect_matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

namespace wcm {

namespace {

// Maximum weight matching with strictly positive weights; weight 0 means no
// edge. Vertices 1..n, blossoms n+1..2n. Dual variables are doubled so all
// arithmetic stays integral.
class Blossom {
 public:
  explicit Blossom(int n)
      : n_(n),
        cap_(2 * n + 1),
        g_(static_cast<std::size_t>(cap_) * static_cast<std::size_t>(cap_)),
        lab_(idx(cap_), 0),
        match_(idx(cap_), 0),
        slack_(idx(cap_), 0),
        st_(idx(cap_), 0),
        pa_(idx(cap_), 0),
        flower_from_(static_cast<std::size_t>(cap_) * static_cast<std::size_t>(n + 1), 0),
        s_(idx(cap_), 0),
        vis_(idx(cap_), 0),
        flower_(idx(cap_)) {
    for (int u = 1; u < cap_; ++u) {
      for (int v = 1; v < cap_; ++v) at(u, v) = {u, v, 0};
    }
  }

  void set_weight(int u, int v, Weight w) {
    at(u, v).w = w;
    at(v, u).w = w;
  }

  void solve() {
    n_x_ = n_;
    for (int u = 0; u < cap_; ++u) {
      st_[idx(u)] = u;
      flower_[idx(u)].clear();
    }
    Weight w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) {
        ff(u, v) = u == v ? u : 0;
        w_max = std::max(w_max, at(u, v).w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[idx(u)] = w_max;
    while (augment_phase()) {
    }
  }

  int mate(int u) const { return match_[idx(u)]; }

 private:
  struct E {
    int u, v;
    Weight w;
  };

  static std::size_t idx(int x) { return static_cast<std::size_t>(x); }
  E& at(int u, int v) { return g_[idx(u) * idx(cap_) + idx(v)]; }
  int& ff(int b, int x) { return flower_from_[idx(b) * idx(n_ + 1) + idx(x)]; }

  Weight delta(const E& e) const { return lab_[idx(e.u)] + lab_[idx(e.v)] - e.w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[idx(x)] || delta(at(u, x)) < delta(at(slack_[idx(x)], x))) slack_[idx(x)] = u;
  }

  void set_slack(int x) {
    slack_[idx(x)] = 0;
    for (int u = 1; u <= n_; ++u) {
      if (at(u, x).w > 0 && st_[idx(u)] != x && s_[idx(st_[idx(u)])] == 0) update_slack(u, x);
    }
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int y : flower_[idx(x)]) q_push(y);
    }
  }

  void set_st(int x, int b) {
    st_[idx(x)] = b;
    if (x > n_) {
      for (int y : flower_[idx(x)]) set_st(y, b);
    }
  }

  int get_pr(int b, int xr) {
    auto& f = flower_[idx(b)];
    const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[idx(u)] = at(u, v).v;
    if (u > n_) {
      const E e = at(u, v);
      const int xr = ff(u, e.u);
      const int pr = get_pr(u, xr);
      auto& f = flower_[idx(u)];
      for (int i = 0; i < pr; ++i) set_match(f[idx(i)], f[idx(i ^ 1)]);
      set_match(xr, v);
      std::rotate(f.begin(), f.begin() + pr, f.end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      const int xnv = st_[idx(match_[idx(u)])];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[idx(pa_[idx(xnv)])]);
      u = st_[idx(pa_[idx(xnv)])];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[idx(u)] == stamp_) return u;
      vis_[idx(u)] = stamp_;
      u = st_[idx(match_[idx(u)])];
      if (u) u = st_[idx(pa_[idx(u)])];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[idx(b)]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[idx(b)] = 0;
    s_[idx(b)] = 0;
    match_[idx(b)] = match_[idx(lca)];
    auto& f = flower_[idx(b)];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
      f.push_back(x);
      f.push_back(y = st_[idx(match_[idx(x)])]);
      q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
      f.push_back(x);
      f.push_back(y = st_[idx(match_[idx(x)])]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) at(b, x).w = at(x, b).w = 0;
    for (int x = 1; x <= n_; ++x) ff(b, x) = 0;
    for (int xs : f) {
      for (int x = 1; x <= n_x_; ++x) {
        if (at(b, x).w == 0 || delta(at(xs, x)) < delta(at(b, x))) {
          at(b, x) = at(xs, x);
          at(x, b) = at(x, xs);
        }
      }
      for (int x = 1; x <= n_; ++x) {
        if (ff(xs, x)) ff(b, x) = xs;
      }
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    auto& f = flower_[idx(b)];
    for (int x : f) set_st(x, x);
    const int xr = ff(b, at(b, pa_[idx(b)]).u);
    const int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = f[idx(i)];
      const int xns = f[idx(i + 1)];
      pa_[idx(xs)] = at(xns, xs).u;
      s_[idx(xs)] = 1;
      s_[idx(xns)] = 0;
      slack_[idx(xs)] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[idx(xr)] = 1;
    pa_[idx(xr)] = pa_[idx(b)];
    for (std::size_t i = idx(pr) + 1; i < f.size(); ++i) {
      s_[idx(f[i])] = -1;
      set_slack(f[i]);
    }
    st_[idx(b)] = 0;
  }

  bool on_found_edge(const E& e) {
    const int u = st_[idx(e.u)];
    const int v = st_[idx(e.v)];
    if (s_[idx(v)] == -1) {
      pa_[idx(v)] = e.u;
      s_[idx(v)] = 1;
      const int nu = st_[idx(match_[idx(v)])];
      slack_[idx(v)] = slack_[idx(nu)] = 0;
      s_[idx(nu)] = 0;
      q_push(nu);
    } else if (s_[idx(v)] == 0) {
      const int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool augment_phase() {
    for (int x = 1; x <= n_x_; ++x) {
      s_[idx(x)] = -1;
      slack_[idx(x)] = 0;
    }
    q_.clear();
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[idx(x)] == x && !match_[idx(x)]) {
        pa_[idx(x)] = 0;
        s_[idx(x)] = 0;
        q_push(x);
      }
    }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        const int u = q_.front();
        q_.pop_front();
        if (s_[idx(st_[idx(u)])] == 1) continue;
        for (int v = 1; v <= n_; ++v) {
          if (at(u, v).w > 0 && st_[idx(u)] != st_[idx(v)]) {
            if (delta(at(u, v)) == 0) {
              if (on_found_edge(at(u, v))) return true;
            } else {
              update_slack(u, st_[idx(v)]);
            }
          }
        }
      }
      Weight d = std::numeric_limits<Weight>::max();
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b && s_[idx(b)] == 1) d = std::min(d, lab_[idx(b)] / 2);
      }
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[idx(x)] == x && slack_[idx(x)]) {
          if (s_[idx(x)] == -1) {
            d = std::min(d, delta(at(slack_[idx(x)], x)));
          } else if (s_[idx(x)] == 0) {
            d = std::min(d, delta(at(slack_[idx(x)], x)) / 2);
          }
        }
      }
      for (int u = 1; u <= n_; ++u) {
        if (s_[idx(st_[idx(u)])] == 0) {
          if (lab_[idx(u)] <= d) return false;
          lab_[idx(u)] -= d;
        } else if (s_[idx(st_[idx(u)])] == 1) {
          lab_[idx(u)] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b) {
          if (s_[idx(st_[idx(b)])] == 0) {
            lab_[idx(b)] += d * 2;
          } else if (s_[idx(st_[idx(b)])] == 1) {
            lab_[idx(b)] -= d * 2;
          }
        }
      }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[idx(x)] == x && slack_[idx(x)] && st_[idx(slack_[idx(x)])] != x &&
            delta(at(slack_[idx(x)], x)) == 0) {
          if (on_found_edge(at(slack_[idx(x)], x))) return true;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[idx(b)] == b && s_[idx(b)] == 1 && lab_[idx(b)] == 0) expand_blossom(b);
      }
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int stamp_ = 0;
  std::vector<E> g_;
  std::vector<Weight> lab_;
  std::vector<int> match_;
  std::vector<int> slack_;
  std::vector<int> st_;
  std::vector<int> pa_;
  std::vector<int> flower_from_;
  std::vector<int> s_;
  std::vector<int> vis_;
  std::vector<std::vector<int>> flower_;
  std::deque<int> q_;
};

}  // namespace

Matching max_weight_perfect_matching(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n % 2 != 0) throw Error("no perfect matching: odd vertex count");
  if (n == 0) return Matching{};
  // Shifting every weight by more than twice the total magnitude makes
  // every maximum weight matching a maximum cardinality one.
  Weight magnitude = 0;
  for (const Edge& e : g.edges()) magnitude += std::llabs(e.w);
  const Weight shift = 2 * magnitude + 1;
  Blossom solver(n);
  for (const Edge& e : g.edges()) solver.set_weight(e.u + 1, e.v + 1, e.w + shift);
  solver.solve();
  std::vector<EdgeId> edges;
  for (Vertex v = 0; v < n; ++v) {
    const int m = solver.mate(v + 1);
    if (m == 0) throw Error("no perfect matching");
    if (m - 1 > v) edges.push_back(*g.find_edge(v, m - 1));
  }
  return Matching::from_edges(g, std::move(edges));
}

}  // namespace wcm
