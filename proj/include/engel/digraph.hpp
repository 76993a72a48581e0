#pragma once

// Directed-graph algorithms over explicit adjacency lists or arc oracles.

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace engel {

/// Anything answering "is (u, v) an arc" over vertices 0..vertex_count()-1.
template <class O>
concept ArcOracle = requires(const O& o, std::size_t u, std::size_t v) {
  { o.vertex_count() } -> std::convertible_to<std::size_t>;
  { o.has_arc(u, v) } -> std::convertible_to<bool>;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  /// Blocks ordered by their smallest member; members ascending.
  std::vector<std::vector<std::size_t>> blocks() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(parent_.size(), SIZE_MAX);
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const std::size_t r = find(x);
      if (slot[r] == SIZE_MAX) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

/// Vertices reachable from `start`, by level-synchronous pull BFS: each
/// unvisited vertex is tested against the current frontier only. Arcs are
/// never stored. `reverse` follows arcs backwards.
template <ArcOracle O>
std::vector<char> reachable_set(const O& g, std::size_t start, bool reverse = false, unsigned threads = 1) {
  const std::size_t n = g.vertex_count();
  std::vector<char> visited(n, 0);
  if (n == 0) return visited;
  visited[start] = 1;
  std::vector<std::size_t> frontier{start};
  std::vector<std::size_t> unvisited;
  unvisited.reserve(n - 1);
  for (std::size_t v = 0; v < n; ++v)
    if (v != start) unvisited.push_back(v);
  threads = std::max(1u, threads);

  std::vector<char> hit;
  while (!frontier.empty() && !unvisited.empty()) {
    hit.assign(unvisited.size(), 0);
    auto scan = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const std::size_t y = unvisited[i];
        for (std::size_t x : frontier) {
          if (reverse ? g.has_arc(y, x) : g.has_arc(x, y)) {
            hit[i] = 1;
            break;
          }
        }
      }
    };
    if (threads == 1 || unvisited.size() < 256) {
      scan(0, unvisited.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (unvisited.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(unvisited.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(scan, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    std::vector<std::size_t> next, rest;
    for (std::size_t i = 0; i < unvisited.size(); ++i) {
      if (hit[i]) {
        visited[unvisited[i]] = 1;
        next.push_back(unvisited[i]);
      } else {
        rest.push_back(unvisited[i]);
      }
    }
    frontier = std::move(next);
    unvisited = std::move(rest);
  }
  return visited;
}

struct StrongConnectivity {
  bool strongly_connected = false;
  bool forward_complete = false;
  bool backward_checked = false;
  bool backward_complete = false;
  std::size_t forward_reached = 0;
  std::size_t backward_reached = 0;
};

/// Double BFS from one vertex: strongly connected iff it reaches every vertex
/// and every vertex reaches it. Backward search is skipped once forward fails.
template <ArcOracle O>
StrongConnectivity strong_connectivity(const O& g, std::size_t start = 0, unsigned threads = 1) {
  StrongConnectivity r;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("strong connectivity of an empty digraph");
  auto fwd = reachable_set(g, start, false, threads);
  r.forward_reached = static_cast<std::size_t>(std::count(fwd.begin(), fwd.end(), 1));
  r.forward_complete = r.forward_reached == n;
  if (!r.forward_complete) return r;
  auto bwd = reachable_set(g, start, true, threads);
  r.backward_checked = true;
  r.backward_reached = static_cast<std::size_t>(std::count(bwd.begin(), bwd.end(), 1));
  r.backward_complete = r.backward_reached == n;
  r.strongly_connected = r.backward_complete;
  return r;
}

template <ArcOracle O>
bool is_strongly_connected(const O& g, std::size_t start = 0, unsigned threads = 1) {
  return strong_connectivity(g, start, threads).strongly_connected;
}

/// Materialised digraph with adjacency lists.
class Digraph {
 public:
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  template <ArcOracle O>
  static Digraph materialize(const O& g) {
    Digraph d(g.vertex_count());
    for (std::size_t u = 0; u < d.vertex_count(); ++u)
      for (std::size_t v = 0; v < d.vertex_count(); ++v)
        if (g.has_arc(u, v)) d.add_arc(u, v);
    return d;
  }

  void add_arc(std::size_t u, std::size_t v) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const {
    std::size_t m = 0;
    for (const auto& a : out_) m += a.size();
    return m;
  }
  const std::vector<std::size_t>& out(std::size_t u) const { return out_[u]; }
  const std::vector<std::size_t>& in(std::size_t u) const { return in_[u]; }
  bool has_arc(std::size_t u, std::size_t v) const {
    return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
  }

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Neighbour-stream digraph: visit(u, f) calls f(v) for each out- (or in-)
/// neighbour v of u.
struct StreamDigraph {
  using Visitor = std::function<void(std::size_t)>;
  std::size_t vertex_count = 0;
  std::function<void(std::size_t, const Visitor&)> out_neighbors;
  std::function<void(std::size_t, const Visitor&)> in_neighbors;
};

inline std::size_t stream_reach_count(const StreamDigraph& g, std::size_t start, bool reverse) {
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<std::size_t> queue{start};
  seen[start] = 1;
  const auto& next = reverse ? g.in_neighbors : g.out_neighbors;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    next(queue[i], [&](std::size_t v) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    });
  }
  return queue.size();
}

inline bool is_strongly_connected(const StreamDigraph& g, std::size_t start = 0) {
  if (g.vertex_count == 0) throw std::invalid_argument("strong connectivity of an empty digraph");
  return stream_reach_count(g, start, false) == g.vertex_count &&
         stream_reach_count(g, start, true) == g.vertex_count;
}

inline StreamDigraph as_stream(const Digraph& d) {
  StreamDigraph s;
  s.vertex_count = d.vertex_count();
  s.out_neighbors = [&d](std::size_t u, const StreamDigraph::Visitor& f) {
    for (auto v : d.out(u)) f(v);
  };
  s.in_neighbors = [&d](std::size_t u, const StreamDigraph::Visitor& f) {
    for (auto v : d.in(u)) f(v);
  };
  return s;
}

inline bool is_strongly_connected(const Digraph& d, std::size_t start = 0) {
  return is_strongly_connected(as_stream(d), start);
}

struct SccResult {
  std::vector<std::size_t> component;  // per vertex
  std::size_t count = 0;
  std::set<std::pair<std::size_t, std::size_t>> condensation;  // arcs between components
};

/// Iterative Tarjan. Component ids come out in reverse topological order.
inline SccResult tarjan_scc(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  SccResult r;
  r.component.assign(n, kUnset);
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& adj = g.out(f.v);
      if (f.edge < adj.size()) {
        const std::size_t w = adj[f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          r.component[w] = r.count;
        } while (w != v);
        ++r.count;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : g.out(u))
      if (r.component[u] != r.component[v]) r.condensation.emplace(r.component[u], r.component[v]);
  return r;
}

/// Union-find components of a symmetric adjacency predicate. Throws if some
/// adjacency is not reciprocated.
inline std::vector<std::vector<std::size_t>> undirected_components(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent) {
  DisjointSets ds(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool a = adjacent(u, v), b = adjacent(v, u);
      if (a != b) throw std::invalid_argument("asymmetric adjacency between vertices " + std::to_string(u) + " and " +
                                              std::to_string(v));
      if (a) ds.unite(u, v);
    }
  return ds.blocks();
}

}  // namespace engel
