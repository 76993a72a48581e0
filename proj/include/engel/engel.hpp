#pragma once

// Engel words, Engel depth, the sets I_n(G), and the graphs built on them:
// Engel graphs, the commuting graph and the prime graph.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "engel/digraph.hpp"
#include "engel/group.hpp"

namespace engel {

/// min{n >= 0 : [x,_n y] = 1}, or infinite.
struct EngelDepth {
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value = 0;

  static EngelDepth infinite() { return {kInfinite}; }
  bool is_infinite() const { return value == kInfinite; }
  bool at_most(std::uint32_t n) const { return value <= n; }
  friend auto operator<=>(const EngelDepth&, const EngelDepth&) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value); }
};

/// [x,_n y].
inline ElementId engel_word(const Group& G, ElementId x, ElementId y, unsigned n) {
  for (unsigned i = 0; i < n; ++i) x = G.commutator(x, y);
  return x;
}

/// Iterates z <- [z, y] from z = x. The sequence is deterministic in a finite
/// group, so revisiting a non-identity element means it never reaches 1.
inline EngelDepth engel_depth(const Group& G, ElementId x, ElementId y) {
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t generation = 0;
  if (stamp.size() < G.order()) {
    stamp.assign(G.order(), 0);
    generation = 0;
  }
  if (++generation == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    generation = 1;
  }
  ElementId z = x;
  for (std::uint32_t k = 0;; ++k) {
    if (z == G.identity()) return {k};
    if (stamp[z] == generation) return EngelDepth::infinite();
    stamp[z] = generation;
    z = G.commutator(z, y);
  }
}

/// x ->_n y, i.e. [x,_n y] = 1.
inline bool engel_arc(const Group& G, ElementId x, ElementId y, unsigned n) {
  return engel_word(G, x, y, n) == G.identity();
}

/// I_n(G): elements x with [x,_n y] = [y,_n x] = 1 for all y. Membership is
/// conjugation invariant, so one representative per class is tested.
inline std::vector<ElementId> engel_set(const Group& G, unsigned n) {
  std::vector<ElementId> out;
  for (const auto& cls : G.classes()) {
    const ElementId x = cls.representative;
    bool member = true;
    for (ElementId y = 0; y < G.order() && member; ++y)
      member = engel_arc(G, x, y, n) && engel_arc(G, y, x, n);
    if (member) out.insert(out.end(), cls.members.begin(), cls.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Gamma_n(G) as an arc oracle on vertex set G \ I_n(G). Local vertex
/// indices follow increasing element index.
class EngelGraphView {
 public:
  EngelGraphView(const Group& G, unsigned n) : G_(&G), n_(n) {
    if (n == 0) throw std::invalid_argument("Engel index must be >= 1");
    excluded_ = engel_set(G, n);
    is_vertex_.assign(G.order(), 1);
    for (auto x : excluded_) is_vertex_[x] = 0;
    local_.assign(G.order(), SIZE_MAX);
    for (ElementId x = 0; x < G.order(); ++x)
      if (is_vertex_[x]) {
        local_[x] = vertices_.size();
        vertices_.push_back(x);
      }
  }

  const Group& group() const { return *G_; }
  unsigned index() const { return n_; }
  const std::vector<ElementId>& vertices() const { return vertices_; }
  const std::vector<ElementId>& engel_elements() const { return excluded_; }
  bool is_vertex(ElementId x) const { return is_vertex_[x] != 0; }
  std::size_t local_index(ElementId x) const { return local_[x]; }

  std::size_t vertex_count() const { return vertices_.size(); }
  bool has_arc(std::size_t u, std::size_t v) const { return engel_arc(*G_, vertices_[u], vertices_[v], n_); }

  template <class F>
  void for_each_out_neighbor(ElementId x, F&& f) const {
    for (auto y : vertices_)
      if (engel_arc(*G_, x, y, n_)) f(y);
  }
  template <class F>
  void for_each_in_neighbor(ElementId x, F&& f) const {
    for (auto y : vertices_)
      if (engel_arc(*G_, y, x, n_)) f(y);
  }
  std::vector<ElementId> out_neighbors(ElementId x) const {
    std::vector<ElementId> r;
    for_each_out_neighbor(x, [&](ElementId y) { r.push_back(y); });
    return r;
  }
  std::vector<ElementId> in_neighbors(ElementId x) const {
    std::vector<ElementId> r;
    for_each_in_neighbor(x, [&](ElementId y) { r.push_back(y); });
    return r;
  }

  /// Local index of the first involution, else 0.
  std::size_t preferred_start() const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (G_->element_order(vertices_[i]) == 2) return i;
    return 0;
  }

  static constexpr std::size_t kMaterializeLimit = 2000;

  Digraph materialize() const {
    if (vertices_.size() > kMaterializeLimit)
      throw std::length_error("Engel graph too large to materialise (" + std::to_string(vertices_.size()) +
                              " vertices)");
    return Digraph::materialize(*this);
  }

 private:
  const Group* G_;
  unsigned n_;
  std::vector<ElementId> excluded_;
  std::vector<char> is_vertex_;
  std::vector<std::size_t> local_;
  std::vector<ElementId> vertices_;
};

/// Depth rows for class representatives; d(x, y) = d(r, y^{t^-1}) when x = r^t.
class DepthTable {
 public:
  explicit DepthTable(const Group& G) : G_(&G), rows_(G.classes().size()), once_(G.classes().size()) {}

  EngelDepth depth(ElementId x, ElementId y) const {
    const std::size_t c = G_->class_of(x);
    std::call_once(once_[c], [&] {
      const ElementId r = G_->classes()[c].representative;
      auto& row = rows_[c];
      row.resize(G_->order());
      for (ElementId z = 0; z < G_->order(); ++z) row[z] = engel_depth(*G_, r, z);
    });
    const ElementId t = G_->class_conjugator(x);
    return rows_[c][G_->conjugate(y, G_->inverse(t))];
  }

 private:
  const Group* G_;
  mutable std::vector<std::vector<EngelDepth>> rows_;
  mutable std::vector<std::once_flag> once_;
};

/// Connected components of the commuting graph on G \ Z(G), each sorted,
/// ordered by smallest element. Uses C(r^t) = C(r)^t per class.
inline std::vector<std::vector<ElementId>> commuting_components(const Group& G) {
  const auto z = center(G);
  std::vector<char> central(G.order(), 0);
  for (auto x : z) central[x] = 1;
  DisjointSets ds(G.order());
  for (const auto& cls : G.classes()) {
    if (central[cls.representative]) continue;
    const Subgroup C = centralizer(G, cls.representative);
    for (auto x : cls.members) {
      const ElementId t = G.class_conjugator(x);
      for (auto c : C.elements) {
        const ElementId y = G.conjugate(c, t);
        if (!central[y]) ds.unite(x, y);
      }
    }
  }
  std::vector<std::vector<ElementId>> out;
  for (auto& b : ds.blocks()) {
    if (central[b.front()]) continue;
    out.emplace_back(b.begin(), b.end());
  }
  return out;
}

struct PrimeGraph {
  std::vector<std::uint64_t> primes;                       // pi(G), ascending
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // r < s

  bool adjacent(std::uint64_t r, std::uint64_t s) const {
    return edges.count({std::min(r, s), std::max(r, s)}) != 0;
  }

  /// Components as sorted prime lists, ordered by smallest prime.
  std::vector<std::vector<std::uint64_t>> components() const {
    auto blocks = undirected_components(primes.size(), [&](std::size_t a, std::size_t b) {
      return adjacent(primes[a], primes[b]);
    });
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& b : blocks) {
      std::vector<std::uint64_t> comp;
      for (auto i : b) comp.push_back(primes[i]);
      out.push_back(std::move(comp));
    }
    return out;
  }
};

inline PrimeGraph prime_graph(const Group& G) {
  PrimeGraph pg;
  pg.primes = util::prime_divisors(G.order());
  std::set<std::uint64_t> orders;
  for (const auto& cls : G.classes()) orders.insert(cls.element_order);
  for (auto o : orders) {
    const auto ps = util::prime_divisors(o);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) pg.edges.emplace(ps[i], ps[j]);
  }
  return pg;
}

/// Sorted set of element orders.
inline std::vector<std::uint64_t> order_spectrum(const Group& G) {
  std::set<std::uint64_t> s;
  for (const auto& cls : G.classes()) s.insert(cls.element_order);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Emitters for materialised graphs (vertices labelled by index and cycles).

inline std::string to_dot(const EngelGraphView& view) {
  const Digraph d = view.materialize();
  const Group& G = view.group();
  std::ostringstream os;
  os << "digraph engel_" << view.index() << " {\n";
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    os << "  v" << view.vertices()[u] << " [label=\"" << view.vertices()[u] << ": "
       << G.element(view.vertices()[u]).to_string() << "\"];\n";
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    for (auto v : d.out(u))
      if (u != v) os << "  v" << view.vertices()[u] << " -> v" << view.vertices()[v] << ";\n";
  os << "}\n";
  return os.str();
}

/// {"n", "order", "vertices": [{"id", "cycles"}], "arcs": [[from, to], ...]};
/// loops omitted.
inline nlohmann::json to_json(const EngelGraphView& view) {
  const Digraph d = view.materialize();
  const Group& G = view.group();
  nlohmann::json j;
  j["n"] = view.index();
  j["order"] = G.order();
  j["vertices"] = nlohmann::json::array();
  for (auto x : view.vertices()) j["vertices"].push_back({{"id", x}, {"cycles", G.element(x).to_string()}});
  j["arcs"] = nlohmann::json::array();
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    for (auto v : d.out(u))
      if (u != v) j["arcs"].push_back({view.vertices()[u], view.vertices()[v]});
  return j;
}

inline std::string condensation_dot(const SccResult& scc) {
  std::ostringstream os;
  os << "digraph condensation {\n";
  for (std::size_t c = 0; c < scc.count; ++c) os << "  c" << c << ";\n";
  for (const auto& [a, b] : scc.condensation) os << "  c" << a << " -> c" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace engel
