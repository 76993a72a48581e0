#pragma once

// Class constants, permutation characters, fusion of cyclic subgroups, the
// Delta(H, C) coset graph and the character-theoretic lower bound on its
// number of components, and the slices X_Y of an involution class.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "engel/character_table.hpp"
#include "engel/cyclotomic.hpp"
#include "engel/digraph.hpp"
#include "engel/group.hpp"
#include "engel/util.hpp"

namespace engel {

namespace detail {
inline void check_class_index(std::size_t k, std::size_t i, const char* what) {
  if (i >= k) throw std::out_of_range(std::string(what) + " class index " + std::to_string(i) + " out of range");
}
}  // namespace detail

/// |{(a, b) in X_i x X_j : ab = r}| for a fixed r in X_v (the class
/// representative unless `rep` is given).
inline std::uint64_t class_constant_bruteforce(const Group& G, std::size_t i, std::size_t j, std::size_t v,
                                               std::optional<ElementId> rep = std::nullopt) {
  const auto& cls = G.classes();
  detail::check_class_index(cls.size(), i, "first");
  detail::check_class_index(cls.size(), j, "second");
  detail::check_class_index(cls.size(), v, "target");
  const ElementId r = rep.value_or(cls[v].representative);
  if (G.class_of(r) != v) throw std::invalid_argument("representative is not in the target class");
  std::uint64_t n = 0;
  for (auto a : cls[i].members)
    if (G.class_of(G.mul(G.inverse(a), r)) == j) ++n;
  return n;
}

/// (|X_i||X_j|/|G|) sum_chi chi(x_i) chi(x_j) chi(x_v^-1) / chi(1), with table
/// indices. Throws TableError unless the result is a non-negative integer.
inline Rational class_constant_formula(const CharacterTable& T, std::size_t i, std::size_t j, std::size_t v) {
  const std::size_t k = T.class_count();
  detail::check_class_index(k, i, "first");
  detail::check_class_index(k, j, "second");
  detail::check_class_index(k, v, "target");
  const std::size_t vinv = T.classes[v].inverse;
  Cyclotomic s(T.conductor);
  for (std::size_t chi = 0; chi < T.characters.size(); ++chi) {
    const auto& row = T.characters[chi];
    s += (Rational(1) / T.degree(chi)) * (row[i] * row[j] * row[vinv]);
  }
  if (!s.is_rational()) throw TableError("class constant sum is irrational for (" + T.classes[i].name + ", " +
                                         T.classes[j].name + ", " + T.classes[v].name + ")");
  const Rational a = Rational(T.classes[i].size) * Rational(T.classes[j].size) / Rational(T.group_order) *
                     s.to_rational();
  if (a < 0 || denominator(a) != 1)
    throw TableError("class constant for (" + T.classes[i].name + ", " + T.classes[j].name + ", " +
                     T.classes[v].name + ") is not a non-negative integer: " + a.str());
  return a;
}

struct ClassConstantMismatch {
  std::size_t i, j, v;  // table indices
  std::uint64_t brute;
  Rational formula;
};

struct CrosscheckReport {
  std::size_t triples = 0;
  std::vector<std::size_t> class_map;  // table class -> group class
  std::vector<ClassConstantMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares formula and brute force on every class triple.
inline CrosscheckReport crosscheck_class_constants(const Group& G, const CharacterTable& T) {
  CrosscheckReport r;
  r.class_map = match_classes(G, T);
  const std::size_t k = T.class_count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t v = 0; v < k; ++v) {
        ++r.triples;
        const auto b = class_constant_bruteforce(G, r.class_map[i], r.class_map[j], r.class_map[v]);
        const auto f = class_constant_formula(T, i, j, v);
        if (Rational(b) != f) r.mismatches.push_back({i, j, v, b, f});
      }
  return r;
}

// ---------------------------------------------------------------------------
// Permutation characters

struct PermCharacter {
  std::uint64_t index = 0;                     // |G:H| = pi(1)
  std::vector<std::uint64_t> values;           // per group class
  std::vector<Rational> multiplicities;        // <pi, chi> per table row, if decomposed
  std::optional<Rational> norm;                // <pi, pi>
};

/// pi = 1_H^G on the right cosets of H.
inline PermCharacter perm_character(const Group& G, const Subgroup& H) {
  const CosetAction A = coset_action(G, H);
  PermCharacter p;
  p.index = A.degree;
  p.values = A.fixed_points_per_class;
  return p;
}

/// Fills multiplicities and <pi, pi>; class_map[t] is the group class of
/// table class t. Throws TableError if a multiplicity is not a non-negative
/// integer.
inline void decompose(PermCharacter& pi, const CharacterTable& T, const std::vector<std::size_t>& class_map) {
  std::vector<Cyclotomic> f;
  for (std::size_t t = 0; t < T.class_count(); ++t)
    f.push_back(Cyclotomic::rational(Rational(pi.values.at(class_map.at(t))), T.conductor));
  pi.multiplicities.clear();
  for (const auto& chi : T.characters) {
    const Cyclotomic m = T.inner(f, chi);
    if (!m.is_rational() || m.to_rational() < 0 || denominator(m.to_rational()) != 1)
      throw TableError("permutation character multiplicity is not a non-negative integer: " + m.to_string());
    pi.multiplicities.push_back(m.to_rational());
  }
  pi.norm = T.inner(f, f).to_rational();
}

/// Number of (H, K) double cosets HxK.
inline std::size_t double_coset_count(const Group& G, const Subgroup& H, const Subgroup& K) {
  std::vector<char> seen(G.order(), 0);
  std::size_t n = 0;
  for (ElementId x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    ++n;
    for (auto h : H.elements) {
      const ElementId hx = G.mul(h, x);
      for (auto k : K.elements) seen[G.mul(hx, k)] = 1;
    }
  }
  return n;
}

// ---------------------------------------------------------------------------
// Fusion of a cyclic subgroup

/// Table class of x^k for k = 0 .. |C|-1, where C = <x>.
struct FusionMap {
  std::uint64_t order = 1;
  std::vector<std::size_t> power_class;
};

/// Read off an element of G; class_map as in decompose().
inline FusionMap fusion_map(const Group& G, ElementId x, const std::vector<std::size_t>& class_map) {
  std::vector<std::size_t> to_table(class_map.size(), SIZE_MAX);
  for (std::size_t t = 0; t < class_map.size(); ++t) to_table.at(class_map[t]) = t;
  FusionMap f;
  f.order = G.element_order(x);
  ElementId y = G.identity();
  for (std::uint64_t k = 0; k < f.order; ++k, y = G.mul(y, x)) f.power_class.push_back(to_table.at(G.class_of(y)));
  return f;
}

/// From the table alone, composing its prime power maps. Throws TableError
/// when a needed power map is absent.
inline FusionMap fusion_from_power_maps(const CharacterTable& T, std::size_t cls) {
  detail::check_class_index(T.class_count(), cls, "fusion");
  FusionMap f;
  f.order = T.classes[cls].element_order;
  f.power_class.push_back(0);
  for (std::uint64_t k = 1; k < f.order; ++k) {
    std::size_t c = cls;
    for (auto p : util::prime_divisors(k))
      for (unsigned e = util::valuation(k, p); e > 0 && c != 0; --e) {
        const auto it = T.classes[c].power.find(p);
        if (it == T.classes[c].power.end())
          throw TableError("missing power map pow" + std::to_string(p) + " at class " + T.classes[c].name);
        c = it->second;
      }
    f.power_class.push_back(c);
  }
  return f;
}

/// |C| <chi_C, 1> = sum_k chi(x^k); rational for a character.
inline Rational restricted_trivial_count(const CharacterTable& T, std::size_t chi, const FusionMap& f) {
  Cyclotomic s(T.conductor);
  for (auto c : f.power_class) s += T.characters.at(chi).at(c);
  return s.to_rational();
}

/// c >= |G:H| (|C|-1)^2 / sum_chi (<chi,pi>/chi(1)) (|C|<chi_C,1> - chi(1))^2.
/// Returns 0 when |C| = 1; throws std::domain_error on a zero denominator.
inline Rational lower_bound_84(const CharacterTable& T, const std::vector<Rational>& multiplicities,
                               const FusionMap& fusion) {
  if (multiplicities.size() != T.characters.size())
    throw std::invalid_argument("one multiplicity per irreducible character is required");
  const Rational C(fusion.order);
  if (fusion.order == 1) return 0;
  Rational index = 0, den = 0;
  for (std::size_t chi = 0; chi < multiplicities.size(); ++chi) {
    const Rational d = T.degree(chi);
    index += multiplicities[chi] * d;
    if (multiplicities[chi] == 0) continue;
    const Rational t = restricted_trivial_count(T, chi, fusion) - d;
    den += multiplicities[chi] / d * t * t;
  }
  if (den == 0) throw std::domain_error("lower bound denominator vanishes");
  return index * (C - 1) * (C - 1) / den;
}

// ---------------------------------------------------------------------------
// Hypotheses 0-3 and the Delta(H, C) graph

/// Conjugates of C \ {1}, sorted.
inline std::vector<ElementId> conjugate_closure(const Group& G, const Subgroup& C) {
  std::vector<char> in(G.order(), 0);
  for (auto c : C.elements)
    if (c != G.identity())
      for (auto x : G.classes()[G.class_of(c)].members) in[x] = 1;
  std::vector<ElementId> out;
  for (ElementId x = 0; x < G.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

struct HypothesesReport {
  bool cyclic = false;
  bool hyp0 = false;  // H and the closure are disjoint
  bool hyp1 = false;  // closure = {c^g}
  bool hyp2 = false;  // C^g meets C trivially off N_G(C)
  bool hyp3 = false;  // N_G(C) Frobenius with kernel C
  std::size_t closure_size = 0;
  std::size_t normalizer_order = 0;

  bool holds_0_to_2() const { return cyclic && hyp0 && hyp1 && hyp2; }
  bool holds() const { return holds_0_to_2() && hyp3; }
};

inline HypothesesReport hypotheses_check(const Group& G, const Subgroup& H, const Subgroup& C) {
  require_subgroup(G, H);
  require_subgroup(G, C);
  HypothesesReport r;
  r.cyclic = std::any_of(C.elements.begin(), C.elements.end(),
                         [&](ElementId x) { return G.element_order(x) == C.order(); });
  const auto closure = conjugate_closure(G, C);
  r.closure_size = closure.size();

  r.hyp0 = std::none_of(closure.begin(), closure.end(), [&](ElementId x) { return H.contains(x); });

  // Rebuild {c^g} by brute force and compare with the class union.
  std::vector<char> hit(G.order(), 0);
  for (auto c : C.elements)
    if (c != G.identity())
      for (ElementId g = 0; g < G.order(); ++g) hit[G.conjugate(c, g)] = 1;
  std::vector<ElementId> direct;
  for (ElementId x = 0; x < G.order(); ++x)
    if (hit[x]) direct.push_back(x);
  r.hyp1 = direct == closure;

  const Subgroup N = normalizer(G, C);
  r.normalizer_order = N.order();
  r.hyp2 = true;
  for (ElementId g = 0; g < G.order() && r.hyp2; ++g) {
    if (N.contains(g)) continue;
    for (auto c : C.elements)
      if (c != G.identity() && C.contains(G.conjugate(c, g))) {
        r.hyp2 = false;
        break;
      }
  }

  r.hyp3 = C.order() > 1 && N.order() > C.order();
  for (auto n : N.elements) {
    if (!r.hyp3) break;
    if (C.contains(n)) continue;
    for (auto c : C.elements)
      if (c != G.identity() && G.conjugate(c, n) == c) {
        r.hyp3 = false;
        break;
      }
  }
  return r;
}

struct DeltaGraph {
  std::vector<ElementId> vertices;                 // the closure of C
  std::vector<std::vector<ElementId>> components;  // each sorted
  std::size_t coset_count = 0;                     // |HC : H|
  bool components_in_single_cosets = false;

  std::size_t component_count() const { return components.size(); }
};

/// Vertices x, y adjacent iff yx^-1 in H. Throws std::invalid_argument if
/// Hypotheses 0-2 fail.
inline DeltaGraph delta_graph(const Group& G, const Subgroup& H, const Subgroup& C) {
  const auto hyp = hypotheses_check(G, H, C);
  if (!hyp.holds_0_to_2()) throw std::invalid_argument("Hypotheses 0-2 do not hold for (G, H, C)");
  DeltaGraph d;
  d.vertices = conjugate_closure(G, C);
  std::vector<std::size_t> local(G.order(), SIZE_MAX);
  for (std::size_t i = 0; i < d.vertices.size(); ++i) local[d.vertices[i]] = i;

  DisjointSets ds(d.vertices.size());
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    for (auto h : H.elements) {
      const ElementId y = G.mul(h, d.vertices[i]);
      if (local[y] != SIZE_MAX) ds.unite(i, local[y]);
    }
  for (const auto& b : ds.blocks()) {
    std::vector<ElementId> comp;
    for (auto i : b) comp.push_back(d.vertices[i]);
    d.components.push_back(std::move(comp));
  }

  // Canonical coset label: smallest element of Hx.
  auto label = [&](ElementId x) {
    ElementId m = x;
    for (auto h : H.elements) m = std::min(m, G.mul(h, x));
    return m;
  };
  std::vector<ElementId> labels;
  for (auto x : d.vertices) labels.push_back(label(x));
  d.components_in_single_cosets = true;
  for (const auto& comp : d.components) {
    const ElementId l = labels[local[comp.front()]];
    for (auto x : comp)
      if (labels[local[x]] != l) d.components_in_single_cosets = false;
  }
  std::sort(labels.begin(), labels.end());
  d.coset_count = static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
  return d;
}

// ---------------------------------------------------------------------------
// Slices X_Y = {b in I : iota b in Y} of the class I of iota

struct SliceRow {
  std::size_t group_class = 0;
  std::uint64_t direct = 0;     // |X_Y| counted
  std::uint64_t m = 0;          // coefficient of Y in I.I
  Rational via_constant;        // m |Y| / |I|
};

struct SliceReport {
  std::size_t involution_class = 0;
  std::uint64_t class_size = 0;
  std::vector<SliceRow> rows;  // one per class of G
  bool sum_matches = false;    // sum of direct counts = |I|
  bool all_equal() const {
    for (const auto& r : rows)
      if (Rational(r.direct) != r.via_constant) return false;
    return sum_matches;
  }
};

inline SliceReport slice_sizes(const Group& G, ElementId iota) {
  if (G.element_order(iota) != 2) throw std::invalid_argument("slice_sizes needs an involution");
  const auto& cls = G.classes();
  SliceReport r;
  r.involution_class = G.class_of(iota);
  const auto& I = cls[r.involution_class].members;
  r.class_size = I.size();
  std::vector<std::uint64_t> direct(cls.size(), 0);
  for (auto b : I) ++direct[G.class_of(G.mul(iota, b))];
  std::uint64_t total = 0;
  for (std::size_t y = 0; y < cls.size(); ++y) {
    SliceRow row;
    row.group_class = y;
    row.direct = direct[y];
    row.m = class_constant_bruteforce(G, r.involution_class, r.involution_class, y);
    row.via_constant = Rational(row.m) * Rational(cls[y].size()) / Rational(r.class_size);
    total += row.direct;
    r.rows.push_back(row);
  }
  r.sum_matches = total == r.class_size;
  return r;
}

}  // namespace engel
