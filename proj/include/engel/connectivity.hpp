#pragma once

// Strong-connectivity decisions for Engel graphs: the direct minimal-n
// search, the prime-graph component criterion, subgroup extension, and the
// normaliser / random-involution steps used for sporadic groups.

#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "engel/engel.hpp"

namespace engel {

// ---------------------------------------------------------------------------
// Direct search

struct LevelResult {
  unsigned n = 0;
  std::size_t vertices = 0;
  std::size_t engel_elements = 0;  // |I_n(G)|
  StrongConnectivity connectivity;
  double seconds = 0;
};

enum class MinNOutcome { Found, NoneUpToCap, EmptyVertexSet };

inline std::string to_string(MinNOutcome o) {
  switch (o) {
    case MinNOutcome::Found: return "found";
    case MinNOutcome::NoneUpToCap: return "none_up_to_cap";
    case MinNOutcome::EmptyVertexSet: return "empty_vertex_set";
  }
  return "?";
}

struct MinStrongN {
  MinNOutcome outcome = MinNOutcome::NoneUpToCap;
  unsigned n = 0;  // valid when Found, or the level with an empty vertex set
  unsigned cap = 0;
  std::vector<LevelResult> levels;
};

/// Strong connectivity of Gamma_n(G), starting from an involution if any.
inline LevelResult check_level(const Group& G, unsigned n, unsigned threads = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  EngelGraphView view(G, n);
  LevelResult r;
  r.n = n;
  r.vertices = view.vertex_count();
  r.engel_elements = view.engel_elements().size();
  if (r.vertices > 0) r.connectivity = strong_connectivity(view, view.preferred_start(), threads);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Smallest n in [2, cap] with Gamma_n(G) strongly connected. NoneUpToCap is
/// evidence only, not a non-existence claim.
inline MinStrongN min_strong_n(const Group& G, unsigned cap = 8, unsigned threads = 1) {
  if (cap < 2) throw std::invalid_argument("n_cap must be >= 2");
  MinStrongN out;
  out.cap = cap;
  for (unsigned n = 2; n <= cap; ++n) {
    out.levels.push_back(check_level(G, n, threads));
    const auto& lv = out.levels.back();
    if (lv.vertices == 0) {
      out.outcome = MinNOutcome::EmptyVertexSet;
      out.n = n;
      return out;
    }
    if (lv.connectivity.strongly_connected) {
      out.outcome = MinNOutcome::Found;
      out.n = n;
      return out;
    }
  }
  out.outcome = MinNOutcome::NoneUpToCap;
  return out;
}

// ---------------------------------------------------------------------------
// Tabulated predictions

enum class Table1Family { Alt6, M10, PSL2EvenQ, PSL2Q5Mod8, PSL2Q3Mod4, Suzuki, PSL3_4, Generic2 };

inline std::string to_string(Table1Family f) {
  switch (f) {
    case Table1Family::Alt6: return "Alt6";
    case Table1Family::M10: return "M10";
    case Table1Family::PSL2EvenQ: return "PSL2evenq";
    case Table1Family::PSL2Q5Mod8: return "PSL2q5mod8";
    case Table1Family::PSL2Q3Mod4: return "PSL2q3mod4";
    case Table1Family::Suzuki: return "Suzuki";
    case Table1Family::PSL3_4: return "PSL3_4";
    case Table1Family::Generic2: return "generic2";
  }
  return "?";
}

struct Table1Prediction {
  Table1Family family = Table1Family::Generic2;
  std::optional<unsigned> n;  // nullopt: no such n exists

  bool exists() const { return n.has_value(); }
  std::string value_string() const { return n ? std::to_string(*n) : std::string("none"); }
};

/// PSL_2(q), q >= 4.
inline Table1Prediction predict_psl2(std::uint64_t q) {
  const auto [p, f] = util::prime_power(q);
  if (p == 0 || q < 4) throw std::invalid_argument("PSL2(q) needs a prime power q >= 4");
  if (q == 9) return {Table1Family::Alt6, 3};
  if (p == 2) return {Table1Family::PSL2EvenQ, std::nullopt};
  if (q % 8 == 5) return {Table1Family::PSL2Q5Mod8, std::nullopt};
  if (q % 4 == 3) {
    // 2^{n-1} exactly divides (q+1)/2.
    return {Table1Family::PSL2Q3Mod4, static_cast<unsigned>(util::valuation((q + 1) / 2, 2) + 1)};
  }
  return {Table1Family::Generic2, 2};
}

/// Named families: alt n, sym n, psl2 q, psl3 q, m10, m11, m12, m22, sz q.
/// nullopt means the value is not tabulated (Sym(5), Sym(6), PGL_2(9)).
inline std::optional<Table1Prediction> predict_table1(const std::string& family, std::uint64_t param = 0) {
  if (family == "psl2") return predict_psl2(param);
  if (family == "alt") {
    if (param < 5) throw std::invalid_argument("Alt(n) needs n >= 5");
    if (param == 5) return predict_psl2(4);
    if (param == 6) return predict_psl2(9);
    return Table1Prediction{Table1Family::Generic2, 2};
  }
  if (family == "sym") {
    if (param < 5) throw std::invalid_argument("Sym(n) needs n >= 5");
    if (param <= 6) return std::nullopt;
    return Table1Prediction{Table1Family::Generic2, 2};
  }
  if (family == "psl3") {
    if (util::prime_power(param).first == 0) throw std::invalid_argument("PSL3(q) needs a prime power q");
    if (param == 2) return predict_psl2(7);
    if (param == 4) return Table1Prediction{Table1Family::PSL3_4, 3};
    return Table1Prediction{Table1Family::Generic2, 2};
  }
  if (family == "m10") return Table1Prediction{Table1Family::M10, 3};
  if (family == "pgl2") return std::nullopt;
  if (family == "sz") {
    const auto [p, f] = util::prime_power(param);
    if (p != 2 || f % 2 == 0 || f < 3) throw std::invalid_argument("Sz(q) needs q = 2^(2m+1) >= 8");
    return Table1Prediction{Table1Family::Suzuki, std::nullopt};
  }
  if (family == "m11" || family == "m12" || family == "m22" || family == "sporadic")
    return Table1Prediction{Table1Family::Generic2, 2};
  throw std::invalid_argument("unknown family '" + family + "'");
}

/// Does a computed min-n agree with the prediction?
inline bool prediction_matches(const Table1Prediction& pred, const MinStrongN& got) {
  if (pred.n) return got.outcome == MinNOutcome::Found && got.n == *pred.n;
  return got.outcome == MinNOutcome::NoneUpToCap;
}

// ---------------------------------------------------------------------------
// Structure helpers

/// Normal closure of each class representative is 1 or G.
inline bool is_simple(const Group& G) {
  if (G.order() == 1) return false;
  for (const auto& cls : G.classes()) {
    if (cls.representative == G.identity()) continue;
    std::vector<ElementId> gens{cls.representative};
    Subgroup N = generated_subgroup(G, gens);
    for (auto m : cls.members) {
      if (N.order() == G.order()) break;
      if (N.contains(m)) continue;
      gens.push_back(m);
      N = generated_subgroup(G, gens);
    }
    if (N.order() < G.order()) return false;
  }
  return true;
}

struct Omega {
  std::vector<ElementId> elements;  // sorted
  bool contains(ElementId x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

/// Commuting component of the first involution, provided it holds every
/// element of even order. nullopt otherwise (or for groups of odd order).
inline std::optional<Omega> find_omega(const Group& G, const std::vector<std::vector<ElementId>>& comps) {
  ElementId inv = Group::kNone;
  for (ElementId x = 0; x < G.order() && inv == Group::kNone; ++x)
    if (G.element_order(x) == 2) inv = x;
  if (inv == Group::kNone) return std::nullopt;
  for (const auto& c : comps) {
    if (!std::binary_search(c.begin(), c.end(), inv)) continue;
    for (ElementId x = 0; x < G.order(); ++x)
      if (G.element_order(x) % 2 == 0 && !std::binary_search(c.begin(), c.end(), x)) return std::nullopt;
    return Omega{c};
  }
  return std::nullopt;
}

inline std::optional<Omega> find_omega(const Group& G) { return find_omega(G, commuting_components(G)); }

/// The prime-graph component containing 2.
inline std::vector<std::uint64_t> even_prime_component(const Group& G) {
  for (auto& c : prime_graph(G).components())
    if (std::find(c.begin(), c.end(), 2) != c.end()) return c;
  return {};
}

/// Shortest directed path in Gamma_n(G) between Omega and `target`, through
/// nontrivial elements of `within` (all of G when empty). With inbound set the
/// path runs from an Omega element to target, otherwise from target into Omega.
inline std::optional<std::vector<ElementId>> omega_path(const Group& G, unsigned n, ElementId target,
                                                        const Omega& omega, bool inbound,
                                                        const std::vector<ElementId>& within = {}) {
  std::vector<ElementId> pool;
  if (within.empty()) {
    pool.resize(G.order());
    std::iota(pool.begin(), pool.end(), ElementId{0});
  } else {
    pool = within;
  }
  std::erase(pool, G.identity());
  std::vector<ElementId> parent(G.order(), Group::kNone);
  std::vector<char> seen(G.order(), 0);
  std::vector<ElementId> queue{target};
  seen[target] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementId u = queue[i];
    if (u != target && omega.contains(u)) {
      std::vector<ElementId> path;
      for (ElementId v = u; v != Group::kNone; v = parent[v]) path.push_back(v);
      if (!inbound) std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto v : pool) {
      if (seen[v]) continue;
      if (inbound ? engel_arc(G, v, u, n) : engel_arc(G, u, v, n)) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Prime-graph component criterion

struct CriterionWitness {
  std::vector<std::uint64_t> psi;
  std::vector<ElementId> hall;  // H \ {1}, one representative per conjugacy orbit
  ElementId h = 0;
  ElementId x = 0;  // x ->_n h
  ElementId y = 0;  // h ->_n y
};

enum class CriterionStatus { Holds, Fails, Inapplicable };

inline std::string to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Holds: return "holds";
    case CriterionStatus::Fails: return "fails";
    case CriterionStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// For a psi without direct witnesses: shortest paths Omega -> h and h -> Omega.
struct PathDiagnostic {
  std::vector<std::uint64_t> psi;
  ElementId h = 0;
  std::optional<std::vector<ElementId>> inbound, outbound;
};

struct CriterionResult {
  CriterionStatus status = CriterionStatus::Inapplicable;
  std::string reason;
  std::size_t omega_size = 0;
  std::vector<CriterionWitness> witnesses;
  std::vector<std::vector<std::uint64_t>> failing;  // psi with no witness
  std::vector<PathDiagnostic> paths;                // one per failing psi
};

namespace detail {

/// Candidate order: C_G(h), then N_G(<H>), then all of Omega in seeded order.
inline std::vector<ElementId> witness_candidates(const Group& G, const Omega& omega, ElementId h,
                                                 const Subgroup& hall, std::mt19937_64& rng) {
  std::vector<ElementId> order;
  std::vector<char> seen(G.order(), 0);
  auto push = [&](ElementId z) {
    if (!seen[z] && omega.contains(z)) {
      seen[z] = 1;
      order.push_back(z);
    }
  };
  for (ElementId z = 0; z < G.order(); ++z)
    if (G.commute(z, h)) push(z);
  for (auto z : normalizer(G, hall).elements) push(z);
  std::vector<ElementId> rest(omega.elements);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (auto z : rest) push(z);
  return order;
}

}  // namespace detail

/// For every 2-free prime-graph component psi and each Hall psi-subgroup H
/// (up to conjugacy), looks for h in H\1 and x, y in Omega with x ->_n h ->_n y.
/// The search over Omega is exhaustive, so Fails is a definite answer.
inline CriterionResult corollary_criterion(const Group& G, unsigned n, std::uint64_t seed = kDefaultSeed,
                                           bool diagnose = true) {
  CriterionResult res;
  if (!is_simple(G)) {
    res.reason = "group is not simple";
    return res;
  }
  const auto comps = commuting_components(G);
  const auto omega = find_omega(G, comps);
  if (!omega) {
    res.reason = "no commuting component contains all elements of even order";
    return res;
  }
  res.omega_size = omega->elements.size();
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> comp_of(G.order(), SIZE_MAX);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (auto x : comps[i]) comp_of[x] = i;

  for (const auto& psi : prime_graph(G).components()) {
    if (std::find(psi.begin(), psi.end(), 2) != psi.end()) continue;
    const std::uint64_t hall_order = util::pi_part(G.order(), psi);
    std::vector<char> done(comps.size(), 0);
    bool psi_ok = true;
    for (std::size_t i = 0; i < comps.size() && psi_ok; ++i) {
      const auto& K = comps[i];
      if (done[i] || !util::is_pi_number(G.element_order(K.front()), psi)) continue;
      // Mark the whole conjugacy orbit of this component.
      for (auto x : G.classes()[G.class_of(K.front())].members) done[comp_of[x]] = 1;

      Subgroup H;
      H.elements = K;
      H.elements.push_back(G.identity());
      std::sort(H.elements.begin(), H.elements.end());
      if (H.order() != hall_order || !is_subgroup(G, H)) {
        res.status = CriterionStatus::Inapplicable;
        res.reason = "commuting component of a psi-element is not H\\1 for a Hall psi-subgroup H";
        res.witnesses.clear();
        return res;
      }
      bool found = false;
      for (auto h : K) {
        const auto cand = detail::witness_candidates(G, *omega, h, H, rng);
        std::optional<ElementId> x, y;
        for (auto z : cand) {
          if (!x && engel_arc(G, z, h, n)) x = z;
          if (!y && engel_arc(G, h, z, n)) y = z;
          if (x && y) break;
        }
        if (x && y) {
          res.witnesses.push_back({psi, K, h, *x, *y});
          found = true;
          break;
        }
      }
      if (!found) {
        psi_ok = false;
        res.failing.push_back(psi);
        if (diagnose)
          res.paths.push_back({psi, K.front(), omega_path(G, n, K.front(), *omega, true),
                               omega_path(G, n, K.front(), *omega, false)});
      }
    }
  }
  res.status = res.failing.empty() ? CriterionStatus::Holds : CriterionStatus::Fails;
  return res;
}

// ---------------------------------------------------------------------------
// Subgroup extension, normaliser and random-involution steps

/// h1, h2 in H n Omega with h1 ->_n g ->_n h2.
inline std::optional<std::pair<ElementId, ElementId>> subgroup_extension_check(const Group& G, const Omega& omega,
                                                                               ElementId g, const Subgroup& H,
                                                                               unsigned n = 2) {
  if (!H.contains(g)) throw std::invalid_argument("g is not an element of H");
  std::optional<ElementId> h1, h2;
  // Commuting elements first: they give both arcs at once.
  for (int pass = 0; pass < 2 && !(h1 && h2); ++pass) {
    for (auto h : H.elements) {
      if (!omega.contains(h)) continue;
      if (pass == 0 && !G.commute(h, g)) continue;
      if (!h1 && engel_arc(G, h, g, n)) h1 = h;
      if (!h2 && engel_arc(G, g, h, n)) h2 = h;
      if (h1 && h2) break;
    }
  }
  if (h1 && h2) return std::make_pair(*h1, *h2);
  return std::nullopt;
}

/// z' in N_G(<g>) whose order is a nontrivial admissible-number, with
/// [z', g] in <g> and z' ->_2 g. Admissible primes default to the prime-graph
/// component of 2.
inline std::optional<ElementId> normalizer_inbound(const Group& G, ElementId g,
                                                  std::vector<std::uint64_t> admissible = {}) {
  if (g == G.identity()) throw std::invalid_argument("g must be nontrivial");
  if (admissible.empty()) admissible = even_prime_component(G);
  const Subgroup C = cyclic_subgroup(G, g);
  for (auto z : normalizer(G, C).elements) {
    if (z == G.identity() || !util::is_pi_number(G.element_order(z), admissible)) continue;
    if (C.contains(G.commutator(z, g)) && engel_arc(G, z, g, 2)) return z;
  }
  return std::nullopt;
}

/// Involutions in seeded random order; first z with g ->_2 z among `budget` tries.
inline std::optional<ElementId> random_escape(const Group& G, ElementId g, std::size_t budget,
                                              std::uint64_t seed = kDefaultSeed) {
  if (g == G.identity()) throw std::invalid_argument("g must be nontrivial");
  std::vector<ElementId> inv;
  for (ElementId z = 0; z < G.order(); ++z)
    if (G.element_order(z) == 2) inv.push_back(z);
  std::mt19937_64 rng(seed);
  std::shuffle(inv.begin(), inv.end(), rng);
  for (std::size_t i = 0; i < inv.size() && i < budget; ++i)
    if (engel_arc(G, g, inv[i], 2)) return inv[i];
  return std::nullopt;
}

/// A subgroup of the requested order containing g: stabilisers of points fixed
/// by g first, then seeded random two-generator closures <g, y>.
inline std::optional<Subgroup> subgroup_containing(const Group& G, ElementId g, std::size_t order,
                                                  std::uint64_t seed = kDefaultSeed, unsigned attempts = 4000) {
  const auto img = G.images(g);
  for (Point p = 0; p < G.degree(); ++p) {
    if (img[p] != p) continue;
    Subgroup S = point_stabilizer(G, p);
    if (S.order() == order) return S;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(G.order() - 1));
  for (unsigned a = 0; a < attempts; ++a) {
    auto H = closure(G, {g, pick(rng)}, order);
    if (H && H->order() == order) return H;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sporadic strategy

/// A prime outside the component of 2, with the order of a subgroup
/// containing an element of that order (0 if none is named).
struct SporadicRow {
  std::uint64_t prime = 0;
  std::size_t subgroup_order = 0;
  std::string subgroup_name;
};

struct SporadicPrimeReport {
  std::uint64_t prime = 0;
  ElementId g = 0;
  std::string strategy;  // "subgroup", "normalizer+random", "failed"
  std::optional<std::size_t> subgroup_order;
  std::optional<bool> subgroup_gamma2_strong;
  std::optional<ElementId> z1, z2;             // z1 ->_2 g ->_2 z2 as direct arcs inside the subgroup
  std::optional<std::vector<ElementId>> path_in, path_out;  // Omega -> g -> Omega inside the subgroup
  std::optional<ElementId> z_in, z_out;        // z_in ->_2 g (normaliser), g ->_2 z_out (involution)
  bool success = false;
};

struct SporadicReport {
  std::size_t omega_size = 0;
  std::vector<std::uint64_t> even_component;
  std::vector<SporadicPrimeReport> primes;
  bool success = false;
};

inline SporadicReport sporadic_check(const Group& G, const std::vector<SporadicRow>& rows,
                                     std::uint64_t seed = kDefaultSeed, std::size_t budget = 1000,
                                     unsigned threads = 1) {
  SporadicReport rep;
  const auto omega = find_omega(G);
  if (!omega) throw std::runtime_error("no commuting component contains all elements of even order");
  rep.omega_size = omega->elements.size();
  rep.even_component = even_prime_component(G);
  rep.success = true;
  for (const auto& row : rows) {
    SporadicPrimeReport pr;
    pr.prime = row.prime;
    ElementId g = Group::kNone;
    for (const auto& cls : G.classes())
      if (cls.element_order == row.prime) {
        g = cls.representative;
        break;
      }
    if (g == Group::kNone) throw std::invalid_argument("no element of order " + std::to_string(row.prime));
    pr.g = g;
    if (row.subgroup_order != 0) {
      if (auto M = subgroup_containing(G, g, row.subgroup_order, seed)) {
        pr.subgroup_order = M->order();
        const Group sub = subgroup_as_group(G, *M);
        pr.subgroup_gamma2_strong = check_level(sub, 2, threads).connectivity.strongly_connected;
        if (*pr.subgroup_gamma2_strong) {
          if (auto w = subgroup_extension_check(G, *omega, g, *M, 2)) {
            pr.z1 = w->first;
            pr.z2 = w->second;
          }
          pr.path_in = omega_path(G, 2, g, *omega, true, M->elements);
          pr.path_out = omega_path(G, 2, g, *omega, false, M->elements);
          if (pr.path_in && pr.path_out) {
            pr.strategy = "subgroup";
            pr.success = true;
          }
        }
      }
    }
    if (!pr.success) {
      pr.z_in = normalizer_inbound(G, g);
      pr.z_out = random_escape(G, g, budget, seed);
      if (pr.z_in && pr.z_out && omega->contains(*pr.z_in)) {
        pr.strategy = "normalizer+random";
        pr.success = true;
      } else {
        pr.strategy = "failed";
      }
    }
    rep.success = rep.success && pr.success;
    rep.primes.push_back(std::move(pr));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reports

struct ConnectivityReport {
  std::string group;
  std::uint64_t order = 0;
  std::string method = "direct";
  MinStrongN result;
  std::optional<Table1Prediction> prediction;

  std::optional<bool> match() const {
    if (!prediction) return std::nullopt;
    return prediction_matches(*prediction, result);
  }

  nlohmann::json to_json(bool with_timing = false) const {
    nlohmann::json j;
    j["group"] = group;
    j["order"] = order;
    j["method"] = method;
    j["n_cap"] = result.cap;
    j["outcome"] = to_string(result.outcome);
    j["n"] = result.outcome == MinNOutcome::Found ? nlohmann::json(result.n) : nlohmann::json(nullptr);
    j["levels"] = nlohmann::json::array();
    for (const auto& lv : result.levels) {
      nlohmann::json l{{"n", lv.n},
                       {"vertices", lv.vertices},
                       {"engel_elements", lv.engel_elements},
                       {"forward_reached", lv.connectivity.forward_reached},
                       {"backward_checked", lv.connectivity.backward_checked},
                       {"backward_reached", lv.connectivity.backward_reached},
                       {"strongly_connected", lv.connectivity.strongly_connected}};
      if (with_timing) l["seconds"] = lv.seconds;
      j["levels"].push_back(std::move(l));
    }
    if (prediction) {
      j["family"] = to_string(prediction->family);
      j["predicted"] = prediction->value_string();
      j["match"] = *match();
    } else {
      j["family"] = nullptr;
      j["predicted"] = nullptr;
      j["match"] = nullptr;
    }
    return j;
  }
};

inline nlohmann::json to_json(const CriterionResult& r, const Group& G) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["omega_size"] = r.omega_size;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back({{"psi", w.psi},
                              {"hall_order", w.hall.size() + 1},
                              {"h", w.h},
                              {"h_order", G.element_order(w.h)},
                              {"x", w.x},
                              {"y", w.y}});
  j["failing_components"] = r.failing;
  j["paths"] = nlohmann::json::array();
  auto path_json = [&](const std::optional<std::vector<ElementId>>& p) {
    if (!p) return nlohmann::json(nullptr);
    nlohmann::json a = nlohmann::json::array();
    for (auto v : *p) a.push_back({{"id", v}, {"order", G.element_order(v)}});
    return a;
  };
  for (const auto& d : r.paths)
    j["paths"].push_back({{"psi", d.psi}, {"h", d.h}, {"inbound", path_json(d.inbound)}, {"outbound", path_json(d.outbound)}});
  return j;
}

inline nlohmann::json to_json(const SporadicReport& r) {
  nlohmann::json j;
  j["omega_size"] = r.omega_size;
  j["even_component"] = r.even_component;
  j["success"] = r.success;
  j["primes"] = nlohmann::json::array();
  auto opt = [](const auto& o) { return o ? nlohmann::json(*o) : nlohmann::json(nullptr); };
  for (const auto& p : r.primes)
    j["primes"].push_back({{"prime", p.prime},
                           {"g", p.g},
                           {"strategy", p.strategy},
                           {"subgroup_order", opt(p.subgroup_order)},
                           {"subgroup_gamma2_strong", opt(p.subgroup_gamma2_strong)},
                           {"path_in", opt(p.path_in)},
                           {"path_out", opt(p.path_out)},
                           {"z1", opt(p.z1)},
                           {"z2", opt(p.z2)},
                           {"z_in", opt(p.z_in)},
                           {"z_out", opt(p.z_out)},
                           {"success", p.success}});
  return j;
}

}  // namespace engel
