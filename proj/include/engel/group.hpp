#pragma once

// Enumerated permutation groups. Every element gets a stable index
// (BFS order from the identity over the generators); arithmetic on indices
// goes through the images of a base, so a product costs |base| lookups.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "engel/permutation.hpp"
#include "engel/util.hpp"

namespace engel {

using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2023ULL;

struct ConjClass {
  ElementId representative = 0;
  std::vector<ElementId> members;  // sorted
  std::uint64_t element_order = 1;

  std::size_t size() const { return members.size(); }
};

/// A subgroup given by sorted element indices of its parent group.
struct Subgroup {
  std::vector<ElementId> elements;
  std::vector<ElementId> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

class Group {
 public:
  static constexpr std::size_t kDefaultLimit = 2'000'000;
  static constexpr ElementId kNone = 0xffffffffu;

  /// Closure of `generators`; throws ConstructionError past `limit` elements.
  static Group generate(std::vector<Permutation> generators, std::size_t limit = kDefaultLimit) {
    if (generators.empty()) throw ConstructionError("at least one generator is required");
    const std::size_t d = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != d) throw ConstructionError("generators have different degrees");

    Group G;
    G.degree_ = d;
    G.generators_ = generators;
    std::unordered_map<std::string, ElementId> seen;
    auto key_of = [d](const Point* p) { return std::string(reinterpret_cast<const char*>(p), d * sizeof(Point)); };

    Permutation id(d);
    G.images_.insert(G.images_.end(), id.images().begin(), id.images().end());
    seen.emplace(key_of(id.images().data()), 0);
    std::vector<Point> buf(d);
    for (std::size_t i = 0; i < seen.size(); ++i) {
      for (const auto& gen : generators) {
        const Point* cur = G.images_.data() + i * d;
        for (std::size_t p = 0; p < d; ++p) buf[p] = gen[cur[p]];
        auto [it, fresh] = seen.emplace(key_of(buf.data()), static_cast<ElementId>(seen.size()));
        if (fresh) {
          if (seen.size() > limit)
            throw ConstructionError("closure exceeds limit of " + std::to_string(limit) + " elements");
          G.images_.insert(G.images_.end(), buf.begin(), buf.end());
        }
      }
    }
    G.order_ = seen.size();
    G.finalize();
    return G;
  }

  /// Rebuilds a group from an already closed element list; elements[0] must
  /// be the identity.
  static Group from_elements(std::vector<Permutation> generators, const std::vector<Permutation>& elements) {
    if (elements.empty() || !elements.front().is_identity())
      throw ConstructionError("element list must start with the identity");
    Group G;
    G.degree_ = elements.front().degree();
    G.generators_ = std::move(generators);
    G.order_ = elements.size();
    G.images_.reserve(G.order_ * G.degree_);
    for (const auto& e : elements) {
      if (e.degree() != G.degree_) throw ConstructionError("element degree mismatch");
      G.images_.insert(G.images_.end(), e.images().begin(), e.images().end());
    }
    G.finalize();
    return G;
  }

  Group(Group&&) noexcept = default;
  Group& operator=(Group&&) noexcept = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  ElementId identity() const { return 0; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const std::vector<Point>& base() const { return base_; }

  std::span<const Point> images(ElementId x) const { return {images_.data() + std::size_t{x} * degree_, degree_}; }
  Permutation element(ElementId x) const {
    auto s = images(x);
    return Permutation(std::vector<Point>(s.begin(), s.end()));
  }

  std::optional<ElementId> find(const Permutation& p) const {
    if (p.degree() != degree_) return std::nullopt;
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{p[base_[k]]} * radix_[k];
    const ElementId id = lookup_or_none(key);
    if (id == kNone) return std::nullopt;
    auto s = images(id);
    if (!std::equal(s.begin(), s.end(), p.images().begin())) return std::nullopt;
    return id;
  }

  ElementId index_of(const Permutation& p) const {
    auto id = find(p);
    if (!id) throw std::invalid_argument("permutation is not an element of the group");
    return *id;
  }

  ElementId inverse(ElementId x) const { return inverse_[x]; }

  /// a then b.
  ElementId mul(ElementId a, ElementId b) const {
    const Point* pa = img(a);
    const Point* pb = img(b);
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{pb[pa[base_[k]]]} * radix_[k];
    return lookup(key);
  }

  /// x^g = g^-1 x g.
  ElementId conjugate(ElementId x, ElementId g) const {
    const Point* px = img(x);
    const Point* pg = img(g);
    const Point* ig = inv_img(g);
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{pg[px[ig[base_[k]]]]} * radix_[k];
    return lookup(key);
  }

  /// [a, b] = a^-1 b^-1 a b.
  ElementId commutator(ElementId a, ElementId b) const {
    const Point* pa = img(a);
    const Point* pb = img(b);
    const Point* ia = inv_img(a);
    const Point* ib = inv_img(b);
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{pb[pa[ib[ia[base_[k]]]]]} * radix_[k];
    return lookup(key);
  }

  ElementId power(ElementId x, std::int64_t e) const {
    if (e < 0) {
      x = inverse(x);
      e = -e;
    }
    ElementId r = identity();
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  std::uint64_t element_order(ElementId x) const {
    ensure_orders();
    return lazy_->orders[x];
  }

  /// Conjugacy classes, ordered by the smallest index they contain.
  const std::vector<ConjClass>& classes() const {
    ensure_classes();
    return lazy_->classes;
  }

  std::size_t class_of(ElementId x) const {
    ensure_classes();
    return lazy_->class_of[x];
  }

  /// Some t with rep(class_of(x))^t = x.
  ElementId class_conjugator(ElementId x) const {
    ensure_classes();
    return lazy_->conjugator[x];
  }

  bool is_abelian() const {
    for (auto a : generator_ids_)
      for (auto b : generator_ids_)
        if (!commute(a, b)) return false;
    return true;
  }

 private:
  Group() : lazy_(std::make_unique<Lazy>()) {}

  struct Lazy {
    std::once_flag orders_once;
    std::once_flag classes_once;
    std::vector<std::uint64_t> orders;
    std::vector<ConjClass> classes;
    std::vector<std::uint32_t> class_of;
    std::vector<ElementId> conjugator;
  };

  const Point* img(ElementId x) const { return images_.data() + std::size_t{x} * degree_; }
  const Point* inv_img(ElementId x) const { return inv_images_.data() + std::size_t{x} * degree_; }

  ElementId lookup_or_none(std::uint64_t key) const {
    if (!table_.empty()) return key < table_.size() ? table_[key] : kNone;
    auto it = map_.find(key);
    return it == map_.end() ? kNone : it->second;
  }
  ElementId lookup(std::uint64_t key) const {
    if (!table_.empty()) return table_[key];
    return map_.find(key)->second;
  }

  void finalize() {
    const std::size_t d = degree_;
    // Greedy base: smallest point moved by the current pointwise stabilizer.
    std::vector<ElementId> stab(order_);
    std::iota(stab.begin(), stab.end(), ElementId{0});
    base_.clear();
    while (stab.size() > 1) {
      std::size_t pick = d;
      for (auto e : stab) {
        const Point* p = img(e);
        for (std::size_t x = 0; x < d && x < pick; ++x)
          if (p[x] != x) {
            pick = x;
            break;
          }
      }
      base_.push_back(static_cast<Point>(pick));
      std::erase_if(stab, [&](ElementId e) { return img(e)[pick] != pick; });
    }
    radix_.assign(base_.size(), 1);
    long double span = 1;
    for (std::size_t k = 0; k < base_.size(); ++k) {
      radix_[k] = static_cast<std::uint64_t>(span);
      span *= static_cast<long double>(d);
    }
    if (span > 9.0e18L) throw ConstructionError("base images do not fit a 64-bit key");
    const std::uint64_t keyspace = static_cast<std::uint64_t>(span);
    table_.clear();
    map_.clear();
    auto key_of = [&](ElementId e) {
      std::uint64_t key = 0;
      for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{img(e)[base_[k]]} * radix_[k];
      return key;
    };
    if (keyspace <= (std::uint64_t{1} << 22)) {
      table_.assign(std::max<std::uint64_t>(keyspace, 1), kNone);
      for (ElementId e = 0; e < order_; ++e) table_[key_of(e)] = e;
    } else {
      map_.reserve(order_);
      for (ElementId e = 0; e < order_; ++e) map_.emplace(key_of(e), e);
    }
    inv_images_.resize(images_.size());
    for (ElementId e = 0; e < order_; ++e) {
      const Point* p = img(e);
      Point* q = inv_images_.data() + std::size_t{e} * d;
      for (std::size_t x = 0; x < d; ++x) q[p[x]] = static_cast<Point>(x);
    }
    inverse_.resize(order_);
    for (ElementId e = 0; e < order_; ++e) {
      std::uint64_t key = 0;
      for (std::size_t k = 0; k < base_.size(); ++k) key += std::uint64_t{inv_img(e)[base_[k]]} * radix_[k];
      inverse_[e] = lookup(key);
    }
    generator_ids_.clear();
    for (const auto& g : generators_) generator_ids_.push_back(index_of(g));
  }

  void ensure_orders() const {
    std::call_once(lazy_->orders_once, [this] {
      auto& orders = lazy_->orders;
      orders.resize(order_);
      std::vector<char> seen(degree_);
      for (ElementId e = 0; e < order_; ++e) {
        const Point* p = img(e);
        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t ord = 1;
        for (std::size_t x = 0; x < degree_; ++x) {
          if (seen[x]) continue;
          std::uint64_t len = 0;
          for (std::size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
          }
          ord = std::lcm(ord, len);
        }
        orders[e] = ord;
      }
    });
  }

  void ensure_classes() const {
    ensure_orders();
    std::call_once(lazy_->classes_once, [this] {
      auto& lz = *lazy_;
      lz.class_of.assign(order_, 0xffffffffu);
      lz.conjugator.assign(order_, 0);
      for (ElementId r = 0; r < order_; ++r) {
        if (lz.class_of[r] != 0xffffffffu) continue;
        const auto cls = static_cast<std::uint32_t>(lz.classes.size());
        ConjClass c;
        c.representative = r;
        c.element_order = lz.orders[r];
        lz.class_of[r] = cls;
        c.members.push_back(r);
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          const ElementId x = c.members[i];
          for (auto g : generator_ids_) {
            const ElementId y = conjugate(x, g);
            if (lz.class_of[y] == 0xffffffffu) {
              lz.class_of[y] = cls;
              lz.conjugator[y] = mul(lz.conjugator[x], g);
              c.members.push_back(y);
            }
          }
        }
        std::sort(c.members.begin(), c.members.end());
        lz.classes.push_back(std::move(c));
      }
    });
  }

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> images_;
  std::vector<Point> inv_images_;
  std::vector<ElementId> inverse_;
  std::vector<Point> base_;
  std::vector<std::uint64_t> radix_;
  std::vector<ElementId> table_;
  std::unordered_map<std::uint64_t, ElementId> map_;
  std::unique_ptr<Lazy> lazy_;
};

// ---------------------------------------------------------------------------
// Subgroups

/// Closure of `gens` inside G. With cap > 0, returns nullopt as soon as the
/// closure exceeds cap elements.
inline std::optional<Subgroup> closure(const Group& G, std::vector<ElementId> gens, std::size_t cap = 0) {
  std::vector<char> in(G.order(), 0);
  Subgroup H;
  H.generators = gens;
  H.elements.push_back(G.identity());
  in[G.identity()] = 1;
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    for (auto g : gens) {
      const ElementId y = G.mul(H.elements[i], g);
      if (!in[y]) {
        in[y] = 1;
        H.elements.push_back(y);
        if (cap != 0 && H.elements.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(H.elements.begin(), H.elements.end());
  return H;
}

inline Subgroup generated_subgroup(const Group& G, std::vector<ElementId> gens) { return *closure(G, std::move(gens)); }

inline Subgroup cyclic_subgroup(const Group& G, ElementId x) { return generated_subgroup(G, {x}); }

inline Subgroup whole_group(const Group& G) {
  Subgroup H;
  H.elements.resize(G.order());
  std::iota(H.elements.begin(), H.elements.end(), ElementId{0});
  H.generators = G.generator_ids();
  return H;
}

/// True iff H's element list is a subgroup of G.
inline bool is_subgroup(const Group& G, const Subgroup& H) {
  if (H.elements.empty() || !std::is_sorted(H.elements.begin(), H.elements.end())) return false;
  for (auto x : H.elements)
    if (x >= G.order()) return false;
  if (!H.contains(G.identity())) return false;
  if (!H.generators.empty()) {
    for (auto g : H.generators)
      if (!H.contains(g)) return false;
    return closure(G, H.generators)->elements == H.elements;
  }
  for (auto a : H.elements)
    for (auto b : H.elements)
      if (!H.contains(G.mul(a, b))) return false;
  return true;
}

inline void require_subgroup(const Group& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) throw std::invalid_argument("H is not a subgroup of G");
}

inline Subgroup centralizer(const Group& G, ElementId x) {
  Subgroup C;
  for (ElementId y = 0; y < G.order(); ++y)
    if (G.commute(x, y)) C.elements.push_back(y);
  C.generators = C.elements;
  if (C.generators.size() > 8) C.generators.clear();
  return C;
}

inline std::vector<ElementId> center(const Group& G) {
  std::vector<ElementId> z;
  for (ElementId y = 0; y < G.order(); ++y) {
    bool central = true;
    for (auto g : G.generator_ids()) central = central && G.commute(y, g);
    if (central) z.push_back(y);
  }
  return z;
}

inline Subgroup normalizer(const Group& G, const Subgroup& H) {
  require_subgroup(G, H);
  const auto& test = H.generators.empty() ? H.elements : H.generators;
  Subgroup N;
  for (ElementId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : test) {
      if (!H.contains(G.conjugate(h, g))) {
        ok = false;
        break;
      }
    }
    if (ok) N.elements.push_back(g);
  }
  return N;
}

/// Copies a subgroup out as a standalone permutation group.
inline Group subgroup_as_group(const Group& G, const Subgroup& H) {
  std::vector<Permutation> elems;
  elems.reserve(H.order());
  for (auto x : H.elements) elems.push_back(G.element(x));
  std::vector<Permutation> gens;
  for (auto g : H.generators) gens.push_back(G.element(g));
  if (gens.empty()) {
    // A small generating set: greedily add elements outside the current closure.
    std::vector<ElementId> ids;
    std::size_t have = 1;
    for (auto x : H.elements) {
      if (have == H.order()) break;
      auto cur = closure(G, ids);
      if (cur->contains(x)) continue;
      ids.push_back(x);
      have = closure(G, ids)->order();
    }
    for (auto g : ids) gens.push_back(G.element(g));
    if (gens.empty()) gens.push_back(G.element(G.identity()));
  }
  return Group::from_elements(std::move(gens), elems);
}

/// Sylow p-subgroup: grow P by p-elements of N_G(P) outside P, chosen with a
/// seeded generator. Always terminates for a genuine Sylow search.
inline Subgroup sylow_subgroup(const Group& G, std::uint64_t p, std::uint64_t seed = kDefaultSeed) {
  if (!util::is_prime(p) || G.order() % p != 0)
    throw std::invalid_argument("p must be a prime dividing |G|");
  const std::uint64_t target = util::ipow(p, util::valuation(G.order(), p));
  std::mt19937_64 rng(seed);
  std::vector<ElementId> pelems;
  for (ElementId x = 1; x < G.order(); ++x)
    if (util::is_pi_number(G.element_order(x), {p})) pelems.push_back(x);
  std::uniform_int_distribution<std::size_t> pick(0, pelems.size() - 1);
  Subgroup P = cyclic_subgroup(G, pelems[pick(rng)]);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    std::vector<ElementId> cand;
    for (auto y : N.elements)
      if (!P.contains(y) && util::is_pi_number(G.element_order(y), {p})) cand.push_back(y);
    if (cand.empty()) throw ConstructionError("Sylow growth stalled (not a p-subgroup chain)");
    std::uniform_int_distribution<std::size_t> pc(0, cand.size() - 1);
    auto gens = P.generators;
    gens.push_back(cand[pc(rng)]);
    P = generated_subgroup(G, gens);
  }
  return P;
}

/// Hall psi-subgroup by bounded seeded search. nullopt means "not found within
/// the restart budget", never "does not exist".
inline std::optional<Subgroup> hall_subgroup(const Group& G, std::vector<std::uint64_t> primes,
                                             std::uint64_t seed = kDefaultSeed, unsigned restarts = 200) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (G.order() % p != 0) throw std::invalid_argument("psi must consist of primes dividing |G|");
  const std::uint64_t target = util::pi_part(G.order(), primes);
  if (target == 1) return closure(G, {});
  if (primes.size() == 1) return sylow_subgroup(G, primes[0], seed);

  std::mt19937_64 rng(seed);
  std::vector<ElementId> psi_elems;
  for (ElementId x = 1; x < G.order(); ++x)
    if (util::is_pi_number(G.element_order(x), primes)) psi_elems.push_back(x);
  std::uniform_int_distribution<std::size_t> pick(0, psi_elems.size() - 1);

  auto is_psi_group = [&](const Subgroup& H) {
    return target % H.order() == 0;
  };
  for (unsigned attempt = 0; attempt < restarts; ++attempt) {
    Subgroup H = cyclic_subgroup(G, psi_elems[pick(rng)]);
    while (H.order() < target) {
      bool grown = false;
      Subgroup N = normalizer(G, H);
      std::vector<ElementId> cand;
      for (auto y : N.elements)
        if (!H.contains(y) && util::is_pi_number(G.element_order(y), primes)) cand.push_back(y);
      std::shuffle(cand.begin(), cand.end(), rng);
      for (auto y : cand) {
        auto gens = H.generators;
        gens.push_back(y);
        auto K = closure(G, gens, target);
        if (K && is_psi_group(*K)) {
          H = std::move(*K);
          grown = true;
          break;
        }
      }
      if (!grown) {
        for (int tries = 0; tries < 64 && !grown; ++tries) {
          auto gens = H.generators;
          gens.push_back(psi_elems[pick(rng)]);
          auto K = closure(G, gens, target);
          if (K && K->order() > H.order() && is_psi_group(*K)) {
            H = std::move(*K);
            grown = true;
          }
        }
      }
      if (!grown) break;
    }
    if (H.order() == target) return H;
  }
  return std::nullopt;
}

/// Permutation action of G on the right cosets Hx.
struct CosetAction {
  std::size_t degree = 0;
  std::vector<std::uint32_t> coset_of;                // element -> coset index
  std::vector<ElementId> coset_reps;                  // one x per coset
  std::vector<Permutation> generator_images;          // action of G's generators
  std::vector<std::uint64_t> fixed_points_per_class;  // indexed like G.classes()

  /// Number of cosets Hx with Hxg = Hx.
  std::uint64_t fixed_points(const Group& G, ElementId g) const {
    std::uint64_t n = 0;
    for (auto x : coset_reps)
      if (coset_of[G.mul(x, g)] == coset_of[x]) ++n;
    return n;
  }
};

inline CosetAction coset_action(const Group& G, const Subgroup& H) {
  require_subgroup(G, H);
  CosetAction A;
  A.coset_of.assign(G.order(), 0xffffffffu);
  for (ElementId x = 0; x < G.order(); ++x) {
    if (A.coset_of[x] != 0xffffffffu) continue;
    const auto id = static_cast<std::uint32_t>(A.coset_reps.size());
    A.coset_reps.push_back(x);
    for (auto h : H.elements) A.coset_of[G.mul(h, x)] = id;
  }
  A.degree = A.coset_reps.size();
  for (auto g : G.generator_ids()) {
    std::vector<Point> images(A.degree);
    for (std::size_t c = 0; c < A.degree; ++c) images[c] = static_cast<Point>(A.coset_of[G.mul(A.coset_reps[c], g)]);
    A.generator_images.emplace_back(std::move(images));
  }
  for (const auto& cls : G.classes()) A.fixed_points_per_class.push_back(A.fixed_points(G, cls.representative));
  return A;
}

/// Pointwise stabilizer of a single point.
inline Subgroup point_stabilizer(const Group& G, Point p) {
  Subgroup S;
  for (ElementId x = 0; x < G.order(); ++x)
    if (G.images(x)[p] == p) S.elements.push_back(x);
  return S;
}

// ---------------------------------------------------------------------------
// Generator files and the on-disk cache

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::uint64_t> expected_order;
  std::string name;
};

/// Format: `degree d`, optional `base 1` (1-based labels), optional
/// `order N` and `name X`, then one permutation per line; `#` comments.
inline GeneratorFile parse_generator_file(std::istream& in, const std::string& source = "<stream>") {
  GeneratorFile out;
  std::size_t offset = 0;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ConstructionError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "degree" || word == "base" || word == "order") {
      long long v = -1;
      if (!(ls >> v) || v < 0) fail("expected a number after '" + word + "'");
      if (word == "degree") out.degree = static_cast<std::size_t>(v);
      if (word == "base") offset = static_cast<std::size_t>(v);
      if (word == "order") out.expected_order = static_cast<std::uint64_t>(v);
      continue;
    }
    if (word == "name") {
      ls >> out.name;
      continue;
    }
    if (out.degree == 0) fail("permutation before 'degree' line");
    try {
      out.generators.push_back(Permutation::parse(line, out.degree, offset));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (out.degree == 0) throw ConstructionError(source + ": missing 'degree' line");
  if (out.generators.empty()) throw ConstructionError(source + ": no generators");
  return out;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string generator_key(const std::vector<Permutation>& gens) {
  std::string key = std::to_string(gens.front().degree()) + ":";
  for (const auto& g : gens) {
    key.append(reinterpret_cast<const char*>(g.images().data()), g.degree() * sizeof(Point));
    key.push_back('|');
  }
  return key;
}

template <class T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
bool read_pod(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof(T)));
}

}  // namespace detail

/// Binary element-list cache keyed by a hash of the generators.
class GroupCache {
 public:
  static constexpr std::uint32_t kVersion = 1;
  static constexpr char kMagic[8] = {'E', 'N', 'G', 'E', 'L', 'G', 'R', 'P'};

  explicit GroupCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const std::vector<Permutation>& gens) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(detail::generator_key(gens))));
    return dir_ / (std::string(buf) + ".grp");
  }

  std::optional<Group> load(const std::vector<Permutation>& gens) const {
    std::ifstream in(path_for(gens), std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    std::uint32_t version = 0, degree = 0, ngens = 0;
    std::uint64_t order = 0;
    if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
    if (!detail::read_pod(in, version) || version != kVersion) return std::nullopt;
    if (!detail::read_pod(in, degree) || !detail::read_pod(in, order) || !detail::read_pod(in, ngens)) return std::nullopt;
    if (ngens != gens.size() || degree != gens.front().degree()) return std::nullopt;
    auto read_perm = [&]() -> std::optional<Permutation> {
      std::vector<Point> images(degree);
      if (!in.read(reinterpret_cast<char*>(images.data()), degree * sizeof(Point))) return std::nullopt;
      try {
        return Permutation(std::move(images));
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    };
    for (const auto& g : gens) {
      auto p = read_perm();
      if (!p || *p != g) return std::nullopt;
    }
    std::vector<Permutation> elems;
    elems.reserve(order);
    for (std::uint64_t i = 0; i < order; ++i) {
      auto p = read_perm();
      if (!p) return std::nullopt;
      elems.push_back(std::move(*p));
    }
    return Group::from_elements(gens, elems);
  }

  void store(const Group& G) const {
    std::filesystem::create_directories(dir_);
    const auto path = path_for(G.generators());
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw ConstructionError("cache directory not writable: " + dir_.string());
      out.write(kMagic, 8);
      detail::write_pod(out, kVersion);
      detail::write_pod(out, static_cast<std::uint32_t>(G.degree()));
      detail::write_pod(out, static_cast<std::uint64_t>(G.order()));
      detail::write_pod(out, static_cast<std::uint32_t>(G.generators().size()));
      for (const auto& g : G.generators()) out.write(reinterpret_cast<const char*>(g.images().data()), G.degree() * sizeof(Point));
      for (ElementId x = 0; x < G.order(); ++x)
        out.write(reinterpret_cast<const char*>(G.images(x).data()), G.degree() * sizeof(Point));
    }
    std::filesystem::rename(tmp, path);
  }

  Group generate(std::vector<Permutation> gens, std::size_t limit = Group::kDefaultLimit) const {
    if (auto hit = load(gens)) return std::move(*hit);
    Group G = Group::generate(std::move(gens), limit);
    store(G);
    return G;
  }

 private:
  std::filesystem::path dir_;
};

inline Group load_group(const std::string& path, std::size_t limit = Group::kDefaultLimit,
                        const GroupCache* cache = nullptr) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open generator file " + path);
  auto spec = parse_generator_file(in, path);
  Group G = cache ? cache->generate(spec.generators, limit) : Group::generate(spec.generators, limit);
  if (spec.expected_order && *spec.expected_order != G.order())
    throw ConstructionError(path + ": closure has order " + std::to_string(G.order()) + ", file declares " +
                            std::to_string(*spec.expected_order));
  return G;
}

// ---------------------------------------------------------------------------
// Small builtin families

inline Group symmetric_group(std::size_t n) {
  if (n < 2) return Group::generate({Permutation(std::max<std::size_t>(n, 1))});
  std::vector<std::size_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return Group::generate({Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

inline Group alternating_group(std::size_t n) {
  if (n < 3) return Group::generate({Permutation(std::max<std::size_t>(n, 1))});
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return Group::generate(gens);
}

inline Group cyclic_group(std::size_t n) {
  std::vector<std::size_t> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return Group::generate({n > 1 ? Permutation::from_cycles(n, {cyc}) : Permutation(1)});
}

}  // namespace engel
