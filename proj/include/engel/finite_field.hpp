#pragma once

// Arithmetic in F_q, q = p^f <= 2^16, with elements encoded as integers
// sum c_i p^i over the polynomial basis 1, t, ..., t^{f-1}.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "engel/util.hpp"

namespace engel {

struct FieldElement {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

// Dense polynomials over F_p, low-to-high coefficients, no trailing zeros.
using PolyP = std::vector<std::uint32_t>;

inline void poly_trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

inline PolyP poly_mod(PolyP a, const PolyP& m, std::uint32_t p) {
  poly_trim(a);
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - factor * m[i] % p) % p);
    }
    poly_trim(a);
  }
  return a;
}

inline PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m,
                         std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

inline PolyP poly_powmod(PolyP base, std::uint64_t e, const PolyP& m, std::uint32_t p) {
  PolyP r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline PolyP poly_sub(PolyP a, const PolyP& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  poly_trim(a);
  return a;
}

inline PolyP poly_gcd(PolyP a, PolyP b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: m of degree f is irreducible iff x^{p^f} = x mod m and
// gcd(x^{p^{f/r}} - x, m) = 1 for each prime r | f.
inline bool poly_is_irreducible(const PolyP& m, std::uint32_t p) {
  const std::size_t f = m.size() - 1;
  if (f == 0) return false;
  if (f == 1) return true;
  const PolyP x{0, 1};
  auto x_pow_p_pow = [&](std::size_t k) {
    PolyP r = x;
    for (std::size_t i = 0; i < k; ++i) r = poly_powmod(r, p, m, p);
    return r;
  };
  if (poly_sub(x_pow_p_pow(f), x, p) != PolyP{}) return false;
  for (auto r : util::prime_divisors(f)) {
    PolyP g = poly_gcd(m, poly_sub(x_pow_p_pow(f / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t f;
  std::vector<std::uint32_t> coeffs;  // low to high, monic
};

// Conway polynomials for the small non-prime fields used here.
inline const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {7, 2, {3, 6, 1}},
  };
  return table;
}

}  // namespace detail

/// Immutable arithmetic context for a finite field.
class Field {
 public:
  /// Field of order p^f using the shipped modulus table, falling back to the
  /// lexicographically least primitive polynomial.
  static Field make(std::uint32_t p, std::uint32_t f) {
    check_params(p, f);
    if (f == 1) {
      // Degree-one modulus T - g for the least primitive root g.
      Field tmp(p, 1, {0, 1});
      const std::uint32_t g = tmp.primitive_element().code;
      return Field(p, 1, {(p - g) % p, 1});
    }
    for (const auto& e : detail::conway_table())
      if (e.p == p && e.f == f) return with_modulus(p, e.coeffs);
    return Field(p, f, least_primitive_polynomial(p, f));
  }

  static Field make(std::uint32_t q) {
    auto [p, f] = util::prime_power(q);
    if (p == 0) throw ConstructionError("field order " + std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(p), f);
  }

  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    detail::poly_trim(modulus);
    if (modulus.size() < 2) throw ConstructionError("modulus must have degree >= 1");
    check_params(p, static_cast<std::uint32_t>(modulus.size() - 1));
    for (auto& c : modulus) {
      if (c >= p) throw ConstructionError("modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw ConstructionError("modulus must be monic");
    if (!detail::poly_is_irreducible(modulus, p))
      throw ConstructionError("modulus is reducible over F_" + std::to_string(p));
    const auto f = static_cast<std::uint32_t>(modulus.size() - 1);
    return Field(p, f, std::move(modulus));
  }

  /// Parses "p^f" or "q".
  static Field parse(std::string_view text) {
    auto caret = text.find('^');
    auto to_u = [&](std::string_view s) {
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConstructionError("malformed field spec '" + std::string(text) + "'");
      return v;
    };
    if (caret == std::string_view::npos) return make(to_u(text));
    return make(to_u(text.substr(0, caret)), to_u(text.substr(caret + 1)));
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("field element code out of range");
    return {code};
  }
  FieldElement from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  std::vector<std::uint32_t> coefficients(FieldElement a) const {
    std::vector<std::uint32_t> c(f_);
    for (auto& x : c) {
      x = a.code % p_;
      a.code /= p_;
    }
    return c;
  }

  FieldElement from_coefficients(std::span<const std::uint32_t> c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
    return {code};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      r += ((a.code % p_ + b.code % p_) % p_) * scale;
      a.code /= p_;
      b.code /= p_;
      scale *= p_;
    }
    return {r};
  }

  FieldElement neg(FieldElement a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      r += ((p_ - a.code % p_) % p_) * scale;
      a.code /= p_;
      scale *= p_;
    }
    return {r};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return {exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
  }

  FieldElement inv(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero");
    return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::int64_t e) const {
    if (a.code == 0) {
      if (e < 0) throw std::domain_error("negative power of zero");
      return e == 0 ? one() : zero();
    }
    const std::int64_t m = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(log_[a.code]) * (e % m)) % m;
    if (k < 0) k += m;
    return {exp_[static_cast<std::size_t>(k)]};
  }

  /// Generator of the multiplicative group: least code of order q-1.
  FieldElement primitive_element() const { return {primitive_}; }

  std::uint64_t multiplicative_order(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto r : util::prime_divisors(q_ - 1)) {
      while (ord % r == 0 && pow(a, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
    }
    return ord;
  }

  /// Coefficient list, e.g. "[1 0 1]" (low to high); plain integer for prime fields.
  std::string to_string(FieldElement a) const {
    if (f_ == 1) return std::to_string(a.code);
    std::ostringstream os;
    os << '[';
    auto c = coefficients(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ']';
    return os.str();
  }

 private:
  Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus)
      : p_(p), f_(f), q_(static_cast<std::uint32_t>(util::ipow(p, f))), modulus_(std::move(modulus)) {
    build_tables();
  }

  static void check_params(std::uint32_t p, std::uint32_t f) {
    if (!util::is_prime(p)) throw ConstructionError("characteristic " + std::to_string(p) + " is not prime");
    if (f == 0) throw ConstructionError("field degree must be positive");
    if (util::ipow(p, f) > (1u << 16)) throw ConstructionError("field order exceeds 2^16");
  }

  detail::PolyP as_poly(std::uint32_t code) const {
    detail::PolyP c(f_);
    for (auto& x : c) {
      x = code % p_;
      code /= p_;
    }
    detail::poly_trim(c);
    return c;
  }

  std::uint32_t as_code(const detail::PolyP& c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i];
    return code;
  }

  static std::vector<std::uint32_t> least_primitive_polynomial(std::uint32_t p, std::uint32_t f) {
    const std::uint32_t q = static_cast<std::uint32_t>(util::ipow(p, f));
    for (std::uint32_t low = 0; low < q; ++low) {
      std::vector<std::uint32_t> m(f + 1, 0);
      std::uint32_t v = low;
      for (std::uint32_t i = 0; i < f; ++i) {
        m[i] = v % p;
        v /= p;
      }
      m[f] = 1;
      if (m[0] == 0 || !detail::poly_is_irreducible(m, p)) continue;
      // Root t must have order q - 1.
      bool primitive = true;
      for (auto r : util::prime_divisors(q - 1)) {
        if (detail::poly_powmod({0, 1}, (q - 1) / r, m, p) == detail::PolyP{1}) primitive = false;
      }
      if (primitive) return m;
    }
    throw ConstructionError("no primitive polynomial found");
  }

  void build_tables() {
    // Slow search for the least primitive element, then log/exp tables.
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
      return as_code(detail::poly_powmod(as_poly(a), e, modulus_, p_));
    };
    const auto divisors = util::prime_divisors(q_ - 1);
    primitive_ = 0;
    for (std::uint32_t a = 1; a < q_ && primitive_ == 0; ++a) {
      bool ok = true;
      for (auto r : divisors) ok = ok && slow_pow(a, (q_ - 1) / r) != 1;
      if (ok) primitive_ = a;
    }
    if (q_ == 2) primitive_ = 1;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    detail::PolyP cur{1};
    const detail::PolyP g = as_poly(primitive_);
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      const std::uint32_t code = as_code(cur);
      exp_[k] = code;
      log_[code] = k;
      cur = detail::poly_mulmod(cur, g, modulus_, p_);
    }
  }

  std::uint32_t p_;
  std::uint32_t f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Monic cubic T^3 + c2 T^2 + c1 T + c0.
struct CubicPoly {
  FieldElement c2;
  FieldElement c1;
  FieldElement c0;
};

inline FieldElement evaluate(const Field& k, const CubicPoly& poly, FieldElement t) {
  FieldElement r = k.one();
  r = k.add(k.mul(r, t), poly.c2);
  r = k.add(k.mul(r, t), poly.c1);
  r = k.add(k.mul(r, t), poly.c0);
  return r;
}

/// A cubic is reducible iff it has a root, so this is a root scan over F_q.
inline bool cubic_is_irreducible(const Field& k, const CubicPoly& poly) {
  for (std::uint32_t c = 0; c < k.order(); ++c)
    if (evaluate(k, poly, k.element(c)) == k.zero()) return false;
  return true;
}

/// First a (in code order) with T^3 + aT + 1 irreducible over F_q.
inline std::optional<FieldElement> find_engel_coefficient(const Field& k) {
  for (std::uint32_t c = 0; c < k.order(); ++c) {
    const CubicPoly poly{k.zero(), k.element(c), k.one()};
    if (cubic_is_irreducible(k, poly)) return k.element(c);
  }
  return std::nullopt;
}

/// Modulus override file: one integer coefficient per line, low to high.
inline std::vector<std::uint32_t> read_modulus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open modulus file " + path);
  std::vector<std::uint32_t> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long v;
    if (ls >> v) {
      if (v < 0) throw ConstructionError("negative modulus coefficient");
      out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

}  // namespace engel
