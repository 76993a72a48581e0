#pragma once

// Small matrix groups over F_q, realised as permutation groups through their
// action on projective points (or on nonzero vectors for SL itself).

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "engel/finite_field.hpp"
#include "engel/group.hpp"

namespace engel {

/// Square matrix over a finite field; `projective` marks it as a coset of scalars.
class MatrixRep {
 public:
  MatrixRep(std::shared_ptr<const Field> field, std::size_t dim, bool projective = false)
      : field_(std::move(field)), dim_(dim), entries_(dim * dim, FieldElement{0}), projective_(projective) {}

  static MatrixRep identity(std::shared_ptr<const Field> field, std::size_t dim, bool projective = false) {
    MatrixRep m(field, dim, projective);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = field->one();
    return m;
  }

  static MatrixRep diagonal(std::shared_ptr<const Field> field, const std::vector<FieldElement>& d,
                            bool projective = false) {
    MatrixRep m(field, d.size(), projective);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static MatrixRep from_rows(std::shared_ptr<const Field> field, const std::vector<std::vector<FieldElement>>& rows,
                             bool projective = false) {
    MatrixRep m(field, rows.size(), projective);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::size_t dim() const { return dim_; }
  bool projective() const { return projective_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  MatrixRep operator*(const MatrixRep& b) const {
    const Field& k = *field_;
    MatrixRep r(field_, dim_, projective_ && b.projective_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        FieldElement s = k.zero();
        for (std::size_t l = 0; l < dim_; ++l) s = k.add(s, k.mul((*this)(i, l), b(l, j)));
        r(i, j) = s;
      }
    return r;
  }

  FieldElement determinant() const {
    const Field& k = *field_;
    std::vector<FieldElement> a = entries_;
    FieldElement det = k.one();
    for (std::size_t c = 0; c < dim_; ++c) {
      std::size_t piv = c;
      while (piv < dim_ && a[piv * dim_ + c] == k.zero()) ++piv;
      if (piv == dim_) return k.zero();
      if (piv != c) {
        for (std::size_t j = 0; j < dim_; ++j) std::swap(a[piv * dim_ + j], a[c * dim_ + j]);
        det = k.neg(det);
      }
      const FieldElement inv = k.inv(a[c * dim_ + c]);
      det = k.mul(det, a[c * dim_ + c]);
      for (std::size_t r = c + 1; r < dim_; ++r) {
        const FieldElement f = k.mul(a[r * dim_ + c], inv);
        for (std::size_t j = c; j < dim_; ++j) a[r * dim_ + j] = k.sub(a[r * dim_ + j], k.mul(f, a[c * dim_ + j]));
      }
    }
    return det;
  }

  MatrixRep inverse() const {
    const Field& k = *field_;
    const std::size_t n = dim_;
    std::vector<FieldElement> a = entries_;
    MatrixRep inv = identity(field_, n, projective_);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c] == k.zero()) ++piv;
      if (piv == n) throw std::domain_error("singular matrix");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(inv(piv, j), inv(c, j));
      }
      const FieldElement s = k.inv(a[c * n + c]);
      for (std::size_t j = 0; j < n; ++j) {
        a[c * n + j] = k.mul(a[c * n + j], s);
        inv(c, j) = k.mul(inv(c, j), s);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a[r * n + c] == k.zero()) continue;
        const FieldElement f = a[r * n + c];
        for (std::size_t j = 0; j < n; ++j) {
          a[r * n + j] = k.sub(a[r * n + j], k.mul(f, a[c * n + j]));
          inv(r, j) = k.sub(inv(r, j), k.mul(f, inv(c, j)));
        }
      }
    }
    return inv;
  }

  bool is_scalar() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i != j && (*this)(i, j) != field_->zero()) return false;
        if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
      }
    return true;
  }

  /// Equality up to a nonzero scalar.
  bool projectively_equal(const MatrixRep& b) const {
    const Field& k = *field_;
    std::optional<FieldElement> ratio;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const bool za = entries_[i] == k.zero(), zb = b.entries_[i] == k.zero();
      if (za != zb) return false;
      if (za) continue;
      const FieldElement r = k.div(entries_[i], b.entries_[i]);
      if (ratio && *ratio != r) return false;
      ratio = r;
    }
    return true;
  }

  friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
    if (a.projective_ || b.projective_) return a.projectively_equal(b);
    return a.entries_ == b.entries_;
  }

  /// Order as a matrix, or modulo scalars when projective.
  std::uint64_t order() const {
    MatrixRep x = *this;
    for (std::uint64_t k = 1;; ++k) {
      if (projective_ ? x.is_scalar() : x == identity(field_, dim_)) return k;
      x = x * *this;
      if (k > 1'000'000) throw std::runtime_error("matrix order search exceeded bound");
    }
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < dim_; ++j) s += (j ? " " : "") + field_->to_string((*this)(i, j));
    }
    return s + "]";
  }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t dim_;
  std::vector<FieldElement> entries_;
  bool projective_;
};

inline MatrixRep commutator(const MatrixRep& a, const MatrixRep& b) { return a.inverse() * b.inverse() * a * b; }

/// Points of a vector space over F_q (row vectors) acted on by v -> vM.
class VectorAction {
 public:
  VectorAction(std::shared_ptr<const Field> field, std::size_t dim, bool projective)
      : field_(std::move(field)), dim_(dim), projective_(projective) {
    const std::uint64_t q = field_->order();
    const std::uint64_t total = util::ipow(q, static_cast<unsigned>(dim_));
    for (std::uint64_t code = 1; code < total; ++code) {
      auto v = decode(code);
      if (projective_ && normalize(v) != v) continue;
      points_.push_back(v);
    }
    std::sort(points_.begin(), points_.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (std::size_t i = 0; i < points_.size(); ++i) index_[encode(points_[i])] = static_cast<Point>(i);
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<FieldElement>& point(std::size_t i) const { return points_[i]; }

  Permutation permutation(const MatrixRep& m) const {
    std::vector<Point> images(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto w = apply(points_[i], m);
      if (projective_) w = normalize(w);
      images[i] = index_.at(encode(w));
    }
    return Permutation(std::move(images));
  }

 private:
  std::vector<FieldElement> decode(std::uint64_t code) const {
    std::vector<FieldElement> v(dim_);
    for (auto& x : v) {
      x = FieldElement{static_cast<std::uint32_t>(code % field_->order())};
      code /= field_->order();
    }
    return v;
  }
  std::uint64_t encode(const std::vector<FieldElement>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * field_->order() + v[i].code;
    return code;
  }
  std::vector<FieldElement> normalize(std::vector<FieldElement> v) const {
    const Field& k = *field_;
    for (auto x : v) {
      if (x == k.zero()) continue;
      const FieldElement s = k.inv(x);
      for (auto& y : v) y = k.mul(y, s);
      break;
    }
    return v;
  }
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v, const MatrixRep& m) const {
    const Field& k = *field_;
    std::vector<FieldElement> w(dim_, k.zero());
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t i = 0; i < dim_; ++i) w[j] = k.add(w[j], k.mul(v[i], m(i, j)));
    return w;
  }

  std::shared_ptr<const Field> field_;
  std::size_t dim_;
  bool projective_;
  std::vector<std::vector<FieldElement>> points_;
  std::map<std::uint64_t, Point> index_;
};

namespace detail {

// Elementary transvections I + t E_ij with t running over the polynomial basis.
inline std::vector<MatrixRep> elementary_generators(const std::shared_ptr<const Field>& k, std::size_t dim) {
  std::vector<MatrixRep> gens;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      std::uint32_t t = 1;
      for (std::uint32_t b = 0; b < k->degree(); ++b, t *= k->characteristic()) {
        MatrixRep m = MatrixRep::identity(k, dim);
        m(i, j) = k->element(t);
        gens.push_back(m);
      }
    }
  return gens;
}

inline void check_q(std::uint64_t q) {
  if (util::prime_power(q).first == 0) throw ConstructionError("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace detail

inline Group matrix_group(const std::vector<MatrixRep>& gens, const VectorAction& action,
                          std::size_t limit = Group::kDefaultLimit) {
  std::vector<Permutation> perms;
  for (const auto& m : gens) perms.push_back(action.permutation(m));
  return Group::generate(std::move(perms), limit);
}

/// PSL_2(q) on the q+1 points of the projective line.
inline Group psl2(std::uint64_t q, std::size_t limit = Group::kDefaultLimit) {
  detail::check_q(q);
  auto k = std::make_shared<const Field>(Field::make(static_cast<std::uint32_t>(q)));
  return matrix_group(detail::elementary_generators(k, 2), VectorAction(k, 2, true), limit);
}

/// PGL_2(q) on the projective line: PSL_2(q) generators plus diag(w, 1).
inline Group pgl2(std::uint64_t q, std::size_t limit = Group::kDefaultLimit) {
  detail::check_q(q);
  auto k = std::make_shared<const Field>(Field::make(static_cast<std::uint32_t>(q)));
  auto gens = detail::elementary_generators(k, 2);
  gens.push_back(MatrixRep::diagonal(k, {k->primitive_element(), k->one()}));
  return matrix_group(gens, VectorAction(k, 2, true), limit);
}

/// PSL_3(q) on the q^2+q+1 points of the projective plane.
inline Group psl3(std::uint64_t q, std::size_t limit = Group::kDefaultLimit) {
  detail::check_q(q);
  auto k = std::make_shared<const Field>(Field::make(static_cast<std::uint32_t>(q)));
  return matrix_group(detail::elementary_generators(k, 3), VectorAction(k, 3, true), limit);
}

/// SL_3(q) acting faithfully on the q^3-1 nonzero vectors.
inline Group sl3(std::uint64_t q, std::size_t limit = Group::kDefaultLimit) {
  detail::check_q(q);
  auto k = std::make_shared<const Field>(Field::make(static_cast<std::uint32_t>(q)));
  return matrix_group(detail::elementary_generators(k, 3), VectorAction(k, 3, false), limit);
}

inline std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }
inline std::uint64_t psl3_order(std::uint64_t q) {
  return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

/// The pair used for PSL_3(q), q even: g the companion matrix of T^3 + aT + 1
/// and h = diag(c, c, c^-2) for a primitive c.
struct EngelMatrices {
  std::shared_ptr<const Field> field;
  FieldElement a;
  FieldElement c;
  MatrixRep g;
  MatrixRep h;
  MatrixRep commutator_gh;  // [g, h] computed by matrix arithmetic
  MatrixRep expected;       // diag(1, c^3, c^-3)
};

inline EngelMatrices engel_matrices(std::uint64_t q) {
  detail::check_q(q);
  if (q % 2 != 0) throw std::invalid_argument("engel_matrices requires even q");
  if (q < 8) throw std::invalid_argument("engel_matrices requires q >= 8");
  auto k = std::make_shared<const Field>(Field::make(static_cast<std::uint32_t>(q)));
  auto a = find_engel_coefficient(*k);
  if (!a) throw ConstructionError("no irreducible T^3 + aT + 1 found");
  const FieldElement c = k->primitive_element();
  const FieldElement O = k->zero(), I = k->one();
  MatrixRep g = MatrixRep::from_rows(k, {{O, O, I}, {I, O, *a}, {O, I, O}}, true);
  MatrixRep h = MatrixRep::diagonal(k, {c, c, k->pow(c, -2)}, true);
  MatrixRep expected = MatrixRep::diagonal(k, {I, k->pow(c, 3), k->pow(c, -3)}, true);
  MatrixRep gh = commutator(g, h);
  return EngelMatrices{k, *a, c, g, h, gh, expected};
}

/// Sz(8) as a permutation group on the 65 points of its ovoid in PG(3, 8).
inline Group suzuki8(std::size_t limit = Group::kDefaultLimit) {
  auto k = std::make_shared<const Field>(Field::make(8));
  const Field& F = *k;
  // theta(x) = x^4 squares to the Frobenius on F_8.
  auto th = [&](FieldElement x) { return F.pow(x, 4); };
  auto S = [&](FieldElement a, FieldElement b) {
    const FieldElement O = F.zero(), I = F.one();
    const FieldElement r30 = F.add(F.add(F.mul(F.mul(a, a), th(a)), F.mul(a, b)), th(b));
    const FieldElement r31 = F.add(F.mul(a, th(a)), b);
    return MatrixRep::from_rows(k, {{I, O, O, O}, {a, I, O, O}, {b, th(a), I, O}, {r30, r31, a, I}}, true);
  };
  const FieldElement w = F.primitive_element();
  // M(k) = diag(k^{1+2^m}, k^{2^m}, k^{-2^m}, k^{-1-2^m}) with m = 1.
  MatrixRep M = MatrixRep::diagonal(k, {F.pow(w, 3), F.pow(w, 2), F.pow(w, -2), F.pow(w, -3)}, true);
  const FieldElement O = F.zero(), I = F.one();
  MatrixRep T = MatrixRep::from_rows(k, {{O, O, O, I}, {O, O, I, O}, {O, I, O, O}, {I, O, O, O}}, true);
  std::vector<MatrixRep> mats = {S(F.one(), F.zero()), S(F.zero(), F.one()), M, T};

  // Orbit of <0,0,0,1> under the generators, then the induced permutations.
  VectorAction pg3(k, 4, true);
  std::vector<Permutation> full;
  for (const auto& m : mats) full.push_back(pg3.permutation(m));
  std::size_t start = 0;
  for (std::size_t i = 0; i < pg3.size(); ++i) {
    const auto& v = pg3.point(i);
    if (v[0] == O && v[1] == O && v[2] == O) start = i;
  }
  std::vector<std::size_t> orbit{start};
  std::vector<int> pos(pg3.size(), -1);
  pos[start] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& p : full) {
      const std::size_t y = p[orbit[i]];
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(orbit.size());
        orbit.push_back(y);
      }
    }
  std::vector<Permutation> gens;
  for (const auto& p : full) {
    std::vector<Point> images(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) images[i] = static_cast<Point>(pos[p[orbit[i]]]);
    gens.emplace_back(std::move(images));
  }
  return Group::generate(std::move(gens), limit);
}

}  // namespace engel
