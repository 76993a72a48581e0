#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "engel/util.hpp"

namespace engel {

using Point = std::uint16_t;

/// Permutation of {0, ..., d-1}. Products compose left to right:
/// (a * b)(p) = b(a(p)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (auto p : images_) {
      if (p >= images_.size() || seen[p]) throw std::invalid_argument("image list is not a bijection");
      seen[p] = 1;
    }
  }

  /// Cycles use 0-based points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || used[c[i]]) throw std::invalid_argument("malformed cycle");
        used[c[i]] = 1;
        images[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
      }
    }
    return Permutation(std::move(images));
  }

  /// Parses cycle notation "(0,1,2)(3 4)" or an image list "[1 2 0 3 4]".
  /// Point labels are shifted down by `offset` (1 for 1-based input).
  static Permutation parse(std::string_view text, std::size_t degree, std::size_t offset = 0) {
    std::string s(text);
    for (auto& ch : s)
      if (ch == ',') ch = ' ';
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty permutation");
    auto shift = [&](long long v) {
      if (v < static_cast<long long>(offset)) throw std::invalid_argument("point label below offset");
      return static_cast<std::size_t>(v) - offset;
    };
    if (s[first] == '[') {
      auto close = s.find(']', first);
      if (close == std::string::npos) throw std::invalid_argument("unterminated image list");
      std::istringstream is(s.substr(first + 1, close - first - 1));
      std::vector<Point> images;
      long long v;
      while (is >> v) images.push_back(static_cast<Point>(shift(v)));
      if (images.size() != degree) throw std::invalid_argument("image list length differs from degree");
      return Permutation(std::move(images));
    }
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t pos = first;
    while (pos < s.size()) {
      if (s[pos] == ' ' || s[pos] == '\t') {
        ++pos;
        continue;
      }
      if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
      auto close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
      std::istringstream is(s.substr(pos + 1, close - pos - 1));
      std::vector<std::size_t> cyc;
      long long v;
      while (is >> v) cyc.push_back(shift(v));
      if (!is.eof()) throw std::invalid_argument("non-numeric point in cycle");
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Point> out(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p) out[p] = rhs.images_[images_[p]];
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p) r.images_[images_[p]] = static_cast<Point>(p);
    return r;
  }

  bool is_identity() const {
    for (std::size_t p = 0; p < images_.size(); ++p)
      if (images_[p] != p) return false;
    return true;
  }

  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t p = 0; p < images_.size(); ++p) {
      if (seen[p] || images_[p] == p) continue;
      std::vector<std::size_t> c;
      for (std::size_t x = p; !seen[x]; x = images_[x]) {
        seen[x] = 1;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
    return ord;
  }

  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ')';
    }
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

}  // namespace engel
