#pragma once

// Exact elements of Q(zeta_N), stored in the power basis modulo the N-th
// cyclotomic polynomial, so equal numbers have equal coefficient vectors.

#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace engel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::vector<long long> compute_cyclotomic(unsigned N) {
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (unsigned d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    const auto den = compute_cyclotomic(d);
    const std::size_t n = num.size() - 1, m = den.size() - 1;
    std::vector<long long> q(n - m + 1, 0);
    for (std::size_t k = n - m + 1; k-- > 0;) {
      const long long c = num[k + m];
      q[k] = c;
      for (std::size_t j = 0; j <= m; ++j) num[k + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

/// Integer coefficients of Phi_N, low degree first.
inline const std::vector<long long>& cyclotomic_polynomial(unsigned N) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, compute_cyclotomic(N)).first;
  return it->second;
}

}  // namespace detail

class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned conductor = 1) : N_(conductor) {
    if (conductor == 0) throw std::invalid_argument("conductor must be positive");
    c_.assign(degree(), Rational(0));
  }

  static Cyclotomic rational(const Rational& r, unsigned conductor = 1) {
    Cyclotomic x(conductor);
    x.c_[0] = r;
    return x;
  }

  /// zeta_N^k.
  static Cyclotomic zeta_power(unsigned conductor, long long k) {
    std::vector<Rational> full(conductor, Rational(0));
    full[static_cast<std::size_t>(((k % conductor) + conductor) % conductor)] = 1;
    return from_full(conductor, std::move(full));
  }

  unsigned conductor() const { return N_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return c_[0];
  }
  bool is_zero() const { return is_rational() && c_[0] == 0; }

  /// Same number in Q(zeta_M), N | M.
  Cyclotomic lift(unsigned M) const {
    if (M % N_ != 0) throw std::invalid_argument("conductor does not divide target");
    if (M == N_) return *this;
    std::vector<Rational> full(M, Rational(0));
    const unsigned s = M / N_;
    for (std::size_t i = 0; i < c_.size(); ++i) full[i * s] = c_[i];
    return from_full(M, std::move(full));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyclotomic operator-() const {
    Cyclotomic x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = common(a, b);
    const unsigned N = x.N_;
    std::vector<Rational> full(N, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        if (y.c_[j] != 0) full[(i + j) % N] += x.c_[i] * y.c_[j];
    }
    return from_full(N, std::move(full));
  }
  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) {
    Cyclotomic x = a;
    for (auto& v : x.c_) v *= r;
    return x;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Image under zeta -> zeta^k, gcd(k, N) = 1.
  Cyclotomic galois(long long k) const {
    if (std::gcd(static_cast<long long>(N_), k) != 1) throw std::invalid_argument("Galois exponent not coprime to N");
    std::vector<Rational> full(N_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const long long e = ((static_cast<long long>(i) * k) % N_ + N_) % N_;
      full[static_cast<std::size_t>(e)] += c_[i];
    }
    return from_full(N_, std::move(full));
  }
  Cyclotomic conj() const { return galois(-1); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = common(a, b);
    return x.c_ == y.c_;
  }

  /// Parses sums of terms `c`, `c*z^k`, `z^k`, `z`, with c an integer or p/q.
  static Cyclotomic parse(const std::string& text, unsigned conductor) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty cyclotomic value");
    Cyclotomic out(conductor);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("bad cyclotomic value '" + text + "': " + why);
    };
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        fail("expected + or -");
      }
      Rational coef = 1;
      bool have_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        const std::string num = s.substr(i, j - i);
        const auto slash = num.find('/');
        if (slash == std::string::npos) {
          coef = Rational(Integer(num));
        } else {
          if (slash == 0 || slash + 1 == num.size()) fail("malformed fraction");
          coef = Rational(Integer(num.substr(0, slash)), Integer(num.substr(slash + 1)));
        }
        have_coef = true;
        i = j;
      }
      long long power = 0;
      if (i < s.size() && s[i] == '*') {
        if (!have_coef) fail("'*' without coefficient");
        ++i;
        if (i >= s.size() || s[i] != 'z') fail("expected z after '*'");
      }
      if (i < s.size() && s[i] == 'z') {
        ++i;
        power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) fail("expected exponent");
          power = std::stoll(s.substr(i, j - i));
          i = j;
        }
      } else if (!have_coef) {
        fail("expected a number or z");
      }
      out += Rational(sign) * coef * zeta_power(conductor, power);
    }
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      if (v < 0) {
        os << "-";
        v = -v;
      } else if (!first) {
        os << "+";
      }
      if (i == 0) {
        os << v;
      } else {
        if (v != 1) os << v << "*";
        os << "z^" << i;
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  unsigned N_;
  std::vector<Rational> c_;  // length phi(N)

  std::size_t degree() const { return detail::cyclotomic_polynomial(N_).size() - 1; }

  static Cyclotomic from_full(unsigned N, std::vector<Rational> full) {
    const auto& phi = detail::cyclotomic_polynomial(N);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = full.size(); i-- > d;) {
      if (full[i] == 0) continue;
      const Rational c = full[i];
      for (std::size_t j = 0; j <= d; ++j) full[i - d + j] -= c * phi[j];
    }
    full.resize(d);
    Cyclotomic x(N);
    x.c_ = std::move(full);
    return x;
  }

  static std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.N_ == b.N_) return {a, b};
    const unsigned M = std::lcm(a.N_, b.N_);
    return {a.lift(M), b.lift(M)};
  }
};

}  // namespace engel
