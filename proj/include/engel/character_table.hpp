#pragma once

// Character tables read from text files, validated on load, and matched
// against the conjugacy classes of an enumerated group.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "engel/cyclotomic.hpp"
#include "engel/group.hpp"

namespace engel {

/// A table invariant failed; the message names the relation.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableClass {
  std::string name;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::size_t inverse = 0;                    // 0-based
  std::map<std::uint64_t, std::size_t> power;  // prime -> class of x^p, 0-based
};

class CharacterTable {
 public:
  std::string name;
  std::uint64_t group_order = 0;
  unsigned conductor = 1;
  std::vector<TableClass> classes;
  std::vector<std::vector<Cyclotomic>> characters;  // [chi][class]

  std::size_t class_count() const { return classes.size(); }
  Rational degree(std::size_t chi) const { return characters[chi][0].to_rational(); }

  /// (1/|G|) sum_i |X_i| f(x_i) conj(g(x_i)).
  Cyclotomic inner(const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) const {
    Cyclotomic s(conductor);
    for (std::size_t i = 0; i < classes.size(); ++i)
      s += Rational(classes[i].size) * (f[i] * g[i].conj());
    return Rational(1, group_order) * s;
  }

  /// Throws TableError naming the first relation that fails.
  void validate() const {
    const std::size_t k = classes.size();
    if (k == 0) throw TableError("table has no classes");
    if (characters.size() != k) throw TableError("number of characters differs from number of classes");
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& c = classes[i];
      if (c.size == 0 || group_order % c.size != 0)
        throw TableError("class size of " + c.name + " does not divide the group order");
      if (c.inverse >= k) throw TableError("inverse class index of " + c.name + " out of range");
      if (classes[c.inverse].inverse != i) throw TableError("inverse map is not an involution at " + c.name);
      if (classes[c.inverse].element_order != c.element_order || classes[c.inverse].size != c.size)
        throw TableError("class " + c.name + " and its inverse class differ in order or size");
      for (const auto& [p, j] : c.power) {
        if (j >= k) throw TableError("power map index out of range at " + c.name);
        const std::uint64_t expect = c.element_order / std::gcd(c.element_order, p);
        if (classes[j].element_order != expect) throw TableError("power map inconsistent with orders at " + c.name);
      }
      total += c.size;
    }
    if (classes[0].size != 1 || classes[0].element_order != 1) throw TableError("first class must be the identity");
    if (total != group_order) throw TableError("class sizes do not sum to the group order");

    Rational degsq = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (characters[a].size() != k) throw TableError("row " + std::to_string(a + 1) + " has wrong length");
      const auto& d = characters[a][0];
      if (!d.is_rational() || d.to_rational() <= 0 || denominator(d.to_rational()) != 1)
        throw TableError("degree of character " + std::to_string(a + 1) + " is not a positive integer");
      degsq += d.to_rational() * d.to_rational();
      for (std::size_t i = 0; i < k; ++i)
        if (!(characters[a][classes[i].inverse] == characters[a][i].conj()))
          throw TableError("character " + std::to_string(a + 1) + " at inverse class of " + classes[i].name +
                           " is not the complex conjugate");
      for (std::size_t i = 0; i < k; ++i)
        for (const auto& [p, j] : classes[i].power)
          if (classes[i].element_order % p != 0 && std::gcd<std::uint64_t>(p, conductor) == 1 &&
              !(characters[a][j] == characters[a][i].galois(static_cast<long long>(p))))
            throw TableError("character " + std::to_string(a + 1) + " is not Galois compatible with pow" +
                             std::to_string(p) + " at " + classes[i].name);
    }
    if (degsq != Rational(group_order)) throw TableError("sum of squared degrees differs from the group order");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        const Cyclotomic ip = inner(characters[a], characters[b]);
        const Rational want = a == b ? 1 : 0;
        if (!(ip == Cyclotomic::rational(want, conductor)))
          throw TableError("row orthogonality fails for characters " + std::to_string(a + 1) + " and " +
                           std::to_string(b + 1));
      }
  }
};

/// Text format:
///   classes k, order |G|, conductor N
///   k lines: name size order inverse-index(1-based) [pow<p>=index ...]
///   k lines of k values (sums of c*z^e terms, no spaces inside a value)
/// `#` starts a comment; an optional `name X` line may precede the header.
inline CharacterTable parse_character_table(std::istream& in, const std::string& source = "<stream>") {
  CharacterTable t;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  std::size_t at = 0;
  auto fail = [&](const std::string& what) -> void { throw TableError(source + ": " + what); };
  if (at < lines.size() && lines[at].rfind("name", 0) == 0) {
    std::istringstream ls(lines[at++]);
    std::string w;
    ls >> w >> t.name;
  }
  if (at >= lines.size()) fail("missing header");
  {
    std::string hdr = lines[at++];
    for (auto& ch : hdr)
      if (ch == ',') ch = ' ';
    std::istringstream ls(hdr);
    std::string w1, w2, w3;
    std::size_t k = 0;
    if (!(ls >> w1 >> k >> w2 >> t.group_order >> w3 >> t.conductor) || w1 != "classes" || w2 != "order" ||
        w3 != "conductor" || k == 0 || t.conductor == 0)
      fail("header must read 'classes k, order |G|, conductor N'");
    t.classes.resize(k);
  }
  const std::size_t k = t.classes.size();
  if (lines.size() < at + 2 * k) fail("expected " + std::to_string(k) + " class lines and " + std::to_string(k) + " rows");
  for (std::size_t i = 0; i < k; ++i) {
    std::istringstream ls(lines[at++]);
    auto& c = t.classes[i];
    std::size_t inv = 0;
    if (!(ls >> c.name >> c.size >> c.element_order >> inv) || inv == 0 || inv > k)
      fail("bad class line for class " + std::to_string(i + 1));
    c.inverse = inv - 1;
    std::string tok;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (tok.rfind("pow", 0) != 0 || eq == std::string::npos) fail("bad power-map token '" + tok + "'");
      const auto p = std::stoull(tok.substr(3, eq - 3));
      const auto j = std::stoull(tok.substr(eq + 1));
      if (j == 0 || j > k) fail("power-map index out of range in '" + tok + "'");
      c.power[p] = j - 1;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    std::istringstream ls(lines[at++]);
    std::vector<Cyclotomic> row;
    std::string v;
    while (ls >> v) {
      try {
        row.push_back(Cyclotomic::parse(v, t.conductor));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (row.size() != k) fail("row " + std::to_string(a + 1) + " has " + std::to_string(row.size()) + " values");
    t.characters.push_back(std::move(row));
  }
  if (at != lines.size()) fail("trailing content after the character rows");
  try {
    t.validate();
  } catch (const TableError& e) {
    throw TableError(source + ": " + e.what());
  }
  return t;
}

inline CharacterTable load_character_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open character table " + path);
  return parse_character_table(in, path);
}

/// map[table class] = group class, consistent with element orders, class
/// sizes, inverses and the table's power maps. Table automorphisms make the
/// answer non-unique; the first consistent assignment is returned.
inline std::vector<std::size_t> match_classes(const Group& G, const CharacterTable& T) {
  const auto& gc = G.classes();
  const std::size_t k = T.class_count();
  if (gc.size() != k || G.order() != T.group_order)
    throw TableError("table " + T.name + " does not fit the group (class count or order differ)");
  std::vector<std::size_t> map(k, SIZE_MAX);
  std::vector<char> used(k, 0);
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& cj = T.classes[j];
      if (cj.inverse <= i && G.class_of(G.inverse(gc[map[j]].representative)) != map[cj.inverse]) return false;
      for (const auto& [p, target] : cj.power)
        if (target <= i && G.class_of(G.power(gc[map[j]].representative, static_cast<std::int64_t>(p))) != map[target])
          return false;
    }
    return true;
  };
  auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || gc[c].element_order != T.classes[i].element_order || gc[c].size() != T.classes[i].size) continue;
      map[i] = c;
      used[c] = 1;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = 0;
    }
    map[i] = SIZE_MAX;
    return false;
  };
  if (!solve(solve, 0)) throw TableError("no class matching between the group and table " + T.name);
  return map;
}

}  // namespace engel
