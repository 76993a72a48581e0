#pragma once

// Exact re-verification of the printed Monster constants: subdegrees of the
// action on 2A involutions, slice sizes, the two large totals and the lower
// bound c'. All inputs come from a key=value file.

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "engel/cyclotomic.hpp"

namespace engel {

inline constexpr std::array<const char*, 8> kMonsterSliceClasses = {"2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"};

struct MonsterConstants {
  std::array<Integer, 9> subdegree;             // i_0 .. i_8
  std::map<std::string, Integer> coefficient;   // m_Y for Y != 1A
  std::array<Integer, 8> slice;                 // |X_Y|, Y in kMonsterSliceClasses order
  Rational c_prime;
  Integer total_a;                              // printed |X_3A| + ... + |X_6A|
  Integer total_b;                              // printed |I| - 1 - i_1
  std::vector<unsigned> pi_constituents;        // recorded, not checked

  Integer class_size() const {
    Integer s = 0;
    for (const auto& i : subdegree) s += i;
    return s;
  }
};

class ConstantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline MonsterConstants parse_monster_constants(std::istream& in, const std::string& source = "<stream>") {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::string t;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == t.size())
      throw ConstantsError(source + ":" + std::to_string(lineno) + ": expected key=value");
    if (!kv.emplace(t.substr(0, eq), t.substr(eq + 1)).second)
      throw ConstantsError(source + ":" + std::to_string(lineno) + ": duplicate key " + t.substr(0, eq));
  }
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConstantsError(source + ": missing key " + key);
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto integer = [&](const std::string& key) {
    const std::string v = take(key);
    if (v.find_first_not_of("0123456789") != std::string::npos)
      throw ConstantsError(source + ": " + key + " is not a non-negative decimal integer");
    return Integer(v);
  };

  MonsterConstants m;
  for (std::size_t j = 0; j < 9; ++j) m.subdegree[j] = integer("i" + std::to_string(j));
  for (std::size_t y = 0; y < kMonsterSliceClasses.size(); ++y) {
    const std::string Y = kMonsterSliceClasses[y];
    m.coefficient[Y] = integer("m_" + Y);
    m.slice[y] = integer("X_" + Y);
  }
  {
    const std::string v = take("c_prime");
    const auto slash = v.find('/');
    try {
      m.c_prime = slash == std::string::npos
                      ? Rational(Integer(v))
                      : Rational(Integer(v.substr(0, slash)), Integer(v.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ConstantsError(source + ": c_prime is not a rational number");
    }
  }
  m.total_a = integer("sum_3A_to_6A");
  m.total_b = integer("index_minus_1_minus_i1");
  {
    std::istringstream ls(take("pi"));
    std::string tok;
    while (std::getline(ls, tok, ',')) m.pi_constituents.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  if (!kv.empty()) throw ConstantsError(source + ": unknown key " + kv.begin()->first);
  return m;
}

inline MonsterConstants load_monster_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstantsError("cannot open constants file " + path);
  return parse_monster_constants(in, path);
}

struct MonsterIdentity {
  std::string label;        // "a" .. "e", or "b-a"
  std::string statement;
  std::string lhs, rhs;
  bool pass = false;
};

struct MonsterReport {
  std::vector<MonsterIdentity> identities;

  bool all_pass() const {
    for (const auto& i : identities)
      if (!i.pass) return false;
    return true;
  }
  const MonsterIdentity& at(const std::string& label) const {
    for (const auto& i : identities)
      if (i.label == label) return i;
    throw std::out_of_range("no identity labelled " + label);
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& i : identities)
      if (!i.pass) out.push_back(i.label);
    return out;
  }
};

inline MonsterReport monster_check(const MonsterConstants& m) {
  MonsterReport r;
  const auto& i = m.subdegree;
  const Integer I = m.class_size();

  Integer sum_a = 0, slice_a = 0;
  for (std::size_t j = 3; j <= 8; ++j) sum_a += i[j];
  for (std::size_t y = 2; y < 8; ++y) slice_a += m.slice[y];
  r.identities.push_back({"a", "i3+...+i8 = |X_3A|+...+|X_6A| = printed total", sum_a.str() + " / " + slice_a.str(),
                          m.total_a.str(), sum_a == m.total_a && slice_a == m.total_a});

  Integer sum_b = 0;
  for (std::size_t j = 2; j <= 8; ++j) sum_b += i[j];
  const Integer via_index = I - 1 - i[1];
  r.identities.push_back({"b", "i2+...+i8 = |I|-1-i1 = printed total", sum_b.str() + " / " + via_index.str(),
                          m.total_b.str(), sum_b == m.total_b && via_index == m.total_b});

  const Integer rhs_c = I - 1 - i[2];
  r.identities.push_back({"c", "c' > |I|-1-i2", m.c_prime.str(), rhs_c.str(), m.c_prime > Rational(rhs_c)});

  r.identities.push_back({"d", "printed totals: (b) > (a), and both recomputed exactly", m.total_b.str(),
                          m.total_a.str(), m.total_b > m.total_a && sum_b > sum_a && sum_a == m.total_a &&
                                               sum_b == m.total_b});

  bool slices = true;
  for (std::size_t y = 0; y < 8; ++y) slices = slices && m.slice[y] == i[y + 1];
  r.identities.push_back({"e", "|X_2A|,...,|X_6A| = i1,...,i8", "slices", "subdegrees", slices});

  const Integer diff = m.total_b - m.total_a;
  r.identities.push_back({"b-a", "(b) - (a) = i2", diff.str(), i[2].str(), diff == i[2]});
  return r;
}

inline nlohmann::json to_json(const MonsterReport& r) {
  nlohmann::json j;
  j["identities"] = nlohmann::json::array();
  for (const auto& id : r.identities)
    j["identities"].push_back(
        {{"label", id.label}, {"statement", id.statement}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"pass", id.pass}});
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace engel
