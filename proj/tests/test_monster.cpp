#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "engel/monster.hpp"

using namespace engel;

namespace {

std::string shipped() { return std::string(ENGEL_DATA_DIR) + "/monster.txt"; }

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MonsterConstants parse(const std::string& text) {
  std::istringstream in(text);
  return parse_monster_constants(in);
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
  const auto at = text.find("\n" + key + "=");
  if (at == std::string::npos) throw std::logic_error("key not found: " + key);
  const auto end = text.find('\n', at + 1);
  return text.replace(at + 1, end - at - 1, line);
}

}  // namespace

TEST(Monster, ShippedConstantsPassEveryIdentity) {
  const auto m = load_monster_constants(shipped());
  const auto r = monster_check(m);
  EXPECT_TRUE(r.all_pass()) << ::testing::PrintToString(r.failing());
  EXPECT_EQ(r.identities.size(), 6u);
  EXPECT_EQ(m.total_b, Integer("97239461114865275999"));
  EXPECT_EQ(m.total_a, Integer("97239449407416602624"));
  EXPECT_GT(m.total_b, m.total_a);
  EXPECT_EQ(m.total_b - m.total_a, Integer("11707448673375"));
  EXPECT_EQ(m.subdegree[2], Integer("11707448673375"));
  EXPECT_EQ(r.at("c").rhs, "97239449434560512624");
  EXPECT_EQ(m.pi_constituents.size(), 9u);
}

TEST(Monster, CPrimeExceedsTheBoundByExactComparison) {
  const auto m = load_monster_constants(shipped());
  const Integer bound = m.class_size() - 1 - m.subdegree[2];
  EXPECT_GT(m.c_prime, Rational(bound));
  // c' is not an integer; floor(c') is still above the bound.
  EXPECT_NE(denominator(m.c_prime), 1);
  EXPECT_GT(numerator(m.c_prime) / denominator(m.c_prime), bound);
}

TEST(Monster, PerturbedSubdegreeBreaksTheSums) {
  const auto text = read_all(shipped());
  const auto m = load_monster_constants(shipped());
  Integer i7 = m.subdegree[7] + 1;
  const auto r = monster_check(parse(replace_line(text, "i7", "i7=" + i7.str())));
  EXPECT_EQ(r.failing(), (std::vector<std::string>{"a", "b", "d", "e"}));
  const auto p = monster_check(load_monster_constants(std::string(ENGEL_SOURCE_DIR) + "/tests/data/monster_perturbed.txt"));
  EXPECT_FALSE(p.all_pass());
  EXPECT_FALSE(p.at("a").pass);
}

TEST(Monster, ParseErrors) {
  const auto text = read_all(shipped());
  EXPECT_THROW(parse(replace_line(text, "i3", "# i3 removed")), ConstantsError);
  EXPECT_THROW(parse(text + "i3=5\n"), ConstantsError);
  EXPECT_THROW(parse(text + "bogus=5\n"), ConstantsError);
  EXPECT_THROW(parse(replace_line(text, "i4", "i4=12x")), ConstantsError);
  EXPECT_THROW(load_monster_constants("/nonexistent/monster.txt"), ConstantsError);
  EXPECT_THROW(monster_check(load_monster_constants(shipped())).at("z"), std::out_of_range);
}

TEST(Monster, JsonNamesEveryIdentity) {
  const auto j = to_json(monster_check(load_monster_constants(shipped())));
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["identities"].size(), 6u);
}
